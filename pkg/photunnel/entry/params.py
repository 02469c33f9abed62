"""
Shared option types and helpers of the subcommands.

Angles are given in degrees on the command line and converted to radians here; scans
are written ``MIN:MAX:STEP`` with both ends included.
"""

import math
from typing import Any, Mapping, Optional

import click
import pandas as pd

from ..optics import LayerStack, Polarization, load_stack
from ..scenario import ScanRange, load_preset
from ..utils import format_csv, format_summary, result_batch


class ScanRangeType(click.ParamType):
    """
    Click parameter type of ``MIN:MAX:STEP`` ranges.
    """
    name = 'MIN:MAX:STEP'

    def convert(self, value, param, ctx):
        if isinstance(value, ScanRange):
            return value
        try:
            return ScanRange.parse(str(value))
        except ValueError as err:
            self.fail(' '.join(str(err).split()), param, ctx)


SCAN_RANGE = ScanRangeType()

POLARIZATION = click.Choice(['s', 'p'], case_sensitive=False)


def stack_option(func):
    return click.option('--stack', 'stack_file', type=click.Path(exists=True, dir_okay=False), default=None,
                        help='Stack file, the bundled Berkeley mirror when omitted.')(func)


def lambda_option(func):
    return click.option('--lambda', 'wavelength', type=float, default=702.0, show_default=True,
                        help='Probe vacuum wavelength in nm.')(func)


def angle_option(func):
    return click.option('--angle', 'angle_deg', type=float, default=0.0, show_default=True,
                        help='Angle of incidence in degrees.')(func)


def pol_option(default: str = 'p'):
    def _decorator(func):
        return click.option('--pol', 'pol', type=POLARIZATION, default=default, show_default=True,
                            help='Polarization.')(func)

    return _decorator


def out_option(func):
    return click.option('--out', 'out', type=click.Path(dir_okay=False), default=None,
                        help='Output CSV file, standard output when omitted.')(func)


def resolve_stack(stack_file: Optional[str]) -> LayerStack:
    """
    Stack of ``--stack``, or the stack of the bundled Berkeley preset.
    """
    if stack_file is None:
        return load_preset('berkeley').stack()
    return load_stack(stack_file)


def to_polarization(value: str) -> Polarization:
    return Polarization(value.lower())


def to_radians(angle_deg: float) -> float:
    return math.radians(angle_deg)


def emit_table(frame: pd.DataFrame, out: Optional[str], parameters: Optional[Mapping[str, Any]] = None,
               footer: Optional[Mapping[str, Any]] = None, summary: Optional[Mapping[str, Any]] = None) -> None:
    """
    Write a result table to ``out``, or print it when ``out`` is not given.

    The summary line ends the printed table. With ``out`` it is written into the file
    and printed on its own, so standard output always ends with it.
    """
    if out is None:
        click.echo(format_csv(frame, parameters, footer, summary), nl=False)
    else:
        with result_batch() as batch:
            batch.write(out, frame, parameters, footer, summary)
        click.echo(f'Written {out}.', err=True)
        if summary:
            click.echo(format_summary(summary))
