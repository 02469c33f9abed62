"""
The ``qm`` and ``hartman`` subcommands for rectangular barriers in natural units.
"""

import click
import pandas as pd

from .base import CONTEXT_SETTINGS, command_wrap
from .params import SCAN_RANGE, emit_table, out_option
from ..barrier import DELAY_COLUMNS, RectangularBarrier, delay_report, hartman_scan
from ..scenario import ScanRange


def _barrier_options(func):
    func = click.option('--energy', 'energy', type=float, default=0.5, show_default=True,
                        help='Particle energy E.')(func)
    func = click.option('--height', 'height', type=float, default=1.0, show_default=True,
                        help='Barrier height V0.')(func)
    return func


def _add_qm_subcommand(cli: click.Group) -> click.Group:
    @cli.command('qm', help='Tunneling times of one rectangular barrier, hbar = m = 1.',
                 context_settings=CONTEXT_SETTINGS)
    @_barrier_options
    @click.option('--width', 'width', type=float, default=10.0, show_default=True, help='Barrier width d.')
    @out_option
    @command_wrap()
    def qm(height, energy, width, out):
        report = delay_report(RectangularBarrier(height=height, width=width, energy=energy))
        emit_table(pd.DataFrame([report.as_row()], columns=list(DELAY_COLUMNS)), out,
                   {'V0': height, 'E': energy, 'hbar': 1.0, 'mass': 1.0})

    return cli


def _add_hartman_subcommand(cli: click.Group) -> click.Group:
    @cli.command('hartman', help='Tunneling times of rectangular barriers against width, hbar = m = 1.',
                 context_settings=CONTEXT_SETTINGS)
    @_barrier_options
    @click.option('--scan', 'scan', type=SCAN_RANGE, default='0.5:12:0.5', show_default=True,
                  help='Barrier widths d, all positive.')
    @click.option('--progress/--no-progress', default=True, show_default=True, help='Show a progress bar.')
    @out_option
    @command_wrap()
    def hartman(height, energy, scan: ScanRange, progress, out):
        template = RectangularBarrier(height=height, width=0.0, energy=energy)
        widths = list(scan.values())
        reports = hartman_scan(template, widths, progress)
        frame = pd.DataFrame([report.as_row() for report in reports], columns=list(DELAY_COLUMNS))
        onset = next((report.width for report in reports if report.relative_delay < 0), None)
        emit_table(frame, out, {'V0': height, 'E': energy, 'hbar': 1.0, 'mass': 1.0,
                                'widths': f'{scan.start!r}:{scan.stop!r}:{scan.step!r}'},
                   {'superluminal_onset': 'none' if onset is None else onset})

    return cli
