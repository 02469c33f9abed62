"""
The ``ftir`` subcommand: beam displacement and deflection across a prism gap.
"""

import math

import click
import pandas as pd

from .base import CONTEXT_SETTINGS, command_wrap
from .params import SCAN_RANGE, emit_table, lambda_option, out_option, pol_option
from ..ftir import DEFAULT_ANGLE_OFFSET_DEG, FTIR_COLUMNS, FtirGeometry, GaussianBeam, critical_angle, ftir_scan
from ..optics import Polarization
from ..scenario import ScanRange


def _add_ftir_subcommand(cli: click.Group) -> click.Group:
    @cli.command('ftir', help='Lateral displacement, angular deflection and times of a Gaussian beam '
                              'tunneling across an air gap between two prisms.',
                 context_settings=CONTEXT_SETTINGS)
    @click.option('--prism-index', 'prism_index', type=float, default=1.52, show_default=True,
                  help='Refractive index of both prisms.')
    @lambda_option
    @click.option('--angle', 'angle_deg', type=float, default=None,
                  help=f'Angle inside the prism in degrees, {DEFAULT_ANGLE_OFFSET_DEG!r} beyond '
                       f'the critical angle when omitted.')
    @pol_option('p')
    @click.option('--waist', 'waist', type=float, default=30000.0, show_default=True,
                  help='Beam waist in nm.')
    @click.option('--scan', 'scan', type=SCAN_RANGE, default='200:4000:200', show_default=True,
                  help='Gap widths in nm.')
    @click.option('--progress/--no-progress', default=True, show_default=True, help='Show a progress bar.')
    @out_option
    @command_wrap()
    def ftir(prism_index, wavelength, angle_deg, pol, waist, scan: ScanRange, progress, out):
        geometry = FtirGeometry(
            prism_index=prism_index, gap=float(scan.values()[0]), vacuum_wavelength=wavelength,
            incidence_angle=None if angle_deg is None else math.radians(angle_deg),
            polarization=Polarization(pol.lower()),
        )
        points = ftir_scan(geometry, list(scan.values()), GaussianBeam(waist=waist), progress)
        emit_table(pd.DataFrame([p.as_row() for p in points], columns=list(FTIR_COLUMNS)), out, {
            'prism_index': prism_index, 'lambda_nm': wavelength, 'pol': geometry.polarization,
            'angle_deg': math.degrees(geometry.incidence_angle), 'waist_nm': waist,
            'gaps_nm': f'{scan.start!r}:{scan.stop!r}:{scan.step!r}',
        }, {'critical_angle_deg': math.degrees(critical_angle(prism_index))})

    return cli
