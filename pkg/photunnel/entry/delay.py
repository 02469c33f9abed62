"""
The ``delay`` and ``angle-scan`` subcommands.
"""

import math

import click
import pandas as pd

from .base import CONTEXT_SETTINGS, command_wrap
from .params import SCAN_RANGE, angle_option, emit_table, lambda_option, out_option, pol_option, resolve_stack, \
    stack_option, to_polarization, to_radians
from ..delay import ANGLE_SCAN_COLUMNS, VACUUM_TIME_DEFINITION, angle_scan, angle_scan_rows, photonic_wigner
from ..optics import Incidence
from ..scenario import ScanRange


def _add_delay_subcommand(cli: click.Group) -> click.Group:
    @cli.command('delay', help='Wigner, Buttiker-Landauer and Larmor times of a stack at one probe.',
                 context_settings=CONTEXT_SETTINGS)
    @stack_option
    @lambda_option
    @angle_option
    @pol_option('s')
    @out_option
    @command_wrap()
    def delay(stack_file, wavelength, angle_deg, pol, out):
        stack = resolve_stack(stack_file)
        angle, polarization = to_radians(angle_deg), to_polarization(pol)
        report = photonic_wigner(stack, Incidence(vacuum_wavelength=wavelength, angle=angle,
                                                  polarization=polarization))
        frame = pd.DataFrame(angle_scan_rows([(angle, report)], polarization), columns=list(ANGLE_SCAN_COLUMNS))
        emit_table(frame, out, {'stack': stack_file or 'berkeley', 'lambda_nm': wavelength,
                                 'vacuum_fs': VACUUM_TIME_DEFINITION})

    return cli


def _add_angle_scan_subcommand(cli: click.Group) -> click.Group:
    @cli.command('angle-scan', help='Transmission and tunneling times against the angle of incidence.',
                 context_settings=CONTEXT_SETTINGS)
    @stack_option
    @lambda_option
    @click.option('--scan', 'scan', type=SCAN_RANGE, default='0:80:1', show_default=True,
                  help='Angles of incidence in degrees, below 90.')
    @pol_option('p')
    @click.option('--progress/--no-progress', default=True, show_default=True, help='Show a progress bar.')
    @out_option
    @command_wrap()
    def angle_scan_(stack_file, wavelength, scan: ScanRange, pol, progress, out):
        stack = resolve_stack(stack_file)
        polarization = to_polarization(pol)
        angles = [math.radians(a) for a in scan.values()]
        rows = angle_scan_rows(angle_scan(stack, wavelength, polarization, angles, progress), polarization)
        emit_table(pd.DataFrame(rows, columns=list(ANGLE_SCAN_COLUMNS)), out, {
            'stack': stack_file or 'berkeley', 'lambda_nm': wavelength,
            'angles_deg': f'{scan.start!r}:{scan.stop!r}:{scan.step!r}', 'vacuum_fs': VACUUM_TIME_DEFINITION,
        })

    return cli
