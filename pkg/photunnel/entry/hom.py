"""
The ``hom`` subcommand: a coincidence scan with the stack in one arm.
"""

import click

from .base import CONTEXT_SETTINGS, command_wrap
from .params import SCAN_RANGE, angle_option, emit_table, lambda_option, out_option, pol_option, resolve_stack, \
    stack_option, to_polarization, to_radians
from ..hom import ArmFilters, BiphotonSpectrum, coincidence_scan, default_delays
from ..optics import uncoated_control
from ..scenario import scan_footer, scan_frame, scan_summary


def _add_hom_subcommand(cli: click.Group) -> click.Group:
    @cli.command('hom', help='Two-photon coincidence scan with the stack in one arm. The table ends with the '
                             'shift against the uncoated control and the Gaussian dip fit line '
                             '"# center_fs=... width_fs=... visibility=...", which is also printed '
                             'on standard output when --out is given.',
                 context_settings=CONTEXT_SETTINGS)
    @stack_option
    @lambda_option
    @click.option('--bandwidth', 'bandwidth', type=float, default=6.0, show_default=True,
                  help='Per-photon spectral FWHM in nm.')
    @click.option('--dip-width', 'dip_width', type=float, default=None,
                  help='Identity-dip FWHM in fs, replaces --bandwidth when given.')
    @angle_option
    @pol_option('p')
    @click.option('--scan', 'scan', type=SCAN_RANGE, default=None,
                  help='Reference-arm delays in fs, +-6 dip sigmas when omitted.')
    @click.option('--control', is_flag=True, default=False,
                  help='Scan the uncoated control instead of the stack.')
    @out_option
    @command_wrap()
    def hom(stack_file, wavelength, bandwidth, dip_width, angle_deg, pol, scan, control, out):
        stack = resolve_stack(stack_file)
        if dip_width is not None:
            spectrum = BiphotonSpectrum.from_dip_width(wavelength, dip_width)
        else:
            spectrum = BiphotonSpectrum(center_wavelength=wavelength, bandwidth=bandwidth)
        delays = default_delays(spectrum) if scan is None else scan.values()
        angle, polarization = to_radians(angle_deg), to_polarization(pol)

        def _scan(arm):
            return coincidence_scan(ArmFilters(barrier_arm=arm, angle=angle, polarization=polarization),
                                    spectrum, delays)

        control_scan = _scan(uncoated_control(stack))
        result = control_scan if control else _scan(stack)
        emit_table(scan_frame(result), out, {
            'stack': stack_file or 'berkeley', 'lambda_nm': wavelength, 'bandwidth_nm': spectrum.bandwidth,
            'angle_deg': angle_deg, 'pol': polarization, 'arm': 'control' if control else 'mirror',
        }, scan_footer(result, result.fit_center - control_scan.fit_center), scan_summary(result))

    return cli
