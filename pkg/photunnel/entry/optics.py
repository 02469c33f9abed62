"""
The ``spectrum`` and ``stack`` subcommands.
"""

import click

from .base import CONTEXT_SETTINGS, command_wrap
from .params import SCAN_RANGE, angle_option, emit_table, out_option, pol_option, resolve_stack, stack_option, \
    to_polarization, to_radians
from ..optics import Medium, band_edges, dump_stack, quarter_wave_stack, spectrum_table_at
from ..scenario import ScanRange


def _add_spectrum_subcommand(cli: click.Group) -> click.Group:
    @cli.command('spectrum', help='Complex reflection and transmission of a stack over wavelength.',
                 context_settings=CONTEXT_SETTINGS)
    @stack_option
    @click.option('--scan', 'scan', type=SCAN_RANGE, default='500:1000:1', show_default=True,
                  help='Vacuum wavelengths in nm.')
    @angle_option
    @pol_option('s')
    @click.option('--edges', is_flag=True, default=False,
                  help='Append the band edges around the probe wavelength to the footer, both the Bloch '
                       'edges (bloch_*) and the 50% transmission points (half_transmission_*).')
    @click.option('--lambda', 'wavelength', type=float, default=702.0, show_default=True,
                  help='Probe wavelength inside the stop band, used with --edges.')
    @out_option
    @command_wrap()
    def spectrum(stack_file, scan: ScanRange, angle_deg, pol, edges, wavelength, out):
        stack = resolve_stack(stack_file)
        wavelengths = scan.values()
        angle, polarization = to_radians(angle_deg), to_polarization(pol)
        frame = spectrum_table_at(stack, wavelengths, angle, polarization)

        footer = {}
        if edges:
            for method in ('bloch', 'half_transmission'):
                short, long = band_edges(stack, float(wavelengths[0]), float(wavelengths[-1]),
                                         center=wavelength, method=method, angle=angle,
                                         polarization=polarization)
                footer[f'{method}_short_nm'] = short
                footer[f'{method}_long_nm'] = long

        emit_table(frame, out, {'stack': stack_file or 'berkeley', 'angle_deg': angle_deg, 'pol': polarization,
                                'scan_nm': f'{scan.start!r}:{scan.stop!r}:{scan.step!r}'}, footer)

    return cli


def _add_stack_subcommand(cli: click.Group) -> click.Group:
    @cli.command('stack', help='Write a quarter-wave mirror stack file.', context_settings=CONTEXT_SETTINGS)
    @click.option('--design', 'design', type=float, default=700.0, show_default=True,
                  help='Design (midgap) wavelength in nm.')
    @click.option('--n-high', type=float, default=2.22, show_default=True, help='High refractive index.')
    @click.option('--n-low', type=float, default=1.45, show_default=True, help='Low refractive index.')
    @click.option('--layers', type=int, default=11, show_default=True, help='Number of layers.')
    @click.option('--ambient', type=float, default=1.0, show_default=True, help='Ambient refractive index.')
    @click.option('--substrate', type=float, default=1.45, show_default=True, help='Substrate refractive index.')
    @click.option('--out', 'out', type=click.Path(dir_okay=False), required=True, help='Stack file to write.')
    @command_wrap()
    def stack(design, n_high, n_low, layers, ambient, substrate, out):
        mirror = quarter_wave_stack(design, n_high, n_low, layers, Medium.of(ambient), Medium.of(substrate))
        dump_stack(mirror, out, comment=f'{layers}-layer quarter-wave mirror for {design!r} nm')
        click.echo(f'Written {out}, {mirror.total_thickness:.4f} nm in total.', err=True)

    return cli
