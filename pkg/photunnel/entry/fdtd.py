"""
The ``fdtd`` subcommand: time-domain runs through a stack and through the ambient.
"""

import math

import click
import pandas as pd

from .base import CONTEXT_SETTINGS, command_wrap
from .params import emit_table, lambda_option, out_option, resolve_stack, stack_option
from ..optics import SPEED_OF_LIGHT
from ..timedomain import GaussianPulse, GridConfig, SharpFrontSource, causality_verdict, distortion, \
    energy_balance, peak_delay, run_pair

#: Tuple[str, ...]: Columns of the monitor table.
RECORD_COLUMNS = ('t_fs', 'entry', 'exit', 'reference_entry', 'reference_exit')


def _add_fdtd_subcommand(cli: click.Group) -> click.Group:
    @cli.command('fdtd', help='One-dimensional time-domain propagation through a stack and through the '
                              'ambient. The table holds the entry and exit monitors of both runs, the '
                              'footer the peak delay, the causality check and the energy balance.',
                 context_settings=CONTEXT_SETTINGS)
    @stack_option
    @lambda_option
    @click.option('--source', 'source_kind', type=click.Choice(['gaussian', 'front']), default='gaussian',
                  show_default=True, help='Gaussian pulse, or a sinusoid with a sharp front.')
    @click.option('--bandwidth', 'bandwidth', type=float, default=20.0, show_default=True,
                  help='Spectral FWHM of the Gaussian pulse in nm.')
    @click.option('--hold', 'hold', type=float, default=60.0, show_default=True,
                  help='Emission time of the sharp-front source in fs.')
    @click.option('--dz', 'dz', type=float, default=1.0, show_default=True, help='Largest spatial step in nm.')
    @click.option('--courant', 'courant', type=float, default=1.0, show_default=True,
                  help='Fraction of the stable time step.')
    @click.option('--progress/--no-progress', default=True, show_default=True, help='Show progress bars.')
    @out_option
    @command_wrap()
    def fdtd(stack_file, wavelength, source_kind, bandwidth, hold, dz, courant, progress, out):
        stack = resolve_stack(stack_file)
        if source_kind == 'gaussian':
            source = GaussianPulse(center_wavelength=wavelength, bandwidth=bandwidth)
        else:
            source = SharpFrontSource(center_wavelength=wavelength, hold=hold)
        record, reference = run_pair(stack, source, GridConfig(max_spatial_step=dz, courant=courant), progress)

        verdict = causality_verdict(record, reference)
        balance = energy_balance(record, reference)
        footer = {
            'causal': verdict.causal,
            'early_ratio': verdict.early_ratio,
            'exit_front_fs': verdict.exit_front,
            'light_cone_fs': verdict.light_cone,
            'R_energy': balance.reflectance,
            'T_energy': balance.transmittance,
        }
        if source_kind == 'gaussian':
            footer['peak_delay_fs'] = peak_delay(record, reference)
            footer['distortion'] = distortion(record, reference)
            footer['vacuum_fs'] = stack.ambient.refractive_index * stack.total_thickness / SPEED_OF_LIGHT

        frame = pd.DataFrame({
            't_fs': record.times,
            'entry': record.entry,
            'exit': record.exit,
            'reference_entry': reference.entry,
            'reference_exit': reference.exit,
        }, columns=list(RECORD_COLUMNS))
        parameters = {
            'stack': stack_file or 'berkeley', 'lambda_nm': wavelength, 'source': source_kind,
            'dz_nm': record.grid.spatial_step, 'dt_fs': record.grid.time_step,
        }
        if source_kind == 'gaussian':
            parameters['bandwidth_nm'] = bandwidth
        else:
            parameters['hold_fs'] = hold
        emit_table(frame, out, parameters, footer)
        click.echo(f'Peak delay {footer.get("peak_delay_fs", math.nan):.4f} fs, '
                   f'{"causal" if verdict.causal else "NOT causal"}, '
                   f'R+T={balance.total:.4f}.', err=True)

    return cli
