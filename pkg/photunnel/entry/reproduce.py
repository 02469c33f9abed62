"""
The ``reproduce`` subcommand: the tables of one reproduction run from a scenario preset.
"""

import click

from .base import CONTEXT_SETTINGS, command_wrap
from ..scenario import list_presets, load_preset, reproduce, run_names


def _add_reproduce_subcommand(cli: click.Group) -> click.Group:
    @cli.command('reproduce', help='Write the CSV tables of one reproduction run into a directory: fig3 (alias dip) '
                      'for the coincidence dips, fig4 (alias angles) for delays against the angle, '
                      'hartman for barrier and period scans, ftir for prism-gap beam shifts.',
                 context_settings=CONTEXT_SETTINGS)
    @click.argument('run', type=click.Choice(run_names()))
    @click.option('--scenario', 'scenario', type=str, default='berkeley', show_default=True,
                  help=f'Bundled preset ({", ".join(list_presets())}) or path to a scenario JSON file.')
    @click.option('--out', 'out', type=click.Path(file_okay=False), default='.', show_default=True,
                  help='Output directory, created when missing.')
    @click.option('--progress/--no-progress', default=True, show_default=True, help='Show progress bars.')
    @command_wrap()
    def reproduce_(run, scenario, out, progress):
        paths = reproduce(load_preset(scenario), run, out, progress)
        for path in paths:
            click.echo(f'Written {path}.', err=True)

    return cli
