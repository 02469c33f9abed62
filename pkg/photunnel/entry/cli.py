"""
Command-line interface entry point for photunnel.

This module composes the main CLI group with every subcommand through a decorator
pattern. New subcommands are added by including their decorators in the
``_DECORATORS`` list.

The module contains the following main components:

* :data:`cli` - Main CLI group that serves as the entry point for all commands

Example::

    >>> # The CLI can be invoked from the command line:
    >>> # $ photunnel spectrum --scan 500:1000:1 --out spectrum.csv
    >>> # $ photunnel reproduce dip --out results
    >>>
    >>> # Or programmatically:
    >>> from photunnel.entry.cli import cli
    >>> cli()

"""

from .barrier import _add_qm_subcommand, _add_hartman_subcommand
from .delay import _add_delay_subcommand, _add_angle_scan_subcommand
from .dispatch import photunnel
from .fdtd import _add_fdtd_subcommand
from .ftir import _add_ftir_subcommand
from .hom import _add_hom_subcommand
from .optics import _add_spectrum_subcommand, _add_stack_subcommand
from .reproduce import _add_reproduce_subcommand

_DECORATORS = [
    _add_spectrum_subcommand,
    _add_stack_subcommand,
    _add_delay_subcommand,
    _add_angle_scan_subcommand,
    _add_qm_subcommand,
    _add_hartman_subcommand,
    _add_hom_subcommand,
    _add_ftir_subcommand,
    _add_fdtd_subcommand,
    _add_reproduce_subcommand,
]

cli = photunnel
for deco in _DECORATORS:
    cli = deco(cli)
