"""
Base utilities of the photunnel command line.

This module provides the Click plumbing shared by every subcommand: colored single-line
diagnostics, one exit status per failure kind, and a wrapper that turns library errors
into those diagnostics.

The module contains the following main components:

* :data:`EXIT_CODES` - Exit status of every library error
* :class:`ClickErrorException` - One-line diagnostic, see :meth:`ClickErrorException.from_error`
* :class:`KeyboardInterrupted` - Diagnostic of an interrupted command, exit status 7
* :func:`report_unexpected` - Traceback of an unexpected error with the photunnel version
* :func:`command_wrap` - Error handling decorator for Click commands

.. warning::
   The command_wrap decorator should be applied after Click decorators to ensure
   proper exception handling within the Click context.

Example::

    >>> import click
    >>> from photunnel.entry.base import command_wrap
    >>> from photunnel.optics import format_stack, load_stack
    >>>
    >>> @click.command()
    >>> @click.option('--stack', required=True, help='Stack file')
    >>> @command_wrap()
    >>> def show(stack):
    ...     click.echo(format_stack(load_stack(stack)))
    >>>
    >>> # a malformed stack file now exits with status 3 and a one-line message

"""

import logging
import sys
import traceback
from functools import wraps
from typing import Optional, IO, Callable, Dict, Type

import click
from click.exceptions import ClickException
from pydantic import ValidationError

from ..config.meta import __TITLE__, __VERSION__
from ..errors import PhotunnelError, StackFileError, PreconditionError, UnreliableDelayError, \
    OutsideStopBandError, FitConvergenceError, DegenerateScanError, CourantError, ScenarioError

CONTEXT_SETTINGS = dict(
    help_option_names=['-h', '--help']
)

#: Dict[Type[PhotunnelError], int]: Exit status of each library error.
EXIT_CODES: Dict[Type[PhotunnelError], int] = {
    StackFileError: 3,
    PreconditionError: 4,
    UnreliableDelayError: 5,
    OutsideStopBandError: 6,
    FitConvergenceError: 8,
    DegenerateScanError: 9,
    CourantError: 10,
    ScenarioError: 11,
}

#: int: Exit status of invalid parameter values caught by model validation.
VALIDATION_EXIT_CODE = EXIT_CODES[PreconditionError]

#: int: Exit status of an interrupted command.
INTERRUPT_EXIT_CODE = 7

#: str: Exit status table shown at the end of ``--help``.
EXIT_CODES_HELP = '\b\nExit status:\n' + '\n'.join([
    '  0   success',
    '  1   unexpected internal error',
    '  2   unknown flag or usage error',
    '  3   malformed stack file',
    '  4   precondition violation',
    '  5   unreliable delay, transmission too small',
    '  6   probe outside the stop band',
    '  7   interrupted',
    '  8   dip fit did not converge',
    '  9   degenerate coincidence scan',
    '  10  time-domain grid violation',
    '  11  invalid scenario',
])


def _one_line(text) -> str:
    return ' '.join(str(text).split())


class ClickErrorException(ClickException):
    """
    Single-line diagnostic of a failed command, printed to stderr in :attr:`color`.

    :param message: The diagnostic.
    :type message: str
    :param exit_code: Exit status, defaults to Click's status 1.
    :type exit_code: Optional[int]

    Example::

        >>> from photunnel.entry.base import ClickErrorException
        >>> from photunnel.errors import StackFileError
        >>> err = ClickErrorException.from_error(StackFileError('unknown keyword', line_no=2))
        >>> err.exit_code, err.message
        (3, 'StackFileError: line 2: unknown keyword')

    """
    #: str: Color of the printed diagnostic.
    color = 'red'

    def __init__(self, message: str, exit_code: Optional[int] = None):
        ClickException.__init__(self, message)
        if exit_code is not None:
            self.exit_code = exit_code

    def show(self, file: Optional[IO] = None) -> None:
        """
        Print the diagnostic to stderr.

        :param file: Kept for API compatibility, output always goes to stderr.
        :type file: Optional[IO]
        """
        click.secho(self.format_message(), fg=self.color, file=sys.stderr)

    @classmethod
    def from_error(cls, err: BaseException) -> 'ClickErrorException':
        """
        Diagnostic of a library error, with the exit status of :data:`EXIT_CODES`.

        Pydantic validation errors count as precondition violations and name the first
        offending field. A dip fit that gave up also reports its best center.

        :param err: A :class:`PhotunnelError` or a :class:`pydantic.ValidationError`.
        :type err: BaseException
        :return: The diagnostic.
        :rtype: ClickErrorException
        :raises TypeError: For any other exception.
        """
        if isinstance(err, PhotunnelError):
            message = f'{type(err).__name__}: {_one_line(err)}'
            if isinstance(err, FitConvergenceError):
                message = f'{message} (best center {err.best[0]:.4f} fs)'
            code = next((EXIT_CODES[c] for c in type(err).__mro__ if c in EXIT_CODES), 1)
            return cls(message, code)
        elif isinstance(err, ValidationError):
            first = err.errors()[0]
            where = '.'.join(str(item) for item in first['loc'])
            message = f'invalid {where} - {first["msg"]}' if where else first['msg']
            return cls(f'PreconditionError: {_one_line(message)}', VALIDATION_EXIT_CODE)
        else:
            raise TypeError(f'No diagnostic for {type(err).__name__}.')


class KeyboardInterrupted(ClickErrorException):
    """
    Diagnostic of a command stopped by Ctrl+C, exit status :data:`INTERRUPT_EXIT_CODE`.

    Result tables are published only when a command finishes, so nothing was written.
    """
    color = 'yellow'

    def __init__(self):
        ClickErrorException.__init__(self, 'Interrupted, no result file was written.', INTERRUPT_EXIT_CODE)


def report_unexpected(err: BaseException) -> None:
    """
    Print the traceback of an unexpected error together with the version that raised it.

    :param err: The error.
    :type err: BaseException
    """
    click.secho(f'Unexpected error found when running {__TITLE__} {__VERSION__}!', fg='red', file=sys.stderr)
    for chunk in traceback.format_exception(type(err), err, err.__traceback__):
        click.secho(chunk.rstrip('\n'), fg='red', file=sys.stderr)


def command_wrap():
    """
    Decorator factory for wrapping Click commands with photunnel error handling.

    * Click exceptions pass through unchanged.
    * Library and validation errors become :meth:`ClickErrorException.from_error`.
    * Keyboard interrupts become :class:`KeyboardInterrupted`.
    * Anything else goes through :func:`report_unexpected` and exits with status 1.

    :return: Decorator function that wraps Click command functions
    :rtype: Callable
    """

    def _decorator(func: Callable) -> Callable:
        @wraps(func)
        def _new_func(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ClickException:
                raise
            except KeyboardInterrupt:
                raise KeyboardInterrupted()
            except (PhotunnelError, ValidationError) as err:
                logging.debug('Command failed.', exc_info=True)
                raise ClickErrorException.from_error(err)
            except BaseException as err:
                report_unexpected(err)
                click.get_current_context().exit(1)

        return _new_func

    return _decorator
