"""
Exception hierarchy shared by all photunnel modules.

Every error raised deliberately by the library derives from :class:`PhotunnelError`,
so callers can catch the whole family at once. The command line interface maps each
concrete class onto its own exit status (see :mod:`photunnel.entry.base`).

The module contains the following exceptions:

* :class:`PhotunnelError` - Root of the hierarchy
* :class:`PreconditionError` - An operation was called outside its documented domain
* :class:`StackFileError` - A stack definition file could not be parsed
* :class:`UnreliableDelayError` - A phase derivative was requested where ``|t|`` vanishes
* :class:`OutsideStopBandError` - A Bloch-based time was requested outside the stop band
* :class:`DegenerateScanError` - A coincidence scan has no transmitted flux at all
* :class:`FitConvergenceError` - The dip fit gave up, carrying the best parameters so far
* :class:`CourantError` - A time-domain grid violates stability or resolution limits
* :class:`ScenarioError` - A scenario preset references missing files or bad values
"""

from typing import Optional, Tuple


class PhotunnelError(Exception):
    """
    Base class of all errors raised on purpose by photunnel.
    """
    pass


class PreconditionError(PhotunnelError, ValueError):
    """
    Raised when the arguments of an operation violate its preconditions.

    It is also a :class:`ValueError`, so plain ``except ValueError`` blocks keep working.
    """
    pass


class StackFileError(PhotunnelError):
    """
    Raised when a stack definition file is malformed.

    :param message: Description of the problem.
    :type message: str
    :param line_no: 1-based line number where the problem was found, if known.
    :type line_no: Optional[int]
    """

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f'line {line_no}: {message}'
        PhotunnelError.__init__(self, message)


class UnreliableDelayError(PhotunnelError):
    """
    Raised when a transmission amplitude is too close to zero for its phase to be defined.
    """
    pass


class OutsideStopBandError(PhotunnelError):
    """
    Raised when a semiclassical under-barrier time is requested for a probe that
    propagates (outside the stop band, or above the barrier).
    """
    pass


class DegenerateScanError(PhotunnelError):
    """
    Raised when the filters of a coincidence scan block the whole spectral band.
    """
    pass


class FitConvergenceError(PhotunnelError):
    """
    Raised when the dip fit does not converge within its evaluation budget.

    :param message: Description of the failure.
    :type message: str
    :param best: Best ``(center, width, visibility, baseline)`` found before giving up.
    :type best: Tuple[float, float, float, float]
    """

    def __init__(self, message: str, best: Tuple[float, float, float, float]):
        self.best = tuple(best)
        PhotunnelError.__init__(self, message)


class CourantError(PhotunnelError):
    """
    Raised when a time-domain grid is unstable or under-resolved.
    """
    pass


class ScenarioError(PhotunnelError):
    """
    Raised when a scenario preset cannot be loaded.
    """
    pass
