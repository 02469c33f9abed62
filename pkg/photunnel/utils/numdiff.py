"""
Finite-difference helpers shared by every delay calculation.

All tunneling times in photunnel are derivatives of a complex amplitude with respect
to a scalar (frequency, energy, barrier height or angle). They are computed here with
central differences on a relative step, and the logarithmic form ``f'/f`` is used so
that phase derivatives never need 2π unwrapping: ``Im(f'/f) = d(arg f)/dx`` and
``Re(f'/f) = d(ln|f|)/dx``.

The module contains the following main components:

* :data:`DEFAULT_RELATIVE_STEP` - Default relative step of all central differences
* :func:`relative_step` - Absolute step for a given abscissa
* :func:`central_difference` - Two-point central difference
* :func:`log_derivative` - Central-difference estimate of ``f'(x)/f(x)``
* :func:`halving_change` - Richardson-style step-halving consistency check

Example::

    >>> import numpy as np
    >>> from photunnel.utils.numdiff import log_derivative
    >>> d = log_derivative(lambda x: np.exp(2j * x), 1.0)
    >>> round(d.imag, 9)
    2.0

"""

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

#: float: Relative step used by every central difference unless overridden.
DEFAULT_RELATIVE_STEP = 1e-6

_Number = Union[float, complex, np.ndarray]


def relative_step(x: float, rel: float = DEFAULT_RELATIVE_STEP) -> float:
    """
    Absolute finite-difference step for abscissa ``x``.

    :param x: Point of differentiation.
    :type x: float
    :param rel: Relative step size.
    :type rel: float
    :return: ``rel * |x|``, or ``rel`` itself when ``x`` is zero.
    :rtype: float
    """
    return rel * abs(x) if x != 0 else rel


def central_difference(func: Callable[[float], _Number], x: float, step: float) -> _Number:
    """
    Two-point central difference ``(f(x+h) - f(x-h)) / 2h``.

    :param func: Function to differentiate, may return complex values or arrays.
    :type func: Callable[[float], Any]
    :param x: Point of differentiation.
    :type x: float
    :param step: Absolute step ``h``, must be positive.
    :type step: float
    :return: Derivative estimate.
    """
    if step <= 0:
        raise ValueError(f'Finite-difference step must be positive, but {step!r} found.')
    return (func(x + step) - func(x - step)) / (2.0 * step)


def log_derivative(func: Callable[[float], _Number], x: float, step: float = None) -> _Number:
    """
    Central-difference estimate of the logarithmic derivative ``f'(x) / f(x)``.

    :param func: Complex-valued function.
    :type func: Callable[[float], Any]
    :param x: Point of differentiation.
    :type x: float
    :param step: Absolute step, defaults to :func:`relative_step` of ``x``.
    :type step: float
    :return: ``f'(x) / f(x)``; its imaginary part is the phase derivative and its real
        part the derivative of ``ln|f|``.

    .. note::
       The caller is responsible for making sure ``f(x)`` does not vanish.
    """
    step = relative_step(x) if step is None else step
    return central_difference(func, x, step) / func(x)


@dataclass(frozen=True)
class HalvingCheck:
    """
    Outcome of a step-halving consistency check.

    :param value: Estimate at the nominal step.
    :param halved: Estimate at half the nominal step.
    :param extrapolated: Richardson extrapolation ``(4 * halved - value) / 3``.
    :param relative_change: ``|halved - value| / |halved|``.
    """
    value: float
    halved: float
    extrapolated: float
    relative_change: float


def halving_change(estimate: Callable[[float], float], step: float) -> HalvingCheck:
    """
    Evaluate a step-dependent estimate at ``step`` and ``step / 2``.

    Central differences have an ``O(h^2)`` truncation error, so the two estimates
    differ by roughly three quarters of the error of the coarse one.

    :param estimate: Callable mapping an absolute step to an estimate.
    :type estimate: Callable[[float], float]
    :param step: Nominal absolute step.
    :type step: float
    :return: The check record.
    :rtype: HalvingCheck

    Example::

        >>> import math
        >>> from photunnel.utils.numdiff import central_difference, halving_change
        >>> check = halving_change(lambda h: central_difference(math.sin, 0.3, h), 1e-3)
        >>> check.relative_change < 1e-6
        True

    """
    value = float(estimate(step))
    halved = float(estimate(step / 2.0))
    scale = abs(halved) if halved != 0 else 1.0
    return HalvingCheck(
        value=value,
        halved=halved,
        extrapolated=(4.0 * halved - value) / 3.0,
        relative_change=abs(halved - value) / scale,
    )
