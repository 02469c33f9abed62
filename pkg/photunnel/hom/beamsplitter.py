"""
Two-photon interference at a lossless beamsplitter.

When one photon enters each input port of a beamsplitter with amplitude reflection
``r`` and transmission ``t``, the coincidence amplitude is the sum of the
"both transmitted" and "both reflected" histories, ``t^2 + r^2``, so the coincidence
probability is ``|r^2 + t^2|^2``. For a lossless splitter time-reversal symmetry forces
``t = +-i r |t|/|r|``, and a 50/50 splitter gives a perfect null.
"""

import cmath
import math
from typing import Tuple

from ..errors import PreconditionError

#: float: Tolerance of the lossless check ``|r|^2 + |t|^2 = 1``.
LOSSLESS_TOLERANCE = 1e-9


def beamsplitter_coincidence(r: complex, t: complex) -> float:
    """
    Coincidence probability of two photons entering opposite ports.

    :param r: Amplitude reflection coefficient.
    :type r: complex
    :param t: Amplitude transmission coefficient.
    :type t: complex
    :return: ``|r^2 + t^2|^2``.
    :rtype: float
    :raises PreconditionError: If the splitter is not lossless.

    Example::

        >>> from photunnel.hom import beamsplitter_coincidence
        >>> r = 2 ** -0.5
        >>> beamsplitter_coincidence(r, 1j * r) < 1e-30
        True

    """
    if abs(abs(r) ** 2 + abs(t) ** 2 - 1.0) > LOSSLESS_TOLERANCE:
        raise PreconditionError(f'Beamsplitter is not lossless: |r|^2 + |t|^2 = {abs(r) ** 2 + abs(t) ** 2!r}.')
    return abs(r * r + t * t) ** 2


def lossless_beamsplitter(reflectance: float = 0.5, sign: int = 1) -> Tuple[complex, complex]:
    """
    Amplitudes of a lossless beamsplitter obeying ``t = +-i r sqrt(T/R)``.

    :param reflectance: Intensity reflectance ``R`` in ``[0, 1]``.
    :type reflectance: float
    :param sign: ``+1`` or ``-1``, the sign of the ``i`` factor.
    :type sign: int
    :return: ``(r, t)``.
    :rtype: Tuple[complex, complex]
    """
    if not (0.0 <= reflectance <= 1.0):
        raise PreconditionError(f'Reflectance should lie in [0, 1], but {reflectance!r} found.')
    if sign not in (1, -1):
        raise PreconditionError(f'Sign should be +1 or -1, but {sign!r} found.')
    r = complex(math.sqrt(reflectance))
    t = sign * 1j * math.sqrt(1.0 - reflectance) * cmath.exp(1j * cmath.phase(r))
    return r, t
