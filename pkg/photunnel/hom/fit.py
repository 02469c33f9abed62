"""
Gaussian dip fit of a coincidence scan.

The model is ``baseline * (1 - visibility * exp(-(tau - center)^2 / (2 width^2)))``,
fitted with :func:`scipy.optimize.least_squares` from an initial guess read off the data.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from ..errors import FitConvergenceError, PreconditionError

#: int: Minimum number of samples of a fit.
MIN_POINTS = 7

#: float: Initial visibility below which the data counts as flat.
FLAT_VISIBILITY = 1e-6


@dataclass(frozen=True)
class DipFit:
    """
    Fitted dip parameters.

    :param center: Dip center, fs.
    :param width: Gaussian standard deviation, fs.
    :param visibility: Relative depth in ``[0, 1]``.
    :param baseline: Rate far from the dip.
    :param cost: Final least-squares cost.
    :param evaluations: Model evaluations used.
    :param reliable: False when the data show no dip, in which case ``center`` is meaningless.
    """
    center: float
    width: float
    visibility: float
    baseline: float
    cost: float
    evaluations: int
    reliable: bool = True


def dip_model(delays, center: float, width: float, visibility: float, baseline: float) -> np.ndarray:
    """
    Gaussian coincidence dip.
    """
    delays = np.asarray(delays, dtype=float)
    return baseline * (1.0 - visibility * np.exp(-(delays - center) ** 2 / (2.0 * width ** 2)))


def _initial_guess(delays: np.ndarray, rates: np.ndarray):
    n_outer = max(1, int(round(0.05 * len(delays))))
    baseline = float(np.mean(np.concatenate([rates[:n_outer], rates[-n_outer:]])))
    i_min = int(np.argmin(rates))
    visibility = 1.0 - float(rates[i_min]) / baseline if baseline > 0 else 0.0

    half_level = baseline * (1.0 - visibility / 2.0)
    below = np.nonzero(rates <= half_level)[0]
    span = float(delays[-1] - delays[0])
    if len(below) >= 2:
        width = float(delays[below[-1]] - delays[below[0]]) / (2.0 * math.sqrt(2.0 * math.log(2.0)))
    else:
        width = span / 10.0
    step = span / (len(delays) - 1)
    width = max(width, step)
    return float(delays[i_min]), width, visibility, baseline


def fit_dip(delays, rates, max_evaluations: int = 2000) -> DipFit:
    """
    Fit a Gaussian dip to a coincidence scan.

    :param delays: Increasing delays in fs, at least :data:`MIN_POINTS`.
    :param rates: Coincidence rates at those delays.
    :param max_evaluations: Budget of model evaluations.
    :type max_evaluations: int
    :return: The fit.
    :rtype: DipFit
    :raises PreconditionError: With too few points or unsorted delays.
    :raises FitConvergenceError: If the budget runs out, carrying the best parameters so far
        as ``(center, width, visibility, baseline)``.

    .. note::
        The grid need not be uniform or fine. Delays from :func:`photunnel.hom.trombone_delays`
        with 0.1 um prism steps, 0.667 fs apart, place the center of a 20 fs dip to
        better than 0.2 fs.

    Example::

        >>> import numpy as np
        >>> from photunnel.hom import dip_model, fit_dip
        >>> taus = np.linspace(-40, 40, 81)
        >>> fit = fit_dip(taus, dip_model(taus, -1.47, 8.0, 1.0, 1.0))
        >>> abs(fit.center + 1.47) < 1e-6
        True

    """
    delays = np.asarray(delays, dtype=float)
    rates = np.asarray(rates, dtype=float)
    if delays.shape != rates.shape or delays.ndim != 1:
        raise PreconditionError('Delays and rates should be 1-dimensional arrays of the same length.')
    if len(delays) < MIN_POINTS:
        raise PreconditionError(f'At least {MIN_POINTS} points required for a dip fit, but {len(delays)} found.')
    if np.any(np.diff(delays) <= 0):
        raise PreconditionError('Delays should be strictly increasing.')

    center0, width0, visibility0, baseline0 = _initial_guess(delays, rates)
    if visibility0 < FLAT_VISIBILITY:
        logging.warning('No dip found in the coincidence scan, center is unreliable.')
        return DipFit(center=float(np.mean(delays)), width=math.nan, visibility=max(visibility0, 0.0),
                      baseline=baseline0, cost=0.0, evaluations=0, reliable=False)

    span = float(delays[-1] - delays[0])
    step = span / (len(delays) - 1)
    lower = [delays[0], step / 10.0, 0.0, 0.0]
    upper = [delays[-1], span, 1.5, 2.0 * max(float(np.max(rates)), baseline0)]
    x0 = np.clip([center0, width0, min(visibility0, 1.0), baseline0],
                 np.asarray(lower) + 1e-12 * (np.asarray(upper) - np.asarray(lower)),
                 np.asarray(upper) - 1e-12 * (np.asarray(upper) - np.asarray(lower)))

    def _residual(p):
        return dip_model(delays, *p) - rates

    result = least_squares(_residual, x0, bounds=(lower, upper), x_scale='jac',
                           ftol=1e-12, xtol=1e-12, gtol=1e-12, max_nfev=max_evaluations)
    center, width, visibility, baseline = (float(v) for v in result.x)
    if result.status == 0:
        raise FitConvergenceError(f'Dip fit did not converge within {max_evaluations} evaluations.',
                                  (center, width, visibility, baseline))

    return DipFit(
        center=center, width=width, visibility=min(visibility, 1.0), baseline=baseline,
        cost=float(result.cost), evaluations=int(result.nfev), reliable=True,
    )
