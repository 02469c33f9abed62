"""
Tunneling times of the rectangular barrier.

* Wigner (phase) time ``hbar * d(arg t_total)/dE``, the delay of a wave-packet peak
  from the entry plane to the exit plane.
* Buttiker-Landauer time ``m d / (hbar kappa)``, the width over the semiclassical
  under-barrier speed.
* Larmor times ``tau_y = -hbar d(arg t)/dV0`` and ``tau_z = -hbar d(ln|t|)/dV0`` with
  ``tau_total = hypot(tau_y, tau_z)``. Signs make ``tau_total`` approach ``+tau_BL`` for
  opaque barriers.

Derivatives are central differences with a relative step of ``1e-6`` applied to the
logarithmic derivative ``t'/t``. Near the barrier top the energy step is shrunk so that
it does not straddle ``E = V0`` by much; the amplitude is analytic there, so a small
straddle is harmless.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from tqdm import tqdm

from .rectangular import RectangularBarrier, barrier_total_amplitude
from ..errors import OutsideStopBandError, PreconditionError
from ..utils import DEFAULT_RELATIVE_STEP, log_derivative

#: Tuple[str, ...]: Columns of the delay table.
DELAY_COLUMNS = ('d', 'E', 'V0', 'tau_wigner', 'tau_bl', 'tau_larmor_y', 'tau_larmor_z',
                 'tau_larmor_total', 'tau_reference', 'relative_delay')


@dataclass(frozen=True)
class DelayReport:
    """
    All tunneling times of one barrier, in units of ``hbar / energy``.

    :param width: Barrier width ``d``.
    :param energy: Particle energy ``E``.
    :param height: Barrier height ``V0``.
    :param wigner_time: Phase time across the barrier region.
    :param bl_time: Buttiker-Landauer time, NaN above the barrier.
    :param larmor_y: Precession component.
    :param larmor_z: Spin-alignment component.
    :param larmor_total: ``hypot(larmor_y, larmor_z)``.
    :param reference_time: Free traversal time ``d / v``.
    :param relative_delay: ``wigner_time - reference_time``.
    """
    width: float
    energy: float
    height: float
    wigner_time: float
    bl_time: float
    larmor_y: float
    larmor_z: float
    larmor_total: float
    reference_time: float
    relative_delay: float

    def as_row(self) -> dict:
        return {
            'd': self.width, 'E': self.energy, 'V0': self.height,
            'tau_wigner': self.wigner_time, 'tau_bl': self.bl_time,
            'tau_larmor_y': self.larmor_y, 'tau_larmor_z': self.larmor_z,
            'tau_larmor_total': self.larmor_total, 'tau_reference': self.reference_time,
            'relative_delay': self.relative_delay,
        }


def _energy_step(b: RectangularBarrier, rel: float) -> float:
    step = rel * b.energy
    gap = abs(b.height - b.energy)
    if 0 < gap < step:
        shrunk = max(gap / 2.0, step / 16.0)
        logging.info(f'Energy step shrunk from {step!r} to {shrunk!r} near the barrier top.')
        step = shrunk
    return step


def wigner_time(b: RectangularBarrier, rel_step: float = DEFAULT_RELATIVE_STEP) -> float:
    """
    Wigner phase time across the barrier region.

    :param b: The barrier.
    :type b: RectangularBarrier
    :param rel_step: Relative energy step of the central difference.
    :type rel_step: float
    :return: ``hbar * Im(t_total'(E) / t_total(E))``.
    :rtype: float

    Example::

        >>> from photunnel.barrier import RectangularBarrier, wigner_time
        >>> b = RectangularBarrier.from_kappa_d(10.0)  # E = V0 / 2
        >>> round(wigner_time(b), 4)  # opaque limit hbar / (V0 - E) = 2
        2.0

    """
    step = _energy_step(b, rel_step)
    d = log_derivative(lambda e: barrier_total_amplitude(b.replace(energy=e)), b.energy, step)
    return b.hbar * d.imag


def free_time(b: RectangularBarrier) -> float:
    """
    Time a free particle of the same energy needs to cross the barrier width.
    """
    return b.width / b.velocity


def bl_time(b: RectangularBarrier) -> float:
    """
    Buttiker-Landauer time ``m d / (hbar kappa)``.

    :param b: The barrier, with ``E < V0``.
    :type b: RectangularBarrier
    :return: The time.
    :rtype: float
    :raises OutsideStopBandError: At or above the barrier top.
    """
    if not b.is_tunneling or b.at_top:
        raise OutsideStopBandError(f'Buttiker-Landauer time undefined for E={b.energy!r} >= V0={b.height!r}.')
    return b.mass * b.width / (b.hbar * b.kappa)


def larmor_times(b: RectangularBarrier, rel_step: float = DEFAULT_RELATIVE_STEP):
    """
    Larmor clock times from barrier-height derivatives.

    :param b: The barrier.
    :type b: RectangularBarrier
    :param rel_step: Relative step in ``V0``.
    :type rel_step: float
    :return: ``(tau_y, tau_z, tau_total)``.
    :rtype: Tuple[float, float, float]
    """
    step = rel_step * b.height
    gap = abs(b.height - b.energy)
    if 0 < gap < step:
        step = max(gap / 2.0, step / 16.0)
    d = log_derivative(lambda v: barrier_total_amplitude(b.replace(height=v)), b.height, step)
    tau_y = -b.hbar * d.imag
    tau_z = -b.hbar * d.real
    return tau_y, tau_z, math.hypot(tau_y, tau_z)


def delay_report(b: RectangularBarrier, rel_step: float = DEFAULT_RELATIVE_STEP) -> DelayReport:
    """
    Every tunneling time of one barrier.

    :param b: The barrier.
    :type b: RectangularBarrier
    :param rel_step: Relative step of all finite differences.
    :type rel_step: float
    :return: The report; ``bl_time`` is NaN at or above the barrier top.
    :rtype: DelayReport
    """
    tau_w = wigner_time(b, rel_step)
    tau_y, tau_z, tau_l = larmor_times(b, rel_step)
    try:
        tau_bl = bl_time(b)
    except OutsideStopBandError:
        tau_bl = math.nan
    reference = free_time(b)
    return DelayReport(
        width=b.width, energy=b.energy, height=b.height,
        wigner_time=tau_w, bl_time=tau_bl,
        larmor_y=tau_y, larmor_z=tau_z, larmor_total=tau_l,
        reference_time=reference, relative_delay=tau_w - reference,
    )


def _check_widths(widths: List[float]):
    if not widths:
        raise PreconditionError('At least one barrier width required.')
    if any(w <= 0 for w in widths):
        raise PreconditionError('Barrier widths should be positive.')
    if any(b <= a for a, b in zip(widths, widths[1:])):
        raise PreconditionError('Barrier widths should be strictly increasing.')


def hartman_scan(template: RectangularBarrier, widths: List[float], progress: bool = False,
                 rel_step: float = DEFAULT_RELATIVE_STEP) -> List[DelayReport]:
    """
    Delay reports for a series of barrier widths at fixed energy and height.

    :param template: Barrier whose width is replaced.
    :type template: RectangularBarrier
    :param widths: Positive, strictly increasing widths.
    :type widths: List[float]
    :param progress: Show a progress bar.
    :type progress: bool
    :param rel_step: Relative finite-difference step.
    :type rel_step: float
    :return: One report per width.
    :rtype: List[DelayReport]
    """
    widths = [float(w) for w in widths]
    _check_widths(widths)
    return [delay_report(template.replace(width=w), rel_step)
            for w in tqdm(widths, desc='Barrier widths', disable=not progress)]


def superluminal_onset(template: RectangularBarrier, widths: List[float]) -> Optional[float]:
    """
    First width whose Wigner time beats the free traversal time.

    :param template: Barrier whose width is replaced.
    :type template: RectangularBarrier
    :param widths: Positive, strictly increasing widths.
    :type widths: List[float]
    :return: The first width with a negative relative delay, or ``None``.
    :rtype: Optional[float]
    """
    for report in hartman_scan(template, widths):
        if report.relative_delay < 0:
            return report.width
    return None
