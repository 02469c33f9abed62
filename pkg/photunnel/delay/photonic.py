"""
Tunneling times of photonic stacks.

The Wigner transit time is the frequency derivative of ``arg t`` between the entry and
exit planes, computed as ``Im(t'(omega)/t(omega))``. Its vacuum reference is the time
the ambient medium needs to cover the same layer region at the same incidence,
``n_ambient * d * cos(theta) / c``.

The photonic Larmor analogue combines the phase and magnitude components of the same
logarithmic derivative in quadrature: ``tau_y = d(arg t)/d(omega)``,
``tau_z = d(ln|t|)/d(omega)``. At a transmission minimum ``tau_z`` vanishes and the
Larmor time equals the Wigner time; near a band edge ``|t|`` varies fast and the two
separate.

The Buttiker-Landauer analogue uses the Bloch dispersion ``cos(K p) = x(omega)`` of the
infinite periodic medium: ``tau_BL = d * |dK/d(omega)|`` with
``|dK/d(omega)| = |x'| / (p * sqrt(x^2 - 1))`` inside the gap. It vanishes at the exact
midgap of a quarter-wave stack, where ``x`` is stationary.

The module contains the following main components:

* :class:`PhotonicDelayReport` - Times of one probe
* :func:`photonic_wigner` - Full report for one probe
* :func:`photonic_bl_time` - Bloch-dispersion time
* :func:`photonic_larmor` - Larmor analogue
* :func:`angle_scan` - Reports over incidence angles
* :func:`period_scan` - Reports over the number of mirror periods
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from tqdm import tqdm

from ..errors import OutsideStopBandError, PhotunnelError, PreconditionError, UnreliableDelayError
from ..optics import Incidence, LayerStack, Medium, Polarization, SPEED_OF_LIGHT, AIR, bloch_trace_at, \
    quarter_wave_stack, stack_response, transmission_amplitude, unit_cell
from ..utils import DEFAULT_RELATIVE_STEP, central_difference, log_derivative, relative_step

#: float: Transmission magnitude below which the phase is considered undefined.
UNRELIABLE_AMPLITUDE = 1e-14

#: Tuple[str, ...]: Columns of the angle-scan table.
ANGLE_SCAN_COLUMNS = ('theta_deg', 'pol', 'T_flux', 'transit_fs', 'vacuum_fs', 'relative_fs',
                      'v_eff_over_c', 'bl_fs', 'larmor_fs')

#: str: Definition of the ``vacuum_fs`` column, written into the header of every table carrying it.
VACUUM_TIME_DEFINITION = 'n_ambient*thickness*cos(theta)/c'


@dataclass(frozen=True)
class PhotonicDelayReport:
    """
    Tunneling times of a stack for one probe, femtoseconds.

    :param transit_time: Wigner group delay from entry to exit plane.
    :param vacuum_time: Ambient traversal time of the layer region.
    :param relative_delay: ``transit_time - vacuum_time``.
    :param effective_velocity: ``vacuum_time / transit_time``, in units of the ambient
        phase velocity (``c`` for air).
    :param bl_time: Bloch-dispersion time, NaN outside the stop band or for aperiodic stacks.
    :param larmor_total: Quadrature Larmor analogue.
    :param flux_transmission: Transmitted energy fraction.
    :param error: Message of the failure when the point could not be evaluated.
    """
    transit_time: float
    vacuum_time: float
    relative_delay: float
    effective_velocity: float
    bl_time: float
    larmor_total: float
    flux_transmission: float
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def vacuum_time(stack: LayerStack, incidence: Incidence) -> float:
    """
    Time the ambient medium needs to cover the layer region, fs.

    Computed as ``n_ambient * thickness * cos(theta) / c``, the phase time of a slab of
    ambient as thick as the stack, which falls with the angle of incidence.

    .. note::
        At normal incidence in air this is simply ``total_thickness / c``, 3.59 fs for the
        bundled 11-layer mirror.
    """
    n0 = stack.ambient.refractive_index
    return n0 * stack.total_thickness * math.cos(incidence.angle) / SPEED_OF_LIGHT


def _t_of_omega(stack: LayerStack, incidence: Incidence):
    def _t(w):
        return complex(transmission_amplitude(stack, w, incidence.angle, incidence.polarization))

    return _t


def _log_derivative(stack: LayerStack, incidence: Incidence, rel_step: float) -> Tuple[complex, complex]:
    t_fn = _t_of_omega(stack, incidence)
    omega = incidence.omega
    t = t_fn(omega)
    if abs(t) < UNRELIABLE_AMPLITUDE:
        raise UnreliableDelayError(f'Transmission amplitude {abs(t)!r} too small for a phase at '
                                   f'{incidence.vacuum_wavelength!r} nm.')
    return t, log_derivative(t_fn, omega, relative_step(omega, rel_step))


def photonic_larmor(stack: LayerStack, incidence: Incidence,
                    rel_step: float = DEFAULT_RELATIVE_STEP) -> Tuple[float, float, float]:
    """
    Larmor analogue of a stack.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param incidence: Probe.
    :type incidence: Incidence
    :param rel_step: Relative frequency step.
    :type rel_step: float
    :return: ``(tau_y, tau_z, tau_total)`` in fs.
    :rtype: Tuple[float, float, float]
    :raises UnreliableDelayError: If ``|t|`` vanishes at the probe.
    """
    _, d = _log_derivative(stack, incidence, rel_step)
    tau_y, tau_z = d.imag, d.real
    return tau_y, tau_z, math.hypot(tau_y, tau_z)


def photonic_bl_time(stack: LayerStack, incidence: Incidence,
                     rel_step: float = DEFAULT_RELATIVE_STEP) -> float:
    """
    Buttiker-Landauer analogue from the Bloch dispersion of the unit cell.

    :param stack: Periodic stack.
    :type stack: LayerStack
    :param incidence: Probe inside the stop band.
    :type incidence: Incidence
    :param rel_step: Relative frequency step.
    :type rel_step: float
    :return: ``d * |dK/d(omega)|`` in fs.
    :rtype: float
    :raises OutsideStopBandError: If the probe propagates in the periodic medium.
    :raises PreconditionError: If the stack is not periodic.
    """
    cell = unit_cell(stack)
    period = sum(layer.thickness for layer in cell)
    angle, pol = incidence.angle, incidence.polarization
    omega = incidence.omega

    x = float(bloch_trace_at(stack, omega, angle, pol))
    if abs(x) <= 1.0:
        raise OutsideStopBandError(f'Probe at {incidence.vacuum_wavelength!r} nm and '
                                   f'{incidence.angle_deg!r} deg is outside the stop band (|x|={abs(x)!r}).')
    dx = float(central_difference(lambda w: float(bloch_trace_at(stack, w, angle, pol)),
                                  omega, relative_step(omega, rel_step)))
    dk = abs(dx) / (period * math.sqrt(x * x - 1.0))
    return stack.total_thickness * dk


def photonic_wigner(stack: LayerStack, incidence: Incidence,
                    rel_step: float = DEFAULT_RELATIVE_STEP) -> PhotonicDelayReport:
    """
    Wigner transit time and the companion times of one probe.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param incidence: Probe.
    :type incidence: Incidence
    :param rel_step: Relative frequency step of all finite differences.
    :type rel_step: float
    :return: The report.
    :rtype: PhotonicDelayReport
    :raises UnreliableDelayError: If ``|t|`` vanishes at the probe.

    Example::

        >>> from photunnel.optics import quarter_wave_stack, Incidence, Medium
        >>> from photunnel.delay import photonic_wigner
        >>> mirror = quarter_wave_stack(700.0, 2.22, 1.45, 11, substrate=Medium.of(1.45))
        >>> report = photonic_wigner(mirror, Incidence(vacuum_wavelength=702.0))
        >>> report.relative_delay < 0 < report.transit_time
        True

    """
    _, d = _log_derivative(stack, incidence, rel_step)
    transit = d.imag
    larmor = math.hypot(d.imag, d.real)

    try:
        bl = photonic_bl_time(stack, incidence, rel_step)
    except (OutsideStopBandError, PreconditionError):
        bl = math.nan

    flux = stack_response(stack, incidence).flux_transmission
    reference = vacuum_time(stack, incidence)
    return PhotonicDelayReport(
        transit_time=transit,
        vacuum_time=reference,
        relative_delay=transit - reference,
        effective_velocity=reference / transit if transit != 0 else math.inf,
        bl_time=bl,
        larmor_total=larmor,
        flux_transmission=flux,
    )


def _failed_report(stack: LayerStack, incidence: Incidence, err: Exception) -> PhotonicDelayReport:
    return PhotonicDelayReport(
        transit_time=math.nan, vacuum_time=vacuum_time(stack, incidence), relative_delay=math.nan,
        effective_velocity=math.nan, bl_time=math.nan, larmor_total=math.nan,
        flux_transmission=math.nan, error=f'{type(err).__name__}: {err}',
    )


def angle_scan(stack: LayerStack, wavelength: float, polarization: Polarization, angles: List[float],
               progress: bool = False, rel_step: float = DEFAULT_RELATIVE_STEP
               ) -> List[Tuple[float, PhotonicDelayReport]]:
    """
    Reports over a series of incidence angles.

    Points that cannot be evaluated are logged and returned as reports carrying the
    error message and NaN times; the scan continues.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param wavelength: Vacuum wavelength in nm.
    :type wavelength: float
    :param polarization: Polarization.
    :type polarization: Polarization
    :param angles: Angles in radians, each in ``[0, pi/2)``.
    :type angles: List[float]
    :param progress: Show a progress bar.
    :type progress: bool
    :param rel_step: Relative frequency step.
    :type rel_step: float
    :return: ``(angle, report)`` pairs in input order.
    :rtype: List[Tuple[float, PhotonicDelayReport]]
    """
    for angle in angles:
        if not (0.0 <= angle < math.pi / 2):
            raise PreconditionError(f'Angle of incidence must lie in [0, pi/2), but {angle!r} found.')

    results = []
    for angle in tqdm(angles, desc='Angles', disable=not progress):
        incidence = Incidence(vacuum_wavelength=wavelength, angle=float(angle), polarization=polarization)
        try:
            report = photonic_wigner(stack, incidence, rel_step)
        except PhotunnelError as err:
            logging.warning(f'Angle {math.degrees(angle)!r} deg skipped - {err}')
            report = _failed_report(stack, incidence, err)
        results.append((float(angle), report))
    return results


def angle_scan_rows(scan: List[Tuple[float, PhotonicDelayReport]], polarization: Polarization) -> List[dict]:
    """
    Rows of the angle-scan table, one per scanned angle.
    """
    pol = Polarization(polarization).value
    return [{
        'theta_deg': math.degrees(angle),
        'pol': pol,
        'T_flux': report.flux_transmission,
        'transit_fs': report.transit_time,
        'vacuum_fs': report.vacuum_time,
        'relative_fs': report.relative_delay,
        'v_eff_over_c': report.effective_velocity,
        'bl_fs': report.bl_time,
        'larmor_fs': report.larmor_total,
    } for angle, report in scan]


def period_scan(design_wavelength: float, n_high: float, n_low: float, periods: List[int],
                incidence: Incidence, ambient: Medium = AIR, substrate: Medium = AIR,
                rel_step: float = DEFAULT_RELATIVE_STEP) -> List[Tuple[int, PhotonicDelayReport]]:
    """
    Reports for quarter-wave mirrors of increasing size.

    A mirror of ``N`` periods has ``2N + 1`` layers (``N`` high/low pairs plus a closing
    high-index layer), like the 11-layer mirror with ``N = 5``.

    :param design_wavelength: Design wavelength in nm.
    :type design_wavelength: float
    :param n_high: High index.
    :type n_high: float
    :param n_low: Low index.
    :type n_low: float
    :param periods: Period counts, each at least 1.
    :type periods: List[int]
    :param incidence: Probe.
    :type incidence: Incidence
    :param ambient: Incidence medium.
    :type ambient: Medium
    :param substrate: Exit medium.
    :type substrate: Medium
    :param rel_step: Relative frequency step.
    :type rel_step: float
    :return: ``(N, report)`` pairs.
    :rtype: List[Tuple[int, PhotonicDelayReport]]
    """
    results = []
    for n in periods:
        if n < 1:
            raise PreconditionError(f'Period count should be at least 1, but {n!r} found.')
        stack = quarter_wave_stack(design_wavelength, n_high, n_low, 2 * n + 1, ambient, substrate)
        results.append((int(n), photonic_wigner(stack, incidence, rel_step)))
    return results
