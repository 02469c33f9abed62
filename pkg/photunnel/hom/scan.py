"""
Coincidence scans of the two-arm interferometer.

One photon of each pair crosses the barrier arm, its twin the reference arm, and both
meet at a 50/50 beamsplitter. The reference arm carries the adjustable delay ``tau``.
With arm filters ``t1`` (barrier) and ``t2`` (reference), the joint spectral intensity
``|phi(Omega)|^2`` and ``t(+-) = t(omega0 +- Omega)``, the normalized coincidence rate is

.. math::

    R(\\tau) = 1 - \\frac{\\mathrm{Re}\\int t_1(+) t_2(-) \\overline{t_1(-) t_2(+)}
               |\\phi|^2 e^{-2i\\Omega\\tau} d\\Omega}{\\int |t_1(+) t_2(-)|^2 |\\phi|^2 d\\Omega}

which is non-negative by the Cauchy-Schwarz inequality and tends to 1 far from the dip.
For a linear-phase filter ``t1 = exp(i omega tau_g)`` the dip sits exactly at
``tau = tau_g``: a positive center means the barrier photon arrives late.

A layer stack used as an arm filter is referenced to the same thickness of ambient
medium, ``t(omega) * exp(-i omega n_ambient d cos(theta) / c)``, so an identity arm stands
for a photon crossing that distance in the ambient.

The module contains the following main components:

* :class:`DelayElement` - Non-dispersive delay filter
* :class:`ArmFilters` - Filters of both arms and the common incidence
* :class:`CoincidenceScan` - Rates and dip fit
* :func:`arm_transmission` - Complex transmission of one arm filter
* :func:`coincidence_rates` - Rates without a fit
* :func:`coincidence_scan` - Rates with a dip fit
* :func:`relative_tunneling_time` - Dip shift against the identity configuration
"""

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.integrate import trapezoid

from .fit import DipFit, fit_dip
from .spectrum import BiphotonSpectrum, default_delays
from ..errors import DegenerateScanError, PreconditionError
from ..optics import LayerStack, Polarization, SPEED_OF_LIGHT, transmission_amplitude

#: int: Default number of spectral samples.
SPECTRAL_POINTS = 513

#: float: Relative flux below which a scan counts as blocked.
DEGENERATE_FLUX = 1e-20


class DelayElement(BaseModel):
    """
    Non-dispersive filter ``t(omega) = amplitude * exp(i omega delay)``.

    :param delay: Group delay in fs.
    :type delay: float
    :param amplitude: Constant magnitude in ``[0, 1]``.
    :type amplitude: float
    """
    model_config = ConfigDict(frozen=True)

    delay: float = 0.0
    amplitude: float = Field(default=1.0, ge=0, le=1)


ArmFilter = Optional[Union[LayerStack, DelayElement]]


class ArmFilters(BaseModel):
    """
    Filters of the two arms. ``None`` is the identity filter.

    :param barrier_arm: Filter crossed by the first photon.
    :param reference_arm: Filter crossed by its twin, which also carries the scanned delay.
    :param angle: Angle of incidence on layer-stack filters, radians.
    :param polarization: Polarization of both photons.
    """
    model_config = ConfigDict(frozen=True)

    barrier_arm: ArmFilter = None
    reference_arm: ArmFilter = None
    angle: float = 0.0
    polarization: Polarization = Polarization.P

    @field_validator('angle')
    @classmethod
    def _check_angle(cls, v: float) -> float:
        if not (0.0 <= v < math.pi / 2):
            raise ValueError(f'Angle of incidence must lie in [0, pi/2), but {v!r} found.')
        return v

    def swapped(self) -> 'ArmFilters':
        """
        The same filters with the arms exchanged.
        """
        return ArmFilters(barrier_arm=self.reference_arm, reference_arm=self.barrier_arm,
                          angle=self.angle, polarization=self.polarization)


def arm_transmission(arm: ArmFilter, omega, angle: float = 0.0,
                     polarization: Polarization = Polarization.P) -> np.ndarray:
    """
    Complex transmission of one arm filter.

    :param arm: Layer stack, delay element or ``None`` for the identity.
    :param omega: Angular frequencies in rad/fs.
    :param angle: Angle of incidence on a stack, radians.
    :type angle: float
    :param polarization: Polarization.
    :type polarization: Polarization
    :return: Complex array shaped like ``omega``.
    :rtype: numpy.ndarray
    """
    omega = np.asarray(omega, dtype=float)
    if arm is None:
        return np.ones_like(omega, dtype=complex)
    elif isinstance(arm, DelayElement):
        return arm.amplitude * np.exp(1j * omega * arm.delay)
    else:
        t = transmission_amplitude(arm, omega, angle, polarization)
        path = arm.ambient.refractive_index * arm.total_thickness * math.cos(angle)
        return t * np.exp(-1j * omega * path / SPEED_OF_LIGHT)


@dataclass(frozen=True)
class CoincidenceScan:
    """
    Coincidence rate against the reference-arm delay.

    :param delays: Delays in fs.
    :param rates: Normalized rates, tending to 1 far from the dip.
    :param fit: Gaussian dip fit.
    """
    delays: np.ndarray
    rates: np.ndarray
    fit: DipFit

    @property
    def fit_center(self) -> float:
        return self.fit.center

    @property
    def fit_width(self) -> float:
        return self.fit.width

    @property
    def fit_visibility(self) -> float:
        return self.fit.visibility


def coincidence_rates(filters: ArmFilters, spec: BiphotonSpectrum, delays,
                      points: int = SPECTRAL_POINTS) -> np.ndarray:
    """
    Normalized coincidence rates at the given delays.

    :param filters: Arm filters.
    :type filters: ArmFilters
    :param spec: Biphoton spectrum.
    :type spec: BiphotonSpectrum
    :param delays: Reference-arm delays in fs.
    :param points: Spectral samples over ``+-4`` spectral sigmas.
    :type points: int
    :return: Rates, one per delay.
    :rtype: numpy.ndarray
    :raises DegenerateScanError: If the filters block the whole band.
    """
    delays = np.asarray(delays, dtype=float)
    detunings = spec.detunings(points)
    weight = spec.intensity(detunings)
    omega0 = spec.omega0

    def _t(arm, sign):
        return arm_transmission(arm, omega0 + sign * detunings, filters.angle, filters.polarization)

    t1p, t1m = _t(filters.barrier_arm, +1), _t(filters.barrier_arm, -1)
    t2p, t2m = _t(filters.reference_arm, +1), _t(filters.reference_arm, -1)

    direct = np.abs(t1p * t2m) ** 2 * weight
    norm = trapezoid(direct, detunings)
    if norm <= DEGENERATE_FLUX * trapezoid(weight, detunings):
        raise DegenerateScanError('Arm filters block the whole spectral band.')

    exchange = t1p * t2m * np.conj(t1m * t2p) * weight
    phases = np.exp(-2j * delays[:, None] * detunings[None, :])
    cross = trapezoid(exchange[None, :] * phases, detunings, axis=1)
    rates = 1.0 - cross.real / norm
    # clears roundoff at a perfect null
    return np.where((rates < 0) & (rates > -1e-12), 0.0, rates)


def coincidence_scan(filters: ArmFilters, spec: BiphotonSpectrum, delays=None,
                     points: int = SPECTRAL_POINTS) -> CoincidenceScan:
    """
    Coincidence scan with a Gaussian dip fit.

    :param filters: Arm filters.
    :type filters: ArmFilters
    :param spec: Biphoton spectrum.
    :type spec: BiphotonSpectrum
    :param delays: Increasing delays in fs spanning at least six dip sigmas, defaults to
        :func:`default_delays`.
    :param points: Spectral samples.
    :type points: int
    :return: The scan.
    :rtype: CoincidenceScan
    :raises PreconditionError: If the delay grid is too narrow.

    Example::

        >>> from photunnel.hom import ArmFilters, BiphotonSpectrum, DelayElement, coincidence_scan
        >>> scan = coincidence_scan(ArmFilters(barrier_arm=DelayElement(delay=5.0)), BiphotonSpectrum())
        >>> round(scan.fit_center, 1)
        5.0

    """
    delays = default_delays(spec) if delays is None else np.asarray(delays, dtype=float)
    if len(delays) == 0 or delays[-1] - delays[0] < 6.0 * spec.dip_sigma * (1.0 - 1e-9):
        raise PreconditionError(f'Delay grid should span at least +-3 dip widths '
                                f'({6.0 * spec.dip_sigma!r} fs in total).')
    rates = coincidence_rates(filters, spec, delays, points)
    return CoincidenceScan(delays=delays, rates=rates, fit=fit_dip(delays, rates))


def relative_tunneling_time(filters: ArmFilters, spec: BiphotonSpectrum, delays=None,
                            points: int = SPECTRAL_POINTS) -> float:
    """
    Dip shift caused by the filters, against identity filters in both arms.

    :param filters: Arm filters.
    :type filters: ArmFilters
    :param spec: Biphoton spectrum.
    :type spec: BiphotonSpectrum
    :param delays: Delay grid, defaults to :func:`default_delays`.
    :param points: Spectral samples.
    :type points: int
    :return: Shift in fs; negative means the barrier photon arrives early.
    :rtype: float

    .. note::
        Doubling ``points`` moves the shift of the bundled mirror by less than 1e-4 fs.

    Example::

        >>> from photunnel.hom import ArmFilters, BiphotonSpectrum, DelayElement, relative_tunneling_time
        >>> spec = BiphotonSpectrum(center_wavelength=702.0, bandwidth=6.0)
        >>> round(relative_tunneling_time(ArmFilters(barrier_arm=DelayElement(delay=5.0)), spec), 2)
        5.0

    """
    identity = ArmFilters(angle=filters.angle, polarization=filters.polarization)
    shifted = coincidence_scan(filters, spec, delays, points)
    reference = coincidence_scan(identity, spec, delays, points)
    return shifted.fit_center - reference.fit_center
