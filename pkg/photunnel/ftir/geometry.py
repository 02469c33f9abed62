"""
Frustrated total internal reflection between two prisms.

Two identical prisms of index ``n`` are separated by an air gap. Beyond the critical
angle ``arcsin(1/n)`` the field in the gap is evanescent with decay constant
``kappa = k0 sqrt(n^2 sin^2(theta) - 1)`` and light tunnels across. The plane-wave
amplitude is the optics-core response of a single air layer between two prism media.

The module contains the following main components:

* :class:`FtirGeometry` - Prism index, gap, angle, wavelength and polarization
* :func:`critical_angle` - Critical angle of the prism/air interface
* :func:`kappa_gap` - Evanescent decay constant in the gap
* :func:`ftir_amplitude` - Plane-wave transmission across the gap
* :func:`ftir_wigner_time` - Frequency derivative of the transmission phase
* :func:`ftir_bl_time` - Gap width over the semiclassical evanescent speed
"""

import logging
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import OutsideStopBandError, UnreliableDelayError
from ..optics import AIR, Incidence, Layer, LayerStack, Medium, Polarization, SPEED_OF_LIGHT, stack_response, \
    transmission_amplitude
from ..utils import DEFAULT_RELATIVE_STEP, log_derivative, relative_step

#: float: Default angle above the critical angle, degrees.
DEFAULT_ANGLE_OFFSET_DEG = 2.0


def critical_angle(prism_index: float) -> float:
    """
    Critical angle of total internal reflection at a prism/air interface, radians.

    Example::

        >>> import math
        >>> from photunnel.ftir import critical_angle
        >>> round(math.degrees(critical_angle(1.52)), 3)
        41.139

    """
    if prism_index <= 1.0:
        raise ValueError(f'Total internal reflection needs a prism index above 1, but {prism_index!r} found.')
    return math.asin(1.0 / prism_index)


class FtirGeometry(BaseModel):
    """
    Two prisms separated by an air gap.

    :param prism_index: Refractive index of both prisms, above 1.
    :type prism_index: float
    :param gap: Air gap width in nm.
    :type gap: float
    :param incidence_angle: Angle inside the prism in radians, defaults to two degrees
        beyond the critical angle.
    :type incidence_angle: float
    :param vacuum_wavelength: Vacuum wavelength in nm.
    :type vacuum_wavelength: float
    :param polarization: Polarization, P by default.
    :type polarization: Polarization
    """
    model_config = ConfigDict(frozen=True)

    prism_index: float = Field(default=1.52, gt=1)
    gap: float = Field(default=1000.0, gt=0)
    incidence_angle: Optional[float] = None
    vacuum_wavelength: float = Field(default=702.0, gt=0)
    polarization: Polarization = Polarization.P

    @model_validator(mode='before')
    @classmethod
    def _default_angle(cls, data):
        if isinstance(data, dict) and data.get('incidence_angle') is None:
            index = data.get('prism_index', 1.52)
            data = dict(data)
            data['incidence_angle'] = critical_angle(index) + math.radians(DEFAULT_ANGLE_OFFSET_DEG)
        return data

    @model_validator(mode='after')
    def _check_angle(self):
        if not (0.0 <= self.incidence_angle < math.pi / 2):
            raise ValueError(f'Angle of incidence must lie in [0, pi/2), but {self.incidence_angle!r} found.')
        return self

    @property
    def critical_angle(self) -> float:
        return critical_angle(self.prism_index)

    @property
    def is_tunneling(self) -> bool:
        """
        Whether the gap field is evanescent.
        """
        return self.prism_index * math.sin(self.incidence_angle) > 1.0

    @property
    def k0(self) -> float:
        """
        Vacuum wavenumber, 1/nm.
        """
        return 2.0 * math.pi / self.vacuum_wavelength

    @property
    def prism(self) -> Medium:
        return Medium.of(self.prism_index)

    def as_stack(self) -> LayerStack:
        """
        The prism/gap/prism system as a layer stack.
        """
        return LayerStack(ambient=self.prism, layers=(Layer(medium=AIR, thickness=self.gap),),
                          substrate=self.prism)

    def incidence(self) -> Incidence:
        return Incidence(vacuum_wavelength=self.vacuum_wavelength, angle=self.incidence_angle,
                         polarization=self.polarization)

    def with_gap(self, gap: float) -> 'FtirGeometry':
        return FtirGeometry(prism_index=self.prism_index, gap=gap, incidence_angle=self.incidence_angle,
                            vacuum_wavelength=self.vacuum_wavelength, polarization=self.polarization)

    def with_angle(self, angle: float) -> 'FtirGeometry':
        return FtirGeometry(prism_index=self.prism_index, gap=self.gap, incidence_angle=angle,
                            vacuum_wavelength=self.vacuum_wavelength, polarization=self.polarization)


def kappa_gap(g: FtirGeometry) -> float:
    """
    Evanescent decay constant in the gap, 1/nm; zero at or below the critical angle.
    """
    q2 = (g.prism_index * math.sin(g.incidence_angle)) ** 2 - 1.0
    return g.k0 * math.sqrt(max(q2, 0.0))


def ftir_amplitude(g: FtirGeometry) -> complex:
    """
    Plane-wave transmission amplitude from prism to prism.

    :param g: Geometry.
    :type g: FtirGeometry
    :return: Complex ``t`` referenced to the two gap faces.
    :rtype: complex
    """
    if not g.is_tunneling:
        logging.warning(f'Incidence {math.degrees(g.incidence_angle)!r} deg is below the critical angle '
                        f'{math.degrees(g.critical_angle)!r} deg, light propagates across the gap.')
    return stack_response(g.as_stack(), g.incidence()).t


def ftir_wigner_time(g: FtirGeometry, rel_step: float = DEFAULT_RELATIVE_STEP) -> float:
    """
    Group delay across the gap at fixed angle, fs.

    :raises UnreliableDelayError: If ``|t|`` vanishes.
    """
    stack = g.as_stack()

    def _t(w):
        return complex(transmission_amplitude(stack, w, g.incidence_angle, g.polarization))

    omega = 2.0 * math.pi * SPEED_OF_LIGHT / g.vacuum_wavelength
    if abs(_t(omega)) < 1e-14:
        raise UnreliableDelayError(f'Transmission across a {g.gap!r} nm gap too small for a phase.')
    return log_derivative(_t, omega, relative_step(omega, rel_step)).imag


def ftir_bl_time(g: FtirGeometry) -> float:
    """
    Gap width over the semiclassical evanescent speed, ``gap * k0 / (c * kappa)``, fs.

    :raises OutsideStopBandError: At or below the critical angle.
    """
    kappa = kappa_gap(g)
    if kappa <= 0:
        raise OutsideStopBandError('Buttiker-Landauer time undefined at or below the critical angle.')
    return g.gap * g.k0 / (SPEED_OF_LIGHT * kappa)
