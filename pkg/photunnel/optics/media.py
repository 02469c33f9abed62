"""
Value types of the thin-film optics core.

Lengths are in nanometres, times in femtoseconds and angular frequencies in rad/fs.
All media are lossless and non-magnetic, so a medium is fully described by its real
refractive index. Angles are in radians inside the library.

The module contains the following main components:

* :data:`SPEED_OF_LIGHT` - Vacuum speed of light in nm/fs
* :class:`Polarization` - S (TE) or P (TM)
* :class:`Medium` - Lossless dielectric
* :class:`Layer` - Homogeneous film of given thickness
* :class:`LayerStack` - Ambient, ordered films and substrate
* :class:`Incidence` - Vacuum wavelength, angle in the ambient and polarization
* :class:`ComplexResponse` - Complex reflection/transmission and flux coefficients
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

#: float: Speed of light in vacuum, nm/fs.
SPEED_OF_LIGHT = 299.792458


class Polarization(str, Enum):
    """
    Linear polarization of the incident plane wave.
    """
    S = 's'
    P = 'p'


class Medium(BaseModel):
    """
    Lossless, non-magnetic dielectric.

    :param refractive_index: Real refractive index, strictly positive.
    :type refractive_index: float
    """
    model_config = ConfigDict(frozen=True)

    refractive_index: float = Field(gt=0)

    @classmethod
    def of(cls, refractive_index: float) -> 'Medium':
        """
        Shorthand constructor, ``Medium.of(1.45)``.
        """
        return cls(refractive_index=refractive_index)


#: Medium: Air, treated as vacuum.
AIR = Medium(refractive_index=1.0)


class Layer(BaseModel):
    """
    Homogeneous film.

    :param medium: Material of the film.
    :type medium: Medium
    :param thickness: Physical thickness in nm. Zero is allowed and behaves as if the
        layer were absent.
    :type thickness: float
    """
    model_config = ConfigDict(frozen=True)

    medium: Medium
    thickness: float = Field(ge=0)

    @property
    def index(self) -> float:
        return self.medium.refractive_index


class LayerStack(BaseModel):
    """
    Planar multilayer between two semi-infinite media.

    Light enters from :attr:`ambient`, crosses :attr:`layers` in order and leaves into
    :attr:`substrate`. The entry plane is the ambient/first-layer interface and the
    exit plane is the last-layer/substrate interface.
    """
    model_config = ConfigDict(frozen=True)

    ambient: Medium = AIR
    layers: Tuple[Layer, ...] = ()
    substrate: Medium = AIR

    @property
    def total_thickness(self) -> float:
        """
        Sum of all layer thicknesses, nm.
        """
        return float(sum(layer.thickness for layer in self.layers))

    @property
    def indices(self) -> Tuple[float, ...]:
        return tuple(layer.index for layer in self.layers)

    def __len__(self) -> int:
        return len(self.layers)


class Incidence(BaseModel):
    """
    Incident plane wave.

    :param vacuum_wavelength: Vacuum wavelength in nm.
    :type vacuum_wavelength: float
    :param angle: Angle of incidence in the ambient, radians, in ``[0, pi/2)``.
    :type angle: float
    :param polarization: Polarization, defaults to S.
    :type polarization: Polarization
    """
    model_config = ConfigDict(frozen=True)

    vacuum_wavelength: float = Field(gt=0)
    angle: float = 0.0
    polarization: Polarization = Polarization.S

    @field_validator('angle')
    @classmethod
    def _check_angle(cls, v: float) -> float:
        if not (0.0 <= v < math.pi / 2):
            raise ValueError(f'Angle of incidence must lie in [0, pi/2), but {v!r} found.')
        return v

    @property
    def omega(self) -> float:
        """
        Angular frequency in rad/fs.
        """
        return 2.0 * math.pi * SPEED_OF_LIGHT / self.vacuum_wavelength

    @property
    def angle_deg(self) -> float:
        return math.degrees(self.angle)

    @classmethod
    def from_omega(cls, omega: float, angle: float = 0.0,
                   polarization: Polarization = Polarization.S) -> 'Incidence':
        """
        Build an incidence from an angular frequency in rad/fs.
        """
        return cls(vacuum_wavelength=2.0 * math.pi * SPEED_OF_LIGHT / omega,
                   angle=angle, polarization=polarization)

    def with_angle(self, angle: float) -> 'Incidence':
        return Incidence(vacuum_wavelength=self.vacuum_wavelength, angle=angle,
                         polarization=self.polarization)

    def with_wavelength(self, vacuum_wavelength: float) -> 'Incidence':
        return Incidence(vacuum_wavelength=vacuum_wavelength, angle=self.angle,
                         polarization=self.polarization)


def omega_of(vacuum_wavelength: float) -> float:
    """
    Angular frequency (rad/fs) of a vacuum wavelength (nm).
    """
    return 2.0 * math.pi * SPEED_OF_LIGHT / vacuum_wavelength


def wavelength_of(omega: float) -> float:
    """
    Vacuum wavelength (nm) of an angular frequency (rad/fs).
    """
    return 2.0 * math.pi * SPEED_OF_LIGHT / omega


@dataclass(frozen=True)
class ComplexResponse:
    """
    Response of a stack to one incident plane wave.

    Amplitudes relate tangential electric fields at the entry plane (``r``) and at the
    exit plane (``t``) to the incident tangential field at the entry plane, with time
    dependence ``exp(-i omega t)``. For P polarization ``r`` is therefore the ratio of
    tangential components, which differs in sign from the field-amplitude convention
    used in some textbooks.

    :param r: Complex reflection amplitude.
    :param t: Complex transmission amplitude.
    :param flux_transmission: Transmitted fraction of the normal energy flux.
    :param flux_reflection: Reflected fraction of the normal energy flux.
    """
    r: complex
    t: complex
    flux_transmission: float
    flux_reflection: float

    @property
    def phase(self) -> float:
        """
        ``arg t`` in radians.
        """
        return math.atan2(self.t.imag, self.t.real)
