"""
Source waveforms of the time-domain solver.

A source is a real scalar waveform ``f(t)`` giving the incident field at its injection
point, plus the angular-frequency band it occupies (used for the resolution check) and
the time after which it has been fully emitted (used for the default run duration).

The module contains the following main components:

* :class:`GaussianPulse` - Gaussian-envelope carrier pulse
* :class:`SharpFrontSource` - Sinusoid switched on abruptly at a known instant
"""

import math
from typing import Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..optics import SPEED_OF_LIGHT

#: float: ``2 sqrt(ln 2)``, intensity FWHM over field standard deviation in frequency.
FWHM_PER_SIGMA = 2.0 * math.sqrt(math.log(2.0))


class GaussianPulse(BaseModel):
    """
    Gaussian pulse ``exp(-(t - t0)^2 / (2 sigma_t^2)) cos(omega0 (t - t0))``.

    The peak time ``t0`` is six envelope widths after zero, so the pulse starts from a
    field below ``1e-7`` of its peak.

    :param center_wavelength: Carrier vacuum wavelength in nm.
    :type center_wavelength: float
    :param bandwidth: Intensity-spectrum FWHM in nm.
    :type bandwidth: float
    :param amplitude: Peak field.
    :type amplitude: float

    Example::

        >>> from photunnel.timedomain import GaussianPulse
        >>> pulse = GaussianPulse(center_wavelength=702.0, bandwidth=20.0)
        >>> round(pulse.sigma_t, 1)
        21.8

    """
    model_config = ConfigDict(frozen=True)

    center_wavelength: float = Field(default=702.0, gt=0)
    bandwidth: float = Field(default=20.0, gt=0)
    amplitude: float = Field(default=1.0, gt=0)

    @model_validator(mode='after')
    def _check_bandwidth(self):
        if self.bandwidth >= 0.5 * self.center_wavelength:
            raise ValueError(f'Bandwidth {self.bandwidth!r} nm too large for a carrier '
                             f'at {self.center_wavelength!r} nm.')
        return self

    @property
    def omega0(self) -> float:
        return 2.0 * math.pi * SPEED_OF_LIGHT / self.center_wavelength

    @property
    def bandwidth_omega(self) -> float:
        """
        Intensity FWHM in rad/fs.
        """
        return 2.0 * math.pi * SPEED_OF_LIGHT * self.bandwidth / self.center_wavelength ** 2

    @property
    def sigma_omega(self) -> float:
        return self.bandwidth_omega / FWHM_PER_SIGMA

    @property
    def sigma_t(self) -> float:
        """
        Field-envelope standard deviation in fs.
        """
        return 1.0 / self.sigma_omega

    @property
    def peak_time(self) -> float:
        return 6.0 * self.sigma_t

    @property
    def end_time(self) -> float:
        return 12.0 * self.sigma_t

    def band(self) -> Tuple[float, float]:
        """
        Angular frequencies within four field sigmas of the carrier, rad/fs.
        """
        return max(self.omega0 - 4.0 * self.sigma_omega, 0.0), self.omega0 + 4.0 * self.sigma_omega

    def waveform(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float) - self.peak_time
        return self.amplitude * np.exp(-t ** 2 / (2.0 * self.sigma_t ** 2)) * np.cos(self.omega0 * t)


class SharpFrontSource(BaseModel):
    """
    Sinusoid switched on at ``turn_on``: ``H(t - t_on) sin(omega0 (t - t_on))``.

    Before ``turn_on`` the field is exactly zero, so the first nonzero sample of any
    monitor marks the arrival of the front.

    :param center_wavelength: Carrier vacuum wavelength in nm.
    :type center_wavelength: float
    :param turn_on: Switch-on time in fs.
    :type turn_on: float
    :param hold: Emission time after the switch-on to record, fs.
    :type hold: float
    :param amplitude: Steady-state amplitude.
    :type amplitude: float
    """
    model_config = ConfigDict(frozen=True)

    center_wavelength: float = Field(default=702.0, gt=0)
    turn_on: float = Field(default=5.0, ge=0)
    hold: float = Field(default=60.0, gt=0)
    amplitude: float = Field(default=1.0, gt=0)

    @property
    def omega0(self) -> float:
        return 2.0 * math.pi * SPEED_OF_LIGHT / self.center_wavelength

    @property
    def end_time(self) -> float:
        return self.turn_on + self.hold

    def band(self) -> Tuple[float, float]:
        """
        The carrier only; the switch-on transient is unbounded in frequency.
        """
        return self.omega0, self.omega0

    def waveform(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float) - self.turn_on
        return np.where(t > 0, self.amplitude * np.sin(self.omega0 * np.maximum(t, 0.0)), 0.0)


Source = Union[GaussianPulse, SharpFrontSource]
