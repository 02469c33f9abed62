"""
Biphoton spectra and delay grids of the coincidence experiment.

Down-converted pairs are frequency anticorrelated: when one photon sits at
``omega0 + Omega`` its twin sits at ``omega0 - Omega``. The joint spectral intensity is
modelled as a Gaussian in ``Omega``. With a per-photon FWHM ``delta_omega`` the spectral
intensity has standard deviation ``sigma_Omega = delta_omega / (2 sqrt(2 ln 2))`` and the
identity-filter dip ``1 - exp(-2 sigma_Omega^2 tau^2)`` has a temporal standard deviation
``1 / (2 sigma_Omega)``.

The module contains the following main components:

* :class:`BiphotonSpectrum` - Center wavelength and per-photon bandwidth
* :func:`trombone_delay` - Delay added by moving a double-pass prism
* :func:`trombone_delays` - Delay grid of a stepped prism scan
* :func:`default_delays` - Symmetric delay grid covering the dip
"""

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import PreconditionError
from ..optics import SPEED_OF_LIGHT, omega_of

#: float: Ratio of FWHM to standard deviation of a Gaussian.
FWHM_PER_SIGMA = 2.0 * math.sqrt(2.0 * math.log(2.0))


class BiphotonSpectrum(BaseModel):
    """
    Degenerate, frequency-anticorrelated photon pair.

    :param center_wavelength: Wavelength of each photon at zero detuning, nm.
    :type center_wavelength: float
    :param bandwidth: Per-photon FWHM in nm, small compared to the center wavelength.
    :type bandwidth: float
    :param shape: Spectral shape, only ``'gaussian'``.
    :type shape: str
    """
    model_config = ConfigDict(frozen=True)

    center_wavelength: float = Field(default=702.0, gt=0)
    bandwidth: float = Field(default=6.0, gt=0)
    shape: Literal['gaussian'] = 'gaussian'

    @model_validator(mode='after')
    def _check_narrowband(self):
        if self.bandwidth >= 0.2 * self.center_wavelength:
            raise ValueError(f'Bandwidth {self.bandwidth!r} nm is not small compared to '
                             f'the center wavelength {self.center_wavelength!r} nm.')
        return self

    @property
    def omega0(self) -> float:
        """
        Center angular frequency, rad/fs.
        """
        return omega_of(self.center_wavelength)

    @property
    def bandwidth_omega(self) -> float:
        """
        Per-photon FWHM converted to rad/fs about the center.
        """
        return 2.0 * math.pi * SPEED_OF_LIGHT * self.bandwidth / self.center_wavelength ** 2

    @property
    def sigma_omega(self) -> float:
        """
        Standard deviation of the spectral intensity in ``Omega``, rad/fs.
        """
        return self.bandwidth_omega / FWHM_PER_SIGMA

    @property
    def dip_sigma(self) -> float:
        """
        Standard deviation of the identity-filter dip, fs.
        """
        return 1.0 / (2.0 * self.sigma_omega)

    @property
    def dip_fwhm(self) -> float:
        """
        FWHM of the identity-filter dip, fs.
        """
        return FWHM_PER_SIGMA * self.dip_sigma

    def detunings(self, points: int = 513, span: float = 4.0) -> np.ndarray:
        """
        Uniform grid of detunings ``Omega`` over ``+-span`` spectral sigmas.
        """
        if points < 3:
            raise PreconditionError(f'At least 3 spectral points required, but {points!r} found.')
        half = span * self.sigma_omega
        return np.linspace(-half, half, points)

    def intensity(self, detunings) -> np.ndarray:
        """
        Unnormalized joint spectral intensity at the given detunings.
        """
        detunings = np.asarray(detunings, dtype=float)
        return np.exp(-detunings ** 2 / (2.0 * self.sigma_omega ** 2))

    @classmethod
    def from_dip_width(cls, center_wavelength: float, dip_fwhm: float) -> 'BiphotonSpectrum':
        """
        Spectrum whose identity-filter dip has the requested FWHM.

        :param center_wavelength: Center wavelength in nm.
        :type center_wavelength: float
        :param dip_fwhm: Dip FWHM in fs.
        :type dip_fwhm: float
        :return: The spectrum.
        :rtype: BiphotonSpectrum

        Example::

            >>> from photunnel.hom import BiphotonSpectrum
            >>> round(BiphotonSpectrum.from_dip_width(702.0, 20.0).bandwidth, 1)
            36.3

        """
        if dip_fwhm <= 0:
            raise PreconditionError(f'Dip width should be positive, but {dip_fwhm!r} found.')
        bandwidth_omega = 4.0 * math.log(2.0) / dip_fwhm
        bandwidth = bandwidth_omega * center_wavelength ** 2 / (2.0 * math.pi * SPEED_OF_LIGHT)
        return cls(center_wavelength=center_wavelength, bandwidth=bandwidth)


def trombone_delay(position: float) -> float:
    """
    Delay added by displacing a double-pass prism by ``position`` nm, fs.
    """
    return 2.0 * position / SPEED_OF_LIGHT


def trombone_delays(start: float, stop: float, step: float) -> np.ndarray:
    """
    Delays of a stepped prism scan from ``start`` to ``stop`` (inclusive) in nm.

    :param start: First prism position, nm.
    :type start: float
    :param stop: Last prism position, nm.
    :type stop: float
    :param step: Encoder step, nm.
    :type step: float
    :return: Delays in fs.
    :rtype: numpy.ndarray
    """
    if step <= 0 or stop <= start:
        raise PreconditionError(f'Invalid prism scan {start!r}:{stop!r}:{step!r}.')
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return trombone_delay(start + step * np.arange(count))


def default_delays(spec: BiphotonSpectrum, center: float = 0.0, span: float = 6.0,
                   points: int = 241) -> np.ndarray:
    """
    Symmetric delay grid covering ``+-span`` dip sigmas around ``center``.
    """
    half = span * spec.dip_sigma
    return np.linspace(center - half, center + half, points)
