"""
Gaussian beams crossing the gap: lateral displacement and angular deflection.

A beam of waist ``w0`` is a superposition of plane waves whose transverse wavenumbers
``k_y`` spread around ``k_y0 = n k0 sin(theta)`` with an intensity standard deviation of
``1 / w0``. Crossing the gap, each component picks up the complex factor ``t(k_y)``:

* the phase gradient displaces the transmitted beam sideways by
  ``D = -d(arg t)/d(k_y)`` (stationary phase), which saturates with the gap like the
  Wigner time;
* the magnitude gradient reshapes the angular spectrum, shifting its centroid and hence
  deflecting the transmitted beam. In the opaque regime the deflection grows linearly
  with the gap like the Buttiker-Landauer time: for narrow angular spectra
  ``deflection ~ -2 sigma_theta^2 n^2 k0 c sin(theta) cos(theta) * tau_BL``.

The module contains the following main components:

* :class:`GaussianBeam` - Beam waist
* :class:`FtirPoint` - All gap-scan quantities of one gap
* :func:`spectral_centroid` - Centroid of a filtered Gaussian angular spectrum
* :func:`lateral_displacement` - Stationary-phase beam displacement
* :func:`angular_deflection` - Centroid deflection of the transmitted beam
* :func:`ftir_scan` - Gap scan
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import trapezoid
from tqdm import tqdm

from .geometry import FtirGeometry, ftir_amplitude, ftir_bl_time, ftir_wigner_time, kappa_gap
from ..errors import OutsideStopBandError, PreconditionError, UnreliableDelayError
from ..optics import omega_of, transmission_amplitude
from ..utils import DEFAULT_RELATIVE_STEP, log_derivative, relative_step

#: Tuple[str, ...]: Columns of the gap-scan table.
FTIR_COLUMNS = ('gap_nm', 'abs_t', 'displacement_nm', 'deflection_rad', 'kappa_per_nm',
                'wigner_fs', 'bl_fs')


class GaussianBeam(BaseModel):
    """
    Gaussian beam at the gap.

    :param waist: ``1/e^2`` intensity radius in nm, 30 um by default.
    :type waist: float
    """
    model_config = ConfigDict(frozen=True)

    waist: float = Field(default=30000.0, gt=0)

    @property
    def sigma_k(self) -> float:
        """
        Standard deviation of the transverse-wavenumber intensity spectrum, 1/nm.
        """
        return 1.0 / self.waist


def _check_paraxial(g: FtirGeometry, beam: GaussianBeam):
    if beam.waist < 10.0 * g.vacuum_wavelength:
        raise PreconditionError(f'Beam waist {beam.waist!r} nm is not paraxial at {g.vacuum_wavelength!r} nm.')


def spectral_centroid(detunings, weights, transmission) -> float:
    """
    Centroid of an angular spectrum after a filter.

    :param detunings: Transverse-wavenumber offsets.
    :param weights: Incident spectral intensity at those offsets.
    :param transmission: Complex filter at those offsets.
    :return: ``int(dk * w |t|^2) / int(w |t|^2)``.
    :rtype: float
    """
    detunings = np.asarray(detunings, dtype=float)
    power = np.asarray(weights, dtype=float) * np.abs(np.asarray(transmission)) ** 2
    total = trapezoid(power, detunings)
    if total <= 0:
        raise UnreliableDelayError('Filtered angular spectrum carries no power.')
    return float(trapezoid(detunings * power, detunings) / total)


def lateral_displacement(g: FtirGeometry, beam: GaussianBeam = None,
                         rel_step: float = DEFAULT_RELATIVE_STEP) -> float:
    """
    Stationary-phase displacement of the transmitted beam along the prism face, nm.

    :param g: Geometry.
    :type g: FtirGeometry
    :param beam: Beam, only checked for paraxiality.
    :type beam: GaussianBeam
    :param rel_step: Relative angle step.
    :type rel_step: float
    :return: ``-d(arg t)/d(theta) / (n k0 cos(theta))``.
    :rtype: float
    :raises UnreliableDelayError: If ``|t|`` vanishes.
    """
    _check_paraxial(g, beam or GaussianBeam())
    stack = g.as_stack()

    def _t(theta):
        return complex(transmission_amplitude(stack, omega_of(g.vacuum_wavelength), theta, g.polarization))

    theta = g.incidence_angle
    if abs(_t(theta)) < 1e-14:
        raise UnreliableDelayError(f'Transmission across a {g.gap!r} nm gap too small for a phase.')
    dphase = log_derivative(_t, theta, relative_step(theta, rel_step)).imag
    return -dphase / (g.prism_index * g.k0 * math.cos(theta))


def angular_deflection(g: FtirGeometry, beam: GaussianBeam = None, points: int = 1025,
                       span: float = 6.0) -> float:
    """
    Deflection of the transmitted beam direction, radians inside the prism.

    The Gaussian angular spectrum is sampled over ``+-span`` standard deviations of
    ``k_y``, filtered by ``t(k_y)`` and its centroid converted back to an angle.

    :param g: Geometry.
    :type g: FtirGeometry
    :param beam: Beam, default waist 30 um.
    :type beam: GaussianBeam
    :param points: Angular samples.
    :type points: int
    :param span: Half-width of the sampled spectrum in standard deviations.
    :type span: float
    :return: Centroid deflection, negative when larger angles are suppressed.
    :rtype: float
    """
    beam = beam or GaussianBeam()
    _check_paraxial(g, beam)
    nk0 = g.prism_index * g.k0
    ky0 = nk0 * math.sin(g.incidence_angle)
    detunings = np.linspace(-span * beam.sigma_k, span * beam.sigma_k, points)
    ky = ky0 + detunings
    if np.max(np.abs(ky)) >= nk0:
        raise PreconditionError('Angular spectrum reaches grazing incidence, use a wider beam.')

    thetas = np.arcsin(ky / nk0)
    t = transmission_amplitude(g.as_stack(), omega_of(g.vacuum_wavelength), thetas, g.polarization)
    weights = np.exp(-detunings ** 2 / (2.0 * beam.sigma_k ** 2))
    return spectral_centroid(detunings, weights, t) / (nk0 * math.cos(g.incidence_angle))


@dataclass(frozen=True)
class FtirPoint:
    """
    Quantities of one gap width.

    :param gap: Gap width, nm.
    :param abs_t: Plane-wave ``|t|``.
    :param displacement: Lateral displacement, nm.
    :param deflection: Angular deflection, radians.
    :param kappa: Evanescent decay constant, 1/nm.
    :param wigner_time: Group delay across the gap, fs.
    :param bl_time: Buttiker-Landauer time, fs, NaN below the critical angle.
    """
    gap: float
    abs_t: float
    displacement: float
    deflection: float
    kappa: float
    wigner_time: float
    bl_time: float

    def as_row(self) -> dict:
        return {
            'gap_nm': self.gap, 'abs_t': self.abs_t, 'displacement_nm': self.displacement,
            'deflection_rad': self.deflection, 'kappa_per_nm': self.kappa,
            'wigner_fs': self.wigner_time, 'bl_fs': self.bl_time,
        }


def ftir_scan(template: FtirGeometry, gaps: List[float], beam: GaussianBeam = None,
              progress: bool = False) -> List[FtirPoint]:
    """
    Displacement, deflection and times over a series of gap widths.

    :param template: Geometry whose gap is replaced.
    :type template: FtirGeometry
    :param gaps: Positive gap widths in nm.
    :type gaps: List[float]
    :param beam: Beam, default waist 30 um.
    :type beam: GaussianBeam
    :param progress: Show a progress bar.
    :type progress: bool
    :return: One point per gap.
    :rtype: List[FtirPoint]
    """
    beam = beam or GaussianBeam()
    points = []
    for gap in tqdm(gaps, desc='Gaps', disable=not progress):
        g = template.with_gap(float(gap))
        try:
            bl = ftir_bl_time(g)
        except OutsideStopBandError:
            bl = math.nan
        points.append(FtirPoint(
            gap=float(gap),
            abs_t=abs(ftir_amplitude(g)),
            displacement=lateral_displacement(g, beam),
            deflection=angular_deflection(g, beam),
            kappa=kappa_gap(g),
            wigner_time=ftir_wigner_time(g),
            bl_time=bl,
        ))
    return points
