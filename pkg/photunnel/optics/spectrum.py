"""
Spectra, band edges and Brewster angles.

The module contains the following main components:

* :func:`omega_grid` - Uniform angular-frequency grid between two wavelengths
* :func:`transmission_spectrum` - Responses over a wavelength range
* :func:`spectrum_table` - The same spectrum as a :class:`pandas.DataFrame`
* :func:`spectrum_table_at` - Spectrum table at given wavelengths
* :func:`band_edges` - Stop-band edges by half transmission or by Bloch analysis
* :func:`brewster_angle` - Brewster angle of an interface
"""

import math
from typing import List, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from .bloch import bloch_edges
from .matrix import transfer
from .media import ComplexResponse, Incidence, LayerStack, Medium, Polarization, SPEED_OF_LIGHT, omega_of
from ..errors import PreconditionError

#: Tuple[str, ...]: Columns of the spectrum table.
SPECTRUM_COLUMNS = ('lambda_nm', 'omega_rad_per_fs', 're_r', 'im_r', 're_t', 'im_t', 'T_flux', 'R_flux')


def omega_grid(lambda_min: float, lambda_max: float, points: int) -> np.ndarray:
    """
    Angular frequencies uniformly spaced between two vacuum wavelengths.

    The grid runs from the frequency of ``lambda_min`` down to that of ``lambda_max``,
    so the matching wavelengths increase monotonically.

    :param lambda_min: Shortest wavelength in nm.
    :type lambda_min: float
    :param lambda_max: Longest wavelength in nm.
    :type lambda_max: float
    :param points: Number of samples, at least 2.
    :type points: int
    :return: Decreasing angular frequencies in rad/fs.
    :rtype: numpy.ndarray
    :raises PreconditionError: On an empty range or fewer than two points.
    """
    if not (0 < lambda_min < lambda_max):
        raise PreconditionError(f'Wavelength range should satisfy 0 < min < max, '
                                f'but {lambda_min!r} and {lambda_max!r} found.')
    if points < 2:
        raise PreconditionError(f'At least 2 spectrum points required, but {points!r} found.')
    return np.linspace(omega_of(lambda_min), omega_of(lambda_max), points)


def _spectrum_arrays(stack: LayerStack, omegas: np.ndarray, angle: float, polarization: Polarization):
    k0 = omegas / SPEED_OF_LIGHT
    beta = stack.ambient.refractive_index * math.sin(angle)
    return transfer(stack, k0, beta, polarization)


def transmission_spectrum(stack: LayerStack, lambda_min: float, lambda_max: float, points: int,
                          angle: float = 0.0, polarization: Polarization = Polarization.S
                          ) -> List[Tuple[float, ComplexResponse]]:
    """
    Responses of a stack over a wavelength range, uniformly spaced in frequency.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param lambda_min: Shortest wavelength in nm.
    :type lambda_min: float
    :param lambda_max: Longest wavelength in nm.
    :type lambda_max: float
    :param points: Number of samples.
    :type points: int
    :param angle: Angle of incidence in radians.
    :type angle: float
    :param polarization: Polarization.
    :type polarization: Polarization
    :return: ``(wavelength, response)`` pairs in increasing wavelength order.
    :rtype: List[Tuple[float, ComplexResponse]]
    """
    omegas = omega_grid(lambda_min, lambda_max, points)
    r, t, flux_t, flux_r = _spectrum_arrays(stack, omegas, angle, polarization)
    return [
        (float(2.0 * math.pi * SPEED_OF_LIGHT / w),
         ComplexResponse(r=complex(r[i]), t=complex(t[i]),
                         flux_transmission=float(flux_t[i]), flux_reflection=float(flux_r[i])))
        for i, w in enumerate(omegas)
    ]


def spectrum_table(stack: LayerStack, lambda_min: float, lambda_max: float, points: int,
                   angle: float = 0.0, polarization: Polarization = Polarization.S) -> pd.DataFrame:
    """
    Spectrum as a table with the columns of :data:`SPECTRUM_COLUMNS`.
    """
    return _table(stack, omega_grid(lambda_min, lambda_max, points), angle, polarization)


def spectrum_table_at(stack: LayerStack, wavelengths, angle: float = 0.0,
                      polarization: Polarization = Polarization.S) -> pd.DataFrame:
    """
    Spectrum table sampled at the given vacuum wavelengths (nm), in their order.
    """
    wavelengths = np.asarray(wavelengths, dtype=float)
    if wavelengths.ndim != 1 or len(wavelengths) == 0 or np.any(wavelengths <= 0):
        raise PreconditionError('Wavelengths should be a non-empty list of positive values.')
    return _table(stack, 2.0 * math.pi * SPEED_OF_LIGHT / wavelengths, angle, polarization)


def _table(stack: LayerStack, omegas: np.ndarray, angle: float, polarization: Polarization) -> pd.DataFrame:
    r, t, flux_t, flux_r = _spectrum_arrays(stack, omegas, angle, polarization)
    return pd.DataFrame({
        'lambda_nm': 2.0 * math.pi * SPEED_OF_LIGHT / omegas,
        'omega_rad_per_fs': omegas,
        're_r': r.real,
        'im_r': r.imag,
        're_t': t.real,
        'im_t': t.imag,
        'T_flux': flux_t,
        'R_flux': flux_r,
    }, columns=list(SPECTRUM_COLUMNS))


def _half_transmission_edges(stack: LayerStack, lambda_min: float, lambda_max: float, points: int,
                             center: float, angle: float, polarization: Polarization) -> Tuple[float, float]:
    omegas = omega_grid(lambda_min, lambda_max, points)
    _, _, flux_t, _ = _spectrum_arrays(stack, omegas, angle, polarization)
    if center is None:
        i_center = int(np.argmin(flux_t))
    else:
        i_center = int(np.argmin(np.abs(omegas - omega_of(center))))
    if flux_t[i_center] >= 0.5:
        raise PreconditionError(f'Transmission at the band center is {flux_t[i_center]!r}, not below 0.5.')

    def _excess(w):
        _, _, ft, _ = _spectrum_arrays(stack, np.asarray([w]), angle, polarization)
        return float(ft[0]) - 0.5

    def _walk(indices) -> float:
        prev = i_center
        for i in indices:
            if flux_t[i] >= 0.5:
                return brentq(_excess, min(omegas[prev], omegas[i]), max(omegas[prev], omegas[i]),
                              xtol=1e-12, rtol=1e-14)
            prev = i
        raise PreconditionError('No half-transmission crossing inside the sampled range.')

    # omegas decrease with index, so lower indices hold the short-wavelength side
    w_high = _walk(range(i_center - 1, -1, -1))
    w_low = _walk(range(i_center + 1, len(omegas)))
    return 2.0 * math.pi * SPEED_OF_LIGHT / w_high, 2.0 * math.pi * SPEED_OF_LIGHT / w_low


def band_edges(stack: LayerStack, lambda_min: float, lambda_max: float, points: int = 4001,
               center: float = None, method: str = 'half_transmission',
               angle: float = 0.0, polarization: Polarization = Polarization.S) -> Tuple[float, float]:
    """
    Edges of the stop band around ``center``.

    With ``method='half_transmission'`` the edges are the first crossings of
    ``flux_transmission = 0.5`` outward from the band center, located on the sampled
    spectrum and refined with :func:`scipy.optimize.brentq`. With ``method='bloch'`` they
    are the band edges of the infinite periodic medium built from the stack's unit cell.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param lambda_min: Shortest wavelength searched, nm.
    :type lambda_min: float
    :param lambda_max: Longest wavelength searched, nm.
    :type lambda_max: float
    :param points: Samples of the coarse search.
    :type points: int
    :param center: Wavelength inside the band in nm, defaults to the transmission minimum.
    :type center: float
    :param method: ``'half_transmission'`` or ``'bloch'``.
    :type method: str
    :param angle: Angle of incidence in radians.
    :type angle: float
    :param polarization: Polarization.
    :type polarization: Polarization
    :return: ``(short_edge, long_edge)`` in nm.
    :rtype: Tuple[float, float]
    :raises PreconditionError: If no edge lies inside the searched range.

    .. note::
        The two methods disagree for short stacks. The bundled 11-layer mirror has Bloch
        edges at about 617 and 809 nm but crosses half transmission only at about 595 and
        850 nm, where the finite stack still reflects strongly. The ``spectrum --edges``
        command reports both pairs.

    Example::

        >>> from photunnel.optics import AIR, Medium, band_edges, quarter_wave_stack
        >>> mirror = quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, Medium.of(1.45))
        >>> [round(edge, -1) for edge in band_edges(mirror, 500.0, 1000.0, center=702.0, method='bloch')]
        [620.0, 810.0]

    """
    if method == 'half_transmission':
        return _half_transmission_edges(stack, lambda_min, lambda_max, points, center, angle, polarization)
    elif method == 'bloch':
        if center is None:
            omegas = omega_grid(lambda_min, lambda_max, points)
            _, _, flux_t, _ = _spectrum_arrays(stack, omegas, angle, polarization)
            center = float(2.0 * math.pi * SPEED_OF_LIGHT / omegas[int(np.argmin(flux_t))])
        short, long = bloch_edges(stack, Incidence(vacuum_wavelength=center, angle=angle,
                                                   polarization=polarization))
        if short < lambda_min or long > lambda_max:
            raise PreconditionError(f'Band edges {short!r} and {long!r} nm fall outside '
                                    f'the searched range [{lambda_min!r}, {lambda_max!r}].')
        return short, long
    else:
        raise ValueError(f'Unknown band edge method - {method!r}.')


def brewster_angle(ambient: Medium, other: Medium) -> float:
    """
    Brewster angle of the interface between two media, radians.

    :param ambient: Medium the light comes from.
    :type ambient: Medium
    :param other: Medium on the other side.
    :type other: Medium
    :return: ``arctan(n_other / n_ambient)``.
    :rtype: float
    :raises PreconditionError: If both indices are equal.

    Example::

        >>> import math
        >>> from photunnel.optics import brewster_angle, AIR, Medium
        >>> round(math.degrees(brewster_angle(AIR, Medium.of(1.45))), 1)
        55.4

    """
    if ambient.refractive_index == other.refractive_index:
        raise PreconditionError(f'Brewster angle undefined for equal indices {ambient.refractive_index!r}.')
    return math.atan(other.refractive_index / ambient.refractive_index)
