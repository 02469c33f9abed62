"""
Bloch analysis of periodic stacks.

A stack made of ``N`` repetitions of a unit cell behaves, away from its ends, like the
infinite periodic medium whose dispersion is ``cos(K * period) = x(omega)``, with ``x``
the half-trace of the unit-cell characteristic matrix. Where ``|x| > 1`` the Bloch
wavenumber ``K`` is complex and the stack is in a stop band.

The module contains the following main components:

* :func:`unit_cell` - Smallest repeating group of layers
* :func:`bloch_trace` - Half-trace of the unit-cell matrix
* :func:`bloch_trace_at` - Vectorized half-trace over angular frequencies
* :func:`in_stop_band` - Stop-band membership test
* :func:`bloch_edges` - Stop-band edges around a probe inside the gap
"""

import math
from typing import Tuple

import numpy as np
from scipy.optimize import brentq

from .matrix import characteristic_matrix
from .media import Incidence, Layer, LayerStack, Polarization, SPEED_OF_LIGHT, wavelength_of
from ..errors import OutsideStopBandError, PreconditionError


def unit_cell(stack: LayerStack) -> Tuple[Layer, ...]:
    """
    Smallest group of layers whose repetition reproduces the stack.

    A trailing partial period is allowed, so the 11-layer ``HLHLHLHLHLH`` mirror has the
    unit cell ``(H, L)``.

    :param stack: Periodic stack.
    :type stack: LayerStack
    :return: Layers of one period.
    :rtype: Tuple[Layer, ...]
    :raises PreconditionError: If no period shorter than the stack exists.
    """
    layers = stack.layers
    for period in range(1, len(layers)):
        if all(layers[i] == layers[i + period] for i in range(len(layers) - period)):
            return tuple(layers[:period])
    raise PreconditionError(f'Stack of {len(layers)} layers is not periodic.')


def _cell_period(cell: Tuple[Layer, ...]) -> float:
    return float(sum(layer.thickness for layer in cell))


def bloch_trace_at(stack: LayerStack, omega, angle: float = 0.0,
                   polarization: Polarization = Polarization.S) -> np.ndarray:
    """
    Half-trace of the unit-cell matrix for an array of angular frequencies.

    :param stack: Periodic stack.
    :type stack: LayerStack
    :param omega: Angular frequencies in rad/fs.
    :param angle: Angle of incidence in the ambient, radians.
    :type angle: float
    :param polarization: Polarization.
    :type polarization: Polarization
    :return: Real half-trace array.
    :rtype: numpy.ndarray
    """
    cell = unit_cell(stack)
    k0 = np.asarray(omega, dtype=float) / SPEED_OF_LIGHT
    beta = stack.ambient.refractive_index * math.sin(angle)
    m = characteristic_matrix(cell, k0, beta, polarization)
    return np.real(m[..., 0, 0] + m[..., 1, 1]) / 2.0


def bloch_trace(stack: LayerStack, incidence: Incidence) -> float:
    """
    Half-trace ``x`` of the unit-cell matrix at one incidence.

    :param stack: Periodic stack.
    :type stack: LayerStack
    :param incidence: Incident wave.
    :type incidence: Incidence
    :return: ``x``; ``|x| > 1`` inside a stop band.
    :rtype: float
    """
    return float(bloch_trace_at(stack, incidence.omega, incidence.angle, incidence.polarization))


def in_stop_band(stack: LayerStack, incidence: Incidence) -> bool:
    """
    Whether the probe lies in a stop band of the infinite periodic medium.
    """
    return abs(bloch_trace(stack, incidence)) > 1.0


def bloch_edges(stack: LayerStack, incidence: Incidence, rel_step: float = 1e-3) -> Tuple[float, float]:
    """
    Edges of the stop band containing the probe, as vacuum wavelengths.

    The half-trace is sampled outward from the probe frequency in relative steps of
    ``rel_step`` until ``|x|`` drops to 1, and the crossing is refined with
    :func:`scipy.optimize.brentq`.

    :param stack: Periodic stack.
    :type stack: LayerStack
    :param incidence: Probe inside the stop band.
    :type incidence: Incidence
    :param rel_step: Relative frequency step of the outward search.
    :type rel_step: float
    :return: ``(short_edge, long_edge)`` in nm.
    :rtype: Tuple[float, float]
    :raises OutsideStopBandError: If the probe is not inside a stop band.

    Example::

        >>> from photunnel.optics import quarter_wave_stack, bloch_edges, Incidence
        >>> mirror = quarter_wave_stack(700.0, 2.22, 1.45, 11)
        >>> short, long = bloch_edges(mirror, Incidence(vacuum_wavelength=700.0))
        >>> round(short), round(long)
        (617, 809)

    """
    omega0 = incidence.omega
    angle, pol = incidence.angle, incidence.polarization

    def _excess(w):
        return abs(float(bloch_trace_at(stack, w, angle, pol))) - 1.0

    if _excess(omega0) <= 0:
        raise OutsideStopBandError(f'Probe at {incidence.vacuum_wavelength!r} nm is outside the stop band.')

    def _edge(direction: int) -> float:
        count = int(math.ceil(0.99 / rel_step))
        ws = omega0 * (1.0 + direction * rel_step * np.arange(1, count + 1))
        ws = ws[ws > 0]
        excess = np.abs(bloch_trace_at(stack, ws, angle, pol)) - 1.0
        outside = np.nonzero(excess <= 0)[0]
        if len(outside) == 0:
            raise PreconditionError('Stop band edge not found within the search range.')
        i = int(outside[0])
        w_in = omega0 if i == 0 else float(ws[i - 1])
        return brentq(_excess, min(w_in, ws[i]), max(w_in, ws[i]), xtol=1e-12, rtol=1e-14)

    w_high = _edge(+1)
    w_low = _edge(-1)
    return wavelength_of(w_high), wavelength_of(w_low)
