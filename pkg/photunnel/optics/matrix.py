"""
Characteristic-matrix solver for planar multilayers.

Each film of index ``n`` and thickness ``d`` is represented by the 2x2 matrix

.. math::

    M = \\begin{pmatrix} \\cos\\delta & -i \\sin\\delta / \\eta \\\\
                         -i \\eta \\sin\\delta & \\cos\\delta \\end{pmatrix},
    \\qquad \\delta = k_0 n d \\cos\\theta

with tilted admittance ``eta = n cos(theta)`` for S and ``n / cos(theta)`` for P
polarization. The product of all film matrices maps tangential fields at the exit plane
to the entry plane. Complex ``cos(theta)`` is always taken on the branch with
non-negative imaginary part, so evanescent waves decay in the direction of travel.

All functions broadcast over arrays of vacuum wavenumber ``k0`` and of the conserved
tangential index ``beta = n_ambient * sin(angle)``.

The module contains the following main components:

* :func:`cos_in_medium` - Complex propagation-angle cosine in a medium
* :func:`admittance` - Tilted optical admittance
* :func:`characteristic_matrix` - Product of film matrices
* :func:`transfer` - Vectorized ``(r, t, T, R)`` arrays
* :func:`stack_response` - Scalar response of a stack to one plane wave
* :func:`transmission_amplitude` - Vectorized ``t`` over frequencies or angles
* :func:`boundary_solve` - Independent linear-system solution used as a cross-check
"""

import math
from typing import Iterable, Tuple

import numpy as np

from .media import ComplexResponse, Incidence, Layer, LayerStack, Polarization, SPEED_OF_LIGHT


def cos_in_medium(index: float, beta) -> np.ndarray:
    """
    Complex cosine of the propagation angle in a medium.

    :param index: Refractive index of the medium.
    :type index: float
    :param beta: Conserved tangential index ``n_ambient * sin(angle)``, scalar or array.
    :return: ``sqrt(1 - (beta / n)^2)`` on the branch with ``Im >= 0`` (and ``Re >= 0``).
    :rtype: numpy.ndarray
    """
    sin_t = np.asarray(beta, dtype=float) / index
    cos_t = np.sqrt((1.0 - sin_t ** 2) + 0j)
    flip = (cos_t.imag < 0) | ((cos_t.imag == 0) & (cos_t.real < 0))
    return np.where(flip, -cos_t, cos_t)


def admittance(index: float, cos_t, polarization: Polarization) -> np.ndarray:
    """
    Tilted admittance of a medium, in units of the vacuum admittance.
    """
    if Polarization(polarization) == Polarization.S:
        return index * cos_t
    else:
        return index / cos_t


def _layer_matrices(layer: Layer, k0: np.ndarray, beta: np.ndarray,
                    polarization: Polarization) -> np.ndarray:
    cos_t = cos_in_medium(layer.index, beta)
    eta = admittance(layer.index, cos_t, polarization)
    delta = k0 * layer.index * layer.thickness * cos_t
    c, s = np.cos(delta), np.sin(delta)

    shape = np.broadcast(k0, beta).shape
    m = np.empty(shape + (2, 2), dtype=complex)
    m[..., 0, 0] = c
    m[..., 0, 1] = -1j * s / eta
    m[..., 1, 0] = -1j * eta * s
    m[..., 1, 1] = c
    return m


def characteristic_matrix(layers: Iterable[Layer], k0, beta,
                          polarization: Polarization = Polarization.S) -> np.ndarray:
    """
    Ordered product of the film matrices.

    :param layers: Films in the order light crosses them.
    :type layers: Iterable[Layer]
    :param k0: Vacuum wavenumber ``2*pi/lambda`` in 1/nm, scalar or array.
    :param beta: Conserved tangential index, scalar or array broadcastable with ``k0``.
    :param polarization: Polarization.
    :type polarization: Polarization
    :return: Array of shape ``broadcast(k0, beta).shape + (2, 2)``.
    :rtype: numpy.ndarray

    .. note::
       Zero-thickness films are skipped, so inserting them leaves results bit-identical.
    """
    k0 = np.asarray(k0, dtype=float)
    beta = np.asarray(beta, dtype=float)
    shape = np.broadcast(k0, beta).shape
    total = np.zeros(shape + (2, 2), dtype=complex)
    total[..., 0, 0] = 1.0
    total[..., 1, 1] = 1.0
    for layer in layers:
        if layer.thickness == 0:
            continue
        total = total @ _layer_matrices(layer, k0, beta, polarization)
    return total


def transfer(stack: LayerStack, k0, beta,
             polarization: Polarization = Polarization.S
             ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorized response of a stack.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param k0: Vacuum wavenumber in 1/nm, scalar or array.
    :param beta: Conserved tangential index, scalar or array.
    :param polarization: Polarization.
    :return: Tuple ``(r, t, T, R)`` of arrays.
    """
    n0 = stack.ambient.refractive_index
    ns = stack.substrate.refractive_index
    eta0 = admittance(n0, cos_in_medium(n0, beta), polarization)
    eta_s = admittance(ns, cos_in_medium(ns, beta), polarization)

    m = characteristic_matrix(stack.layers, k0, beta, polarization)
    b = m[..., 0, 0] + m[..., 0, 1] * eta_s
    c = m[..., 1, 0] + m[..., 1, 1] * eta_s
    denom = eta0 * b + c
    r = (eta0 * b - c) / denom
    t = 2.0 * eta0 / denom

    flux_t = np.real(eta_s) / np.real(eta0) * np.abs(t) ** 2
    flux_r = np.abs(r) ** 2
    return r, t, flux_t, flux_r


def _beta(stack: LayerStack, angle) -> np.ndarray:
    return stack.ambient.refractive_index * np.sin(np.asarray(angle, dtype=float))


def stack_response(stack: LayerStack, incidence: Incidence) -> ComplexResponse:
    """
    Complex response of a stack to one plane wave.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param incidence: Incident wave.
    :type incidence: Incidence
    :return: Reflection/transmission amplitudes and flux coefficients.
    :rtype: ComplexResponse

    Example::

        >>> from photunnel.optics import LayerStack, Incidence, stack_response
        >>> resp = stack_response(LayerStack(), Incidence(vacuum_wavelength=700.0))
        >>> resp.t, resp.flux_transmission
        ((1+0j), 1.0)

    """
    k0 = 2.0 * math.pi / incidence.vacuum_wavelength
    r, t, flux_t, flux_r = transfer(stack, k0, _beta(stack, incidence.angle), incidence.polarization)
    return ComplexResponse(
        r=complex(r), t=complex(t),
        flux_transmission=float(flux_t), flux_reflection=float(flux_r),
    )


def transmission_amplitude(stack: LayerStack, omega, angle=0.0,
                           polarization: Polarization = Polarization.S) -> np.ndarray:
    """
    Transmission amplitude ``t`` for arrays of angular frequency and/or angle.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param omega: Angular frequency in rad/fs, scalar or array.
    :param angle: Angle of incidence in radians, scalar or array.
    :param polarization: Polarization.
    :return: Complex array broadcast over ``omega`` and ``angle``.
    :rtype: numpy.ndarray
    """
    k0 = np.asarray(omega, dtype=float) / SPEED_OF_LIGHT
    _, t, _, _ = transfer(stack, k0, _beta(stack, angle), polarization)
    return t


def boundary_solve(stack: LayerStack, incidence: Incidence) -> ComplexResponse:
    """
    Solve the same scattering problem by matching fields at every interface.

    The unknowns are the forward and backward tangential amplitudes in every film
    (referenced to the film's entry plane), the reflected amplitude and the transmitted
    amplitude. Continuity of tangential E and H at each interface gives a dense linear
    system solved with :func:`numpy.linalg.solve`. It shares no code with
    :func:`characteristic_matrix` and serves as an independent check.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param incidence: Incident wave.
    :type incidence: Incidence
    :return: Same quantities as :func:`stack_response`.
    :rtype: ComplexResponse
    """
    k0 = 2.0 * math.pi / incidence.vacuum_wavelength
    beta = float(_beta(stack, incidence.angle))
    pol = incidence.polarization

    layers = [layer for layer in stack.layers if layer.thickness > 0]
    n_layers = len(layers)

    def _eta(index):
        return complex(admittance(index, cos_in_medium(index, beta), pol))

    eta0 = _eta(stack.ambient.refractive_index)
    eta_s = _eta(stack.substrate.refractive_index)
    etas = [_eta(layer.index) for layer in layers]
    phases = [complex(np.exp(1j * k0 * layer.index * layer.thickness
                             * complex(cos_in_medium(layer.index, beta))))
              for layer in layers]

    # unknowns: r, (a_j, b_j) for each film, t
    size = 2 * n_layers + 2
    a = np.zeros((size, size), dtype=complex)
    rhs = np.zeros(size, dtype=complex)

    def _col_a(j):
        return 1 + 2 * j

    def _col_b(j):
        return 2 + 2 * j

    t_col = size - 1
    row = 0

    # entry plane: 1 + r = a_0 + b_0 ; eta0 (1 - r) = eta_1 (a_0 - b_0)
    if n_layers == 0:
        a[row, 0] = 1.0
        a[row, t_col] = -1.0
        rhs[row] = -1.0
        row += 1
        a[row, 0] = -eta0
        a[row, t_col] = -eta_s
        rhs[row] = -eta0
        row += 1
    else:
        a[row, 0] = 1.0
        a[row, _col_a(0)] = -1.0
        a[row, _col_b(0)] = -1.0
        rhs[row] = -1.0
        row += 1
        a[row, 0] = -eta0
        a[row, _col_a(0)] = -etas[0]
        a[row, _col_b(0)] = etas[0]
        rhs[row] = -eta0
        row += 1

        for j in range(n_layers):
            p = phases[j]
            if j + 1 < n_layers:
                a[row, _col_a(j)] = p
                a[row, _col_b(j)] = 1.0 / p
                a[row, _col_a(j + 1)] = -1.0
                a[row, _col_b(j + 1)] = -1.0
                row += 1
                a[row, _col_a(j)] = etas[j] * p
                a[row, _col_b(j)] = -etas[j] / p
                a[row, _col_a(j + 1)] = -etas[j + 1]
                a[row, _col_b(j + 1)] = etas[j + 1]
                row += 1
            else:
                a[row, _col_a(j)] = p
                a[row, _col_b(j)] = 1.0 / p
                a[row, t_col] = -1.0
                row += 1
                a[row, _col_a(j)] = etas[j] * p
                a[row, _col_b(j)] = -etas[j] / p
                a[row, t_col] = -eta_s
                row += 1

    solution = np.linalg.solve(a, rhs)
    r, t = complex(solution[0]), complex(solution[t_col])
    return ComplexResponse(
        r=r, t=t,
        flux_transmission=float(eta_s.real / eta0.real * abs(t) ** 2),
        flux_reflection=float(abs(r) ** 2),
    )
