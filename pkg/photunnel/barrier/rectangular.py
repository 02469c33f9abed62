"""
Stationary scattering by a rectangular potential barrier.

A particle of energy ``E`` and mass ``m`` meets the potential ``V0`` on ``0 <= x <= d``.
With ``k = sqrt(2mE)/hbar`` and ``kappa^2 = 2m(V0 - E)/hbar^2`` the amplitude across
the barrier region is

.. math::

    t_{total} = \\frac{1}{\\cosh(\\kappa d) + i \\frac{\\kappa^2 - k^2}{2k} d\\,
                \\mathrm{sinhc}(\\kappa d)}

which stays analytic through ``E = V0`` (``kappa^2`` changes sign and ``cosh``/``sinhc``
turn into ``cos``/``sinc``). ``t_total`` relates the transmitted wave at ``x = d`` to the
incident wave at ``x = 0``; the conventional amplitude ``t`` referenced to a common
origin is ``t_total * exp(-i k d)``.

The module contains the following main components:

* :class:`RectangularBarrier` - Barrier and particle parameters
* :func:`barrier_amplitude` - ``t`` referenced to a common origin
* :func:`barrier_total_amplitude` - ``t_total`` including the phase across the barrier
* :func:`barrier_reflection` - Reflection amplitude at the entry plane
* :func:`schrodinger_amplitude` - Independent numerical solution with :func:`scipy.integrate.solve_ivp`
"""

import cmath
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import solve_ivp

#: float: Relative distance from the barrier top below which the ``E = V0`` limit is used.
TOP_TOLERANCE = 1e-12


class RectangularBarrier(BaseModel):
    """
    Rectangular barrier with the particle that meets it.

    Natural units ``hbar = m = 1`` are the default; explicit values are accepted.

    :param height: Barrier height ``V0`` > 0.
    :type height: float
    :param width: Barrier width ``d`` >= 0.
    :type width: float
    :param energy: Particle energy ``E`` > 0, below or above the barrier.
    :type energy: float
    :param hbar: Reduced Planck constant.
    :type hbar: float
    :param mass: Particle mass.
    :type mass: float
    """
    model_config = ConfigDict(frozen=True)

    height: float = Field(gt=0)
    width: float = Field(ge=0)
    energy: float = Field(gt=0)
    hbar: float = Field(default=1.0, gt=0)
    mass: float = Field(default=1.0, gt=0)

    @property
    def k(self) -> float:
        """
        Free wavenumber outside the barrier.
        """
        return math.sqrt(2.0 * self.mass * self.energy) / self.hbar

    @property
    def kappa_squared(self) -> float:
        """
        ``2m(V0 - E)/hbar^2``, negative above the barrier.
        """
        return 2.0 * self.mass * (self.height - self.energy) / self.hbar ** 2

    @property
    def kappa(self) -> float:
        """
        Under-barrier decay constant, zero at or above the barrier top.
        """
        return math.sqrt(max(self.kappa_squared, 0.0))

    @property
    def velocity(self) -> float:
        """
        Free-particle velocity ``hbar k / m``.
        """
        return self.hbar * self.k / self.mass

    @property
    def is_tunneling(self) -> bool:
        return self.energy < self.height

    @property
    def at_top(self) -> bool:
        return abs(self.energy - self.height) / self.height < TOP_TOLERANCE

    def replace(self, **kwargs) -> 'RectangularBarrier':
        """
        Copy with some fields replaced, validated again.
        """
        values = self.model_dump()
        values.update(kwargs)
        return RectangularBarrier(**values)

    @classmethod
    def from_kappa_d(cls, kappa_d: float, height: float = 1.0, energy_ratio: float = 0.5,
                     hbar: float = 1.0, mass: float = 1.0) -> 'RectangularBarrier':
        """
        Barrier of height ``V0`` whose width gives the requested opacity ``kappa * d``.

        :param kappa_d: Opacity, dimensionless.
        :type kappa_d: float
        :param height: Barrier height.
        :type height: float
        :param energy_ratio: ``E / V0``, strictly between 0 and 1.
        :type energy_ratio: float
        :return: The barrier.
        :rtype: RectangularBarrier
        """
        energy = energy_ratio * height
        kappa = math.sqrt(2.0 * mass * (height - energy)) / hbar
        return cls(height=height, width=kappa_d / kappa, energy=energy, hbar=hbar, mass=mass)


def _cosh_sinhc(z: float, d: float):
    """
    ``cosh(sqrt(z) d)`` and ``sinh(sqrt(z) d) / (sqrt(z) d)`` for real ``z`` of either sign.
    """
    arg = cmath.sqrt(z) * d
    ch = cmath.cosh(arg).real
    if abs(arg) > 1e-4:
        shc = (cmath.sinh(arg) / arg).real
    else:
        u = z * d * d
        shc = 1.0 + u / 6.0 + u * u / 120.0
    return ch, shc


def _denominator(b: RectangularBarrier) -> complex:
    k = b.k
    if b.at_top:
        return complex(1.0, -k * b.width / 2.0)
    ch, shc = _cosh_sinhc(b.kappa_squared, b.width)
    return complex(ch, (b.kappa_squared - k * k) / (2.0 * k) * b.width * shc)


def barrier_total_amplitude(b: RectangularBarrier) -> complex:
    """
    Amplitude of the wave leaving at ``x = d`` per unit incident amplitude at ``x = 0``.

    Its phase is the one whose energy derivative gives the Wigner transit time.

    :param b: The barrier.
    :type b: RectangularBarrier
    :return: ``t_total``.
    :rtype: complex
    """
    return 1.0 / _denominator(b)


def barrier_amplitude(b: RectangularBarrier) -> complex:
    """
    Transmission amplitude referenced to a common origin, ``t_total * exp(-i k d)``.

    ``|t|^2`` is the transmission probability.

    :param b: The barrier.
    :type b: RectangularBarrier
    :return: ``t``.
    :rtype: complex

    Example::

        >>> from photunnel.barrier import RectangularBarrier, barrier_amplitude
        >>> b = RectangularBarrier.from_kappa_d(1.0)
        >>> round(abs(barrier_amplitude(b)) ** 2, 3)
        0.42

    """
    return barrier_total_amplitude(b) * cmath.exp(-1j * b.k * b.width)


def barrier_reflection(b: RectangularBarrier) -> complex:
    """
    Reflection amplitude at the entry plane ``x = 0``.

    :param b: The barrier.
    :type b: RectangularBarrier
    :return: ``r``, with ``|r|^2 + |t|^2 = 1``.
    :rtype: complex
    """
    k = b.k
    if b.at_top:
        numerator = -1j * k * b.width / 2.0
    else:
        _, shc = _cosh_sinhc(b.kappa_squared, b.width)
        numerator = -1j * (k * k + b.kappa_squared) / (2.0 * k) * b.width * shc
    return numerator / _denominator(b)


def schrodinger_amplitude(b: RectangularBarrier, rtol: float = 1e-10, atol: float = 1e-12) -> complex:
    """
    Transmission amplitude from a direct integration of the Schrodinger equation.

    The outgoing wave ``exp(i k (x - d))`` is imposed at ``x = d`` and
    ``psi'' = 2m (V0 - E) psi / hbar^2`` is integrated back to ``x = 0`` with
    :func:`scipy.integrate.solve_ivp`, where the solution is split into incident and
    reflected waves. It shares no formula with :func:`barrier_amplitude`.

    :param b: The barrier.
    :type b: RectangularBarrier
    :param rtol: Relative tolerance of the integrator.
    :type rtol: float
    :param atol: Absolute tolerance of the integrator.
    :type atol: float
    :return: ``t`` referenced to a common origin.
    :rtype: complex
    """
    k = b.k
    q = 2.0 * b.mass * (b.height - b.energy) / b.hbar ** 2

    def _rhs(_, y):
        return np.array([y[1], q * y[0]], dtype=complex)

    y_exit = np.array([1.0 + 0j, 1j * k], dtype=complex)
    if b.width > 0:
        sol = solve_ivp(_rhs, (b.width, 0.0), y_exit, method='DOP853', rtol=rtol, atol=atol)
        psi, dpsi = sol.y[0, -1], sol.y[1, -1]
    else:
        psi, dpsi = y_exit
    incident = (psi + dpsi / (1j * k)) / 2.0
    return complex(cmath.exp(-1j * k * b.width) / incident)
