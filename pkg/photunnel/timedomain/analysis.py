"""
Post-processing of time-domain monitor records.

Pulse arrival is tracked on the intensity envelope ``|analytic signal|^2`` rather than on
field extrema, so carrier-phase slips between runs cannot alias into sub-cycle delays.
The discrete envelope maximum is refined by a three-point parabola.

The module contains the following main components:

* :class:`PeakEstimate` - Envelope peak of one signal
* :class:`CausalityVerdict` - Front arrival against the vacuum light cone
* :class:`EnergyBalance` - Reflected and transmitted pulse energy fractions
* :func:`peak_time` - Envelope peak of one signal
* :func:`peak_delay` - Exit-peak delay of a stack run against its reference run
* :func:`front_time` - First sample above a relative threshold
* :func:`causality_verdict` - Sommerfeld-front check of a sharp-front run
* :func:`energy_balance` - Pulse-energy bookkeeping
* :func:`transmission_from_records` - Flux transmission from Fourier transforms
* :func:`distortion` - RMS change of the normalized envelope after peak alignment
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.signal import find_peaks, hilbert

from .fdtd import ProbeRecord
from ..errors import PreconditionError, UnreliableDelayError
from ..optics import SPEED_OF_LIGHT

#: float: Relative threshold that defines a front arrival.
FRONT_THRESHOLD = 1e-8

#: float: Secondary envelope peaks above this fraction of the main one make a record ambiguous.
SECONDARY_PEAK_LEVEL = 0.5


@dataclass(frozen=True)
class PeakEstimate:
    """
    Envelope peak of a signal.

    :param time: Interpolated peak time, fs.
    :param height: Envelope intensity at the discrete maximum.
    :param peaks: Number of envelope peaks above :data:`SECONDARY_PEAK_LEVEL` of the maximum.
    """
    time: float
    height: float
    peaks: int

    @property
    def single(self) -> bool:
        return self.peaks <= 1


def envelope(signal) -> np.ndarray:
    """
    Intensity envelope ``|hilbert(signal)|^2``.
    """
    return np.abs(hilbert(np.asarray(signal, dtype=float))) ** 2


def peak_time(times, signal) -> PeakEstimate:
    """
    Envelope peak time of a sampled signal.

    :param times: Uniform sample times.
    :param signal: Real samples.
    :return: The estimate; multiple comparable peaks are logged and counted.
    :rtype: PeakEstimate
    :raises PreconditionError: If the signal is identically zero.

    Example::

        >>> import numpy as np
        >>> from photunnel.timedomain import peak_time
        >>> t = np.arange(4000) * 0.01
        >>> x = np.exp(-(t - 17.3) ** 2 / 8.0) * np.cos(12.0 * t)
        >>> round(peak_time(t, x).time, 3)
        17.3

    """
    times = np.asarray(times, dtype=float)
    intensity = envelope(signal)
    i = int(np.argmax(intensity))
    height = float(intensity[i])
    if height <= 0:
        raise PreconditionError('Signal is identically zero, no peak to track.')

    offset = 0.0
    if 0 < i < len(intensity) - 1:
        y0, y1, y2 = intensity[i - 1], intensity[i], intensity[i + 1]
        curvature = y0 - 2.0 * y1 + y2
        if curvature < 0:
            offset = 0.5 * (y0 - y2) / curvature
    step = times[1] - times[0]

    found, _ = find_peaks(intensity, height=SECONDARY_PEAK_LEVEL * height)
    if len(found) > 1:
        logging.warning(f'Envelope has {len(found)} comparable peaks, peak time is ambiguous.')
    return PeakEstimate(time=float(times[i] + offset * step), height=height, peaks=max(len(found), 1))


def peak_delay(record: ProbeRecord, reference: ProbeRecord, strict: bool = False) -> float:
    """
    Exit-plane peak time of a stack run minus that of its reference run, fs.

    :param record: Stack run.
    :type record: ProbeRecord
    :param reference: Reference run on the same grid.
    :type reference: ProbeRecord
    :param strict: Raise instead of warning on multi-peak records.
    :type strict: bool
    :return: Negative when the pulse peak leaves the stack early.
    :rtype: float
    :raises UnreliableDelayError: In strict mode, if either envelope has several peaks.
    """
    stack_peak = peak_time(record.times, record.exit)
    reference_peak = peak_time(reference.times, reference.exit)
    if strict and not (stack_peak.single and reference_peak.single):
        raise UnreliableDelayError('Distorted pulse, envelope peak is not unique.')
    return stack_peak.time - reference_peak.time


def front_time(times, signal, threshold: float = FRONT_THRESHOLD) -> float:
    """
    Time of the first sample whose magnitude exceeds ``threshold`` times the maximum.

    :return: The front time, NaN for an identically zero signal.
    :rtype: float
    """
    magnitude = np.abs(np.asarray(signal, dtype=float))
    peak = float(np.max(magnitude)) if len(magnitude) else 0.0
    if peak <= 0:
        return math.nan
    return float(np.asarray(times)[np.argmax(magnitude > threshold * peak)])


@dataclass(frozen=True)
class CausalityVerdict:
    """
    Front arrival at the exit plane against the vacuum light cone.

    :param entry_front: Front time on the entry plane of the reference run, fs.
    :param exit_front: Front time on the exit plane of the stack run, fs.
    :param light_cone: ``entry_front + d / c``, fs.
    :param early_ratio: Largest exit field before the light cone over the exit peak.
    :param causal: Whether ``early_ratio`` stays below the front threshold.
    """
    entry_front: float
    exit_front: float
    light_cone: float
    early_ratio: float
    causal: bool


def causality_verdict(record: ProbeRecord, reference: ProbeRecord,
                      threshold: float = FRONT_THRESHOLD) -> CausalityVerdict:
    """
    Check that nothing leaves the stack before light crossing it in vacuum could.

    Meant for sharp-front runs. At unit Courant number the lattice itself cannot carry
    a signal faster than one cell per step, so the check probes the physics of the
    stack rather than the discretization.

    :param record: Stack run.
    :type record: ProbeRecord
    :param reference: Reference run.
    :type reference: ProbeRecord
    :param threshold: Relative front threshold.
    :type threshold: float
    :return: The verdict.
    :rtype: CausalityVerdict
    """
    grid = record.grid
    thickness = float(grid.z[grid.exit_node] - grid.z[grid.entry_node])
    entry_front = front_time(reference.times, reference.entry, threshold)
    exit_front = front_time(record.times, record.exit, threshold)
    light_cone = entry_front + thickness / SPEED_OF_LIGHT

    magnitude = np.abs(record.exit)
    peak = float(np.max(magnitude))
    early = magnitude[record.times < light_cone - 0.5 * grid.time_step]
    ratio = float(np.max(early)) / peak if len(early) and peak > 0 else 0.0
    return CausalityVerdict(entry_front=entry_front, exit_front=exit_front, light_cone=light_cone,
                            early_ratio=ratio, causal=ratio < threshold)


@dataclass(frozen=True)
class EnergyBalance:
    """
    Pulse-energy fractions.

    :param reflectance: Reflected over incident energy.
    :param transmittance: Transmitted over incident energy.
    """
    reflectance: float
    transmittance: float

    @property
    def total(self) -> float:
        return self.reflectance + self.transmittance


def energy_balance(record: ProbeRecord, reference: ProbeRecord) -> EnergyBalance:
    """
    Reflected and transmitted energy of a pulse run.

    The reflected field is the entry-plane difference between the stack run and the
    reference run; flux in a medium of index ``n`` is ``n E^2`` in normalized units.

    :param record: Stack run.
    :type record: ProbeRecord
    :param reference: Reference run.
    :type reference: ProbeRecord
    :return: The balance.
    :rtype: EnergyBalance
    """
    incident = float(np.sum(reference.entry ** 2))
    if incident <= 0:
        raise PreconditionError('Reference run carries no incident energy.')
    reflected = float(np.sum((record.entry - reference.entry) ** 2))
    transmitted = float(np.sum(record.exit ** 2))
    ratio = record.grid.substrate_index / record.grid.ambient_index
    return EnergyBalance(reflectance=reflected / incident, transmittance=ratio * transmitted / incident)


def _spectrum(times: np.ndarray, signal: np.ndarray, omegas: np.ndarray) -> np.ndarray:
    return np.exp(1j * omegas[:, None] * times[None, :]) @ signal


def transmission_from_records(record: ProbeRecord, reference: ProbeRecord,
                              wavelengths: Iterable[float]) -> np.ndarray:
    """
    Flux transmission recovered from the Fourier transforms of a pulse run.

    :param record: Stack run.
    :type record: ProbeRecord
    :param reference: Reference run.
    :type reference: ProbeRecord
    :param wavelengths: Vacuum wavelengths in nm, inside the source band.
    :return: Flux transmission at each wavelength.
    :rtype: numpy.ndarray
    """
    omegas = 2.0 * math.pi * SPEED_OF_LIGHT / np.asarray(list(wavelengths), dtype=float)
    transmitted = _spectrum(record.times, record.exit, omegas)
    incident = _spectrum(reference.times, reference.entry, omegas)
    ratio = record.grid.substrate_index / record.grid.ambient_index
    return ratio * np.abs(transmitted) ** 2 / np.abs(incident) ** 2


def distortion(record: ProbeRecord, reference: ProbeRecord) -> float:
    """
    RMS difference of the peak-normalized exit envelopes after shifting out the delay.

    Zero for a pure delay, and grows with pulse reshaping by the stack. Samples where
    both envelopes stay below ``1e-3`` of their peaks are ignored.

    :param record: Stack run.
    :type record: ProbeRecord
    :param reference: Reference run.
    :type reference: ProbeRecord
    :return: The RMS envelope change.
    :rtype: float
    """
    delay = peak_delay(record, reference)
    shifted = envelope(record.exit)
    shifted = np.interp(record.times + delay, record.times, shifted / np.max(shifted), left=0.0, right=0.0)
    base = envelope(reference.exit)
    base = base / np.max(base)
    mask = (shifted > 1e-3) | (base > 1e-3)
    return float(np.sqrt(np.mean((shifted[mask] - base[mask]) ** 2)))
