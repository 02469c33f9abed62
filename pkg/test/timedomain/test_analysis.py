import math

import numpy as np
import pytest

from photunnel.errors import PreconditionError, UnreliableDelayError
from photunnel.optics import LayerStack
from photunnel.timedomain import GaussianPulse, ProbeRecord, build_grid, distortion, energy_balance, envelope, \
    front_time, peak_delay, peak_time

TIMES = np.arange(4000) * 0.01


def _pulse(center: float, width: float = 2.0, carrier: float = 12.0) -> np.ndarray:
    return np.exp(-(TIMES - center) ** 2 / (2.0 * width ** 2)) * np.cos(carrier * TIMES)


@pytest.fixture(scope='module')
def grid():
    return build_grid(LayerStack(), GaussianPulse())


def _record(grid, exit_, entry=None) -> ProbeRecord:
    return ProbeRecord(times=TIMES, entry=exit_ if entry is None else entry, exit=exit_, grid=grid)


@pytest.mark.unittest
class TestTimedomainAnalysis:
    def test_envelope(self):
        intensity = envelope(_pulse(20.0))
        assert intensity[2000] == pytest.approx(1.0, abs=1e-3)
        assert intensity[2200] == pytest.approx(math.exp(-1.0), abs=1e-3)

    def test_peak_time(self):
        estimate = peak_time(TIMES, _pulse(17.3))
        assert estimate.time == pytest.approx(17.3, abs=1e-3)
        assert estimate.single
        assert estimate.height == pytest.approx(1.0, abs=1e-3)

    def test_peak_time_between_samples(self):
        assert peak_time(TIMES, _pulse(17.305)).time == pytest.approx(17.305, abs=1e-3)

    def test_two_peaks(self):
        estimate = peak_time(TIMES, _pulse(10.0, 1.0) + 0.9 * _pulse(30.0, 1.0))
        assert estimate.peaks == 2
        assert not estimate.single
        assert estimate.time == pytest.approx(10.0, abs=1e-2)

    def test_zero_signal(self):
        with pytest.raises(PreconditionError):
            peak_time(TIMES, np.zeros_like(TIMES))

    def test_peak_delay(self, grid):
        record, reference = _record(grid, _pulse(15.3)), _record(grid, _pulse(17.3))
        assert peak_delay(record, reference) == pytest.approx(-2.0, abs=1e-3)
        assert peak_delay(reference, record) == pytest.approx(2.0, abs=1e-3)

    def test_peak_delay_strict(self, grid):
        split = _record(grid, _pulse(10.0, 1.0) + _pulse(30.0, 1.0))
        reference = _record(grid, _pulse(17.3))
        assert isinstance(peak_delay(split, reference), float)
        with pytest.raises(UnreliableDelayError):
            peak_delay(split, reference, strict=True)

    def test_front_time(self):
        signal = np.where(TIMES >= 12.0, np.sin(TIMES - 12.0) + 1e-3, 0.0)
        assert front_time(TIMES, signal) == pytest.approx(12.0, abs=0.011)
        assert front_time(TIMES, signal, threshold=0.5) > 12.0
        assert math.isnan(front_time(TIMES, np.zeros_like(TIMES)))

    def test_energy_balance(self, grid):
        incident = _pulse(10.0)
        reflected = -0.6 * _pulse(30.0)
        record = ProbeRecord(times=TIMES, entry=incident + reflected, exit=0.8 * _pulse(12.0), grid=grid)
        reference = ProbeRecord(times=TIMES, entry=incident, exit=incident, grid=grid)
        balance = energy_balance(record, reference)
        assert balance.reflectance == pytest.approx(0.36, rel=1e-3)
        assert balance.transmittance == pytest.approx(0.64, rel=1e-3)
        assert balance.total == pytest.approx(1.0, rel=1e-3)

    def test_energy_balance_empty(self, grid):
        silent = _record(grid, np.zeros_like(TIMES))
        with pytest.raises(PreconditionError):
            energy_balance(silent, silent)

    def test_distortion(self, grid):
        reference = _record(grid, _pulse(17.3))
        assert distortion(_record(grid, _pulse(15.3)), reference) < 1e-2
        assert distortion(_record(grid, _pulse(15.3, width=4.0)), reference) > 0.1
