import math

import numpy as np
import pytest

from photunnel.delay import photonic_wigner
from photunnel.optics import AIR, Incidence, LayerStack, Medium, SPEED_OF_LIGHT, quarter_wave_stack, \
    stack_response
from photunnel.timedomain import GaussianPulse, GridConfig, SharpFrontSource, causality_verdict, distortion, \
    energy_balance, peak_delay, propagate, run_pair, transmission_from_records


@pytest.fixture(scope='module')
def mirror():
    return quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, Medium.of(1.45))


@pytest.fixture(scope='module')
def pulse_pair(mirror):
    return run_pair(mirror, GaussianPulse(center_wavelength=702.0, bandwidth=20.0))


@pytest.fixture(scope='module')
def front_pair(mirror):
    return run_pair(mirror, SharpFrontSource(center_wavelength=702.0, hold=40.0))


@pytest.mark.unittest
class TestTimedomainFdtd:
    def test_empty_stack(self):
        source = GaussianPulse(bandwidth=40.0)
        record, reference = run_pair(LayerStack(), source, GridConfig(padding=30.0))
        assert np.allclose(record.exit, reference.exit)
        assert peak_delay(record, reference) == pytest.approx(0.0, abs=1e-9)
        balance = energy_balance(record, reference)
        assert balance.reflectance == pytest.approx(0.0, abs=1e-12)
        assert balance.transmittance == pytest.approx(1.0, rel=1e-9)

    def test_vacuum_propagation(self):
        # at unit Courant number the incident pulse reaches the entry plane unchanged
        source = GaussianPulse(bandwidth=40.0)
        stack = LayerStack(layers=(), ambient=AIR)
        record = propagate(stack, source, GridConfig(padding=60.0), reference=True)
        entry = record.entry
        assert np.max(np.abs(entry)) == pytest.approx(1.0, abs=1e-2)

    def test_monitor(self):
        record = propagate(LayerStack(), GaussianPulse(bandwidth=40.0), GridConfig(padding=30.0))
        assert record.to_frame('exit').columns.tolist() == ['t_fs', 'field']
        with pytest.raises(KeyError):
            record.monitor('middle')

    @pytest.mark.slow
    def test_peak_delay(self, mirror, pulse_pair):
        record, reference = pulse_pair
        expected = photonic_wigner(mirror, Incidence(vacuum_wavelength=702.0)).relative_delay
        delay = peak_delay(record, reference)
        assert delay == pytest.approx(expected, abs=0.2)
        assert delay < 0
        assert 0.0 <= distortion(record, reference) < 0.5

    @pytest.mark.slow
    def test_peak_delay_grid_converged(self, mirror, pulse_pair):
        fine = run_pair(mirror, GaussianPulse(center_wavelength=702.0, bandwidth=20.0),
                        GridConfig(max_spatial_step=0.5))
        assert fine[0].time_step < pulse_pair[0].time_step
        assert abs(peak_delay(*fine) - peak_delay(*pulse_pair)) < 0.05

    @pytest.mark.slow
    def test_energy_balance(self, pulse_pair):
        balance = energy_balance(*pulse_pair)
        assert balance.total == pytest.approx(1.0, abs=1e-2)
        assert 0.005 <= balance.transmittance <= 0.05

    @pytest.mark.slow
    def test_transmission(self, mirror, pulse_pair):
        flux = transmission_from_records(*pulse_pair, [702.0])
        expected = stack_response(mirror, Incidence(vacuum_wavelength=702.0)).flux_transmission
        assert flux[0] == pytest.approx(expected, rel=0.1)

    @pytest.mark.slow
    def test_causality(self, mirror, front_pair):
        record, reference = front_pair
        verdict = causality_verdict(record, reference)
        assert verdict.causal
        assert verdict.early_ratio == 0.0
        assert verdict.light_cone - verdict.entry_front == pytest.approx(mirror.total_thickness / SPEED_OF_LIGHT)
        assert verdict.exit_front >= verdict.light_cone - 0.5 * record.time_step
        assert not math.isnan(verdict.exit_front)
