import numpy as np
import pytest

from photunnel.errors import PreconditionError
from photunnel.hom import FWHM_PER_SIGMA, MIN_POINTS, dip_model, fit_dip, trombone_delays


@pytest.mark.unittest
class TestHomFit:
    def test_dip_model(self):
        rates = dip_model([0.0, 1e6], 0.0, 5.0, 0.8, 2.0)
        assert rates[0] == pytest.approx(0.4)
        assert rates[1] == pytest.approx(2.0)

    @pytest.mark.parametrize('center, width, visibility, baseline', [
        (-1.47, 8.0, 1.0, 1.0),
        (3.2, 20.0, 0.6, 1.0),
        (0.0, 51.0, 0.95, 250.0),
    ])
    def test_exact_recovery(self, center, width, visibility, baseline):
        delays = np.linspace(center - 6 * width, center + 6 * width, 121)
        fit = fit_dip(delays, dip_model(delays, center, width, visibility, baseline))
        assert fit.reliable
        assert fit.center == pytest.approx(center, abs=1e-6 * width)
        assert fit.width == pytest.approx(width, rel=1e-6)
        assert fit.visibility == pytest.approx(visibility, rel=1e-6)
        assert fit.baseline == pytest.approx(baseline, rel=1e-6)
        assert fit.evaluations > 0

    def test_noisy(self):
        rng = np.random.RandomState(0)
        delays = np.linspace(-60.0, 60.0, 121)
        rates = dip_model(delays, 4.0, 12.0, 0.9, 1.0) + rng.normal(0.0, 0.01, len(delays))
        fit = fit_dip(delays, rates)
        assert fit.center == pytest.approx(4.0, abs=0.5)
        assert fit.width == pytest.approx(12.0, rel=0.05)

    @pytest.mark.parametrize('center', [-1.76, 0.0, 3.39])
    def test_trombone_sampling(self, center):
        # 0.1 um prism steps, 0.667 fs of delay each
        delays = trombone_delays(-9000.0, 9000.0, 100.0)
        assert delays[1] - delays[0] == pytest.approx(0.667, abs=1e-3)
        rng = np.random.RandomState(1)
        width = 20.0 / FWHM_PER_SIGMA
        rates = dip_model(delays, center, width, 0.95, 1.0) + rng.normal(0.0, 0.005, len(delays))
        fit = fit_dip(delays, rates)
        assert fit.reliable
        assert fit.center == pytest.approx(center, abs=0.2)

    def test_flat(self):
        delays = np.linspace(-10.0, 10.0, 21)
        fit = fit_dip(delays, np.ones_like(delays))
        assert not fit.reliable
        assert fit.center == pytest.approx(0.0)

    def test_invalid(self):
        delays = np.linspace(-10.0, 10.0, MIN_POINTS - 1)
        with pytest.raises(PreconditionError):
            fit_dip(delays, np.ones_like(delays))
        with pytest.raises(PreconditionError):
            fit_dip(np.linspace(10.0, -10.0, 21), np.ones(21))
        with pytest.raises(PreconditionError):
            fit_dip(np.linspace(-10.0, 10.0, 21), np.ones(20))
