import numpy as np
import pytest

from photunnel.errors import PreconditionError
from photunnel.hom import FWHM_PER_SIGMA, BiphotonSpectrum, default_delays, trombone_delay, trombone_delays


@pytest.mark.unittest
class TestHomSpectrum:
    def test_dip_sigma(self):
        spec = BiphotonSpectrum(center_wavelength=702.0, bandwidth=6.0)
        assert spec.dip_sigma == pytest.approx(51.3, abs=0.2)
        assert spec.dip_fwhm == pytest.approx(FWHM_PER_SIGMA * spec.dip_sigma)
        assert spec.sigma_omega == pytest.approx(spec.bandwidth_omega / FWHM_PER_SIGMA)

    def test_from_dip_width(self):
        spec = BiphotonSpectrum.from_dip_width(702.0, 20.0)
        assert spec.bandwidth == pytest.approx(36.3, abs=0.05)
        assert spec.dip_fwhm == pytest.approx(20.0, rel=1e-12)
        assert spec.center_wavelength == 702.0
        with pytest.raises(PreconditionError):
            BiphotonSpectrum.from_dip_width(702.0, 0.0)

    def test_narrowband(self):
        with pytest.raises(ValueError):
            BiphotonSpectrum(center_wavelength=702.0, bandwidth=150.0)
        with pytest.raises(ValueError):
            BiphotonSpectrum(center_wavelength=702.0, bandwidth=-1.0)

    def test_intensity(self):
        spec = BiphotonSpectrum()
        detunings = spec.detunings(5, span=2.0)
        assert detunings[0] == pytest.approx(-2.0 * spec.sigma_omega)
        assert detunings[2] == pytest.approx(0.0)
        weight = spec.intensity(detunings)
        assert weight[2] == pytest.approx(1.0)
        assert weight[0] == pytest.approx(np.exp(-2.0))
        assert weight[1] == pytest.approx(weight[3])
        with pytest.raises(PreconditionError):
            spec.detunings(2)

    def test_trombone(self):
        assert trombone_delay(1000.0) == pytest.approx(6.6713, abs=1e-4)
        delays = trombone_delays(0.0, 300.0, 100.0)
        assert len(delays) == 4
        assert delays[-1] == pytest.approx(trombone_delay(300.0))
        with pytest.raises(PreconditionError):
            trombone_delays(0.0, 300.0, 0.0)
        with pytest.raises(PreconditionError):
            trombone_delays(300.0, 0.0, 10.0)

    def test_default_delays(self):
        spec = BiphotonSpectrum()
        delays = default_delays(spec, center=-2.0)
        assert len(delays) == 241
        assert delays[120] == pytest.approx(-2.0)
        assert delays[-1] - delays[0] == pytest.approx(12.0 * spec.dip_sigma)
