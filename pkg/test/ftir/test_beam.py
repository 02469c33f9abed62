import math

import numpy as np
import pytest

from photunnel.errors import PreconditionError, UnreliableDelayError
from photunnel.ftir import FTIR_COLUMNS, FtirGeometry, GaussianBeam, angular_deflection, ftir_scan, kappa_gap, \
    lateral_displacement, spectral_centroid

WIDE_BEAM = GaussianBeam(waist=100000.0)


@pytest.fixture(scope='module')
def opaque_gaps():
    kappa = kappa_gap(FtirGeometry())
    return 5.0 / kappa, 10.0 / kappa


@pytest.mark.unittest
class TestFtirBeam:
    def test_sigma_k(self):
        assert GaussianBeam().sigma_k == pytest.approx(1.0 / 30000.0)
        with pytest.raises(ValueError):
            GaussianBeam(waist=0.0)

    def test_spectral_centroid(self):
        detunings = np.linspace(-3.0, 3.0, 61)
        weights = np.exp(-detunings ** 2 / 2.0)
        assert spectral_centroid(detunings, weights, np.ones(61)) == pytest.approx(0.0, abs=1e-12)
        tilted = np.exp(0.5 * detunings)
        assert spectral_centroid(detunings, weights, tilted) > 0.0
        with pytest.raises(UnreliableDelayError):
            spectral_centroid(detunings, weights, np.zeros(61))

    def test_displacement_saturates(self, opaque_gaps):
        thin, thick = (FtirGeometry(gap=gap) for gap in opaque_gaps)
        d_thin, d_thick = lateral_displacement(thin), lateral_displacement(thick)
        assert d_thin != 0.0
        assert abs(d_thick - d_thin) < 0.02 * abs(d_thin)

    def test_deflection_grows(self, opaque_gaps):
        thin, thick = (FtirGeometry(gap=gap) for gap in opaque_gaps)
        a_thin, a_thick = angular_deflection(thin, WIDE_BEAM), angular_deflection(thick, WIDE_BEAM)
        assert a_thin < 0.0
        assert a_thick < 0.0
        assert 1.8 <= a_thick / a_thin <= 2.2

    def test_non_paraxial(self):
        narrow = GaussianBeam(waist=1000.0)
        with pytest.raises(PreconditionError):
            lateral_displacement(FtirGeometry(), narrow)
        with pytest.raises(PreconditionError):
            angular_deflection(FtirGeometry(), narrow)

    def test_scan(self, opaque_gaps):
        gaps = [200.0, opaque_gaps[0], opaque_gaps[1]]
        points = ftir_scan(FtirGeometry(polarization='s'), gaps, WIDE_BEAM)
        assert [p.gap for p in points] == gaps
        assert points[0].abs_t > points[1].abs_t > points[2].abs_t
        assert all(p.kappa == pytest.approx(points[0].kappa) for p in points)
        assert points[2].bl_time == pytest.approx(2.0 * points[1].bl_time)
        row = points[0].as_row()
        assert tuple(row.keys()) == FTIR_COLUMNS
        assert row['gap_nm'] == 200.0

    def test_scan_below_critical(self):
        points = ftir_scan(FtirGeometry(incidence_angle=math.radians(30.0)), [500.0])
        assert math.isnan(points[0].bl_time)
        assert points[0].kappa == 0.0
