import math

import numpy as np
import pytest

from photunnel.errors import PreconditionError
from photunnel.optics import AIR, Incidence, LayerStack, Medium, Polarization, SPECTRUM_COLUMNS, band_edges, \
    brewster_angle, omega_grid, omega_of, quarter_wave_stack, spectrum_table, spectrum_table_at, stack_response, \
    transmission_spectrum


@pytest.fixture(scope='module')
def mirror():
    return quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, Medium.of(1.45))


@pytest.mark.unittest
class TestOpticsSpectrum:
    def test_omega_grid(self):
        omegas = omega_grid(500.0, 1000.0, 11)
        assert len(omegas) == 11
        assert omegas[0] == pytest.approx(omega_of(500.0))
        assert omegas[-1] == pytest.approx(omega_of(1000.0))
        assert np.all(np.diff(omegas) < 0)
        assert np.allclose(np.diff(omegas), omegas[1] - omegas[0])

    @pytest.mark.parametrize(['lo', 'hi', 'points'], [
        (1000.0, 500.0, 11),
        (0.0, 500.0, 11),
        (500.0, 1000.0, 1),
    ])
    def test_omega_grid_invalid(self, lo, hi, points):
        with pytest.raises(PreconditionError):
            omega_grid(lo, hi, points)

    def test_transmission_spectrum(self, mirror):
        spectrum = transmission_spectrum(mirror, 600.0, 800.0, 21)
        wavelengths = [w for w, _ in spectrum]
        assert wavelengths[0] == pytest.approx(600.0)
        assert wavelengths[-1] == pytest.approx(800.0)
        assert wavelengths == sorted(wavelengths)
        for w, resp in spectrum:
            expected = stack_response(mirror, Incidence(vacuum_wavelength=w))
            assert resp.t == pytest.approx(expected.t, abs=1e-12)

    def test_spectrum_table(self, mirror):
        table = spectrum_table(mirror, 500.0, 1000.0, 101, math.radians(20.0), Polarization.P)
        assert tuple(table.columns) == SPECTRUM_COLUMNS
        assert len(table) == 101
        assert np.allclose(table['T_flux'] + table['R_flux'], 1.0, atol=1e-10)
        assert np.allclose(table['re_t'] ** 2 + table['im_t'] ** 2, table['T_flux'] / 1.45 * math.cos(
            math.asin(math.sin(math.radians(20.0)) / 1.45)) / math.cos(math.radians(20.0)), rtol=1e-10)

    def test_spectrum_table_empty_stack(self):
        table = spectrum_table_at(LayerStack(), np.arange(500.0, 1001.0, 50.0))
        assert table['T_flux'].tolist() == [1.0] * 11
        assert table['R_flux'].tolist() == [0.0] * 11

    def test_spectrum_table_at(self, mirror):
        table = spectrum_table_at(mirror, [702.0, 600.0])
        assert table['lambda_nm'].tolist() == pytest.approx([702.0, 600.0], rel=1e-14)
        assert table['T_flux'][0] == pytest.approx(
            stack_response(mirror, Incidence(vacuum_wavelength=702.0)).flux_transmission, rel=1e-12)
        with pytest.raises(PreconditionError):
            spectrum_table_at(mirror, [])
        with pytest.raises(PreconditionError):
            spectrum_table_at(mirror, [700.0, -1.0])

    def test_band_edges_bloch(self, mirror):
        short, long = band_edges(mirror, 500.0, 1000.0, center=702.0, method='bloch')
        assert short == pytest.approx(600.0, abs=30.0)
        assert long == pytest.approx(800.0, abs=30.0)

    def test_band_edges_half_transmission(self, mirror):
        short, long = band_edges(mirror, 500.0, 1000.0, center=702.0)
        bloch_short, bloch_long = band_edges(mirror, 500.0, 1000.0, center=702.0, method='bloch')
        assert short < bloch_short
        assert long > bloch_long
        assert short == pytest.approx(595.0, abs=10.0)
        assert long == pytest.approx(850.0, abs=10.0)
        for edge in (short, long):
            resp = stack_response(mirror, Incidence(vacuum_wavelength=edge))
            assert resp.flux_transmission == pytest.approx(0.5, abs=1e-8)

    def test_band_edges_default_center(self, mirror):
        assert band_edges(mirror, 500.0, 1000.0) == pytest.approx(band_edges(mirror, 500.0, 1000.0, center=702.0))

    def test_band_edges_invalid(self, mirror):
        with pytest.raises(PreconditionError):
            band_edges(mirror, 650.0, 750.0, center=702.0)
        with pytest.raises(PreconditionError):
            band_edges(mirror, 650.0, 750.0, center=702.0, method='bloch')
        with pytest.raises(ValueError):
            band_edges(mirror, 500.0, 1000.0, method='spline')

    def test_brewster_angle(self):
        assert brewster_angle(AIR, Medium.of(1.45)) == pytest.approx(math.atan(1.45))
        assert brewster_angle(Medium.of(1.45), AIR) == pytest.approx(math.atan(1.0 / 1.45))
        with pytest.raises(PreconditionError):
            brewster_angle(AIR, AIR)
