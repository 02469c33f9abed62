import math

import pytest

from photunnel.delay import ANGLE_SCAN_COLUMNS, angle_scan, angle_scan_rows, period_scan, photonic_bl_time, \
    photonic_larmor, photonic_wigner, vacuum_time
from photunnel.errors import OutsideStopBandError, PreconditionError
from photunnel.optics import AIR, Incidence, Layer, LayerStack, Medium, Polarization, SPEED_OF_LIGHT, \
    in_stop_band, quarter_wave_stack, uncoated_control
from photunnel.utils import DEFAULT_RELATIVE_STEP, halving_change

GLASS = Medium.of(1.45)


@pytest.fixture(scope='module')
def mirror():
    return quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, GLASS)


@pytest.fixture(scope='module')
def normal_702():
    return Incidence(vacuum_wavelength=702.0)


@pytest.mark.unittest
class TestDelayPhotonic:
    def test_berkeley_wigner(self, mirror, normal_702):
        report = photonic_wigner(mirror, normal_702)
        assert report.ok
        assert report.transit_time == pytest.approx(2.0, abs=0.4)
        assert 1.5 <= report.effective_velocity <= 2.2
        assert report.vacuum_time == pytest.approx(3.6, abs=0.2)
        assert report.relative_delay < 0
        assert report.relative_delay == pytest.approx(report.transit_time - report.vacuum_time)
        assert report.effective_velocity == pytest.approx(report.vacuum_time / report.transit_time)
        assert 0.005 <= report.flux_transmission <= 0.02

    @pytest.mark.parametrize(['angle_deg', 'pol'], [(0.0, Polarization.S), (55.0, Polarization.P)])
    def test_wigner_step_halving(self, mirror, angle_deg, pol):
        incidence = Incidence(vacuum_wavelength=702.0, angle=math.radians(angle_deg), polarization=pol)
        check = halving_change(lambda rel: photonic_wigner(mirror, incidence, rel).transit_time,
                               DEFAULT_RELATIVE_STEP)
        assert check.relative_change < 1e-6

    def test_vacuum_time(self, mirror):
        assert vacuum_time(mirror, Incidence(vacuum_wavelength=702.0)) == \
               pytest.approx(mirror.total_thickness / SPEED_OF_LIGHT)
        oblique = Incidence(vacuum_wavelength=702.0, angle=math.radians(60.0))
        assert vacuum_time(mirror, oblique) == pytest.approx(0.5 * mirror.total_thickness / SPEED_OF_LIGHT)

    @pytest.mark.parametrize('angle_deg', [0.0, 30.0])
    def test_ambient_slab(self, angle_deg):
        # an ambient-filled slab delays exactly by its vacuum time
        stack = uncoated_control(quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, AIR))
        inc = Incidence(vacuum_wavelength=702.0, angle=math.radians(angle_deg), polarization=Polarization.P)
        report = photonic_wigner(stack, inc)
        assert report.relative_delay == pytest.approx(0.0, abs=1e-6)
        assert report.larmor_total == pytest.approx(report.transit_time, rel=1e-6)
        assert math.isnan(report.bl_time)

    def test_dense_slab_is_slow(self):
        stack = LayerStack(layers=(Layer(medium=GLASS, thickness=2000.0),))
        report = photonic_wigner(stack, Incidence(vacuum_wavelength=702.0))
        assert report.relative_delay > 0
        assert report.effective_velocity < 1.0

    def test_larmor(self, mirror, normal_702):
        tau_y, tau_z, tau_total = photonic_larmor(mirror, normal_702)
        report = photonic_wigner(mirror, normal_702)
        assert tau_y == pytest.approx(report.transit_time)
        assert tau_total == pytest.approx(report.larmor_total)
        assert tau_total >= abs(tau_y)

    def test_bl_time(self, mirror, normal_702):
        assert photonic_bl_time(mirror, normal_702) > 0
        assert photonic_bl_time(mirror, Incidence(vacuum_wavelength=700.0)) == pytest.approx(0.0, abs=1e-3)
        with pytest.raises(OutsideStopBandError):
            photonic_bl_time(mirror, Incidence(vacuum_wavelength=900.0))

    def test_bl_time_aperiodic(self):
        stack = LayerStack(layers=(Layer(medium=Medium.of(2.0), thickness=10.0),
                                   Layer(medium=Medium.of(1.5), thickness=20.0),
                                   Layer(medium=Medium.of(1.3), thickness=30.0)))
        with pytest.raises(PreconditionError):
            photonic_bl_time(stack, Incidence(vacuum_wavelength=700.0))
        assert math.isnan(photonic_wigner(stack, Incidence(vacuum_wavelength=700.0)).bl_time)

    def test_pass_band(self, mirror):
        report = photonic_wigner(mirror, Incidence(vacuum_wavelength=900.0))
        assert math.isnan(report.bl_time)
        assert report.transit_time > 0

    def test_brewster_side_pass_band(self, mirror):
        inc = Incidence(vacuum_wavelength=702.0, angle=math.radians(55.0), polarization=Polarization.P)
        report = photonic_wigner(mirror, inc)
        assert report.flux_transmission > 0.1
        assert report.relative_delay > 0

    def test_angle_scan(self, mirror):
        angles = [math.radians(a) for a in (0.0, 20.0, 40.0)]
        scan = angle_scan(mirror, 702.0, Polarization.S, angles)
        assert [a for a, _ in scan] == angles
        assert all(report.ok for _, report in scan)
        rows = angle_scan_rows(scan, Polarization.S)
        assert tuple(rows[0].keys()) == ANGLE_SCAN_COLUMNS
        assert rows[1]['theta_deg'] == pytest.approx(20.0)
        assert rows[2]['pol'] == 's'

    def test_angle_scan_invalid(self, mirror):
        with pytest.raises(PreconditionError):
            angle_scan(mirror, 702.0, Polarization.P, [0.0, math.pi / 2])

    def test_larmor_divergence_at_band_edge(self, mirror):
        angles = [math.radians(a) for a in range(0, 81)]
        scan = angle_scan(mirror, 702.0, Polarization.P, angles)
        in_gap = [report for angle, report in scan
                  if in_stop_band(mirror, Incidence(vacuum_wavelength=702.0, angle=angle,
                                                    polarization=Polarization.P))]
        assert 0 < len(in_gap) < len(scan)

        def _gap(report):
            return abs(report.larmor_total - report.transit_time)

        midgap = _gap(scan[0][1])
        assert max(_gap(report) for report in in_gap) >= 3.0 * midgap

    def test_period_scan(self, mirror, normal_702):
        scan = period_scan(700.0, 2.22, 1.45, [1, 2, 5, 8, 10], normal_702, AIR, GLASS)
        assert [n for n, _ in scan] == [1, 2, 5, 8, 10]
        by_n = dict(scan)
        assert by_n[5].transit_time == pytest.approx(photonic_wigner(mirror, normal_702).transit_time, rel=1e-12)
        assert by_n[10].transit_time == pytest.approx(by_n[8].transit_time, rel=0.05)
        vacuum = [report.vacuum_time for _, report in scan]
        assert vacuum == sorted(vacuum)
        assert by_n[10].relative_delay < by_n[5].relative_delay < 0

    def test_period_scan_invalid(self, normal_702):
        with pytest.raises(PreconditionError):
            period_scan(700.0, 2.22, 1.45, [0], normal_702)
