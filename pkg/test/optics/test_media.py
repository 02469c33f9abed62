import math

import pytest

from photunnel.optics import AIR, ComplexResponse, Incidence, Layer, LayerStack, Medium, Polarization, \
    SPEED_OF_LIGHT, omega_of, wavelength_of


@pytest.mark.unittest
class TestOpticsMedia:
    def test_medium(self):
        assert Medium.of(1.45).refractive_index == 1.45
        assert AIR.refractive_index == 1.0
        with pytest.raises(ValueError):
            Medium.of(0.0)
        with pytest.raises(ValueError):
            Medium.of(-1.5)

    def test_layer(self):
        layer = Layer(medium=Medium.of(2.22), thickness=78.8)
        assert layer.index == 2.22
        assert Layer(medium=AIR, thickness=0.0).thickness == 0.0
        with pytest.raises(ValueError):
            Layer(medium=AIR, thickness=-1.0)

    def test_stack(self):
        stack = LayerStack(layers=(Layer(medium=Medium.of(2.0), thickness=100.0),
                                   Layer(medium=Medium.of(1.5), thickness=50.0)),
                           substrate=Medium.of(1.5))
        assert stack.total_thickness == pytest.approx(150.0)
        assert stack.indices == (2.0, 1.5)
        assert len(stack) == 2
        assert LayerStack().total_thickness == 0.0
        assert len(LayerStack()) == 0

    def test_frozen(self):
        with pytest.raises(ValueError):
            AIR.refractive_index = 2.0

    def test_incidence(self):
        inc = Incidence(vacuum_wavelength=700.0, angle=math.radians(30.0), polarization=Polarization.P)
        assert inc.omega == pytest.approx(2.0 * math.pi * SPEED_OF_LIGHT / 700.0)
        assert inc.angle_deg == pytest.approx(30.0)
        assert inc.with_angle(0.0).polarization == Polarization.P
        assert inc.with_wavelength(800.0).angle == inc.angle
        back = Incidence.from_omega(inc.omega, inc.angle, inc.polarization)
        assert back.vacuum_wavelength == pytest.approx(700.0, rel=1e-14)

    @pytest.mark.parametrize('angle', [-0.1, math.pi / 2, 2.0])
    def test_incidence_angle(self, angle):
        with pytest.raises(ValueError):
            Incidence(vacuum_wavelength=700.0, angle=angle)

    def test_incidence_wavelength(self):
        with pytest.raises(ValueError):
            Incidence(vacuum_wavelength=0.0)

    def test_omega_of(self):
        assert omega_of(700.0) == pytest.approx(2.6909308, rel=1e-6)
        assert wavelength_of(omega_of(702.0)) == pytest.approx(702.0, rel=1e-14)

    def test_response_phase(self):
        resp = ComplexResponse(r=0j, t=1j, flux_transmission=1.0, flux_reflection=0.0)
        assert resp.phase == pytest.approx(math.pi / 2)
        assert ComplexResponse(r=0j, t=-1 + 0j, flux_transmission=1.0, flux_reflection=0.0).phase \
               == pytest.approx(math.pi)
