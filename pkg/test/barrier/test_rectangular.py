import math

import pytest

from photunnel.barrier import RectangularBarrier, barrier_amplitude, barrier_reflection, barrier_total_amplitude, \
    schrodinger_amplitude


def _transmission_probability(b: RectangularBarrier) -> float:
    if b.energy < b.height:
        s = math.sinh(b.kappa * b.width)
        return 1.0 / (1.0 + b.height ** 2 * s * s / (4.0 * b.energy * (b.height - b.energy)))
    q = math.sqrt(2.0 * b.mass * (b.energy - b.height)) / b.hbar
    s = math.sin(q * b.width)
    return 1.0 / (1.0 + b.height ** 2 * s * s / (4.0 * b.energy * (b.energy - b.height)))


@pytest.mark.unittest
class TestBarrierRectangular:
    def test_fields(self):
        b = RectangularBarrier(height=1.0, width=2.0, energy=0.5)
        assert b.k == pytest.approx(1.0)
        assert b.kappa == pytest.approx(1.0)
        assert b.kappa_squared == pytest.approx(1.0)
        assert b.velocity == pytest.approx(1.0)
        assert b.is_tunneling
        assert not b.at_top

    def test_units(self):
        b = RectangularBarrier(height=3.0, width=1.0, energy=1.0, hbar=2.0, mass=0.5)
        assert b.k == pytest.approx(math.sqrt(2.0 * 0.5 * 1.0) / 2.0)
        assert b.kappa == pytest.approx(math.sqrt(2.0 * 0.5 * 2.0) / 2.0)
        assert b.velocity == pytest.approx(2.0 * b.k / 0.5)

    def test_above_barrier(self):
        b = RectangularBarrier(height=1.0, width=2.0, energy=2.0)
        assert b.kappa == 0.0
        assert b.kappa_squared == pytest.approx(-2.0)
        assert not b.is_tunneling

    @pytest.mark.parametrize('kwargs', [
        dict(height=0.0, width=1.0, energy=0.5),
        dict(height=1.0, width=-1.0, energy=0.5),
        dict(height=1.0, width=1.0, energy=0.0),
        dict(height=1.0, width=1.0, energy=0.5, hbar=0.0),
        dict(height=1.0, width=1.0, energy=0.5, mass=-1.0),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RectangularBarrier(**kwargs)

    def test_replace(self):
        b = RectangularBarrier(height=1.0, width=2.0, energy=0.5)
        c = b.replace(width=3.0)
        assert c.width == 3.0
        assert c.energy == 0.5
        assert b.width == 2.0
        with pytest.raises(ValueError):
            b.replace(width=-1.0)

    def test_from_kappa_d(self):
        b = RectangularBarrier.from_kappa_d(5.0, height=2.0, energy_ratio=0.25)
        assert b.energy == pytest.approx(0.5)
        assert b.kappa * b.width == pytest.approx(5.0)

    @pytest.mark.parametrize(['energy', 'width'], [
        (0.1, 0.5), (0.5, 1.0), (0.5, 4.0), (0.9, 2.0), (1.0, 1.5), (1.3, 2.0), (3.0, 0.7),
    ])
    def test_transmission_probability(self, energy, width):
        b = RectangularBarrier(height=1.0, width=width, energy=energy)
        t = barrier_amplitude(b)
        r = barrier_reflection(b)
        if energy != 1.0:
            assert abs(t) ** 2 == pytest.approx(_transmission_probability(b), rel=1e-10)
        assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_at_top(self):
        b = RectangularBarrier(height=1.0, width=2.0, energy=1.0)
        assert b.at_top
        assert barrier_total_amplitude(b) == pytest.approx(1.0 / complex(1.0, -b.k * b.width / 2.0))

    def test_top_continuity(self):
        below = RectangularBarrier(height=1.0, width=2.0, energy=1.0 - 1e-7)
        above = RectangularBarrier(height=1.0, width=2.0, energy=1.0 + 1e-7)
        top = RectangularBarrier(height=1.0, width=2.0, energy=1.0)
        assert barrier_amplitude(below) == pytest.approx(barrier_amplitude(top), abs=1e-6)
        assert barrier_amplitude(above) == pytest.approx(barrier_amplitude(top), abs=1e-6)

    def test_resonance(self):
        b = RectangularBarrier(height=1.0, width=math.pi / math.sqrt(2.0), energy=2.0)
        assert abs(barrier_amplitude(b)) == pytest.approx(1.0, abs=1e-12)

    def test_zero_width(self):
        b = RectangularBarrier(height=1.0, width=0.0, energy=0.5)
        assert barrier_amplitude(b) == pytest.approx(1.0)
        assert barrier_reflection(b) == pytest.approx(0.0)

    def test_total_amplitude_phase(self):
        b = RectangularBarrier(height=1.0, width=1.3, energy=0.3)
        u = (b.kappa ** 2 - b.k ** 2) / (2.0 * b.k * b.kappa)
        phase = math.atan2(barrier_total_amplitude(b).imag, barrier_total_amplitude(b).real)
        assert phase == pytest.approx(-math.atan(u * math.tanh(b.kappa * b.width)), abs=1e-12)

    @pytest.mark.parametrize(['energy', 'width'], [
        (0.5, 1.0), (0.2, 3.0), (0.8, 2.0), (1.5, 2.5),
    ])
    def test_schrodinger_oracle(self, energy, width):
        b = RectangularBarrier(height=1.0, width=width, energy=energy)
        assert schrodinger_amplitude(b) == pytest.approx(barrier_amplitude(b), abs=1e-7)
