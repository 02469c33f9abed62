import math

import numpy as np
import pytest

from photunnel.errors import OutsideStopBandError, PreconditionError
from photunnel.optics import AIR, Incidence, Layer, LayerStack, Medium, Polarization, bloch_edges, bloch_trace, \
    bloch_trace_at, in_stop_band, omega_of, quarter_wave_stack, unit_cell


@pytest.fixture(scope='module')
def mirror():
    return quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, Medium.of(1.45))


@pytest.mark.unittest
class TestOpticsBloch:
    def test_unit_cell(self, mirror):
        cell = unit_cell(mirror)
        assert len(cell) == 2
        assert tuple(layer.index for layer in cell) == (2.22, 1.45)

    def test_unit_cell_aperiodic(self):
        stack = LayerStack(layers=(Layer(medium=Medium.of(2.0), thickness=10.0),
                                   Layer(medium=Medium.of(1.5), thickness=20.0),
                                   Layer(medium=Medium.of(1.3), thickness=30.0)))
        with pytest.raises(PreconditionError):
            unit_cell(stack)

    def test_midgap_trace(self, mirror):
        # half-trace of a quarter-wave pair at midgap is -(n_H/n_L + n_L/n_H)/2
        expected = -(2.22 / 1.45 + 1.45 / 2.22) / 2.0
        assert bloch_trace(mirror, Incidence(vacuum_wavelength=700.0)) == pytest.approx(expected, rel=1e-12)

    def test_trace_vectorized(self, mirror):
        omegas = omega_of(np.array([600.0, 700.0, 900.0]))
        traces = bloch_trace_at(mirror, omegas)
        assert traces.shape == (3,)
        assert traces[1] == pytest.approx(bloch_trace(mirror, Incidence(vacuum_wavelength=700.0)))

    def test_in_stop_band(self, mirror):
        assert in_stop_band(mirror, Incidence(vacuum_wavelength=702.0))
        assert not in_stop_band(mirror, Incidence(vacuum_wavelength=900.0))
        assert not in_stop_band(mirror, Incidence(vacuum_wavelength=520.0))

    def test_bloch_edges(self, mirror):
        short, long = bloch_edges(mirror, Incidence(vacuum_wavelength=702.0))
        # quarter-wave gap: omega_edge / omega_0 = 1 -+ (2/pi) arcsin((n_H - n_L)/(n_H + n_L))
        half = 2.0 / math.pi * math.asin((2.22 - 1.45) / (2.22 + 1.45))
        assert short == pytest.approx(700.0 / (1.0 + half), rel=1e-6)
        assert long == pytest.approx(700.0 / (1.0 - half), rel=1e-6)
        assert 570.0 <= short <= 630.0
        assert 770.0 <= long <= 830.0

    def test_bloch_edges_oblique(self, mirror):
        normal = bloch_edges(mirror, Incidence(vacuum_wavelength=702.0))
        tilted = bloch_edges(mirror, Incidence(vacuum_wavelength=650.0, angle=math.radians(40.0),
                                               polarization=Polarization.S))
        assert tilted[0] < normal[0]
        assert tilted[1] < normal[1]

    def test_bloch_edges_outside(self, mirror):
        with pytest.raises(OutsideStopBandError):
            bloch_edges(mirror, Incidence(vacuum_wavelength=900.0))
