import pytest

from photunnel.errors import PreconditionError
from photunnel.hom import beamsplitter_coincidence, lossless_beamsplitter


@pytest.mark.unittest
class TestHomBeamsplitter:
    @pytest.mark.parametrize('sign', [1, -1])
    def test_balanced_null(self, sign):
        r, t = lossless_beamsplitter(0.5, sign)
        assert abs(r) ** 2 + abs(t) ** 2 == pytest.approx(1.0)
        assert beamsplitter_coincidence(r, t) == pytest.approx(0.0, abs=1e-30)

    @pytest.mark.parametrize('reflectance', [0.0, 0.2, 0.3, 0.9, 1.0])
    def test_unbalanced(self, reflectance):
        r, t = lossless_beamsplitter(reflectance)
        assert beamsplitter_coincidence(r, t) == pytest.approx((2 * reflectance - 1) ** 2)

    def test_real_amplitudes(self):
        # in-phase amplitudes break time reversal but still conserve energy
        assert beamsplitter_coincidence(2 ** -0.5, 2 ** -0.5) == pytest.approx(1.0)

    def test_lossy(self):
        with pytest.raises(PreconditionError):
            beamsplitter_coincidence(0.5, 0.5j)

    @pytest.mark.parametrize('reflectance, sign', [(-0.1, 1), (1.1, 1), (0.5, 0), (0.5, 2)])
    def test_invalid(self, reflectance, sign):
        with pytest.raises(PreconditionError):
            lossless_beamsplitter(reflectance, sign)
