import pytest

from photunnel.errors import PreconditionError, StackFileError
from photunnel.optics import AIR, Layer, LayerStack, Medium, dump_stack, format_stack, load_stack, parse_stack, \
    quarter_wave_stack, reversed_stack, uncoated_control

GLASS = Medium.of(1.45)


@pytest.fixture(scope='module')
def mirror():
    return quarter_wave_stack(700.0, 2.22, 1.45, 11, AIR, GLASS)


@pytest.mark.unittest
class TestOpticsStack:
    def test_quarter_wave_stack(self, mirror):
        assert len(mirror) == 11
        assert mirror.indices == (2.22, 1.45) * 5 + (2.22,)
        for layer in mirror.layers:
            assert layer.index * layer.thickness == pytest.approx(175.0)
        assert mirror.total_thickness == pytest.approx(6 * 700.0 / 8.88 + 5 * 700.0 / 5.8)
        assert round(mirror.total_thickness, 1) == 1076.4
        assert mirror.ambient == AIR
        assert mirror.substrate == GLASS

    def test_quarter_wave_stack_even(self):
        stack = quarter_wave_stack(600.0, 2.0, 1.5, 4)
        assert stack.indices == (2.0, 1.5, 2.0, 1.5)

    @pytest.mark.parametrize(['design', 'n_high', 'n_low', 'count'], [
        (700.0, 2.22, 1.45, 0),
        (0.0, 2.22, 1.45, 11),
        (700.0, -2.22, 1.45, 11),
        (700.0, 2.22, 0.0, 11),
    ])
    def test_quarter_wave_stack_invalid(self, design, n_high, n_low, count):
        with pytest.raises(PreconditionError):
            quarter_wave_stack(design, n_high, n_low, count)

    def test_uncoated_control(self, mirror):
        control = uncoated_control(mirror)
        assert len(control) == 1
        assert control.layers[0].medium == AIR
        assert control.total_thickness == pytest.approx(mirror.total_thickness)
        assert control.substrate == GLASS
        assert len(uncoated_control(LayerStack())) == 0

    def test_reversed_stack(self, mirror):
        stack = LayerStack(ambient=Medium.of(1.2), layers=(Layer(medium=Medium.of(2.0), thickness=10.0),
                                                           Layer(medium=Medium.of(3.0), thickness=20.0)),
                           substrate=Medium.of(1.7))
        back = reversed_stack(stack)
        assert back.ambient.refractive_index == 1.7
        assert back.substrate.refractive_index == 1.2
        assert back.indices == (3.0, 2.0)
        assert reversed_stack(back) == stack

    def test_format_stack(self):
        stack = LayerStack(layers=(Layer(medium=Medium.of(2.22), thickness=78.82882882882883),),
                           substrate=GLASS)
        assert format_stack(stack) == 'ambient 1.0\nlayer 2.22 78.82882882882883\nsubstrate 1.45\n'

    def test_round_trip(self, mirror):
        assert parse_stack(format_stack(mirror)) == mirror

    def test_parse_comments(self):
        stack = parse_stack('# mirror\n\nambient 1.0  # air\nLAYER 2.0 10\n   \nsubstrate 1.5\n')
        assert stack.indices == (2.0,)
        assert stack.layers[0].thickness == 10.0
        assert stack.substrate.refractive_index == 1.5

    def test_parse_empty_stack(self):
        stack = parse_stack('ambient 1.0\nsubstrate 1.0\n')
        assert len(stack) == 0

    @pytest.mark.parametrize(['text', 'line_no'], [
        ('ambient 1.0\nlayer 2.0 10\n', 2),
        ('layer 2.0 10\nambient 1.0\nsubstrate 1.0\n', 1),
        ('ambient 1.0\nlayer 2.0\nsubstrate 1.0\n', 2),
        ('ambient 1.0\nlayer two 10\nsubstrate 1.0\n', 2),
        ('ambient 1.0\nlayer 2.0 -5\nsubstrate 1.0\n', 2),
        ('ambient 1.0\nlayer 0 5\nsubstrate 1.0\n', 2),
        ('ambient 1.0\nlayer 2.0 nan\nsubstrate 1.0\n', 2),
        ('ambient 1.0\n\nfilm 2.0 5\nsubstrate 1.0\n', 3),
        ('# c\nambient 1.0 2.0\nsubstrate 1.0\n', 2),
        ('ambient 1.0\nsubstrate 1.0\nsubstrate 1.0\n', 2),
    ])
    def test_parse_errors(self, text, line_no):
        with pytest.raises(StackFileError) as info:
            parse_stack(text)
        assert info.value.line_no == line_no
        assert str(info.value).startswith(f'line {line_no}: ')

    def test_parse_nothing(self):
        with pytest.raises(StackFileError):
            parse_stack('# only a comment\n\n')

    def test_dump_load(self, mirror, tmp_path):
        path = tmp_path / 'mirror.stack'
        dump_stack(mirror, path, comment='11-layer mirror\nfor 700 nm')
        assert path.read_text().splitlines()[0] == '# 11-layer mirror for 700 nm'
        assert load_stack(path) == mirror

    def test_load_missing(self, tmp_path):
        with pytest.raises(StackFileError):
            load_stack(tmp_path / 'missing.stack')
