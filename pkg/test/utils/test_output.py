"""
Unit tests for photunnel.utils.output module.

The batch tests cover result_batch, which stages the tables of one run and publishes
them only when the run finishes.
"""

import tempfile
from pathlib import Path

import pandas as pd
import pytest

from photunnel.config.meta import __VERSION__
from photunnel.errors import PreconditionError
from photunnel.optics import Polarization
from photunnel.utils import format_csv, format_summary, format_value, read_csv, result_batch, write_csv


@pytest.fixture
def temp_dir():
    """Create a temporary directory for testing."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def result_files(temp_dir):
    """Create result files with initial content."""
    files = []
    for i in range(3):
        file_path = temp_dir / f'result_{i}.csv'
        file_path.write_text(f'Initial content {i}')
        files.append(file_path)
    return files


@pytest.fixture
def new_files(temp_dir):
    """Paths of result files that do not exist yet."""
    return [temp_dir / f'new_{i}.csv' for i in range(3)]


@pytest.fixture
def frame():
    return pd.DataFrame({'lambda_nm': [700.0, 702.0], 'T_flux': [0.0165, 1.0 / 3.0]})


@pytest.mark.unittest
class TestUtilsOutputFormat:
    def test_format_value(self):
        assert format_value(0.1) == '0.1'
        assert format_value(1.0 / 3.0) == '0.333333333333'
        assert format_value(True) == 'true'
        assert format_value(11) == '11'
        assert format_value(Polarization.P) == 'p'
        assert format_value('two\nlines') == 'two lines'

    def test_format_csv(self, frame):
        text = format_csv(frame, {'pol': 's', 'angle_deg': 0.0}, {'shift_fs': -1.5})
        assert text.splitlines() == [
            f'# photunnel {__VERSION__}',
            '# angle_deg=0',
            '# pol=s',
            'lambda_nm,T_flux',
            '700,0.0165',
            '702,0.333333333333',
            '# shift_fs=-1.5',
        ]

    def test_format_csv_without_parameters(self, frame):
        lines = format_csv(frame).splitlines()
        assert lines[0] == f'# photunnel {__VERSION__}'
        assert lines[1] == 'lambda_nm,T_flux'

    def test_write_read(self, temp_dir, frame):
        path = write_csv(temp_dir / 'sub' / 'spectrum.csv', frame, {'angle_deg': 0.0}, {'edge_nm': 809.5})
        assert path.exists()
        table, meta = read_csv(path)
        assert list(table.columns) == ['lambda_nm', 'T_flux']
        assert table['T_flux'].tolist() == pytest.approx([0.0165, 1.0 / 3.0])
        assert meta == {'angle_deg': '0', 'edge_nm': '809.5'}

    def test_format_summary(self):
        assert format_summary({'center_fs': -1.75, 'width_fs': 51.3, 'visibility': 1.0}) == \
               '# center_fs=-1.75 width_fs=51.3 visibility=1'
        with pytest.raises(PreconditionError):
            format_summary({'arm': 'two words'})
        with pytest.raises(PreconditionError):
            format_summary({'arm': ''})

    def test_format_csv_summary(self, frame):
        lines = format_csv(frame, {'pol': 's'}, {'shift_fs': -1.5}, {'center_fs': -1.5, 'width_fs': 8.5}).splitlines()
        assert lines[-2:] == ['# shift_fs=-1.5', '# center_fs=-1.5 width_fs=8.5']

    def test_deterministic(self, temp_dir, frame):
        write_csv(temp_dir / 'a.csv', frame, {'b': 2, 'a': 1})
        write_csv(temp_dir / 'b.csv', frame.copy(), {'a': 1, 'b': 2})
        assert (temp_dir / 'a.csv').read_bytes() == (temp_dir / 'b.csv').read_bytes()


@pytest.mark.unittest
class TestUtilsOutputBatch:
    def test_commit(self, temp_dir, frame, new_files):
        with result_batch() as batch:
            batch.write(new_files[0], frame, {'arm': 'mirror'}, {'shift_fs': -1.76},
                        {'center_fs': -1.76, 'width_fs': 51.3, 'visibility': 0.98})
            batch.write(temp_dir / 'nested' / 'control.csv', frame)
            assert not new_files[0].exists()
            assert batch.targets == [new_files[0], temp_dir / 'nested' / 'control.csv']

        assert new_files[0].read_text().splitlines()[-1] == '# center_fs=-1.76 width_fs=51.3 visibility=0.98'
        _, meta = read_csv(new_files[0])
        assert meta == {'arm': 'mirror', 'shift_fs': '-1.76', 'center_fs': '-1.76', 'width_fs': '51.3',
                        'visibility': '0.98'}
        assert (temp_dir / 'nested' / 'control.csv').read_text() == format_csv(frame)
        assert sorted(p.name for p in temp_dir.iterdir()) == ['nested', 'new_0.csv']

    def test_replaces_earlier_result(self, result_files, frame):
        with result_batch() as batch:
            batch.write(result_files[0], frame, footer={'shift_fs': 0.0})
        assert result_files[0].read_text() == format_csv(frame, footer={'shift_fs': 0.0})
        assert result_files[1].read_text() == 'Initial content 1'

    def test_error_publishes_nothing(self, result_files, new_files, frame):
        with pytest.raises(ValueError):
            with result_batch() as batch:
                batch.write(result_files[0], frame)
                batch.write(new_files[0], frame)
                raise ValueError('Test error')

        assert result_files[0].read_text() == 'Initial content 0'
        assert not new_files[0].exists()

    def test_keyboard_interrupt_publishes_nothing(self, result_files, new_files, frame):
        with pytest.raises(KeyboardInterrupt):
            with result_batch() as batch:
                batch.write(result_files[0], frame)
                batch.write(new_files[0], frame)
                raise KeyboardInterrupt

        assert result_files[0].read_text() == 'Initial content 0'
        assert not new_files[0].exists()

    def test_write_twice(self, new_files, frame):
        with pytest.raises(PreconditionError):
            with result_batch() as batch:
                batch.write(new_files[0], frame)
                batch.write(new_files[0], frame)
        assert not new_files[0].exists()

    def test_empty_batch(self):
        with result_batch() as batch:
            pass
        assert batch.targets == []
