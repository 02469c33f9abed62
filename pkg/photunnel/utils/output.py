"""
CSV result files with commented metadata headers.

Every result file written by photunnel starts with a ``# photunnel <version>`` line
followed by one ``# key=value`` line per generating parameter (sorted by key), then a
plain CSV table written by :mod:`pandas`. Some commands append a trailing comment block
of derived quantities, one ``# key=value`` line each, and a final summary line holding
several pairs, as in ``# center_fs=-1.75 width_fs=51.3 visibility=0.99`` for a dip fit.
Given identical inputs the output is byte-identical.

The module contains the following main components:

* :func:`format_value` - Deterministic text form of a header value
* :func:`format_summary` - Text of a summary line
* :func:`format_csv` - Text of one commented CSV result file
* :func:`write_csv` - Write one commented CSV result file
* :func:`read_csv` - Read a file written by :func:`write_csv` back
* :class:`ResultBatch` / :func:`result_batch` - Tables published only when a run succeeds

Example::

    >>> import pandas as pd
    >>> from photunnel.utils.output import write_csv
    >>> frame = pd.DataFrame({'lambda_nm': [700.0], 'T': [0.0165]})
    >>> write_csv('spectrum.csv', frame, {'angle_deg': 0.0})
    PosixPath('spectrum.csv')

.. note::
   Summary values must not contain whitespace, :func:`read_csv` splits the summary line
   on it. Numbers and booleans never do.

"""

import io
import logging
import os
import re
import shutil
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import pandas as pd
from hbutils.system import TemporaryDirectory

from ..config.meta import __TITLE__, __VERSION__
from ..errors import PreconditionError

#: str: Float format used for every table cell.
FLOAT_FORMAT = '%.12g'

_SUMMARY_LINE = re.compile(r'\w+=\S*(\s+\w+=\S*)+')


def format_value(value: Any) -> str:
    """
    Deterministic text form of a header value.

    :param value: Value to format. Floats use :data:`FLOAT_FORMAT`, enums their value.
    :type value: Any
    :return: Text without line breaks.
    :rtype: str
    """
    if hasattr(value, 'value') and not isinstance(value, (int, float, complex)):
        value = value.value
    if isinstance(value, bool):
        text = str(value).lower()
    elif isinstance(value, float):
        text = FLOAT_FORMAT % value
    else:
        text = str(value)
    return ' '.join(text.split())


def format_summary(summary: Mapping[str, Any]) -> str:
    """
    Summary line of a result file, pairs kept in the given order.

    :param summary: Quantities of the line.
    :type summary: Mapping[str, Any]
    :return: The line, starting with ``#`` and without line break.
    :rtype: str
    :raises PreconditionError: If a formatted value contains whitespace.

    Example::

        >>> from photunnel.utils.output import format_summary
        >>> format_summary({'center_fs': -1.75, 'width_fs': 51.3, 'visibility': 1.0})
        '# center_fs=-1.75 width_fs=51.3 visibility=1'

    """
    pairs = []
    for key, value in summary.items():
        text = format_value(value)
        if not text or ' ' in text:
            raise PreconditionError(f'Summary value of {key!r} should be one word, {text!r} found.')
        pairs.append(f'{key}={text}')
    return '# ' + ' '.join(pairs)


def format_csv(frame: pd.DataFrame, parameters: Optional[Mapping[str, Any]] = None,
               footer: Optional[Mapping[str, Any]] = None,
               summary: Optional[Mapping[str, Any]] = None) -> str:
    """
    Text of a commented CSV result file, see :func:`write_csv`.
    """
    with io.StringIO() as f:
        f.write(f'# {__TITLE__} {__VERSION__}\n')
        for key in sorted((parameters or {}).keys()):
            f.write(f'# {key}={format_value(parameters[key])}\n')
        frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
        for key in sorted((footer or {}).keys()):
            f.write(f'# {key}={format_value(footer[key])}\n')
        if summary:
            f.write(format_summary(summary) + '\n')
        return f.getvalue()


def write_csv(path: Union[str, Path], frame: pd.DataFrame,
              parameters: Optional[Mapping[str, Any]] = None,
              footer: Optional[Mapping[str, Any]] = None,
              summary: Optional[Mapping[str, Any]] = None) -> Path:
    """
    Write a commented CSV result file.

    :param path: Output file, parent directories are created when missing.
    :type path: Union[str, Path]
    :param frame: Table to write, its columns become the header row.
    :type frame: pandas.DataFrame
    :param parameters: Generating parameters written as ``# key=value`` lines.
    :type parameters: Optional[Mapping[str, Any]]
    :param footer: Derived quantities written as a trailing comment block.
    :type footer: Optional[Mapping[str, Any]]
    :param summary: Quantities of the final line, see :func:`format_summary`.
    :type summary: Optional[Mapping[str, Any]]
    :return: The written path.
    :rtype: Path
    """
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)

    with open(path, 'w', newline='') as f:
        f.write(format_csv(frame, parameters, footer, summary))
    return path


def _comment_pairs(body: str) -> List[Tuple[str, str]]:
    if _SUMMARY_LINE.fullmatch(body):
        return [tuple(token.split('=', maxsplit=1)) for token in body.split()]
    if '=' in body:
        key, value = body.split('=', maxsplit=1)
        return [(key.strip(), value.strip())]
    return []


def read_csv(path: Union[str, Path]) -> Tuple[pd.DataFrame, Dict[str, str]]:
    """
    Read a file written by :func:`write_csv`.

    :param path: File to read.
    :type path: Union[str, Path]
    :return: The table and every ``key=value`` comment found in the file, with header,
        footer and summary line merged.
    :rtype: Tuple[pandas.DataFrame, Dict[str, str]]
    """
    meta = {}
    with open(path, 'r') as f:
        for line in f:
            if line.startswith('#'):
                meta.update(_comment_pairs(line[1:].strip()))
    frame = pd.read_csv(path, comment='#')
    return frame, meta


class ResultBatch:
    """
    Result tables of one command, staged until the command has finished.

    Tables are formatted into a staging directory by :meth:`write`. They reach their
    destinations only when the enclosing :func:`result_batch` block exits normally, so
    a failed or interrupted run neither leaves a table without its footer behind nor
    overwrites the tables of an earlier run.

    :param staging: Directory holding the staged tables.
    :type staging: Path
    """

    def __init__(self, staging: Path):
        self._staging = staging
        self._pending: Dict[Path, Path] = {}

    @property
    def targets(self) -> List[Path]:
        """
        Destinations of the staged tables, in writing order.
        """
        return list(self._pending.keys())

    def write(self, path: Union[str, Path], frame: pd.DataFrame,
              parameters: Optional[Mapping[str, Any]] = None,
              footer: Optional[Mapping[str, Any]] = None,
              summary: Optional[Mapping[str, Any]] = None) -> Path:
        """
        Stage one commented CSV result file, arguments as in :func:`write_csv`.

        :return: The destination path.
        :rtype: Path
        :raises PreconditionError: If the same destination is staged twice.
        """
        target = Path(path)
        if target in self._pending:
            raise PreconditionError(f'Result file {str(target)!r} is written twice in one run.')
        staged = self._staging / f'{len(self._pending)}_{target.name}'
        write_csv(staged, frame, parameters, footer, summary)
        self._pending[target] = staged
        return target

    def commit(self) -> List[Path]:
        """
        Move every staged table to its destination.

        :return: The destinations.
        :rtype: List[Path]
        """
        for target, staged in self._pending.items():
            if target.parent and not target.parent.exists():
                os.makedirs(target.parent, exist_ok=True)
            shutil.move(str(staged), str(target))
            logging.info(f'Result table {str(target)!r} written.')
        return self.targets


@contextmanager
def result_batch():
    """
    Stage the result tables written inside the block and publish them on success.

    If the block raises, the staged tables are discarded with the staging directory
    and every destination keeps its previous content.

    :return: The batch to write into.
    :rtype: ResultBatch

    Example::

        >>> import pandas as pd
        >>> from photunnel.utils.output import result_batch
        >>> with result_batch() as batch:
        ...     batch.write('dip_mirror.csv', pd.DataFrame({'delay_fs': [0.0], 'rate_normalized': [1.0]}),
        ...                 summary={'center_fs': -1.7, 'width_fs': 51.3, 'visibility': 0.99})
        PosixPath('dip_mirror.csv')

    """
    with TemporaryDirectory() as temp_dir:
        batch = ResultBatch(Path(temp_dir))
        yield batch
        batch.commit()
