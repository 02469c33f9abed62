"""
Construction of layer stacks and the line-oriented stack file format.

A stack file lists one medium per line, ``#`` starts a comment::

    # 11-layer quarter-wave mirror
    ambient 1.0
    layer 2.22 78.82882882882883
    layer 1.45 120.6896551724138
    ...
    substrate 1.45

The first non-comment line must be ``ambient``, the last ``substrate``, with any number
of ``layer <index> <thickness_nm>`` lines in between. Numbers are written with
:func:`repr`, so a dumped stack parses back to an identical object.

The module contains the following main components:

* :func:`quarter_wave_stack` - Alternating high/low quarter-wave mirror
* :func:`uncoated_control` - Ambient-filled path of the same geometric length
* :func:`reversed_stack` - The same stack traversed backwards
* :func:`parse_stack` / :func:`format_stack` - Text form
* :func:`load_stack` / :func:`dump_stack` - File form
"""

import os
from pathlib import Path
from typing import Union

from .media import Layer, LayerStack, Medium, AIR
from ..errors import PreconditionError, StackFileError


def quarter_wave_stack(design_wavelength: float, n_high: float, n_low: float, layer_count: int,
                       ambient: Medium = AIR, substrate: Medium = AIR) -> LayerStack:
    """
    Alternating high/low index mirror whose layers are a quarter wave thick.

    Layers alternate ``H, L, H, ...`` starting with the high index, so an odd layer
    count starts and ends with ``H``. Every layer satisfies
    ``n * thickness = design_wavelength / 4``.

    :param design_wavelength: Vacuum design wavelength (midgap) in nm.
    :type design_wavelength: float
    :param n_high: High refractive index.
    :type n_high: float
    :param n_low: Low refractive index.
    :type n_low: float
    :param layer_count: Number of layers, at least 1.
    :type layer_count: int
    :param ambient: Incidence medium, air by default.
    :type ambient: Medium
    :param substrate: Exit medium, air by default.
    :type substrate: Medium
    :return: The mirror.
    :rtype: LayerStack
    :raises PreconditionError: On non-positive inputs.

    Example::

        >>> from photunnel.optics import quarter_wave_stack, Medium
        >>> mirror = quarter_wave_stack(700.0, 2.22, 1.45, 11, substrate=Medium.of(1.45))
        >>> round(mirror.total_thickness, 1)
        1076.4

    """
    if layer_count < 1:
        raise PreconditionError(f'Layer count should be at least 1, but {layer_count!r} found.')
    if design_wavelength <= 0 or n_high <= 0 or n_low <= 0:
        raise PreconditionError(f'Design wavelength and indices should be positive, '
                                f'but {design_wavelength!r}, {n_high!r} and {n_low!r} found.')

    high = Layer(medium=Medium.of(n_high), thickness=design_wavelength / (4.0 * n_high))
    low = Layer(medium=Medium.of(n_low), thickness=design_wavelength / (4.0 * n_low))
    layers = tuple(high if i % 2 == 0 else low for i in range(layer_count))
    return LayerStack(ambient=ambient, layers=layers, substrate=substrate)


def uncoated_control(stack: LayerStack) -> LayerStack:
    """
    Path of the same geometric length with the films replaced by ambient medium.

    Models the uncoated half of the substrate: light crosses the same distance in the
    ambient and then meets the bare substrate interface.

    :param stack: The coated stack.
    :type stack: LayerStack
    :return: Control stack with a single ambient-index layer of the total thickness.
    :rtype: LayerStack
    """
    layers = (Layer(medium=stack.ambient, thickness=stack.total_thickness),) \
        if stack.total_thickness > 0 else ()
    return LayerStack(ambient=stack.ambient, layers=layers, substrate=stack.substrate)


def reversed_stack(stack: LayerStack) -> LayerStack:
    """
    The same structure seen from the substrate side.

    :param stack: Original stack.
    :type stack: LayerStack
    :return: Stack with reversed layers and swapped ambient/substrate.
    :rtype: LayerStack
    """
    return LayerStack(ambient=stack.substrate, layers=tuple(reversed(stack.layers)),
                      substrate=stack.ambient)


def _parse_number(token: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise StackFileError(f'Invalid {what} {token!r}.', line_no)
    if value != value or value in (float('inf'), float('-inf')):
        raise StackFileError(f'Invalid {what} {token!r}.', line_no)
    return value


def _parse_index(token: str, line_no: int) -> Medium:
    value = _parse_number(token, line_no, 'refractive index')
    if value <= 0:
        raise StackFileError(f'Refractive index should be positive, but {token!r} found.', line_no)
    return Medium.of(value)


def parse_stack(text: str) -> LayerStack:
    """
    Parse the text form of a stack.

    :param text: Stack definition.
    :type text: str
    :return: Parsed stack.
    :rtype: LayerStack
    :raises StackFileError: On malformed content, with the offending line number.
    """
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', maxsplit=1)[0].strip()
        if line:
            entries.append((line_no, line.split()))
    if not entries:
        raise StackFileError('Empty stack definition.')

    ambient, layers, substrate = None, [], None
    for i, (line_no, tokens) in enumerate(entries):
        keyword, args = tokens[0].lower(), tokens[1:]
        if keyword == 'ambient':
            if i != 0:
                raise StackFileError('Keyword "ambient" should be the first entry.', line_no)
            if len(args) != 1:
                raise StackFileError(f'Expected "ambient <n>", but {len(args)} values found.', line_no)
            ambient = _parse_index(args[0], line_no)
        elif keyword == 'substrate':
            if i != len(entries) - 1:
                raise StackFileError('Keyword "substrate" should be the last entry.', line_no)
            if len(args) != 1:
                raise StackFileError(f'Expected "substrate <n>", but {len(args)} values found.', line_no)
            substrate = _parse_index(args[0], line_no)
        elif keyword == 'layer':
            if i == 0 or i == len(entries) - 1:
                raise StackFileError('Layers should lie between "ambient" and "substrate".', line_no)
            if len(args) != 2:
                raise StackFileError(f'Expected "layer <n> <thickness_nm>", but {len(args)} values found.',
                                     line_no)
            medium = _parse_index(args[0], line_no)
            thickness = _parse_number(args[1], line_no, 'thickness')
            if thickness < 0:
                raise StackFileError(f'Thickness should be non-negative, but {args[1]!r} found.', line_no)
            layers.append(Layer(medium=medium, thickness=thickness))
        else:
            raise StackFileError(f'Unknown keyword {tokens[0]!r}.', line_no)

    if ambient is None:
        raise StackFileError('Missing "ambient" entry.', entries[0][0])
    if substrate is None:
        raise StackFileError('Missing "substrate" entry.', entries[-1][0])
    return LayerStack(ambient=ambient, layers=tuple(layers), substrate=substrate)


def format_stack(stack: LayerStack) -> str:
    """
    Text form of a stack, parseable by :func:`parse_stack`.

    :param stack: Stack to format.
    :type stack: LayerStack
    :return: Stack definition ending with a newline.
    :rtype: str
    """
    lines = [f'ambient {stack.ambient.refractive_index!r}']
    for layer in stack.layers:
        lines.append(f'layer {layer.index!r} {layer.thickness!r}')
    lines.append(f'substrate {stack.substrate.refractive_index!r}')
    return '\n'.join(lines) + '\n'


def load_stack(path: Union[str, Path]) -> LayerStack:
    """
    Load a stack file.

    :param path: File to read.
    :type path: Union[str, Path]
    :return: Parsed stack.
    :rtype: LayerStack
    :raises StackFileError: If the file is missing or malformed.
    """
    if not os.path.isfile(path):
        raise StackFileError(f'Stack file {str(path)!r} not found.')
    with open(path, 'r') as f:
        return parse_stack(f.read())


def dump_stack(stack: LayerStack, path: Union[str, Path], comment: str = None) -> None:
    """
    Write a stack file.

    :param stack: Stack to write.
    :type stack: LayerStack
    :param path: Destination file.
    :type path: Union[str, Path]
    :param comment: Optional single-line comment written first.
    :type comment: str
    """
    with open(path, 'w') as f:
        if comment:
            f.write(f'# {" ".join(comment.split())}\n')
        f.write(format_stack(stack))
