"""
Spatial and temporal discretization of a layer stack.

The domain is one-dimensional along the stack normal. Electric-field nodes sit at
``z_k = (k - k_entry) * dz``, so the entry plane ``z = 0`` is a node; when the stack has
nonzero thickness ``dz`` divides it exactly and the exit plane is a node too. Magnetic
field nodes sit half a cell to the right of the electric nodes. The permittivity of
each electric node is the average of ``n(z)^2`` over its cell, which keeps interface
positions accurate to a fraction of a cell.

Default time step is the largest stable one, ``dt = n_min * dz / c``, which for an air
ambient makes propagation outside the stack exact on the lattice.

The module contains the following main components:

* :class:`GridConfig` - User-level knobs
* :class:`Grid1D` - Fully resolved grid, validated on construction
* :func:`index_profile` - Point-sampled refractive index
* :func:`cell_permittivity` - Cell-averaged permittivity
* :func:`build_grid` - Grid for a stack and a source
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .source import Source
from ..errors import CourantError
from ..optics import LayerStack, SPEED_OF_LIGHT

#: int: Minimum sampling of the shortest in-medium wavelength of the source band.
MIN_POINTS_PER_WAVELENGTH = 40

#: int: Index of the injection node, counted from the left boundary.
SOURCE_NODE = 2


class GridConfig(BaseModel):
    """
    Discretization knobs.

    :param max_spatial_step: Upper bound of ``dz`` in nm.
    :type max_spatial_step: float
    :param courant: Fraction of the stability limit used for ``dt``, in ``(0, 1]``.
    :type courant: float
    :param padding: Length of ambient before the entry plane and of substrate after the
        exit plane, nm.
    :type padding: float
    :param duration: Recorded time in fs, ``None`` picks one from the source and stack.
    :type duration: Optional[float]
    """
    model_config = ConfigDict(frozen=True)

    max_spatial_step: float = Field(default=1.0, gt=0)
    courant: float = Field(default=1.0, gt=0, le=1)
    padding: float = Field(default=100.0, gt=0)
    duration: Optional[float] = Field(default=None, gt=0)


@dataclass(frozen=True, eq=False)
class Grid1D:
    """
    Discretized domain.

    :param spatial_step: ``dz`` in nm.
    :param time_step: ``dt`` in fs.
    :param z: Positions of the electric-field nodes, nm.
    :param permittivity: Cell-averaged relative permittivity at each electric node.
    :param entry_node: Node on the entry plane.
    :param exit_node: Node on the exit plane.
    :param steps: Number of time steps.
    :param ambient_index: Index left of the stack, also the injection medium.
    :param substrate_index: Index right of the stack.
    :param shortest_wavelength: Shortest vacuum wavelength of the source band, nm.
    :raises CourantError: If the time step is unstable or the sampling too coarse.
    """
    spatial_step: float
    time_step: float
    z: np.ndarray
    permittivity: np.ndarray
    entry_node: int
    exit_node: int
    steps: int
    ambient_index: float
    substrate_index: float
    shortest_wavelength: float

    def __post_init__(self):
        if self.courant_number > 1.0 + 1e-12:
            raise CourantError(f'Time step {self.time_step!r} fs exceeds the stability limit, '
                               f'Courant number is {self.courant_number!r}.')
        ppw = self.points_per_wavelength
        if ppw < MIN_POINTS_PER_WAVELENGTH:
            raise CourantError(f'Only {ppw:.1f} points per shortest in-medium wavelength, '
                               f'at least {MIN_POINTS_PER_WAVELENGTH} required.')
        if not (SOURCE_NODE < self.entry_node <= self.exit_node < len(self.z) - 1):
            raise CourantError('Padding too short to hold the source and the monitors.')

    @property
    def nodes(self) -> int:
        return len(self.z)

    @property
    def source_node(self) -> int:
        return SOURCE_NODE

    @property
    def indices(self) -> np.ndarray:
        return np.sqrt(self.permittivity)

    @property
    def courant_number(self) -> float:
        """
        ``c dt / (n_min dz)``, at most 1 for a stable grid.
        """
        return SPEED_OF_LIGHT * self.time_step / (float(np.min(self.indices)) * self.spatial_step)

    @property
    def points_per_wavelength(self) -> float:
        return self.shortest_wavelength / (float(np.max(self.indices)) * self.spatial_step)

    @property
    def span(self) -> float:
        return float(self.z[-1] - self.z[0])

    @property
    def duration(self) -> float:
        return self.steps * self.time_step

    @property
    def times(self) -> np.ndarray:
        """
        Sample times of the monitors, fs.
        """
        return (np.arange(self.steps) + 1) * self.time_step


def _breakpoints(stack: LayerStack, z_min: float, z_max: float):
    edges = [z_min]
    values = [stack.ambient.refractive_index ** 2]
    position = 0.0
    edges.append(position)
    for layer in stack.layers:
        if layer.thickness == 0:
            continue
        values.append(layer.index ** 2)
        position += layer.thickness
        edges.append(position)
    values.append(stack.substrate.refractive_index ** 2)
    edges.append(max(z_max, position))
    return np.asarray(edges), np.asarray(values)


def index_profile(stack: LayerStack, z) -> np.ndarray:
    """
    Refractive index at positions ``z``, entry plane at zero.

    Points exactly on an interface take the index of the medium to their right.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param z: Positions in nm.
    :return: Indices shaped like ``z``.
    :rtype: numpy.ndarray
    """
    z = np.asarray(z, dtype=float)
    edges, values = _breakpoints(stack, min(float(np.min(z)), 0.0) - 1.0, float(np.max(z)) + 1.0)
    slot = np.searchsorted(edges[1:-1], z, side='right')
    return np.sqrt(values[slot])


def cell_permittivity(stack: LayerStack, z, dz: float) -> np.ndarray:
    """
    Average of ``n(z)^2`` over the cells ``[z - dz/2, z + dz/2]``.

    The piecewise-linear antiderivative of the permittivity is interpolated at the cell
    faces, which is exact for piecewise-constant media.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param z: Cell centres in nm.
    :param dz: Cell width in nm.
    :type dz: float
    :return: Permittivities shaped like ``z``.
    :rtype: numpy.ndarray
    """
    z = np.asarray(z, dtype=float)
    z_min, z_max = float(np.min(z)) - dz, float(np.max(z)) + dz
    edges, values = _breakpoints(stack, min(z_min, -dz), z_max)
    antiderivative = np.concatenate([[0.0], np.cumsum(values * np.diff(edges))])
    upper = np.interp(z + dz / 2.0, edges, antiderivative)
    lower = np.interp(z - dz / 2.0, edges, antiderivative)
    return (upper - lower) / dz


def build_grid(stack: LayerStack, source: Source, config: GridConfig = None) -> Grid1D:
    """
    Grid resolving ``stack`` for ``source``.

    :param stack: The multilayer.
    :type stack: LayerStack
    :param source: Source whose band sets the resolution requirement and whose emission
        time sets the default duration.
    :param config: Discretization knobs.
    :type config: GridConfig
    :return: The grid.
    :rtype: Grid1D
    :raises CourantError: If the configuration cannot resolve the source band.
    """
    config = config or GridConfig()
    thickness = stack.total_thickness
    if thickness > 0:
        cells = int(math.ceil(thickness / config.max_spatial_step - 1e-9))
        dz = thickness / cells
    else:
        cells, dz = 0, config.max_spatial_step

    left = max(int(math.ceil(config.padding / dz)), SOURCE_NODE + 3)
    right = max(int(math.ceil(config.padding / dz)), 3)
    z = (np.arange(left + cells + right + 1) - left) * dz
    permittivity = cell_permittivity(stack, z, dz)

    n_min = float(np.sqrt(np.min(permittivity)))
    dt = config.courant * n_min * dz / SPEED_OF_LIGHT

    if config.duration is None:
        optical_path = (stack.ambient.refractive_index * left * dz
                        + sum(layer.index * layer.thickness for layer in stack.layers)
                        + stack.substrate.refractive_index * right * dz)
        duration = source.end_time + 3.0 * optical_path / SPEED_OF_LIGHT
    else:
        duration = config.duration

    _, omega_max = source.band()
    return Grid1D(
        spatial_step=dz,
        time_step=dt,
        z=z,
        permittivity=permittivity,
        entry_node=left,
        exit_node=left + cells,
        steps=int(math.ceil(duration / dt)),
        ambient_index=stack.ambient.refractive_index,
        substrate_index=stack.substrate.refractive_index,
        shortest_wavelength=2.0 * math.pi * SPEED_OF_LIGHT / omega_max,
    )


def reference_grid(grid: Grid1D) -> Grid1D:
    """
    The same grid filled with the ambient medium everywhere.
    """
    return Grid1D(
        spatial_step=grid.spatial_step,
        time_step=grid.time_step,
        z=grid.z,
        permittivity=np.full_like(grid.permittivity, grid.ambient_index ** 2),
        entry_node=grid.entry_node,
        exit_node=grid.exit_node,
        steps=grid.steps,
        ambient_index=grid.ambient_index,
        substrate_index=grid.ambient_index,
        shortest_wavelength=grid.shortest_wavelength,
    )
