"""
Scenario presets: the parameters behind every reproduction run in one JSON file.

A scenario names a stack file (resolved against the scenario file's directory), the
photon spectrum of the coincidence experiment, and the ranges of the angle, width,
period and gap scans. Presets bundled with the package are found by name.

The module contains the following main components:

* :class:`ScanRange` - Inclusive ``start:stop:step`` range
* :class:`Scenario` - Full preset
* :func:`load_scenario` - Load and validate a scenario file
* :func:`load_preset` - Load a bundled preset by name
* :func:`list_presets` - Names of the bundled presets
"""

import math
import os
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..errors import PhotunnelError, ScenarioError
from ..ftir import FtirGeometry, GaussianBeam, critical_angle
from ..hom import BiphotonSpectrum
from ..optics import LayerStack, Polarization, load_stack

_PRESET_DIR = Path(__file__).resolve().parent

#: Dict[str, str]: Output file of every reproduced table.
DEFAULT_OUTPUTS = {
    'dip_mirror': 'dip_mirror.csv',
    'dip_control': 'dip_control.csv',
    'dip_brewster': 'dip_brewster.csv',
    'angle_delays': 'angle_delays.csv',
    'hartman_qm': 'hartman_qm.csv',
    'hartman_periods': 'hartman_periods.csv',
    'ftir_scan': 'ftir_scan.csv',
}


class ScanRange(BaseModel):
    """
    Inclusive range ``start, start + step, ..., stop``.
    """
    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    step: float = Field(gt=0)

    @model_validator(mode='after')
    def _check_order(self):
        if self.stop < self.start:
            raise ValueError(f'Scan stop {self.stop!r} lies before its start {self.start!r}.')
        return self

    def values(self) -> np.ndarray:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(count)

    @classmethod
    def parse(cls, text: str) -> 'ScanRange':
        """
        Parse ``MIN:MAX:STEP``.

        Example::

            >>> from photunnel.scenario import ScanRange
            >>> ScanRange.parse('0:80:20').values().tolist()
            [0.0, 20.0, 40.0, 60.0, 80.0]

        """
        parts = text.split(':')
        if len(parts) != 3:
            raise ValueError(f'Scan range should look like MIN:MAX:STEP, but {text!r} found.')
        start, stop, step = (float(p) for p in parts)
        return cls(start=start, stop=stop, step=step)


class MirrorSettings(BaseModel):
    """
    Quarter-wave mirror family used by the period scan.
    """
    model_config = ConfigDict(frozen=True)

    design_wavelength: float = Field(default=700.0, gt=0)
    n_high: float = Field(default=2.22, gt=0)
    n_low: float = Field(default=1.45, gt=0)
    substrate_index: float = Field(default=1.45, gt=0)


class CoincidenceSettings(BaseModel):
    """
    Photon spectrum of the coincidence experiment.

    The spectrum width is ``bandwidth`` (per-photon FWHM, nm) when given, otherwise
    ``dip_width_fs`` (identity-dip FWHM, fs).
    """
    model_config = ConfigDict(frozen=True)

    bandwidth: Optional[float] = Field(default=None, gt=0)
    dip_width_fs: Optional[float] = Field(default=20.0, gt=0)
    brewster_angle_deg: float = Field(default=55.0, ge=0, lt=90)
    delay_points: int = Field(default=241, ge=7)

    @model_validator(mode='after')
    def _check_width(self):
        if self.bandwidth is None and self.dip_width_fs is None:
            raise ValueError('Either bandwidth or dip_width_fs should be given.')
        return self


class AngleScanSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    angles_deg: ScanRange = ScanRange(start=0.0, stop=80.0, step=1.0)
    polarizations: List[Polarization] = [Polarization.P]

    @model_validator(mode='after')
    def _check_angles(self):
        if self.angles_deg.start < 0 or self.angles_deg.stop >= 90:
            raise ValueError('Scan angles should lie in [0, 90) degrees.')
        return self


class HartmanSettings(BaseModel):
    """
    Rectangular-barrier width scan in units of ``kappa * d`` and photonic period scan.
    """
    model_config = ConfigDict(frozen=True)

    height: float = Field(default=1.0, gt=0)
    energy_ratio: float = Field(default=0.5, gt=0, lt=1)
    kappa_d: ScanRange = ScanRange(start=0.5, stop=12.0, step=0.5)
    periods: List[int] = list(range(1, 11))

    @model_validator(mode='after')
    def _check_ranges(self):
        if self.kappa_d.start <= 0:
            raise ValueError('Barrier widths should be positive.')
        if not self.periods or min(self.periods) < 1:
            raise ValueError('Period counts should be at least 1.')
        return self


class FtirSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    prism_index: float = Field(default=1.52, gt=1)
    vacuum_wavelength: float = Field(default=702.0, gt=0)
    angle_offset_deg: float = Field(default=2.0, gt=0)
    polarization: Polarization = Polarization.P
    waist: float = Field(default=30000.0, gt=0)
    gaps: ScanRange = ScanRange(start=200.0, stop=4000.0, step=200.0)

    @model_validator(mode='after')
    def _check_geometry(self):
        if math.degrees(critical_angle(self.prism_index)) + self.angle_offset_deg >= 90:
            raise ValueError('Incidence angle beyond grazing.')
        if self.gaps.start <= 0:
            raise ValueError('Gap widths should be positive.')
        return self

    def geometry(self) -> FtirGeometry:
        angle = critical_angle(self.prism_index) + math.radians(self.angle_offset_deg)
        return FtirGeometry(prism_index=self.prism_index, gap=float(self.gaps.start), incidence_angle=angle,
                            vacuum_wavelength=self.vacuum_wavelength, polarization=self.polarization)

    def beam(self) -> GaussianBeam:
        return GaussianBeam(waist=self.waist)


class Scenario(BaseModel):
    """
    Reproduction preset.

    :param name: Preset name, written into every output header.
    :param stack_file: Stack file, relative paths resolve against ``base_dir``.
    :param probe_wavelength: Probe vacuum wavelength in nm.
    :param base_dir: Directory of the scenario file, filled in by :func:`load_scenario`.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    description: str = ''
    stack_file: str
    probe_wavelength: float = Field(default=702.0, gt=0)
    mirror: MirrorSettings = MirrorSettings()
    coincidence: CoincidenceSettings = CoincidenceSettings()
    angle_scan: AngleScanSettings = AngleScanSettings()
    hartman: HartmanSettings = HartmanSettings()
    ftir: FtirSettings = FtirSettings()
    outputs: Dict[str, str] = DEFAULT_OUTPUTS
    base_dir: Optional[str] = None

    @model_validator(mode='after')
    def _check_outputs(self):
        missing = sorted(set(DEFAULT_OUTPUTS) - set(self.outputs))
        if missing:
            raise ValueError(f'Output names missing for {", ".join(missing)}.')
        return self

    @property
    def stack_path(self) -> Path:
        path = Path(self.stack_file)
        if not path.is_absolute() and self.base_dir is not None:
            path = Path(self.base_dir) / path
        return path

    def stack(self) -> LayerStack:
        return load_stack(self.stack_path)

    def spectrum(self) -> BiphotonSpectrum:
        if self.coincidence.bandwidth is not None:
            return BiphotonSpectrum(center_wavelength=self.probe_wavelength, bandwidth=self.coincidence.bandwidth)
        return BiphotonSpectrum.from_dip_width(self.probe_wavelength, self.coincidence.dip_width_fs)

    def output_path(self, out_dir: Union[str, Path], key: str) -> Path:
        return Path(out_dir) / self.outputs[key]


def load_scenario(path: Union[str, Path]) -> Scenario:
    """
    Load and validate a scenario file.

    :param path: JSON scenario file.
    :type path: Union[str, Path]
    :return: The scenario with ``base_dir`` set to the file's directory.
    :rtype: Scenario
    :raises ScenarioError: If the file is missing, invalid or references a missing stack file.
    """
    path = Path(path)
    if not path.is_file():
        raise ScenarioError(f'Scenario file {str(path)!r} not found.')
    try:
        scenario = Scenario.model_validate_json(path.read_text())
    except ValidationError as err:
        raise ScenarioError(f'Invalid scenario {str(path)!r} - {err.error_count()} error(s), '
                            f'first: {err.errors()[0]["msg"]}') from err

    scenario = scenario.model_copy(update={'base_dir': os.path.abspath(path.parent)})
    if not scenario.stack_path.is_file():
        raise ScenarioError(f'Stack file {str(scenario.stack_path)!r} of scenario {scenario.name!r} not found.')
    try:
        scenario.spectrum()
        scenario.ftir.geometry()
    except (ValidationError, PhotunnelError) as err:
        raise ScenarioError(f'Scenario {scenario.name!r} is outside the model domain - {err}') from err
    return scenario


def list_presets() -> List[str]:
    """
    Names of the bundled presets.
    """
    return sorted(p.stem for p in _PRESET_DIR.glob('*.json'))


def load_preset(name_or_path: Union[str, Path]) -> Scenario:
    """
    Load a bundled preset by name, or any scenario file by path.

    :param name_or_path: Preset name such as ``berkeley``, or a path to a JSON file.
    :return: The scenario.
    :rtype: Scenario
    :raises ScenarioError: If no such preset or file exists.

    Example::

        >>> from photunnel.scenario import load_preset
        >>> load_preset('berkeley').probe_wavelength
        702.0

    """
    text = str(name_or_path)
    if text in list_presets():
        return load_scenario(_PRESET_DIR / f'{text}.json')
    elif Path(text).is_file():
        return load_scenario(text)
    else:
        raise ScenarioError(f'Unknown scenario {text!r}, bundled presets: {", ".join(list_presets())}.')
