"""
Reproduction runs of a scenario.

Each runner computes a group of related tables and writes them as commented CSV
files into an output directory through one :func:`photunnel.utils.result_batch`, so a
failed or interrupted run publishes nothing and leaves earlier results untouched.

* ``fig3`` (alias ``dip``) - coincidence scans through the mirror and through the uncoated
  control at normal incidence, and through the mirror at the Brewster-side angle.
* ``fig4`` (alias ``angles``) - photonic delays against the angle of incidence.
* ``hartman`` - rectangular-barrier times against width, and mirror delays against
  the number of periods.
* ``ftir`` - beam displacement and deflection against the prism gap.
"""

import math
from pathlib import Path
from typing import Callable, Dict, List, Union

import pandas as pd

from .model import Scenario
from ..barrier import DELAY_COLUMNS, RectangularBarrier, hartman_scan
from ..delay import ANGLE_SCAN_COLUMNS, VACUUM_TIME_DEFINITION, angle_scan, angle_scan_rows, period_scan
from ..errors import PreconditionError
from ..ftir import FTIR_COLUMNS, ftir_scan
from ..hom import ArmFilters, CoincidenceScan, coincidence_scan, default_delays, dip_model
from ..optics import Incidence, Medium, AIR, Polarization, uncoated_control
from ..utils import result_batch

#: Tuple[str, ...]: Columns of a coincidence-scan table.
COINCIDENCE_COLUMNS = ('delay_fs', 'rate_normalized', 'fit')

#: Tuple[str, ...]: Columns of the period-scan table.
PERIOD_COLUMNS = ('periods', 'layers', 'thickness_nm', 'T_flux', 'transit_fs', 'vacuum_fs', 'relative_fs',
                  'v_eff_over_c', 'bl_fs', 'larmor_fs')


def _base_parameters(scenario: Scenario) -> dict:
    return {'scenario': scenario.name, 'stack': scenario.stack_path.name, 'lambda_nm': scenario.probe_wavelength}


def scan_frame(scan: CoincidenceScan) -> pd.DataFrame:
    fit = scan.fit
    return pd.DataFrame({
        'delay_fs': scan.delays,
        'rate_normalized': scan.rates,
        'fit': dip_model(scan.delays, fit.center, fit.width, fit.visibility, fit.baseline),
    }, columns=list(COINCIDENCE_COLUMNS))


def scan_footer(scan: CoincidenceScan, shift: float) -> dict:
    return {'fit_reliable': scan.fit.reliable, 'shift_fs': shift}


def scan_summary(scan: CoincidenceScan) -> dict:
    """
    Dip fit of a scan as the summary line ``center_fs width_fs visibility``.
    """
    return {'center_fs': scan.fit_center, 'width_fs': scan.fit_width, 'visibility': scan.fit_visibility}


def reproduce_dip(scenario: Scenario, out_dir: Union[str, Path], progress: bool = False) -> List[Path]:
    """
    Coincidence scans through the mirror, the uncoated control and the mirror at the
    Brewster-side angle, P polarization.

    The ``shift_fs`` footer of the mirror tables is the dip-center difference against the
    control at the same angle; negative means the tunneling photon arrives early.
    """
    stack = scenario.stack()
    control = uncoated_control(stack)
    spectrum = scenario.spectrum()
    delays = default_delays(spectrum, points=scenario.coincidence.delay_points)
    brewster = math.radians(scenario.coincidence.brewster_angle_deg)

    def _scan(arm, angle):
        return coincidence_scan(ArmFilters(barrier_arm=arm, angle=angle, polarization=Polarization.P),
                                spectrum, delays)

    barrier_scan, control_scan = _scan(stack, 0.0), _scan(control, 0.0)
    brewster_scan, brewster_control = _scan(stack, brewster), _scan(control, brewster)

    params = {**_base_parameters(scenario), 'pol': Polarization.P, 'bandwidth_nm': spectrum.bandwidth}
    paths = [scenario.output_path(out_dir, key) for key in ('dip_mirror', 'dip_control', 'dip_brewster')]
    with result_batch() as batch:
        batch.write(paths[0], scan_frame(barrier_scan), {**params, 'arm': 'mirror', 'angle_deg': 0.0},
                    scan_footer(barrier_scan, barrier_scan.fit_center - control_scan.fit_center),
                    scan_summary(barrier_scan))
        batch.write(paths[1], scan_frame(control_scan), {**params, 'arm': 'control', 'angle_deg': 0.0},
                    scan_footer(control_scan, 0.0), scan_summary(control_scan))
        batch.write(paths[2], scan_frame(brewster_scan),
                    {**params, 'arm': 'mirror', 'angle_deg': scenario.coincidence.brewster_angle_deg},
                    scan_footer(brewster_scan, brewster_scan.fit_center - brewster_control.fit_center),
                    scan_summary(brewster_scan))
    return paths


def reproduce_angles(scenario: Scenario, out_dir: Union[str, Path], progress: bool = False) -> List[Path]:
    """
    Transmission, Wigner, Buttiker-Landauer and Larmor delays against the angle of incidence.
    """
    stack = scenario.stack()
    angles = [math.radians(a) for a in scenario.angle_scan.angles_deg.values()]
    rows = []
    for pol in scenario.angle_scan.polarizations:
        rows.extend(angle_scan_rows(angle_scan(stack, scenario.probe_wavelength, pol, angles, progress), pol))

    path = scenario.output_path(out_dir, 'angle_delays')
    with result_batch() as batch:
        batch.write(path, pd.DataFrame(rows, columns=list(ANGLE_SCAN_COLUMNS)), {
            **_base_parameters(scenario), 'vacuum_fs': VACUUM_TIME_DEFINITION,
            'angles_deg': f'{scenario.angle_scan.angles_deg.start!r}:{scenario.angle_scan.angles_deg.stop!r}:'
                          f'{scenario.angle_scan.angles_deg.step!r}',
        })
    return [path]


def reproduce_hartman(scenario: Scenario, out_dir: Union[str, Path], progress: bool = False) -> List[Path]:
    """
    Rectangular-barrier times against ``kappa * d`` and mirror delays against period count.
    """
    settings = scenario.hartman
    template = RectangularBarrier.from_kappa_d(1.0, height=settings.height, energy_ratio=settings.energy_ratio)
    kappa_d = settings.kappa_d.values()
    reports = hartman_scan(template, [kd / template.kappa for kd in kappa_d], progress)
    qm = pd.DataFrame([report.as_row() for report in reports], columns=list(DELAY_COLUMNS))
    qm.insert(0, 'kappa_d', kappa_d)

    mirror = scenario.mirror
    incidence = Incidence(vacuum_wavelength=scenario.probe_wavelength)
    rows = []
    for n, report in period_scan(mirror.design_wavelength, mirror.n_high, mirror.n_low, settings.periods,
                                 incidence, AIR, Medium.of(mirror.substrate_index)):
        rows.append({
            'periods': n,
            'layers': 2 * n + 1,
            'thickness_nm': (n + 1) * mirror.design_wavelength / (4.0 * mirror.n_high)
                            + n * mirror.design_wavelength / (4.0 * mirror.n_low),
            'T_flux': report.flux_transmission,
            'transit_fs': report.transit_time,
            'vacuum_fs': report.vacuum_time,
            'relative_fs': report.relative_delay,
            'v_eff_over_c': report.effective_velocity,
            'bl_fs': report.bl_time,
            'larmor_fs': report.larmor_total,
        })

    paths = [scenario.output_path(out_dir, 'hartman_qm'), scenario.output_path(out_dir, 'hartman_periods')]
    with result_batch() as batch:
        batch.write(paths[0], qm, {'scenario': scenario.name, 'V0': settings.height,
                                   'E': settings.energy_ratio * settings.height, 'hbar': 1.0, 'mass': 1.0})
        batch.write(paths[1], pd.DataFrame(rows, columns=list(PERIOD_COLUMNS)), {
            **_base_parameters(scenario), 'design_nm': mirror.design_wavelength, 'vacuum_fs': VACUUM_TIME_DEFINITION,
            'n_high': mirror.n_high, 'n_low': mirror.n_low, 'substrate': mirror.substrate_index,
        })
    return paths


def reproduce_ftir(scenario: Scenario, out_dir: Union[str, Path], progress: bool = False) -> List[Path]:
    """
    Lateral displacement and angular deflection of a Gaussian beam against the prism gap.
    """
    settings = scenario.ftir
    geometry = settings.geometry()
    points = ftir_scan(geometry, list(settings.gaps.values()), settings.beam(), progress)

    path = scenario.output_path(out_dir, 'ftir_scan')
    with result_batch() as batch:
        batch.write(path, pd.DataFrame([p.as_row() for p in points], columns=list(FTIR_COLUMNS)), {
            'scenario': scenario.name, 'prism_index': settings.prism_index, 'lambda_nm': settings.vacuum_wavelength,
            'angle_deg': math.degrees(geometry.incidence_angle), 'pol': settings.polarization,
            'waist_nm': settings.waist,
        })
    return [path]


#: Dict[str, Callable]: Runner of each reproduction, by command-line name.
REPRODUCERS: Dict[str, Callable[..., List[Path]]] = {
    'fig3': reproduce_dip,
    'fig4': reproduce_angles,
    'hartman': reproduce_hartman,
    'ftir': reproduce_ftir,
}

#: Dict[str, str]: Descriptive names accepted in place of the run names.
RUN_ALIASES: Dict[str, str] = {
    'dip': 'fig3',
    'angles': 'fig4',
}


def reproduce(scenario: Scenario, run: str, out_dir: Union[str, Path], progress: bool = False) -> List[Path]:
    """
    Execute one reproduction run.

    :param scenario: Preset.
    :type scenario: Scenario
    :param run: One of :data:`REPRODUCERS` or :data:`RUN_ALIASES`.
    :type run: str
    :param out_dir: Output directory, created when missing.
    :param progress: Show progress bars.
    :type progress: bool
    :return: Written files.
    :rtype: List[Path]
    """
    name = RUN_ALIASES.get(run, run)
    if name not in REPRODUCERS:
        raise PreconditionError(f'Unknown run {run!r}, choose from {", ".join(sorted(run_names()))}.')
    return REPRODUCERS[name](scenario, out_dir, progress)


def run_names() -> List[str]:
    """
    Every name accepted by :func:`reproduce`, run names first.
    """
    return list(REPRODUCERS) + list(RUN_ALIASES)
