"""
Scenario presets and the reproduction runs built on them.
"""

from .model import DEFAULT_OUTPUTS, ScanRange, MirrorSettings, CoincidenceSettings, AngleScanSettings, \
    HartmanSettings, FtirSettings, Scenario, load_scenario, load_preset, list_presets
from .reproduce import COINCIDENCE_COLUMNS, PERIOD_COLUMNS, REPRODUCERS, RUN_ALIASES, reproduce, run_names, \
    reproduce_dip, reproduce_angles, reproduce_hartman, reproduce_ftir, scan_frame, scan_footer, scan_summary
