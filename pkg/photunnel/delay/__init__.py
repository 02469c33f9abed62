"""
Tunneling times of photonic stacks: Wigner, Buttiker-Landauer and Larmor analogues,
with the angle and period scans built on them.
"""

from .photonic import UNRELIABLE_AMPLITUDE, ANGLE_SCAN_COLUMNS, VACUUM_TIME_DEFINITION, PhotonicDelayReport, \
    vacuum_time, photonic_wigner, photonic_bl_time, photonic_larmor, angle_scan, angle_scan_rows, period_scan
