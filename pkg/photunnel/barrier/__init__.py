"""
Rectangular-barrier quantum tunneling, the analytic testbed of the tunneling times.
"""

from .rectangular import TOP_TOLERANCE, RectangularBarrier, barrier_amplitude, barrier_total_amplitude, \
    barrier_reflection, schrodinger_amplitude
from .times import DELAY_COLUMNS, DelayReport, wigner_time, free_time, bl_time, larmor_times, delay_report, \
    hartman_scan, superluminal_onset
