"""
One-dimensional time-domain propagation through layer stacks: an independent check of
the frequency-domain delays, and of the front of a signal never outrunning light.
"""

from .analysis import FRONT_THRESHOLD, PeakEstimate, CausalityVerdict, EnergyBalance, envelope, peak_time, \
    peak_delay, front_time, causality_verdict, energy_balance, transmission_from_records, distortion
from .fdtd import ProbeRecord, propagate, run_pair
from .grid import MIN_POINTS_PER_WAVELENGTH, GridConfig, Grid1D, index_profile, cell_permittivity, build_grid, \
    reference_grid
from .source import GaussianPulse, SharpFrontSource, Source
