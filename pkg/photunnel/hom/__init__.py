"""
Two-photon coincidence interferometry: the operational tunneling-time measurement.
"""

from .beamsplitter import LOSSLESS_TOLERANCE, beamsplitter_coincidence, lossless_beamsplitter
from .fit import MIN_POINTS, DipFit, dip_model, fit_dip
from .scan import SPECTRAL_POINTS, DelayElement, ArmFilters, CoincidenceScan, arm_transmission, coincidence_rates, \
    coincidence_scan, relative_tunneling_time
from .spectrum import FWHM_PER_SIGMA, BiphotonSpectrum, trombone_delay, trombone_delays, default_delays
