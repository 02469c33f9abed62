"""
Frustrated total internal reflection: photon tunneling across the air gap between two
prisms, with the lateral displacement and angular deflection of a Gaussian beam.
"""

from .beam import FTIR_COLUMNS, GaussianBeam, FtirPoint, spectral_centroid, lateral_displacement, \
    angular_deflection, ftir_scan
from .geometry import DEFAULT_ANGLE_OFFSET_DEG, FtirGeometry, critical_angle, kappa_gap, ftir_amplitude, \
    ftir_wigner_time, ftir_bl_time
