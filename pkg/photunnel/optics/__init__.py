"""
Frequency-domain optics of planar multilayers.

This package computes the complex reflection and transmission amplitudes of lossless
dielectric stacks with the characteristic-matrix method, and provides the stack
constructors, file format and band-structure helpers used by the delay, coincidence
and time-domain modules.
"""

from .bloch import unit_cell, bloch_trace, bloch_trace_at, in_stop_band, bloch_edges
from .matrix import cos_in_medium, admittance, characteristic_matrix, transfer, stack_response, \
    transmission_amplitude, boundary_solve
from .media import SPEED_OF_LIGHT, Polarization, Medium, AIR, Layer, LayerStack, Incidence, ComplexResponse, \
    omega_of, wavelength_of
from .spectrum import SPECTRUM_COLUMNS, omega_grid, transmission_spectrum, spectrum_table, spectrum_table_at, \
    band_edges, brewster_angle
from .stack import quarter_wave_stack, uncoated_control, reversed_stack, parse_stack, format_stack, load_stack, \
    dump_stack
