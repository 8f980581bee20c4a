"""Positive definite and doubly positive functions on finite abelian groups.

Dual-cone membership with certificates, Shapiro-type extremal constants as
linear programs, and atom extraction on the circle.
"""

from .circle import CircleMeasure, atomic_mass, energy, fourier_coeff, mean_value
from .cones import (
    boas_kac_root,
    convolution_square,
    is_doubly_positive,
    is_even,
    is_nonneg,
    is_odd,
    is_pd_fourier,
    is_pd_gram,
    is_postype,
    is_postype_real_sense,
)
from .decomp import admissible_interval, check_inequality, decompose, intersection_is_odd
from .extremal import duality_check, logan_bound, q_value, s_value, sigma_value, t_value
from .group import GroupSpec, Window
from .lp import LpProblem, solve
from .spectral import GFunc, convolve, dft, idft

__version__ = "0.1.0"
