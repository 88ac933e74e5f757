"""Symmetric m-ary pseudo-spline subdivision symbols with exact regularity.

The package constructs subdivision symbols in exact rational arithmetic,
certifies positivity of the derived mask's transform, and computes Hölder
regularity r - log_m(rho) from the spectral radius of a small folded
matrix, with every step of the certification done in exact arithmetic up
to the final logarithm.
"""

from .genfun import chebyshev_u, delta_substitute, p_poly, taylor_g
from .laurent import LaurentPoly, UniPoly, format_rational
from .regularity import (
    PositivityCertificate,
    RegularityReport,
    certify_positivity,
    decay_estimate,
    exact_regularity,
    folded_matrix,
    spectral_radius,
)
from .schemes import (
    ParameterError,
    SchemeSpec,
    analyze,
    make_bspline,
    make_dd_dual,
    make_dd_dual_conjecture,
    make_dd_primal,
    make_interpolatory_lian,
    make_pseudo_spline,
    make_tension,
    scheme_from_symbol,
    sigma,
)
from .serialize import build_scheme
from .subdivision import cardinal_samples, difference_data, support_interval

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "UniPoly",
    "ParameterError",
    "PositivityCertificate",
    "RegularityReport",
    "SchemeSpec",
    "analyze",
    "build_scheme",
    "cardinal_samples",
    "certify_positivity",
    "chebyshev_u",
    "decay_estimate",
    "delta_substitute",
    "difference_data",
    "exact_regularity",
    "folded_matrix",
    "format_rational",
    "make_bspline",
    "make_dd_dual",
    "make_dd_dual_conjecture",
    "make_dd_primal",
    "make_interpolatory_lian",
    "make_pseudo_spline",
    "make_tension",
    "p_poly",
    "scheme_from_symbol",
    "sigma",
    "spectral_radius",
    "support_interval",
    "taylor_g",
    "__version__",
]
