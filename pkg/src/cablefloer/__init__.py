"""Heegaard Floer link homology of L-space cable links, computed exactly over F2."""

__version__ = "0.1.0"

from .cables import (CableLink, DiagonalProfile, Grading, Regime, beta_via_hfk, chi_at_grading, classify,
                     diagonal_profile, h_cable, multivariable_chi)
from .errors import (CableFloerError, ChainComplexError, GradingError, InvalidKnot, InvalidParameters,
                     InvalidPolynomial, UnsupportedRegime)
from .homology import (GradedDim, ModuleSummand, SpecialCaseInfo, hfl_hat, hfl_minus, module_decomposition,
                       u_exponent, u_surjective)
from .knots import LSpaceKnot, cable_knot, h_knot, hfl_rank, parse_knot, torus_knot, validate
from .laurent import ChiSeries, LaurentPoly, chi_expand, mul
from .oracle import build_e1, e2_hat, e2_minus, euler_check
from .surgery import SurgeryFraming, det_lambda, is_positive_cone, surgery_description

__all__ = [
    "CableLink", "DiagonalProfile", "Grading", "Regime", "beta_via_hfk", "chi_at_grading", "classify",
    "diagonal_profile", "h_cable", "multivariable_chi",
    "CableFloerError", "ChainComplexError", "GradingError", "InvalidKnot", "InvalidParameters",
    "InvalidPolynomial", "UnsupportedRegime",
    "GradedDim", "ModuleSummand", "SpecialCaseInfo", "hfl_hat", "hfl_minus", "module_decomposition",
    "u_exponent", "u_surjective",
    "LSpaceKnot", "cable_knot", "h_knot", "hfl_rank", "parse_knot", "torus_knot", "validate",
    "ChiSeries", "LaurentPoly", "chi_expand", "mul",
    "build_e1", "e2_hat", "e2_minus", "euler_check",
    "SurgeryFraming", "det_lambda", "is_positive_cone", "surgery_description",
]
