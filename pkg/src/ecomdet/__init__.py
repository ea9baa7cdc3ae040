"""Exact semigroup determinants and their block factorisation for finite
semigroups with commuting idempotents.
"""

from .corpus import CorpusRecord, appendix_table, format_corpus, load_appendix, parse_corpus
from .det import (PolyMatrix, ProbeVerdict, cayley, contracted_cayley, det, det_bareiss, det_laplace,
                  det_probe, theta, theta_exact, theta_tilde)
from .errors import EcomError, InputError, TheoryViolation
from .factor import FactorReport, factor_central_idempotent, factor_main_theorem, star_cayley
from .poly import Poly
from .poset import MoebiusTable, Poset, build_poset, meet, moebius
from .scan import ScanResult, analyze, scan
from .semigroup import (GreenData, MulTable, build_table, check_s2, check_star, check_star2, green,
                        idempotents, is_ecom, unital_check)
from .star import (StarTable, check_diamond, conjecture_uu, epsilon, epsilon_table, open_problem_set, sharp,
                   sharp_e, star_basis, star_on_Z, z_matrix)
from .structure import EcomProfile, build_profile, i_slice, ll, phi, plus, sigma_search, tilde_classes

__all__ = [
    "CorpusRecord", "appendix_table", "format_corpus", "load_appendix", "parse_corpus",
    "PolyMatrix", "ProbeVerdict", "cayley", "contracted_cayley", "det", "det_bareiss", "det_laplace",
    "det_probe", "theta", "theta_exact", "theta_tilde",
    "EcomError", "InputError", "TheoryViolation",
    "FactorReport", "factor_central_idempotent", "factor_main_theorem", "star_cayley",
    "Poly", "MoebiusTable", "Poset", "build_poset", "meet", "moebius",
    "ScanResult", "analyze", "scan",
    "GreenData", "MulTable", "build_table", "check_s2", "check_star", "check_star2", "green",
    "idempotents", "is_ecom", "unital_check",
    "StarTable", "check_diamond", "conjecture_uu", "epsilon", "epsilon_table", "open_problem_set", "sharp",
    "sharp_e", "star_basis", "star_on_Z", "z_matrix",
    "EcomProfile", "build_profile", "i_slice", "ll", "phi", "plus", "sigma_search", "tilde_classes",
]
