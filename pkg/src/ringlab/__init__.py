"""ringlab: exact finite-ring arithmetic and sandwich-condition verification.

The library builds small rings with canonical element encodings, computes
their distinguished subsets (idempotents, units, nilpotents, center,
additive span of idempotents), decides X-semiprimeness and X-primeness by
exhaustive scans with replayable witnesses, and cross-checks a registry of
structural statements against those brute-force oracles.
"""

from .derivations import (InnerDerivation, cor2_criterion, d_semiprime_oracle,
                          derivation_image, thm21_criterion)
from .errors import (ExprError, HypothesisError, NonEnumerableError, RinglabError,
                     RingSpecError, UnknownCheckError)
from .exprs import parse_element, parse_subset
from .funcfield import (RatFunc, exceptional_example_check, is_square, poly_degree,
                        poly_format, poly_gcd, poly_is_square, ratfunc_arith,
                        translates_invertible)
from .harness import Catalog, DEFAULT_CATALOG, Report, run_check, run_suite, __version__
from .lattice import enumerate_additive_subgroups
from .predicates import (PrimenessResult, RingClassification, Thm8Classification,
                         Thm19Decomposition, Verdict, classify_ring, primeness,
                         thm3_criterion, thm8_classify, thm19_decompose, x_prime,
                         x_semiprime)
from .result import CheckResult, SubAssertion
from .rings import (Ring, RingSpec, build_ring, enumerate_elements, evaluate,
                    parse_ring_spec)
from .sets import (CenterDims, ElemSet, SetFlags, annihilator, bracket_set,
                   center_dimension, closure, derived_set, full_set, make_set,
                   set_predicates, special_subset)

__all__ = [
    "__version__",
    "build_ring", "parse_ring_spec", "enumerate_elements", "evaluate",
    "Ring", "RingSpec", "ElemSet", "RatFunc",
    "make_set", "full_set", "special_subset", "closure", "bracket_set",
    "derived_set", "annihilator", "set_predicates", "center_dimension",
    "SetFlags", "CenterDims",
    "primeness", "x_semiprime", "x_prime", "classify_ring", "thm3_criterion",
    "thm8_classify", "thm19_decompose",
    "Verdict", "PrimenessResult", "RingClassification", "Thm8Classification",
    "Thm19Decomposition",
    "InnerDerivation", "derivation_image", "thm21_criterion", "cor2_criterion",
    "d_semiprime_oracle",
    "is_square", "ratfunc_arith", "translates_invertible",
    "exceptional_example_check", "poly_degree", "poly_format", "poly_gcd",
    "poly_is_square",
    "enumerate_additive_subgroups",
    "parse_element", "parse_subset",
    "Catalog", "DEFAULT_CATALOG", "Report", "run_check", "run_suite",
    "CheckResult", "SubAssertion",
    "RinglabError", "RingSpecError", "ExprError", "NonEnumerableError",
    "HypothesisError", "UnknownCheckError",
]
