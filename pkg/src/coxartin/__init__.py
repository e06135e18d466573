"""Exact invariants of Coxeter systems and their Artin coverings.

The pipeline: parse or look up a Coxeter system, classify its finite
parabolics, build the nerve, run exact integer homology through Smith
normal form, assemble the polynomial chain complex of the Artin system,
truncate the flag resolution under a rank one representation, and report
Schwarz genus bounds that are sharp in the affine-like case.
"""

from .artin import (
    ArtinComplex,
    artin_complex,
    delta_map,
    quotient_L,
    specialize,
    verify_polynomial_chain,
)
from .catalog import builtin_diagram
from .classify import ClassificationResult, all_proper_finite, classify
from .coxeter import INFINITE, CoxeterSystem, irreducible_components, parse_system
from .groups import (
    DEFAULT_CAP,
    FiniteGroupTable,
    InfiniteTypeError,
    OrderCapError,
    materialize_group,
    minimal_coset_representatives,
)
from .homology import (
    HAVE_COMPILED,
    GradedIntComplex,
    HomologyGroup,
    d0_complex,
    hvd,
    kernel_basis,
    rhvd,
    smith_normal_form,
)
from .nerve import NerveComplex, build_nerve, vd
from .poly import IntPoly, exact_div, poincare_polynomial
from .report import GenusReport, genus_report, parse_report
from .resolution import (
    Flag,
    boundary_flag,
    enumerate_flags,
    specialize_resolution,
    verify_sign_extension,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinComplex",
    "ClassificationResult",
    "CoxeterSystem",
    "DEFAULT_CAP",
    "Flag",
    "FiniteGroupTable",
    "GenusReport",
    "GradedIntComplex",
    "HAVE_COMPILED",
    "HomologyGroup",
    "INFINITE",
    "InfiniteTypeError",
    "IntPoly",
    "NerveComplex",
    "OrderCapError",
    "all_proper_finite",
    "artin_complex",
    "boundary_flag",
    "build_nerve",
    "builtin_diagram",
    "classify",
    "d0_complex",
    "delta_map",
    "enumerate_flags",
    "exact_div",
    "genus_report",
    "hvd",
    "irreducible_components",
    "kernel_basis",
    "materialize_group",
    "minimal_coset_representatives",
    "parse_report",
    "parse_system",
    "poincare_polynomial",
    "quotient_L",
    "rhvd",
    "smith_normal_form",
    "specialize",
    "specialize_resolution",
    "vd",
    "verify_polynomial_chain",
    "verify_sign_extension",
]
