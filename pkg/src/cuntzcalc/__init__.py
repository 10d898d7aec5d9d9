"""Exact symbolic calculator for the Cuntz algebra.

Finite formal sums ``sum c * S_mu S_nu*`` over the isometries ``S_1 .. S_n``
with Gaussian-rational coefficients, the canonical gauge-invariant state,
a printable calculus of completely positive maps, and an exact matrix
bridge for positivity questions — everything in exact arithmetic, nothing
numeric.
"""

from .algebra import Element, RankMismatchError, Term, Word, basis_words, scalar_ratio, subword
from .maps import (
    Compose,
    Homomorphism,
    Identity,
    MapExpr,
    MapSum,
    OperationalPartition,
    WeightedKraus,
    ad,
    apply,
    canonical_endomorphism,
    check_commutant_partition,
    check_component_factorization,
    commutes_with_range,
    cuntz_relations_check,
    find_scalar_ratio,
    is_operational_partition,
    is_unital,
    operational_convex,
    quasi_free,
    standard_left_inverse,
)
from .matrices import (
    Matrix,
    embed_balanced,
    is_psd,
    kadison_schwartz_check,
    trace_cross_check,
    word_index,
)
from .scalars import GaussianRational, conj, parse_scalar
from .state import Mismatch, inner, phi, phi_by_iteration, preserves_phi, verify_adjoint
from .theorems import (
    CheckReport,
    Witness,
    check_lemma5,
    check_prop6,
    check_prop8,
    check_prop9,
    check_prop10,
    check_properties,
    run_all,
    summary_table,
)

__version__ = "0.1.0"

__all__ = [
    "Element",
    "RankMismatchError",
    "Term",
    "Word",
    "basis_words",
    "scalar_ratio",
    "subword",
    "Compose",
    "Homomorphism",
    "Identity",
    "MapExpr",
    "MapSum",
    "OperationalPartition",
    "WeightedKraus",
    "ad",
    "apply",
    "canonical_endomorphism",
    "check_commutant_partition",
    "check_component_factorization",
    "commutes_with_range",
    "cuntz_relations_check",
    "find_scalar_ratio",
    "is_operational_partition",
    "is_unital",
    "operational_convex",
    "quasi_free",
    "standard_left_inverse",
    "Matrix",
    "embed_balanced",
    "is_psd",
    "kadison_schwartz_check",
    "trace_cross_check",
    "word_index",
    "GaussianRational",
    "conj",
    "parse_scalar",
    "Mismatch",
    "inner",
    "phi",
    "phi_by_iteration",
    "preserves_phi",
    "verify_adjoint",
    "CheckReport",
    "Witness",
    "check_lemma5",
    "check_prop6",
    "check_prop8",
    "check_prop9",
    "check_prop10",
    "check_properties",
    "run_all",
    "summary_table",
]
