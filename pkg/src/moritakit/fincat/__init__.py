"""Finite categories, Karoubi envelopes and Morita equivalence of categories."""

from .category import (
    FinCategory,
    Functor,
    constant_functor,
    functor_from_json,
    identity_functor,
    inclusion_functor,
    iota,
    linear_category,
    standard_category,
    validate_category,
)
from .functors import (
    enumerate_functors,
    functor_category,
    has_rlp_cat,
    iota_locality_check,
    natural_transformations,
    to_terminal,
)
from .karoubi import is_cauchy_complete, karoubi_envelope, karoubi_functor, split_idempotent
from .morita import (
    MoritaReport,
    is_equivalence,
    is_fully_faithful,
    morita_cross_check,
    morita_report,
    retract_witness,
)

__all__ = [
    "FinCategory",
    "Functor",
    "MoritaReport",
    "constant_functor",
    "enumerate_functors",
    "functor_category",
    "functor_from_json",
    "has_rlp_cat",
    "identity_functor",
    "inclusion_functor",
    "iota",
    "iota_locality_check",
    "is_cauchy_complete",
    "is_equivalence",
    "is_fully_faithful",
    "karoubi_envelope",
    "karoubi_functor",
    "linear_category",
    "morita_cross_check",
    "morita_report",
    "natural_transformations",
    "retract_witness",
    "split_idempotent",
    "standard_category",
    "to_terminal",
    "validate_category",
]
