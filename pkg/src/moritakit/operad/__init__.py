"""Finite coloured symmetric operads, their Cauchy completion, trees and finite algebras."""

from .algebras import (
    FiniteAlgebra,
    IsoClasses,
    algebra_from_json,
    defining_algebra,
    enumerate_algebras,
    restrict_algebra,
    restriction_on_iso_classes,
)
from .core import (
    OperadMap,
    SymOperad,
    build_closed_operad,
    identity_operad_map,
    operad_map_from_json,
    validate_operad,
)
from .maps import enumerate_operad_maps, random_function_operad
from .morita import (
    cauchy_completion_operad,
    cauchy_operad_map,
    colour_retract_witness,
    is_equivalence_op,
    is_fully_faithful_op,
    morita_report_op,
)
from .standard import (
    category_to_operad,
    function_operad,
    functor_to_operad_map,
    operad_B,
    operad_map_to_functor,
    suboperad,
    terminal_operad,
    underlying_category,
)
from .trees import (
    Tree,
    corolla,
    dendroidal_nerve_at,
    dendroidal_to_chain,
    eta,
    free_operad_on_tree,
    linear_tree,
    tree_from_json,
)

__all__ = [
    "FiniteAlgebra",
    "IsoClasses",
    "OperadMap",
    "SymOperad",
    "Tree",
    "algebra_from_json",
    "build_closed_operad",
    "category_to_operad",
    "cauchy_completion_operad",
    "cauchy_operad_map",
    "colour_retract_witness",
    "corolla",
    "defining_algebra",
    "dendroidal_nerve_at",
    "dendroidal_to_chain",
    "enumerate_algebras",
    "enumerate_operad_maps",
    "eta",
    "free_operad_on_tree",
    "function_operad",
    "functor_to_operad_map",
    "identity_operad_map",
    "is_equivalence_op",
    "is_fully_faithful_op",
    "linear_tree",
    "morita_report_op",
    "operad_B",
    "operad_map_from_json",
    "operad_map_to_functor",
    "random_function_operad",
    "restrict_algebra",
    "restriction_on_iso_classes",
    "suboperad",
    "terminal_operad",
    "tree_from_json",
    "underlying_category",
    "validate_operad",
]
