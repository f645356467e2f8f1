"""Algebraic theories of finite operads: clone homs, composition, transfer of Morita data."""

from .core import (
    TheoryArrow,
    TheoryClass,
    clone_hom,
    comma_colimit,
    comma_colimit_check,
    compose_theory,
    diagonal,
    fiber_stabilizer,
    first_projection,
    identity_arrow,
    induced_theory_map,
    is_bijective_on,
    is_ordered_map,
    is_retract_in_theory,
    normalize,
    ordered_colour_maps,
    pairing,
    product_arrow,
    projection,
    second_projection,
    theory_fully_faithful,
    theory_hom,
    theory_hom_size,
    theory_retract_search,
    word,
    words_up_to,
)
from .models import (
    WordFunctor,
    algebra_model,
    corepresentable,
    is_product_preserving,
    product_comparison_witness,
    table_functor,
)

__all__ = [
    "TheoryArrow",
    "TheoryClass",
    "WordFunctor",
    "algebra_model",
    "clone_hom",
    "comma_colimit",
    "comma_colimit_check",
    "compose_theory",
    "corepresentable",
    "diagonal",
    "fiber_stabilizer",
    "first_projection",
    "identity_arrow",
    "induced_theory_map",
    "is_bijective_on",
    "is_ordered_map",
    "is_product_preserving",
    "is_retract_in_theory",
    "normalize",
    "ordered_colour_maps",
    "pairing",
    "product_arrow",
    "product_comparison_witness",
    "projection",
    "second_projection",
    "table_functor",
    "theory_fully_faithful",
    "theory_hom",
    "theory_hom_size",
    "theory_retract_search",
    "word",
    "words_up_to",
]
