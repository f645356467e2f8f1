"""Bar constructions, homotopy left Kan extensions and the homotopies ``J`` and ``K``."""

from .construction import (
    BarData,
    BisimplicialTrunc,
    CComodule,
    CModule,
    bar_construction,
    compare_pi0,
    corepresentable_comodule,
    diagonal,
    ho_kan_extension,
    hom_comodule,
    kan_colim_oracle,
    module_from_json,
    point_module,
    representable,
)
from .homotopy import JKReport, seq_operators, verify_homotopy_JK

__all__ = [
    "BarData",
    "BisimplicialTrunc",
    "CComodule",
    "CModule",
    "JKReport",
    "bar_construction",
    "compare_pi0",
    "corepresentable_comodule",
    "diagonal",
    "ho_kan_extension",
    "hom_comodule",
    "kan_colim_oracle",
    "module_from_json",
    "point_module",
    "representable",
    "seq_operators",
    "verify_homotopy_JK",
]
