"""Truncated simplicial sets: nerves, standard cells, pushouts, Ret and lifting checks."""

from .constructions import (
    build_ret,
    enumerate_simp_maps,
    has_rlp_sset,
    induced_from_pushout,
    pushout,
    terminal_map,
)
from .sset import (
    SimpMap,
    TruncSSet,
    chain_map,
    empty_sset,
    identity_map,
    nerve,
    nerve_map,
    point_map,
    sset_from_json,
    standard_cells,
)


def sset_queries(X, mono_against=None):
    """Summary of ``X``: component count, nondegenerate counts and (optionally) injectivity of a map."""
    out = {"pi0": len(X.pi0()), "nondegenerate": X.nondegenerate_counts()}
    if mono_against is not None:
        out["is_mono"] = mono_against.is_mono()
    return out


__all__ = [
    "SimpMap",
    "TruncSSet",
    "build_ret",
    "chain_map",
    "empty_sset",
    "enumerate_simp_maps",
    "has_rlp_sset",
    "identity_map",
    "induced_from_pushout",
    "nerve",
    "nerve_map",
    "point_map",
    "pushout",
    "sset_from_json",
    "sset_queries",
    "standard_cells",
    "terminal_map",
]
