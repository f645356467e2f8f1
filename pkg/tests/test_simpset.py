import pytest

from moritakit.errors import BadParameters, NotSimplicial
from moritakit.fincat import identity_functor, iota, standard_category
from moritakit.simpset import (
    SimpMap,
    build_ret,
    empty_sset,
    enumerate_simp_maps,
    has_rlp_sset,
    identity_map,
    nerve,
    nerve_map,
    pushout,
    sset_from_json,
    sset_queries,
    standard_cells,
    terminal_map,
)

from . import oracles


@pytest.fixture(scope="module")
def split():
    return standard_category("Split")


@pytest.fixture(scope="module")
def idem():
    return standard_category("Idem")


def test_nerve_counts(split, idem):
    assert nerve(split, 2).counts() == (2, 5, 13)
    assert nerve(idem, 2).counts() == (1, 2, 4)
    assert nerve(standard_category("terminal"), 4).counts() == (1,) * 5


@pytest.mark.parametrize("name", ["Idem", "Split", "I", "P", "J", "linear2"])
def test_nerve_vs_chain_oracle(name):
    C = standard_category(name)
    N = nerve(C, 3)
    assert N.counts() == tuple(oracles.chain_count(C, n) for n in range(4))
    assert N.nondegenerate_counts() == tuple(oracles.nondegenerate_chain_count(C, n) for n in range(4))


def test_nerve_satisfies_simplicial_identities(split):
    nerve(split, 3).validate()


def test_standard_cells():
    assert standard_cells("simplex(0)", 3).counts() == (1, 1, 1, 1)
    assert standard_cells("boundary(2)", 2).nondegenerate_counts()[1] == 3
    assert standard_cells("horn(2,1)", 2).nondegenerate_counts()[1] == 2
    assert standard_cells(("simplex", 2), 3).nondegenerate_counts() == (3, 3, 1, 0)
    with pytest.raises(BadParameters):
        standard_cells("horn(2,5)", 2)


def test_ret_counts_and_rho():
    ret, rho = build_ret(4)
    assert ret.nondegenerate_counts() == (2, 2, 1, 0, 0)
    assert rho.is_mono()
    assert sorted(rho(1, s) for s in ret.nondegenerate(1)) == [("i",), ("r",)]
    collapsed = [s for s in ret.levels[0] if rho(0, s) == ("1",)]
    assert len(collapsed) == 1


def test_ret_needs_two_levels():
    with pytest.raises(BadParameters):
        build_ret(1)


def test_pushout_along_identities():
    X = standard_cells("simplex(2)", 2)
    P, _, _ = pushout(identity_map(X), identity_map(X))
    assert P.counts() == X.counts()


def test_pushout_of_two_points():
    pt = standard_cells("simplex(0)", 2)
    E = empty_sset(2)
    f = SimpMap(E, pt, [{} for _ in range(3)])
    P, _, _ = pushout(f, f)
    assert len(P.pi0()) == 2
    assert sset_queries(P)["pi0"] == 2


def test_pi0(split, idem):
    assert len(nerve(split, 2).pi0()) == 1
    assert nerve(idem, 2).nondegenerate_counts() == (1, 1, 1)


def test_rlp_nerve(split, idem):
    assert has_rlp_sset(terminal_map(nerve(split, 3)), nerve_map(iota(), 3))
    assert not has_rlp_sset(terminal_map(nerve(idem, 3)), nerve_map(iota(), 3))
    N = nerve(idem, 3)
    assert has_rlp_sset(terminal_map(N), identity_map(N))


def test_nerve_map_functorial(split):
    F = identity_functor(split)
    assert nerve_map(F, 3) == identity_map(nerve(split, 3))


def test_bad_simplicial_map(split, idem):
    X, Y = nerve(idem, 1), nerve(split, 1)
    levels = [{s: ("0",) for s in X.levels[0]}, {s: ("r",) for s in X.levels[1]}]
    with pytest.raises(NotSimplicial):
        SimpMap(X, Y, levels)


def test_json_roundtrip(split):
    N = nerve(split, 2)
    M = sset_from_json(N.to_json())
    assert M.counts() == N.counts()
    assert M.nondegenerate_counts() == N.nondegenerate_counts()


def test_enumerate_maps_from_simplex(split):
    # maps Delta[1] -> N(Split) are the morphisms of Split
    maps = enumerate_simp_maps(standard_cells("simplex(1)", 2), nerve(split, 2))
    assert len(maps) == 5
