import random

import pytest

from moritakit.fincat import standard_category
from moritakit.operad import (
    category_to_operad,
    cauchy_completion_operad,
    corolla,
    enumerate_algebras,
    enumerate_operad_maps,
    free_operad_on_tree,
    identity_operad_map,
    operad_B,
    terminal_operad,
)
from moritakit.theory import (
    algebra_model,
    clone_hom,
    comma_colimit_check,
    compose_theory,
    corepresentable,
    diagonal,
    fiber_stabilizer,
    identity_arrow,
    induced_theory_map,
    is_bijective_on,
    is_product_preserving,
    is_retract_in_theory,
    normalize,
    ordered_colour_maps,
    pairing,
    product_comparison_witness,
    projection,
    table_functor,
    theory_hom,
    theory_hom_size,
    words_up_to,
)

from . import oracles


@pytest.fixture(scope="module")
def B():
    return operad_B()


@pytest.fixture(scope="module")
def C2():
    return free_operad_on_tree(corolla())


@pytest.fixture(scope="module")
def jsplit():
    return category_to_operad(standard_category("Split"))


def test_ordered_maps():
    [(f, stab)] = ordered_colour_maps(("a", "a"), ("a", "b"))
    assert f == (0, 0) and sorted(stab) == [(0, 1), (1, 0)]
    [(f, stab)] = ordered_colour_maps(("a", "b"), ("a", "b"))
    assert f == (0, 1) and stab == ((0, 1),)
    assert ordered_colour_maps(("b", "a"), ("a", "b")) == []


def test_fiber_stabilizer():
    assert len(fiber_stabilizer((0, 0, 1))) == 2
    assert len(fiber_stabilizer((0, 0, 0))) == 6
    assert len(fiber_stabilizer((0, 1, 2))) == 1


def test_clone_hom_examples(B, C2):
    assert clone_hom(B, ("a",), "b") == [normalize(B, (0, 0), "m")]
    assert {cl.f for cl in clone_hom(B, ("a", "a"), "b")} == {(0, 0), (0, 1), (1, 1)}
    assert clone_hom(C2, ("a",), "r") == []


@pytest.mark.parametrize("name", ["B", "C2", "jsplit", "terminal"])
def test_clone_hom_vs_oracle(name, B, C2, jsplit):
    O = {"B": B, "C2": C2, "jsplit": jsplit, "terminal": terminal_operad()}[name]
    for w in words_up_to(O.colours, 3 if len(O.colours) < 3 else 2):
        for d in O.colours:
            n = len(clone_hom(O, w, d))
            assert n == oracles.clone_count(O, w, d)
            assert n == len(clone_hom(O, w, d, oracle=True))
            assert comma_colimit_check(O, w, d)


def test_theory_hom_sizes(B, C2):
    assert theory_hom_size(B, ("a", "a"), ("b", "b")) == 9
    assert len(theory_hom(B, ("a", "a"), ("b", "b"))) == 9
    for O in (B, C2):
        for w in words_up_to(O.colours, 2):
            assert theory_hom_size(O, w, ()) == 1
    assert theory_hom_size(C2, ("a", "b"), ("r",)) == 1


def test_identity_composition(B):
    for h in theory_hom(B, ("a", "a"), ("b",)):
        assert compose_theory(B, h, identity_arrow(B, ("a", "a"))) == h
        assert compose_theory(B, identity_arrow(B, ("b",)), h) == h


def test_diagonal_then_m(B):
    d = diagonal(B, ("a",))
    imgs = {compose_theory(B, h, d) for h in theory_hom(B, ("a", "a"), ("b",))}
    assert len(imgs) == 1
    (img,) = imgs
    assert img.components == tuple(clone_hom(B, ("a",), "b"))


def test_unary_composition(jsplit):
    (i,) = theory_hom(jsplit, ("1",), ("0",))
    (r,) = theory_hom(jsplit, ("0",), ("1",))
    assert compose_theory(jsplit, i, r).components[0].op == "ir"
    assert compose_theory(jsplit, r, i) == identity_arrow(jsplit, ("1",))


def test_representative_independence(B, jsplit):
    rng = random.Random(3)
    for O in (B, jsplit):
        for c in words_up_to(O.colours, 2):
            for d in words_up_to(O.colours, 2):
                for g in theory_hom(O, c, d)[:4]:
                    for h in theory_hom(O, d, ("b",) if O is B else ("0",))[:4]:
                        assert compose_theory(O, h, g, rng) == compose_theory(O, h, g)


def test_projections_and_pairing(B):
    w = ("a", "a", "b")
    p = projection(B, w, [2, 0])
    assert p.target == ("b", "a")
    q = pairing(projection(B, w, [2]), projection(B, w, [0]))
    assert q == p


def test_induced_identity(B):
    F = induced_theory_map(identity_operad_map(B))
    for h in theory_hom(B, ("a", "a"), ("b",)):
        assert F(h) == h


def test_induced_leaf_swap(C2):
    swap = [f for f in enumerate_operad_maps(C2, C2) if f.colour_map["a"] == "b"][0]
    table = induced_theory_map(swap, ("a", "b"), ("r",))
    ((src, img),) = table.items()
    assert img.source == ("b", "a")
    assert img == theory_hom(C2, ("b", "a"), ("r",))[0]


def test_induced_cauchy_unit(B):
    _, unit = cauchy_completion_operad(B)
    for c in words_up_to(B.colours, 3):
        for d in B.colours:
            assert is_bijective_on(unit, c, d)


def test_theory_retracts(B, jsplit):
    r, i = is_retract_in_theory(jsplit, "1", ("0",))
    assert r.components[0].op == "r" and i.components[0].op == "i"
    assert is_retract_in_theory(B, "b", ("a", "a")) is None
    for O in (B, jsplit):
        for c in O.colours:
            r, i = is_retract_in_theory(O, c, (c,))
            assert r == i == identity_arrow(O, (c,))


def test_product_preserving(B):
    for A in enumerate_algebras(B, {"a": 2, "b": 2}):
        assert is_product_preserving(algebra_model(A), 2)
    assert is_product_preserving(corepresentable(B, ("a",)), 2)


def test_product_comparison_fails_on_size(B):
    pa, pb = projection(B, ("a", "a"), [0]), projection(B, ("a", "a"), [1])
    values = {("a",): [0, 1], ("a", "a"): [0, 1, 2]}
    pairs = {0: (0, 0), 1: (1, 1), 2: (0, 1)}
    actions = {}
    for x, (u, v) in pairs.items():
        actions[(pa, x)] = u
        actions[(pb, x)] = v
    X = table_functor(B, values, actions)
    w = product_comparison_witness(X, ("a", "a"))
    assert w is not None and w[0] == "not surjective"
