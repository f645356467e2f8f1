import pytest

from moritakit.bar import (
    CComodule,
    CModule,
    bar_construction,
    compare_pi0,
    corepresentable_comodule,
    ho_kan_extension,
    hom_comodule,
    kan_colim_oracle,
    module_from_json,
    point_module,
    representable,
    seq_operators,
    verify_homotopy_JK,
)
from moritakit.bar import diagonal as bar_diagonal
from moritakit.errors import BoundTooSmall, IndexOutOfRange, NotAFunctor
from moritakit.fincat import identity_functor, iota, standard_category, to_terminal
from moritakit.operad import enumerate_algebras, operad_B, terminal_operad
from moritakit.theory import algebra_model, corepresentable

from . import oracles


@pytest.fixture(scope="module")
def cats():
    return {n: standard_category(n) for n in ("terminal", "Idem", "Split", "I", "J", "P")}


def test_point_bar_is_a_point(cats):
    T = cats["terminal"]
    Bs = bar_construction(point_module(T), T, point_module(T, True), 3)
    assert Bs.counts() == (1, 1, 1, 1)
    assert len(bar_diagonal(Bs).pi0()) == 1


def test_idem_bar_counts(cats):
    idem = cats["Idem"]
    Bs = bar_construction(representable(idem, "0"), idem, corepresentable_comodule(idem, "0"), 3)
    assert Bs.counts() == tuple(2 ** (n + 2) for n in range(4))
    assert bar_diagonal(Bs).counts()[:3] == (4, 8, 16)


def test_split_bar_level_zero(cats):
    # |Split(0,-)| x |Split(-,1)| = 2*1 + 1*1; toward 0 the count is 2*2 + 1*1
    S = cats["Split"]
    h0 = representable(S, "0")
    assert bar_construction(h0, S, corepresentable_comodule(S, "1"), 0).counts() == (3,)
    assert bar_construction(h0, S, corepresentable_comodule(S, "0"), 0).counts() == (5,)


def test_diagonal_is_simplicial(cats):
    S = cats["Split"]
    bar_diagonal(bar_construction(representable(S, "0"), S, corepresentable_comodule(S, "1"), 3), check=True).validate()


def test_diagonal_of_disjoint_union(cats):
    C = cats["Split"]
    Y1, Y2 = corepresentable_comodule(C, "0"), corepresentable_comodule(C, "1")
    values = {c: [(1, v) for v in Y1.values[c]] + [(2, v) for v in Y2.values[c]] for c in C.objects}
    action = {}
    for m, (d, c) in C.morphisms.items():
        action[m] = {(1, v): (1, Y1.act(m, v)) for v in Y1.values[c]}
        action[m].update({(2, v): (2, Y2.act(m, v)) for v in Y2.values[c]})
    Y = CComodule(C, values, action)
    X = representable(C, "0")
    whole = bar_construction(X, C, Y, 3).counts()
    parts = [bar_construction(X, C, Yk, 3).counts() for Yk in (Y1, Y2)]
    assert whole == tuple(a + b for a, b in zip(*parts))


def test_ho_kan_iota():
    f = iota()
    H = ho_kan_extension(f, representable(f.source, "0"), "1", 2)
    assert H.counts() == (2, 4, 8)
    assert len(H.pi0()) == 1


def test_ho_kan_identity_level_zero(cats):
    for name in ("Split", "J", "P"):
        C = cats[name]
        f = identity_functor(C)
        for c in C.objects:
            for d in C.objects:
                H = ho_kan_extension(f, representable(C, c), d, 1)
                assert H.counts()[0] == sum(len(C.hom(c, x)) * len(C.hom(x, d)) for x in C.objects)


def test_ho_kan_empty(cats):
    C = cats["Split"]
    X = CModule(C, {}, {})
    assert ho_kan_extension(identity_functor(C), X, "0", 2).counts() == (0, 0, 0)


def test_kan_colim_examples(cats):
    f = iota()
    (cls,) = kan_colim_oracle(f, representable(f.source, "0"), "1")
    assert ("0", "e", "r") in cls and ("0", "id_0", "r") in cls
    for name in ("Split", "J"):
        C = cats[name]
        for c in C.objects:
            for d in C.objects:
                assert len(kan_colim_oracle(identity_functor(C), representable(C, c), d)) == len(C.hom(c, d))
    g = to_terminal(cats["I"])
    assert len(kan_colim_oracle(g, representable(cats["I"], "0"), g.target.objects[0])) == 1


@pytest.mark.parametrize("name", ["Idem", "Split", "I", "J", "P"])
def test_pi0_matches_coend(cats, name):
    C = cats[name]
    for f in (identity_functor(C), to_terminal(C)):
        for c in C.objects:
            X = representable(C, c)
            for d in f.target.objects:
                assert compare_pi0(f, X, d, 3)
                assert len(kan_colim_oracle(f, X, d)) == oracles.coend_classes(f, X, d)


def test_hom_comodule_is_a_comodule():
    f = iota()
    hom_comodule(f, "1").validate()


def test_module_json(cats):
    C = cats["Split"]
    X = module_from_json({"representable": "1"}, C)
    assert X.values == representable(C, "1").values
    with pytest.raises(NotAFunctor):
        module_from_json({"values": {"0": ["x"], "1": ["y"]}, "action": {}}, C)


def test_seq_operators():
    assert seq_operators(("a", "b"), 0) == (("a", "a", "b"), ("a", "*", "*"), ("*", "a", "b"))
    star, bar_, dbar = seq_operators(("a", "b", "c"), 2)
    assert star == ("a", "b", "c", "c")
    with pytest.raises(IndexOutOfRange):
        seq_operators(("a", "b"), 2)


def test_jk_terminal():
    T = terminal_operad()
    X = algebra_model(enumerate_algebras(T, {"x": 1})[0])
    r = verify_homotopy_JK(T, X, ("x",), ("x",), levels=2, words=4)
    assert r.passed


def test_jk_b_algebra():
    B = operad_B()
    A = enumerate_algebras(B, {"a": 2, "b": 2})[3]
    r = verify_homotopy_JK(B, algebra_model(A), ("a",), ("b",), levels=2, words=4, seed=1)
    assert r.passed, r.to_json()
    assert r.counts["delta_pi0"] >= 1


def test_jk_corrupted_psi():
    B = operad_B()
    X = corepresentable(B, ("a",))
    r = verify_homotopy_JK(B, X, ("a",), ("b",), levels=1, words=4, corrupt="psi")
    assert not r.passed and r.witness[0] == "psi"


def test_jk_word_bound():
    B = operad_B()
    with pytest.raises(BoundTooSmall):
        verify_homotopy_JK(B, corepresentable(B, ("a",)), ("a", "a"), ("b",), levels=1, words=4)
