import pytest

from moritakit.errors import BadAlgebra, BadTree, BadUnit, NotAnOperadMap, NotEquivariant
from moritakit.fincat import (
    enumerate_functors,
    identity_functor,
    iota,
    is_equivalence,
    linear_category,
    standard_category,
)
from moritakit.operad import (
    FiniteAlgebra,
    IsoClasses,
    OperadMap,
    algebra_from_json,
    category_to_operad,
    cauchy_completion_operad,
    colour_retract_witness,
    corolla,
    dendroidal_nerve_at,
    dendroidal_to_chain,
    enumerate_algebras,
    enumerate_operad_maps,
    eta,
    free_operad_on_tree,
    functor_to_operad_map,
    identity_operad_map,
    is_equivalence_op,
    linear_tree,
    morita_report_op,
    operad_B,
    operad_map_from_json,
    restrict_algebra,
    restriction_on_iso_classes,
    suboperad,
    terminal_operad,
    tree_from_json,
    underlying_category,
    validate_operad,
)
from moritakit.operad import perm as P
from moritakit.simpset import nerve

from . import oracles


def b_json(**extra):
    raw = operad_B().to_json()
    raw.update(extra)
    return raw


@pytest.fixture(scope="module")
def B():
    return operad_B()


@pytest.fixture(scope="module")
def jsplit():
    return category_to_operad(standard_category("Split"))


def test_perm_right_action():
    s, t = (1, 2, 0), (0, 2, 1)
    w = ("a", "b", "c")
    assert P.act_word(P.act_word(w, s), t) == P.act_word(w, P.compose(s, t))
    assert P.compose(s, P.inverse(s)) == P.identity(3)


def test_b_is_valid(B):
    assert validate_operad(B.to_json()).key() == B.key()
    assert B.act("m", (1, 0)) == "m"


def test_bad_unit():
    raw = b_json()
    raw["ops"].append({"id": "m2", "inputs": ["a", "a"], "output": "b"})
    raw["action"].append({"op": "m2", "perm": [1, 0], "result": "m2"})
    raw["compose"] = [{"outer": "m", "inners": ["id_a", "id_a"], "result": "m2"}]
    with pytest.raises(BadUnit):
        validate_operad(raw)


def test_action_not_involutive():
    raw = b_json()
    raw["ops"].append({"id": "n", "inputs": ["a", "a"], "output": "b"})
    raw["action"] = [{"op": "m", "perm": [1, 0], "result": "n"}, {"op": "n", "perm": [1, 0], "result": "n"}]
    with pytest.raises(NotEquivariant):
        validate_operad(raw)


def test_unary_reduction(B, jsplit):
    C = underlying_category(B)
    assert len(C.objects) == 2 and len(C.morphisms) == 2
    assert len(jsplit.colours) == 2 and len(jsplit.ops) == 5
    for name in ("Split", "Idem", "J", "P"):
        D = standard_category(name)
        assert underlying_category(category_to_operad(D)) == D


def test_cauchy_completion(B, jsplit):
    K, unit = cauchy_completion_operad(B)
    assert len(K.colours) == 2 and len(K.ops) == 3
    assert is_equivalence_op(unit)
    K, _ = cauchy_completion_operad(category_to_operad(standard_category("Idem")))
    assert (len(K.colours), len(K.ops)) == (2, 5)
    split = standard_category("Split")
    assert any(is_equivalence(F) for F in enumerate_functors(split, underlying_category(K)))
    K, _ = cauchy_completion_operad(terminal_operad())
    assert len(K.ops) == 1


def test_morita_reports(B):
    K, unit = cauchy_completion_operad(B)
    assert morita_report_op(unit).verdict
    assert morita_report_op(functor_to_operad_map(iota())).verdict
    _, inc = suboperad(B, ["a"])
    r = morita_report_op(inc)
    assert r.fully_faithful and not r.verdict


def test_colour_retracts(B, jsplit):
    assert colour_retract_witness(jsplit, "1", "0") == ("r", "i")
    assert colour_retract_witness(B, "b", "a") is None
    assert colour_retract_witness(B, "a", "a") == ("id_a", "id_a")


def test_free_operads_on_trees():
    C2 = free_operad_on_tree(corolla())
    assert C2.colours == ("a", "b", "r") and len(C2.ops) == 5
    E = free_operad_on_tree(eta())
    assert len(E.colours) == 1 and len(E.ops) == 1
    assert len(free_operad_on_tree(linear_tree(2)).ops) == 6


def test_bad_tree():
    with pytest.raises(BadTree):
        tree_from_json({"edges": ["a", "r"], "root": "r", "vertices": [
            {"id": "v", "inputs": ["a"], "output": "r"},
            {"id": "w", "inputs": ["a"], "output": "r"},
        ]})


def test_dendroidal_nerve(B, jsplit):
    assert len(dendroidal_nerve_at(B, eta())) == len(B.colours)
    C2 = free_operad_on_tree(corolla())
    assert len(dendroidal_nerve_at(C2, corolla())) == 2
    split = standard_category("Split")
    for n in range(4):
        maps = dendroidal_nerve_at(jsplit, linear_tree(n))
        assert len(maps) == nerve(split, 3).counts()[n]
        chains = {dendroidal_to_chain(linear_tree(n), f) for f in maps}
        assert len(chains) == len(maps)


def test_algebra_counts(B):
    assert len(enumerate_algebras(B, {"a": 2, "b": 2})) == 8 == oracles.symmetric_binary_algebras(2, 2)
    for na, nb in [(1, 2), (2, 1), (3, 2)]:
        assert len(enumerate_algebras(B, {"a": na, "b": nb})) == oracles.symmetric_binary_algebras(na, nb)
    assert len(enumerate_algebras(B, {"a": 1, "b": 1})) == 1
    jidem = category_to_operad(standard_category("Idem"))
    assert len(enumerate_algebras(jidem, {"0": 2})) == 3 == oracles.idempotent_endofunctions(2)
    assert len(enumerate_algebras(jidem, {"0": 3})) == oracles.idempotent_endofunctions(3)


def test_iso_classes(B):
    algs = enumerate_algebras(B, {"a": 2, "b": 2})
    classes = IsoClasses(algs)
    assert len(classes) == 3
    assert len(enumerate_algebras(B, {"a": 2, "b": 2}, iso_classes=True)) == 3
    for A in algs:
        assert 0 <= classes.index(A) < 3


def test_restriction(B):
    A = enumerate_algebras(B, {"a": 2, "b": 2})[5]
    assert restrict_algebra(identity_operad_map(B), A).tables == A.tables
    K, unit = cauchy_completion_operad(B)
    inj, surj, _ = restriction_on_iso_classes(unit, 2)
    assert inj and surj


def test_restriction_forgets_splitting(jsplit):
    f = functor_to_operad_map(iota())
    for A in enumerate_algebras(jsplit, {"0": 2, "1": 1}):
        R = restrict_algebra(f, A)
        assert R.carrier == {"0": 2}
        assert R.tables["e"] == A.tables["ir"]


def test_restriction_along_non_morita(B):
    _, inc = suboperad(B, ["a"])
    inj, surj, witness = restriction_on_iso_classes(inc, 2)
    assert not (inj and surj) and witness is not None


def test_algebra_json(B):
    A = enumerate_algebras(B, {"a": 2, "b": 2})[3]
    assert algebra_from_json(A.to_json(), B).tables == A.tables


def test_bad_algebra(B):
    # m(0,1) != m(1,0) breaks symmetry
    with pytest.raises(BadAlgebra):
        FiniteAlgebra(B, {"a": 2, "b": 2}, {"m": (0, 1, 0, 0)})


def test_operad_maps(B):
    C2 = free_operad_on_tree(corolla())
    assert len(enumerate_operad_maps(C2, C2)) == 2
    assert len(enumerate_operad_maps(B, B)) == 1
    f = identity_operad_map(B)
    assert operad_map_from_json(f.to_json(), B, B).key() == f.key()
    with pytest.raises(NotAnOperadMap):
        OperadMap(B, B, {"a": "b", "b": "a"}, {"m": "m"})


def test_j_shriek_of_functors():
    for n in range(3):
        C = linear_category(n)
        f = functor_to_operad_map(identity_functor(C))
        assert is_equivalence_op(f)
