import pytest

from moritakit.errors import MissingComposite, NonAssociative, NotAFunctor, ValidationError
from moritakit.fincat import (
    Functor,
    constant_functor,
    enumerate_functors,
    functor_from_json,
    has_rlp_cat,
    identity_functor,
    iota,
    iota_locality_check,
    is_cauchy_complete,
    is_equivalence,
    is_fully_faithful,
    karoubi_envelope,
    karoubi_functor,
    linear_category,
    morita_cross_check,
    morita_report,
    retract_witness,
    split_idempotent,
    standard_category,
    to_terminal,
    validate_category,
)

from . import oracles

IDEM = {
    "objects": ["0"],
    "morphisms": [{"id": "e", "dom": "0", "cod": "0"}, {"id": "id_0", "dom": "0", "cod": "0"}],
    "identities": {"0": "id_0"},
    "compose": [["e", "e", "e"], ["e", "id_0", "e"], ["id_0", "e", "e"], ["id_0", "id_0", "id_0"]],
}

# one object, a.a = b, a.b = a, b.a = b, b.b = b: (a.b).a = b but a.(b.a) = a
NON_ASSOC = {
    "objects": ["0"],
    "morphisms": [{"id": m, "dom": "0", "cod": "0"} for m in ("id_0", "a", "b")],
    "identities": {"0": "id_0"},
    "compose": [["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "b"]],
}


@pytest.fixture(scope="module")
def cats():
    return {n: standard_category(n) for n in ("Idem", "Split", "terminal", "I", "P", "J")}


def test_validate_idem_table():
    C = validate_category(IDEM)
    assert len(C.objects) == 1 and len(C.morphisms) == 2


def test_missing_composite():
    raw = dict(IDEM, compose=[c for c in IDEM["compose"] if c[:2] != ["e", "e"]])
    with pytest.raises(MissingComposite) as exc:
        validate_category(raw)
    assert exc.value.witness == ("e", "e")


def test_non_associative_witness():
    with pytest.raises(NonAssociative) as exc:
        validate_category(NON_ASSOC)
    assert exc.value.witness is not None


def test_malformed_description():
    with pytest.raises(ValidationError):
        validate_category({"objects": ["0"]})


def test_standard_categories(cats):
    idem, split, term = cats["Idem"], cats["Split"], cats["terminal"]
    assert idem.compose("e", "e") == "e"
    assert (len(split.objects), len(split.morphisms)) == (2, 5)
    assert split.compose("r", "i") == "id_1"
    assert split.compose("i", "r") == "ir"
    assert (len(term.objects), len(term.morphisms)) == (1, 1)


def test_linear_category_counts():
    # [n] has (n+1)(n+2)/2 morphisms
    for n in range(4):
        assert len(linear_category(n).morphisms) == (n + 1) * (n + 2) // 2


def test_json_roundtrip(cats):
    for C in cats.values():
        assert validate_category(C.to_json()) == C


def test_split_idempotent(cats):
    assert split_idempotent(cats["Split"], "ir") == ("r", "i")
    assert split_idempotent(cats["Idem"], "e") is None
    for C in cats.values():
        for x in C.objects:
            i = C.identity[x]
            assert split_idempotent(C, i) == (i, i)


def test_karoubi_envelope_idem(cats):
    K, unit = karoubi_envelope(cats["Idem"])
    assert (len(K.objects), len(K.morphisms)) == (2, 5)
    F = Functor(cats["Split"], K, {"0": "(0,id_0)", "1": "(0,e)"}, _split_to_karoubi(K), check=True)
    assert is_equivalence(F)
    assert not is_equivalence(unit)


def _split_to_karoubi(K):
    def pick(d, c, *excl):
        ms = [m for m in K.hom(d, c) if m not in excl]
        return ms[0]

    a, b = "(0,id_0)", "(0,e)"
    i = pick(b, a)
    r = pick(a, b)
    return {"i": i, "r": r, "ir": K.compose(i, r)}


def test_karoubi_of_terminal_and_split(cats):
    K, _ = karoubi_envelope(cats["terminal"])
    assert len(K.objects) == 1 and len(K.morphisms) == 1
    K, unit = karoubi_envelope(cats["Split"])
    assert K.objects == ("(0,id_0)", "(0,ir)", "(1,id_1)")
    assert is_equivalence(unit)


def test_cauchy_complete(cats):
    assert is_cauchy_complete(cats["Split"])
    assert not is_cauchy_complete(cats["Idem"])
    assert is_cauchy_complete(cats["terminal"])


def test_morita_reports(cats):
    r = morita_report(iota())
    assert r.fully_faithful and r.essentially_surjective_up_to_retracts and r.verdict
    assert not r.essentially_surjective
    assert r.witnesses["1"]["retract"] == ("0", "r", "i")
    assert morita_report(identity_functor(cats["Split"])).verdict
    F = constant_functor(cats["terminal"], cats["Split"], "0")
    assert not is_fully_faithful(F)
    assert not morita_report(F).verdict


def test_retract_witness(cats):
    assert retract_witness(cats["Split"], "1", "0") == ("r", "i")
    assert retract_witness(cats["Idem"], "0", "0") == ("id_0", "id_0")


def test_is_equivalence(cats):
    _, unit = karoubi_envelope(cats["Idem"])
    assert not is_equivalence(unit)
    assert is_equivalence(karoubi_functor(iota()))
    assert is_equivalence(identity_functor(cats["J"]))


def test_cross_check(cats):
    assert morita_cross_check(iota())
    assert morita_cross_check(constant_functor(cats["terminal"], cats["Split"], "0"))
    assert morita_cross_check(identity_functor(cats["P"]))


def test_enumerate_functors_counts(cats):
    idem, split, term = cats["Idem"], cats["Split"], cats["terminal"]
    targets = sorted(F.mor_map["e"] for F in enumerate_functors(idem, split))
    assert targets == ["id_0", "id_1", "ir"]
    assert len(enumerate_functors(split, split)) == 3
    for C in cats.values():
        assert len(enumerate_functors(term, C)) == len(C.objects)


@pytest.mark.parametrize("a", ["Idem", "Split", "I", "P", "J"])
@pytest.mark.parametrize("b", ["Idem", "Split", "I", "J"])
def test_enumerate_functors_vs_oracle(cats, a, b):
    assert len(enumerate_functors(cats[a], cats[b])) == oracles.functor_count(cats[a], cats[b])


def test_rlp_against_iota(cats):
    assert has_rlp_cat(to_terminal(cats["Split"]), iota())
    assert not has_rlp_cat(to_terminal(cats["Idem"]), iota())
    I = identity_functor(cats["Idem"])
    for C in cats.values():
        assert has_rlp_cat(to_terminal(C), identity_functor(C))
    assert has_rlp_cat(to_terminal(cats["Idem"]), I)


def test_iota_locality(cats):
    assert iota_locality_check(cats["Split"])
    assert not iota_locality_check(cats["Idem"])
    assert iota_locality_check(cats["terminal"])


def test_cauchy_vs_oracle(cats):
    for C in cats.values():
        want = all(oracles.splits(C, e) for e in oracles.idempotents(C))
        assert is_cauchy_complete(C) == want


def test_bad_functor(cats):
    with pytest.raises(NotAFunctor):
        Functor(cats["Idem"], cats["Split"], {"0": "0"}, {"e": "r"})


def test_functor_json_roundtrip():
    F = iota()
    G = functor_from_json(F.to_json(), {})
    assert G.key() == F.key()
