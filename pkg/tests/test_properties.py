"""Invariants as hypothesis properties over small random categories and operads."""

import random

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from moritakit.bar import compare_pi0, kan_colim_oracle, representable
from moritakit.cli.corpus import random_function_category
from moritakit.errors import LimitExceeded
from moritakit.fincat import (
    enumerate_functors,
    has_rlp_cat,
    identity_functor,
    iota,
    iota_locality_check,
    is_cauchy_complete,
    is_equivalence,
    karoubi_envelope,
    karoubi_functor,
    morita_report,
    to_terminal,
    validate_category,
)
from moritakit.operad import category_to_operad, random_function_operad, underlying_category, validate_operad
from moritakit.operad import perm as P
from moritakit.simpset import nerve
from moritakit.theory import (
    clone_hom,
    compose_theory,
    identity_arrow,
    theory_hom,
    theory_hom_size,
    words_up_to,
)

from . import oracles

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def categories(draw, max_objects=3, max_morphisms=10):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_function_category(random.Random(seed), max_objects, max_morphisms)


@st.composite
def operads(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_function_operad(random.Random(seed), max_colours=2, max_ops=8, max_arity=2, max_size=2)


@st.composite
def functors(draw):
    C, D = draw(categories()), draw(categories())
    try:
        fs = enumerate_functors(C, D, 2000)
    except LimitExceeded:
        fs = []
    assume(fs)
    return draw(st.sampled_from(fs))


perms = st.integers(1, 4).flatmap(lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n))))


@SETTINGS
@given(perms)
def test_right_action_laws(pair):
    s, t = tuple(pair[0]), tuple(pair[1])
    w = tuple("abcd"[: len(s)])
    assert P.act_word(P.act_word(w, s), t) == P.act_word(w, P.compose(s, t))
    assert P.act_word(w, P.identity(len(s))) == w
    assert P.compose(s, P.inverse(s)) == P.identity(len(s))


@SETTINGS
@given(categories())
def test_generated_categories_satisfy_axioms(C):
    D = validate_category(C.to_json())
    for (g, f), gf in C.table.items():
        assert C.dom(gf) == C.dom(f) and C.cod(gf) == C.cod(g)
    assert D == C


@SETTINGS
@given(categories())
def test_karoubi_envelope_is_complete_and_idempotent(C):
    K, unit = karoubi_envelope(C)
    assert is_cauchy_complete(K)
    assert morita_report(unit).verdict
    K2, unit2 = karoubi_envelope(K)
    assert is_equivalence(unit2)


@SETTINGS
@given(categories())
def test_cauchy_triple(C):
    a = is_cauchy_complete(C)
    assert a == has_rlp_cat(to_terminal(C), iota()) == iota_locality_check(C)
    assert a == all(oracles.splits(C, e) for e in oracles.idempotents(C))


@SETTINGS
@given(functors())
def test_morita_matches_karoubi(F):
    assert morita_report(F).verdict == is_equivalence(karoubi_functor(F))


@SETTINGS
@given(categories())
def test_nerve_levels_and_identities(C):
    N = nerve(C, 3)
    N.validate()
    assert N.counts() == tuple(oracles.chain_count(C, n) for n in range(4))


@SETTINGS
@given(categories())
def test_inner_horns_fill_uniquely(C):
    N = nerve(C, 2)
    fillers = {}
    for s in N.levels[2]:
        key = (N.face(2, 0, s), N.face(2, 2, s))
        fillers.setdefault(key, []).append(s)
    assert all(len(v) == 1 for v in fillers.values())
    composable = sum(1 for f in C.morphisms for g in C.morphisms if C.cod(f) == C.dom(g))
    assert len(fillers) == composable


@SETTINGS
@given(operads())
def test_generated_operads_validate(O):
    assert validate_operad(O.to_json()).key() == O.key()


@SETTINGS
@given(operads())
def test_clone_hom_matches_oracle(O):
    for w in words_up_to(O.colours, 2):
        for d in O.colours:
            assert len(clone_hom(O, w, d)) == oracles.clone_count(O, w, d)


@SETTINGS
@given(operads(), st.integers(0, 10**6))
def test_theory_composition_laws(O, seed):
    rng = random.Random(seed)
    words = list(words_up_to(O.colours, 2))
    a, b, c, d = (rng.choice(words) for _ in range(4))
    fs, gs, hs = theory_hom(O, a, b), theory_hom(O, b, c), theory_hom(O, c, d)
    assume(fs and gs and hs)
    f, g, h = rng.choice(fs), rng.choice(gs), rng.choice(hs)
    assert compose_theory(O, identity_arrow(O, b), f) == f == compose_theory(O, f, identity_arrow(O, a))
    assert compose_theory(O, compose_theory(O, h, g), f) == compose_theory(O, h, compose_theory(O, g, f))
    assert compose_theory(O, g, f, rng) == compose_theory(O, g, f)


@SETTINGS
@given(operads())
def test_product_law(O):
    for c in words_up_to(O.colours, 2):
        for d in words_up_to(O.colours, 2):
            n = 1
            for x in d:
                n *= len(clone_hom(O, c, x))
            assert theory_hom_size(O, c, d) == n


@SETTINGS
@given(categories())
def test_unary_image_round_trip(C):
    assert underlying_category(category_to_operad(C)) == C


@SETTINGS
@given(functors())
def test_bar_pi0_matches_coend(F):
    C = F.source
    for c in C.objects:
        X = representable(C, c)
        for d in F.target.objects:
            assert compare_pi0(F, X, d, 2)
            assert len(kan_colim_oracle(F, X, d)) == oracles.coend_classes(F, X, d)


@SETTINGS
@given(categories())
def test_identity_kan_extension_is_trivial(C):
    f = identity_functor(C)
    for c in C.objects:
        for d in C.objects:
            assert len(kan_colim_oracle(f, representable(C, c), d)) == len(C.hom(c, d))
