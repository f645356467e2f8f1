"""Values produced once by the brute-force oracles in ``oracles.py`` and frozen here.

The library and the oracle are both compared against the stored values so
a silent change in either shows up.
"""

import pytest

from moritakit.bar import kan_colim_oracle, representable
from moritakit.fincat import enumerate_functors, identity_functor, iota, standard_category
from moritakit.operad import category_to_operad, corolla, enumerate_algebras, free_operad_on_tree, operad_B
from moritakit.simpset import nerve
from moritakit.theory import clone_hom, words_up_to

from . import oracles

FUNCTOR_COUNTS = {
    ("terminal", "Idem"): 1, ("terminal", "Split"): 2, ("terminal", "J"): 2,
    ("Idem", "Idem"): 2, ("Idem", "Split"): 3, ("Idem", "J"): 2,
    ("Split", "Idem"): 1, ("Split", "Split"): 3, ("Split", "J"): 4,
    ("I", "Idem"): 2, ("I", "Split"): 5, ("I", "J"): 4,
    ("P", "Idem"): 4, ("P", "Split"): 7, ("P", "J"): 4,
    ("J", "Idem"): 1, ("J", "Split"): 2, ("J", "J"): 4,
}

NERVE_COUNTS = {
    "terminal": (1, 1, 1, 1),
    "Idem": (1, 2, 4, 8),
    "Split": (2, 5, 13, 34),
    "I": (2, 3, 4, 5),
    "P": (2, 4, 6, 8),
    "J": (2, 4, 8, 16),
    "linear2": (3, 6, 10, 15),
}

# nonzero clone sizes for words of length <= 2
CLONE_SIZES = {
    "B": {
        (("a",), "a"): 1, (("a",), "b"): 1, (("b",), "b"): 1,
        (("a", "a"), "a"): 2, (("a", "a"), "b"): 3,
        (("a", "b"), "a"): 1, (("a", "b"), "b"): 2,
        (("b", "a"), "a"): 1, (("b", "a"), "b"): 2,
        (("b", "b"), "b"): 2,
    },
    "C2": {
        (("a",), "a"): 1, (("b",), "b"): 1, (("r",), "r"): 1,
        (("a", "a"), "a"): 2, (("a", "b"), "a"): 1, (("a", "b"), "b"): 1, (("a", "b"), "r"): 1,
        (("a", "r"), "a"): 1, (("a", "r"), "r"): 1,
        (("b", "a"), "a"): 1, (("b", "a"), "b"): 1, (("b", "a"), "r"): 1,
        (("b", "b"), "b"): 2, (("b", "r"), "b"): 1, (("b", "r"), "r"): 1,
        (("r", "a"), "a"): 1, (("r", "a"), "r"): 1, (("r", "b"), "b"): 1, (("r", "b"), "r"): 1,
        (("r", "r"), "r"): 2,
    },
}

SYMMETRIC_BINARY = {(1, 2): 2, (1, 3): 3, (2, 1): 1, (2, 2): 8, (2, 3): 27, (3, 2): 64}
IDEMPOTENT_ENDOS = {0: 1, 1: 1, 2: 3, 3: 10, 4: 41}
IOTA_COEND = {("0", "0"): 2, ("0", "1"): 1}


@pytest.mark.parametrize("pair", sorted(FUNCTOR_COUNTS))
def test_functor_counts(pair):
    C, D = (standard_category(n) for n in pair)
    assert len(enumerate_functors(C, D)) == FUNCTOR_COUNTS[pair] == oracles.functor_count(C, D)


@pytest.mark.parametrize("name", sorted(NERVE_COUNTS))
def test_nerve_counts(name):
    C = standard_category(name)
    assert nerve(C, 3).counts() == NERVE_COUNTS[name]
    assert tuple(oracles.chain_count(C, n) for n in range(4)) == NERVE_COUNTS[name]


@pytest.mark.parametrize("name", sorted(CLONE_SIZES))
def test_clone_sizes(name):
    O = operad_B() if name == "B" else free_operad_on_tree(corolla())
    table = CLONE_SIZES[name]
    for w in words_up_to(O.colours, 2):
        for d in O.colours:
            want = table.get((w, d), 0)
            assert len(clone_hom(O, w, d)) == want == oracles.clone_count(O, w, d)


def test_symmetric_binary_algebras():
    B = operad_B()
    for (na, nb), n in SYMMETRIC_BINARY.items():
        assert len(enumerate_algebras(B, {"a": na, "b": nb})) == n == oracles.symmetric_binary_algebras(na, nb)


def test_idempotent_endofunction_algebras():
    jidem = category_to_operad(standard_category("Idem"))
    for k, n in IDEMPOTENT_ENDOS.items():
        if k <= 3:
            assert len(enumerate_algebras(jidem, {"0": k})) == n
        assert oracles.idempotent_endofunctions(k) == n


def test_iota_coend():
    f = iota()
    for (c, d), n in IOTA_COEND.items():
        X = representable(f.source, c)
        assert len(kan_colim_oracle(f, X, d)) == n == oracles.coend_classes(f, X, d)
    S = standard_category("Split")
    g = identity_functor(S)
    for c in S.objects:
        for d in S.objects:
            assert len(kan_colim_oracle(g, representable(S, c), d)) == len(S.hom(c, d))
