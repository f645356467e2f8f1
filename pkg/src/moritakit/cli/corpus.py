"""Seeded random corpora of categories, functors, operads and operad maps."""

import random

from ..errors import LimitExceeded, MoritaKitError
from ..fincat import (
    FinCategory,
    enumerate_functors,
    identity_functor,
    inclusion_functor,
    iota,
    karoubi_envelope,
    standard_category,
)
from ..operad import (
    category_to_operad,
    cauchy_completion_operad,
    enumerate_operad_maps,
    free_operad_on_tree,
    corolla,
    functor_to_operad_map,
    identity_operad_map,
    linear_tree,
    operad_B,
    random_function_operad,
    suboperad,
    terminal_operad,
)

NAMED_CATEGORIES = ("terminal", "Idem", "Split", "I", "P", "J", "linear2")


def random_function_category(rng, max_objects=4, max_morphisms=15, max_size=3, attempts=200):
    """Objects are small finite sets; morphisms are the closure of a few random functions.

    Rejects closures over ``max_morphisms``.  Morphism ids are ``f<k>`` in
    a canonical order and identities are ``id_<object>``.
    """
    for _ in range(attempts):
        n = rng.randint(1, max_objects)
        objs = [str(k) for k in range(n)]
        size = {x: rng.randint(1, max_size) for x in objs}
        gens = set()
        for _ in range(rng.randint(0, 3)):
            x, y = rng.choice(objs), rng.choice(objs)
            gens.add((x, y, tuple(rng.randrange(size[y]) for _ in range(size[x]))))
        mors = {(x, x, tuple(range(size[x]))) for x in objs} | gens
        frontier = set(mors)
        ok = True
        while frontier and ok:
            fresh = set()
            for a in frontier:
                for b in list(mors):
                    for f, g in ((a, b), (b, a)):
                        if f[1] == g[0]:
                            h = (f[0], g[1], tuple(g[2][v] for v in f[2]))
                            if h not in mors:
                                fresh.add(h)
            mors |= fresh
            frontier = fresh
            if len(mors) > max_morphisms:
                ok = False
        if not ok:
            continue
        return _category_from_functions(objs, mors)
    return standard_category("terminal")


def _category_from_functions(objs, mors):
    ordered = sorted(mors, key=lambda m: (m[0], m[1], m[2]))
    name = {}
    k = 0
    for m in ordered:
        if m[0] == m[1] and m[2] == tuple(range(len(m[2]))):
            name[m] = f"id_{m[0]}"
        else:
            name[m] = f"f{k}"
            k += 1
    morphisms = {name[m]: (m[0], m[1]) for m in ordered}
    identity = {x: f"id_{x}" for x in objs}
    table = {}
    for f in ordered:
        for g in ordered:
            if f[1] == g[0]:
                table[(name[g], name[f])] = name[(f[0], g[1], tuple(g[2][v] for v in f[2]))]
    return FinCategory(objs, morphisms, identity, table)


def category_corpus(rng, count, max_objects=4, max_morphisms=15):
    cats = [standard_category(n) for n in NAMED_CATEGORIES]
    cats.append(karoubi_envelope(standard_category("Idem"))[0])
    while len(cats) < count:
        cats.append(random_function_category(rng, max_objects, max_morphisms))
    return cats[:count]


def functor_corpus(rng, cats, count, per_pair=3, limit=2000):
    """Named functors (``iota``, identities, Karoubi units, inclusions) then random samples."""
    out = [iota()]
    for C in cats[:8]:
        out.append(identity_functor(C))
        out.append(karoubi_envelope(C)[1])
        if len(C.objects) > 1:
            out.append(inclusion_functor(C, C.full_subcategory(C.objects[:-1])))
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        C, D = rng.choice(cats), rng.choice(cats)
        try:
            fs = enumerate_functors(C, D, limit)
        except LimitExceeded:
            continue
        if not fs:
            continue
        for F in rng.sample(fs, min(per_pair, len(fs))):
            out.append(F)
    return out[:count]


def named_operads():
    B = operad_B()
    out = [
        ("terminal", terminal_operad()),
        ("B", B),
        ("j_Idem", category_to_operad(standard_category("Idem"))),
        ("j_Split", category_to_operad(standard_category("Split"))),
        ("j_J", category_to_operad(standard_category("J"))),
        ("Omega_C2", free_operad_on_tree(corolla())),
        ("Omega_L2", free_operad_on_tree(linear_tree(2))),
        ("Cauchy_j_Idem", cauchy_completion_operad(category_to_operad(standard_category("Idem")))[0]),
    ]
    return out


def operad_corpus(rng, count, max_colours=3, max_ops=10, max_arity=3, max_size=2):
    """``(name, operad)`` pairs: named operads, images of random categories and random function operads."""
    out = named_operads()
    k = 0
    while len(out) < count:
        k += 1
        if k % 4 == 0:
            C = random_function_category(rng, min(3, max_colours), max_ops)
            out.append((f"j_rand{k}", category_to_operad(C)))
        else:
            O = random_function_operad(rng, max_colours=max_colours, max_ops=max_ops, max_arity=max_arity, max_size=max_size)
            out.append((f"fun{k}", O))
    return out[:count]


def map_corpus(rng, operads, functors, count, limit=500):
    """``(name, OperadMap)`` pairs of several kinds, all with finite small operads."""
    out = []
    for name, O in operads:
        out.append((f"id:{name}", identity_operad_map(O)))
        try:
            K, u = cauchy_completion_operad(O)
        except MoritaKitError:
            continue
        if len(K.ops) <= 60:
            out.append((f"unit:{name}", u))
        if len(O.colours) > 1:
            S, inc = suboperad(O, O.colours[:-1])
            out.append((f"sub:{name}", inc))
    for k, F in enumerate(functors[:20]):
        out.append((f"j:{k}", functor_to_operad_map(F)))
    tries = 0
    while len(out) < count and tries < 20 * count:
        tries += 1
        (n1, S), (n2, T) = rng.choice(operads), rng.choice(operads)
        try:
            ms = enumerate_operad_maps(S, T, limit)
        except LimitExceeded:
            continue
        if ms:
            f = rng.choice(ms)
            out.append((f"{n1}->{n2}#{len(out)}", f))
    return out[:count]


def seeded(seed, tag):
    """An independent stream for one corpus kind."""
    return random.Random(f"{seed}:{tag}")
