"""Enumeration of operad maps and random concrete operads for corpora."""

from itertools import product

from .._limits import Budget
from ..errors import LimitExceeded
from . import perm as P
from .core import OperadMap
from .standard import function_operad


def enumerate_operad_maps(S, T, limit=10_000, colour_maps=None):
    """All operad maps ``S -> T`` in canonical order (colour maps, then op images by id)."""
    budget = Budget("enumerate_operad_maps")
    found = []
    # one representative per action orbit; the rest follow by equivariance
    reps = []
    orbit_of = {}
    for o in sorted(S.ops):
        if S.is_identity(o) or o in orbit_of:
            continue
        reps.append(o)
        for s in P.all_perms(S.arity(o)):
            orbit_of.setdefault(S.act(o, s), (o, s))
    rank = {o: k for k, o in enumerate(reps)}
    checks = [[] for _ in reps]
    for (o, qs), r in S.table.items():
        involved = [orbit_of[x][0] for x in (o, *qs, r) if x in orbit_of]
        if involved:
            checks[max(rank[x] for x in involved)].append((o, qs, r))
    for (o, s), r in S.action.items():
        if o in orbit_of:
            checks[rank[orbit_of[o][0]]].append(("act", o, s, r))
    if colour_maps is None:
        colour_maps = (dict(zip(S.colours, cs)) for cs in product(T.colours, repeat=len(S.colours)))
    for cmap in colour_maps:
        img = {S.identities[c]: T.identities[cmap[c]] for c in S.colours}

        def fill(o):
            for x, (rep, s) in orbit_of.items():
                if rep == o:
                    img[x] = T.act(img[o], s)

        def ok(k):
            for chk in checks[k]:
                if chk[0] == "act":
                    _, o, s, r = chk
                    if T.act(img[o], s) != img[r]:
                        return False
                else:
                    o, qs, r = chk
                    if T.gamma(img[o], tuple(img[q] for q in qs)) != img[r]:
                        return False
            return True

        def go(k):
            if k == len(reps):
                found.append(OperadMap(S, T, cmap, dict(img), check=False))
                if len(found) > limit:
                    raise LimitExceeded(f"more than {limit} operad maps")
                return
            o = reps[k]
            ins, out = S.ops[o]
            for cand in T.hom(tuple(cmap[c] for c in ins), cmap[out]):
                budget.spend()
                img[o] = cand
                fill(o)
                if ok(k):
                    go(k + 1)
            for x, (rep, s) in orbit_of.items():
                if rep == o:
                    img.pop(x, None)

        go(0)
    return found


def random_function_operad(rng, max_colours=2, max_ops=10, max_arity=3, max_size=2, attempts=50):
    """A random suboperad of an endomorphism operad with at most ``max_ops`` operations.

    Colours split into a base part and a top part; operations of arity
    other than one land in the top part so that composites stay scarce.
    """
    for _ in range(attempts):
        n_col = rng.randint(1, max_colours)
        cols = [chr(ord("a") + k) for k in range(n_col)]
        sizes = {c: rng.randint(1, max_size) for c in cols}
        n_base = rng.randint(1, n_col)
        base, top = cols[:n_base], cols[n_base:] or cols[-1:]
        gens = []
        for _ in range(rng.randint(1, 3)):
            kind = rng.random()
            if kind < 0.45:
                pool = [(x, y) for x in cols for y in cols if (x in base) or (y in top)]
                x, y = rng.choice(pool)
                table = tuple(rng.randrange(sizes[y]) for _ in range(sizes[x]))
                gens.append(((x,), y, table))
            else:
                n = rng.choice([k for k in (0, 2, 2, 3) if k <= max_arity])
                ins = tuple(rng.choice(base) for _ in range(n))
                y = rng.choice(top)
                n_pts = 1
                for c in ins:
                    n_pts *= sizes[c]
                gens.append((ins, y, tuple(rng.randrange(sizes[y]) for _ in range(n_pts))))
        try:
            O = function_operad(sizes, gens, cap=max_ops, max_arity=max_arity)
        except LimitExceeded:
            continue
        return O
    return function_operad({"a": 1}, [])
