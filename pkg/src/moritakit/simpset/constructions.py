"""Pushouts, the Ret construction with its map to N(Split), and lifting checks."""

import sys

from .._limits import Budget
from ..errors import BadParameters, IllFormed, LimitExceeded, NotSimplicial
from ..fincat.category import standard_category
from .sset import SimpMap, TruncSSet, chain_map, nerve, point_map, skey, standard_cells


def pushout(f, g):
    """Levelwise pushout of ``B <-f- A -g-> C``.

    Simplices are union-find classes of ``("B", b)`` / ``("C", c)``; each class
    is named by its least member.  Returns ``(P, leg_B, leg_C)``.
    """
    A, B, C = f.source, f.target, g.target
    if g.source is not A and g.source.counts() != A.counts():
        raise BadParameters("pushout legs have different sources")
    if not (A.dim == B.dim == C.dim):
        raise BadParameters("pushout needs a common truncation")
    D = A.dim
    rep = []
    levels = []
    for n in range(D + 1):
        parent = {("B", b): ("B", b) for b in B.levels[n]}
        parent.update({("C", c): ("C", c) for c in C.levels[n]})

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in A.levels[n]:
            x, y = find(("B", f(n, a))), find(("C", g(n, a)))
            if x != y:
                if skey(x) < skey(y):
                    x, y = y, x
                parent[x] = y
        r = {v: find(v) for v in parent}
        rep.append(r)
        levels.append(sorted(set(r.values()), key=skey))

    def induced(n, v, op, k):
        tag, s = v
        src = B if tag == "B" else C
        table = src.faces if op == "d" else src.degens
        return rep[n - 1 if op == "d" else n + 1][(tag, table[(n, k)][s])]

    faces, degens = {}, {}
    for n in range(1, D + 1):
        for k in range(n + 1):
            m = {}
            for v, cls in rep[n].items():
                val = induced(n, v, "d", k)
                if m.setdefault(cls, val) != val:
                    raise IllFormed(f"face d_{k} not well defined on class {cls!r}", (n, k, cls))
            faces[(n, k)] = m
    for n in range(D):
        for k in range(n + 1):
            m = {}
            for v, cls in rep[n].items():
                val = induced(n, v, "s", k)
                if m.setdefault(cls, val) != val:
                    raise IllFormed(f"degeneracy s_{k} not well defined on class {cls!r}", (n, k, cls))
            degens[(n, k)] = m
    try:
        P = TruncSSet(D, levels, faces, degens)
    except NotSimplicial as exc:
        raise IllFormed(str(exc), exc.witness) from None
    leg_B = SimpMap(B, P, [{b: rep[n][("B", b)] for b in B.levels[n]} for n in range(D + 1)])
    leg_C = SimpMap(C, P, [{c: rep[n][("C", c)] for c in C.levels[n]} for n in range(D + 1)])
    return P, leg_B, leg_C


def induced_from_pushout(P, leg_B, leg_C, u, v):
    """The map ``P -> Z`` induced by ``u: B -> Z`` and ``v: C -> Z``."""
    maps = []
    for n in range(P.dim + 1):
        m = {}
        for leg, w in ((leg_B, u), (leg_C, v)):
            for s, cls in leg.level_maps[n].items():
                val = w(n, s)
                if m.setdefault(cls, val) != val:
                    raise IllFormed(f"cocone legs disagree on {cls!r}", (n, cls))
        maps.append(m)
    return SimpMap(P, u.target, maps)


def build_ret(D=4):
    """``Ret = Delta[2] +_{Delta[1]} Delta[0]`` along ``(d_1, s_0)`` and ``rho: Ret -> N(Split)``.

    ``rho`` is induced by the vertex ``1`` and the 2-simplex ``(i, r)`` (with
    ``r . i = id_1`` on its long edge).
    """
    if D < 2:
        raise BadParameters("Ret needs D >= 2")
    d1 = _vertex_tuple_map(standard_cells(("simplex", 1), D), standard_cells(("simplex", 2), D), {0: 0, 1: 2})
    s0 = _vertex_tuple_map(standard_cells(("simplex", 1), D), standard_cells(("simplex", 0), D), {0: 0, 1: 0})
    ret, leg2, leg0 = pushout(d1, s0)
    split = standard_category("Split")
    NS = nerve(split, D)
    rho = induced_from_pushout(
        ret,
        leg2,
        leg0,
        chain_map(split, ("i", "r"), D, NS),
        point_map(split, "1", D, NS),
    )
    return ret, rho


def _vertex_tuple_map(X, Y, vmap):
    return SimpMap(X, Y, [{t: tuple(vmap[v] for v in t) for t in lv} for lv in X.levels])


# -- lifting -----------------------------------------------------------------
def enumerate_simp_maps(A, X, fixed=None, allowed=None, limit=100_000, first=False):
    """All simplicial maps ``A -> X`` (common truncation).

    ``fixed`` pins values ``{(n, a): x}``; ``allowed(n, a, x)`` filters
    candidates; ``first`` stops at the first map found.  Degenerate
    simplices are forced by their degeneracies, so the search branches only on
    nondegenerate simplices.
    """
    if A.dim != X.dim:
        raise BadParameters("enumerate_simp_maps needs a common truncation")
    D = A.dim
    fixed = fixed or {}
    budget = Budget("enumerate_simp_maps")
    # how each degenerate simplex arises
    degen_src = [dict() for _ in range(D + 1)]
    for n in range(D):
        for k in range(n + 1):
            for a, b in A.degens[(n, k)].items():
                degen_src[n + 1].setdefault(b, (k, a))
    by_faces = []
    for n in range(D + 1):
        idx = {}
        for x in X.levels[n]:
            key = tuple(X.face(n, k, x) for k in range(n + 1)) if n else ()
            idx.setdefault(key, []).append(x)
        by_faces.append(idx)
    order = [(n, a) for n in range(D + 1) for a in A.levels[n]]
    found = []
    assign = [dict() for _ in range(D + 1)]

    def options(n, a):
        if a in degen_src[n]:
            k, lower = degen_src[n][a]
            cands = [X.degen(n - 1, k, assign[n - 1][lower])]
        else:
            key = tuple(assign[n - 1][A.face(n, k, a)] for k in range(n + 1)) if n else ()
            cands = by_faces[n].get(key, [])
        out = []
        for x in cands:
            if (n, a) in fixed and fixed[(n, a)] != x:
                continue
            if n and any(X.face(n, k, x) != assign[n - 1][A.face(n, k, a)] for k in range(n + 1)):
                continue
            if allowed is not None and not allowed(n, a, x):
                continue
            out.append(x)
        return out

    def go(pos):
        if pos == len(order):
            m = SimpMap(A, X, [dict(lv) for lv in assign], check=False)
            found.append(m)
            if first:
                raise _Found
            if len(found) > limit:
                raise LimitExceeded(f"more than {limit} simplicial maps")
            return
        n, a = order[pos]
        for x in options(n, a):
            budget.spend()
            assign[n][a] = x
            go(pos + 1)
        assign[n].pop(a, None)

    sys.setrecursionlimit(max(sys.getrecursionlimit(), len(order) + 200))
    try:
        go(0)
    except _Found:
        pass
    return found


class _Found(Exception):
    pass


def has_rlp_sset(p, i, D=None, limit=100_000):
    """Truncated right lifting property of ``p: X -> Y`` against ``i: A -> B``.

    Exhaustive over all commutative squares within the common truncation; an
    approximation of the untruncated property valid only up to ``dim``.
    """
    A, B = i.source, i.target
    X, Y = p.source, p.target
    if D is not None and D != A.dim:
        raise BadParameters("has_rlp_sset: D does not match the truncation of the inputs")
    for u in enumerate_simp_maps(A, X, limit=limit):
        pu = u.then(p)
        for v in enumerate_simp_maps(B, Y, limit=limit):
            if i.then(v).key() != pu.key():
                continue
            fixed = {}
            clash = False
            for n in range(A.dim + 1):
                for a in A.levels[n]:
                    b = i(n, a)
                    if fixed.setdefault((n, b), u(n, a)) != u(n, a):
                        clash = True
            if clash:
                return False
            lifts = enumerate_simp_maps(
                B, X, fixed=fixed, allowed=lambda n, b, x, v=v: p(n, x) == v(n, b), first=True
            )
            if not lifts:
                return False
    return True


def terminal_map(X):
    """``X -> Delta[0]``."""
    pt = standard_cells(("simplex", 0), X.dim)
    return SimpMap(X, pt, [{s: lv_pt[0] for s in lv} for lv, lv_pt in zip(X.levels, pt.levels)], check=False)
