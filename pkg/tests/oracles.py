"""Brute-force reference computations, written without the library's algorithms.

Each oracle scans a full candidate space; they are slow and only meant for
the tiny inputs in the tests.
"""

from itertools import permutations, product


def functor_count(C, D):
    """All object/morphism assignments that preserve types, identities and composites."""
    objs = list(C.objects)
    mors = list(C.morphisms)
    n = 0
    for ob in product(D.objects, repeat=len(objs)):
        om = dict(zip(objs, ob))
        choices = []
        for m in mors:
            d, c = C.morphisms[m]
            choices.append([g for g, (x, y) in D.morphisms.items() if x == om[d] and y == om[c]])
        for mm in product(*choices):
            mm = dict(zip(mors, mm))
            if any(mm[C.identity[x]] != D.identity[om[x]] for x in objs):
                continue
            if all(D.table[(mm[g], mm[f])] == mm[gf] for (g, f), gf in C.table.items()):
                n += 1
    return n


def chain_count(C, n):
    """Composable strings of ``n`` morphisms (objects when ``n == 0``)."""
    if n == 0:
        return len(C.objects)
    total = 0
    for ms in product(C.morphisms, repeat=n):
        if all(C.morphisms[ms[i]][1] == C.morphisms[ms[i + 1]][0] for i in range(n - 1)):
            total += 1
    return total


def nondegenerate_chain_count(C, n):
    if n == 0:
        return len(C.objects)
    ids = set(C.identity.values())
    total = 0
    for ms in product([m for m in C.morphisms if m not in ids], repeat=n):
        if all(C.morphisms[ms[i]][1] == C.morphisms[ms[i + 1]][0] for i in range(n - 1)):
            total += 1
    return total


def idempotents(C):
    return [m for m, (d, c) in C.morphisms.items() if d == c and C.table[(m, m)] == m]


def splits(C, e):
    x = C.morphisms[e][0]
    for r, (d, y) in C.morphisms.items():
        if d != x:
            continue
        for i, (y2, c) in C.morphisms.items():
            if y2 == y and c == x and C.table[(i, r)] == e and C.table[(r, i)] == C.identity[y]:
                return True
    return False


def clone_count(O, word, d):
    """Pairs ``(o, g)`` with ``g`` an arbitrary input-to-position map, glued by the symmetric action.

    ``(o . s, g . s) ~ (o, g)``; classes are counted by union-find.
    """
    word = tuple(word)
    nodes = []
    for o, (ins, out) in O.ops.items():
        if out != d:
            continue
        for g in product(range(len(word)), repeat=len(ins)):
            if all(word[g[i]] == ins[i] for i in range(len(ins))):
                nodes.append((o, g))
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for o, g in nodes:
        n = len(g)
        for s in permutations(range(n)):
            os_ = O.action[(o, s)]
            gs = tuple(g[s[i]] for i in range(n))
            a, b = find((o, g)), find((os_, gs))
            if a != b:
                parent[a] = b
    return len({find(v) for v in nodes})


def symmetric_binary_algebras(na, nb):
    """Functions ``A x A -> B`` invariant under swapping the arguments."""
    n = 0
    for t in product(range(nb), repeat=na * na):
        if all(t[x * na + y] == t[y * na + x] for x in range(na) for y in range(na)):
            n += 1
    return n


def idempotent_endofunctions(n):
    return sum(1 for t in product(range(n), repeat=n) if all(t[t[x]] == t[x] for x in range(n)))


def coend_classes(f, X, d):
    """``sum_c X(c) x D(f c, d)`` modulo ``(c', X(a) x, g) ~ (c, x, g . f(a))``."""
    C, D = f.source, f.target
    nodes = [(c, x, g) for c in C.objects for x in X.values[c] for g in D.hom(f.obj_map[c], d)]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for a, (c, c2) in C.morphisms.items():
        for x in X.values[c]:
            for g in D.hom(f.obj_map[c2], d):
                u = find((c2, X.act(a, x), g))
                v = find((c, x, D.compose(g, f.mor_map[a])))
                if u != v:
                    parent[u] = v
    return len({find(v) for v in nodes})
