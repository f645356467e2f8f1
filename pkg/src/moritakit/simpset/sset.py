"""Dimension-truncated finite simplicial sets and simplicial maps."""

from itertools import combinations_with_replacement

from ..errors import BadParameters, NotSimplicial


def skey(s):
    """Deterministic order on simplex ids of mixed types."""
    return repr(s)


class TruncSSet:
    """Simplicial set truncated at dimension ``dim``.

    ``levels[n]`` is a tuple of simplex ids; ``faces[(n, k)]`` maps level ``n``
    to level ``n - 1`` and ``degens[(n, k)]`` maps level ``n`` to ``n + 1``
    (only for ``n < dim``).  Claims above ``dim`` are never made.
    """

    def __init__(self, dim, levels, faces, degens, check=True):
        self.dim = dim
        self.levels = [tuple(sorted(lv, key=skey)) for lv in levels]
        self.faces = faces
        self.degens = degens
        for n in range(1, dim + 1):
            for k in range(n + 1):
                faces.setdefault((n, k), {})
        for n in range(dim):
            for k in range(n + 1):
                degens.setdefault((n, k), {})
        if check:
            self.validate()

    def face(self, n, k, s):
        return self.faces[(n, k)][s]

    def degen(self, n, k, s):
        return self.degens[(n, k)][s]

    def validate(self):
        D = self.dim
        if len(self.levels) != D + 1:
            raise NotSimplicial("wrong number of levels")
        for n in range(1, D + 1):
            prev = set(self.levels[n - 1])
            for k in range(n + 1):
                fm = self.faces[(n, k)]
                for s in self.levels[n]:
                    if fm.get(s) not in prev:
                        raise NotSimplicial(f"d_{k} undefined on {s!r}", (n, k, s))
        for n in range(D):
            nxt = set(self.levels[n + 1])
            for k in range(n + 1):
                dm = self.degens[(n, k)]
                for s in self.levels[n]:
                    if dm.get(s) not in nxt:
                        raise NotSimplicial(f"s_{k} undefined on {s!r}", (n, k, s))
        d, s_ = self.face, self.degen
        # d_i d_j = d_{j-1} d_i  (i < j)
        for n in range(2, D + 1):
            for x in self.levels[n]:
                for j in range(n + 1):
                    for i in range(j):
                        if d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)):
                            raise NotSimplicial(f"d_{i} d_{j} identity fails on {x!r}", (n, i, j, x))
        for n in range(D):
            for x in self.levels[n]:
                for j in range(n + 1):
                    y = s_(n, j, x)
                    for i in range(n + 2):
                        lhs = d(n + 1, i, y)
                        if i < j:
                            rhs = s_(n - 1, j - 1, d(n, i, x))
                        elif i in (j, j + 1):
                            rhs = x
                        else:
                            rhs = s_(n - 1, j, d(n, i - 1, x))
                        if lhs != rhs:
                            raise NotSimplicial(f"d_{i} s_{j} identity fails on {x!r}", (n, i, j, x))
                    if n + 1 < D:
                        for i in range(j + 1):
                            if s_(n + 1, i, y) != s_(n + 1, j + 1, s_(n, i, x)):
                                raise NotSimplicial(f"s_{i} s_{j} identity fails on {x!r}", (n, i, j, x))
        return self

    def counts(self):
        return tuple(len(lv) for lv in self.levels)

    def degenerate(self, n):
        """Set of degenerate simplices at level ``n``."""
        if n == 0:
            return set()
        out = set()
        for k in range(n):
            out.update(self.degens[(n - 1, k)].values())
        return out

    def nondegenerate(self, n):
        deg = self.degenerate(n)
        return [s for s in self.levels[n] if s not in deg]

    def nondegenerate_counts(self):
        return tuple(len(self.nondegenerate(n)) for n in range(self.dim + 1))

    def pi0(self):
        """Connected components as a list of sorted vertex lists."""
        parent = {v: v for v in self.levels[0]}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        if self.dim >= 1:
            for e in self.levels[1]:
                a, b = find(self.face(1, 0, e)), find(self.face(1, 1, e))
                if a != b:
                    if skey(a) < skey(b):
                        a, b = b, a
                    parent[a] = b
        comps = {}
        for v in self.levels[0]:
            comps.setdefault(find(v), []).append(v)
        return sorted(comps.values(), key=lambda c: skey(c[0]))

    def to_json(self):
        return {
            "dim": self.dim,
            "levels": [[str(s) for s in lv] for lv in self.levels],
            "faces": {
                f"{n},{k}": {str(a): str(b) for a, b in sorted(m.items(), key=lambda t: skey(t[0]))}
                for (n, k), m in sorted(self.faces.items())
            },
            "degens": {
                f"{n},{k}": {str(a): str(b) for a, b in sorted(m.items(), key=lambda t: skey(t[0]))}
                for (n, k), m in sorted(self.degens.items())
            },
        }

    def __repr__(self):
        return f"TruncSSet(dim={self.dim}, counts={self.counts()})"


def sset_from_json(raw):
    D = int(raw["dim"])
    levels = [list(lv) for lv in raw["levels"]]
    faces = {}
    degens = {}
    for key, m in raw.get("faces", {}).items():
        n, k = (int(t) for t in key.split(","))
        faces[(n, k)] = dict(m)
    for key, m in raw.get("degens", {}).items():
        n, k = (int(t) for t in key.split(","))
        degens[(n, k)] = dict(m)
    return TruncSSet(D, levels, faces, degens)


class SimpMap:
    """A levelwise map of truncated simplicial sets (equal ``dim``)."""

    def __init__(self, source, target, level_maps, check=True):
        self.source = source
        self.target = target
        self.level_maps = [dict(m) for m in level_maps]
        if check:
            self.validate()

    def __call__(self, n, s):
        return self.level_maps[n][s]

    def validate(self):
        X, Y = self.source, self.target
        if X.dim != Y.dim:
            raise NotSimplicial("truncation dimensions differ")
        f = self.level_maps
        for n in range(X.dim + 1):
            tgt = set(Y.levels[n])
            for s in X.levels[n]:
                if f[n].get(s) not in tgt:
                    raise NotSimplicial(f"map undefined or off-target on {s!r}", (n, s))
        for n in range(1, X.dim + 1):
            for k in range(n + 1):
                for s in X.levels[n]:
                    if f[n - 1][X.face(n, k, s)] != Y.face(n, k, f[n][s]):
                        raise NotSimplicial(f"map does not commute with d_{k} at {s!r}", (n, k, s))
        for n in range(X.dim):
            for k in range(n + 1):
                for s in X.levels[n]:
                    if f[n + 1][X.degen(n, k, s)] != Y.degen(n, k, f[n][s]):
                        raise NotSimplicial(f"map does not commute with s_{k} at {s!r}", (n, k, s))
        return self

    def then(self, other):
        return SimpMap(
            self.source,
            other.target,
            [{s: other.level_maps[n][t] for s, t in m.items()} for n, m in enumerate(self.level_maps)],
            check=False,
        )

    def is_mono(self):
        return all(len(set(m.values())) == len(m) for m in self.level_maps)

    def key(self):
        return tuple(tuple(m[s] for s in self.source.levels[n]) for n, m in enumerate(self.level_maps))

    def __eq__(self, other):
        return isinstance(other, SimpMap) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def identity_map(X):
    return SimpMap(X, X, [{s: s for s in lv} for lv in X.levels], check=False)


# -- nerves ------------------------------------------------------------------
def nerve(C, D=4):
    """The nerve of a finite category truncated at ``D``.

    Level 0 simplices are ``(x,)`` for objects ``x``; level ``n >= 1`` simplices
    are composable chains ``(f1, ..., fn)`` with ``cod(f_k) = dom(f_{k+1})``.
    """
    levels = [[(x,) for x in C.objects]]
    if D >= 1:
        levels.append([(m,) for m in C.morphisms])
    for n in range(2, D + 1):
        nxt = []
        for ch in levels[-1]:
            for m in C.outgoing(C.cod(ch[-1])):
                nxt.append(ch + (m,))
        levels.append(nxt)
    faces = {}
    degens = {}
    for n in range(1, D + 1):
        for k in range(n + 1):
            faces[(n, k)] = {ch: _nerve_face(C, ch, k) for ch in levels[n]}
    for n in range(D):
        for k in range(n + 1):
            degens[(n, k)] = {ch: _nerve_degen(C, ch, k, n) for ch in levels[n]}
    X = TruncSSet(D, levels, faces, degens, check=False)
    X.category = C
    return X


def _nerve_face(C, ch, k):
    n = len(ch)
    if n == 1:
        return (C.cod(ch[0]),) if k == 0 else (C.dom(ch[0]),)
    if k == 0:
        return ch[1:]
    if k == n:
        return ch[:-1]
    return ch[: k - 1] + (C.compose(ch[k], ch[k - 1]),) + ch[k + 1:]


def _nerve_degen(C, ch, k, n):
    if n == 0:
        return (C.identity[ch[0]],)
    obj = C.dom(ch[0]) if k == 0 else C.cod(ch[k - 1])
    return ch[:k] + (C.identity[obj],) + ch[k:]


def nerve_map(F, D=4, source=None, target=None):
    X = source or nerve(F.source, D)
    Y = target or nerve(F.target, D)
    maps = [{(x,): (F.obj_map[x],) for (x,) in X.levels[0]}]
    for n in range(1, D + 1):
        maps.append({ch: tuple(F.mor_map[m] for m in ch) for ch in X.levels[n]})
    return SimpMap(X, Y, maps, check=False)


def chain_map(C, chain, D=4, target=None):
    """The map ``Delta[n] -> N(C)`` picking a nonempty composable chain of morphisms."""
    Y = target or nerve(C, D)
    verts = [C.dom(chain[0])] + [C.cod(m) for m in chain]
    n = len(verts) - 1
    X = standard_cells(("simplex", n), D)

    def arrow(a, b):
        if a == b:
            return C.identity[verts[a]]
        out = chain[a]
        for m in chain[a + 1 : b]:
            out = C.compose(m, out)
        return out

    maps = []
    for k, lv in enumerate(X.levels):
        if k == 0:
            maps.append({t: (verts[t[0]],) for t in lv})
        else:
            maps.append({t: tuple(arrow(t[q], t[q + 1]) for q in range(k)) for t in lv})
    return SimpMap(X, Y, maps)


def point_map(C, x, D=4, target=None):
    """The map ``Delta[0] -> N(C)`` picking the object ``x``."""
    Y = target or nerve(C, D)
    X = standard_cells(("simplex", 0), D)
    return SimpMap(X, Y, [{t: (x,) if k == 0 else (C.identity[x],) * k for t in lv} for k, lv in enumerate(X.levels)])


# -- standard cells ----------------------------------------------------------
def _parse_cell(name):
    if isinstance(name, str):
        head, _, rest = name.partition("(")
        args = tuple(int(a) for a in rest.rstrip(")").split(",") if a.strip())
        return (head.strip(),) + args
    return tuple(name)


def standard_cells(name, D=4):
    """``simplex(n)``, ``boundary(n)`` or ``horn(n,k)`` truncated at ``D``.

    Simplices are monotone vertex tuples; accepts ``"horn(2,1)"`` or
    ``("horn", 2, 1)``.
    """
    parts = _parse_cell(name)
    kind, args = parts[0], parts[1:]
    if kind == "simplex" and len(args) == 1 and args[0] >= 0:
        n = args[0]
        keep = lambda t: True  # noqa: E731
    elif kind == "boundary" and len(args) == 1 and args[0] >= 1:
        n = args[0]
        keep = lambda t: len(set(t)) < n + 1  # noqa: E731
    elif kind == "horn" and len(args) == 2 and args[0] >= 1 and 0 <= args[1] <= args[0]:
        n, h = args
        keep = lambda t: any(v not in t for v in range(n + 1) if v != h)  # noqa: E731
    else:
        raise BadParameters(f"bad standard cell {name!r}", name)
    levels = []
    for k in range(D + 1):
        levels.append([t for t in combinations_with_replacement(range(n + 1), k + 1) if keep(t)])
    return _vertex_tuple_sset(D, levels)


def _vertex_tuple_sset(D, levels, check=False):
    faces = {}
    degens = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            faces[(k, i)] = {t: t[:i] + t[i + 1:] for t in levels[k]}
    for k in range(D):
        for i in range(k + 1):
            degens[(k, i)] = {t: t[: i + 1] + t[i:] for t in levels[k]}
    return TruncSSet(D, levels, faces, degens, check=check)


def empty_sset(D=4):
    return TruncSSet(D, [[] for _ in range(D + 1)], {}, {}, check=False)


def vertex_map(X, Y, vmap):
    """Simplicial map between vertex-tuple simplicial sets induced by a vertex function."""
    return SimpMap(
        X, Y, [{t: tuple(vmap[v] for v in t) for t in lv} for lv in X.levels]
    )
