"""Finite algebras over finite operads: validation, enumeration, iso classes, restriction."""

from itertools import permutations, product

from .._limits import Budget
from ..errors import BadAlgebra, LimitExceeded
from . import perm as P


def _points(sizes, ins):
    return list(product(*(range(sizes[c]) for c in ins)))


def _index(sizes, ins, point):
    k = 0
    for c, y in zip(ins, point):
        k = k * sizes[c] + y
    return k


class FiniteAlgebra:
    """Carriers ``range(carrier[c])`` and structure tables over lexicographic input points."""

    def __init__(self, operad, carrier, tables, check=True):
        self.operad = operad
        self.carrier = {c: int(carrier[c]) for c in operad.colours}
        self.tables = {o: tuple(t) for o, t in tables.items()}
        if check:
            self.validate()

    def evaluate(self, o, args):
        return self.tables[o][_index(self.carrier, self.operad.inputs(o), args)]

    def validate(self):
        O, sz = self.operad, self.carrier
        for o, (ins, out) in sorted(O.ops.items()):
            t = self.tables.get(o)
            n_pts = 1
            for c in ins:
                n_pts *= sz[c]
            if t is None or len(t) != n_pts or any(not 0 <= v < sz[out] for v in t):
                raise BadAlgebra(f"table of {o} has the wrong shape", o)
        for c in O.colours:
            if self.tables[O.identities[c]] != tuple(range(sz[c])):
                raise BadAlgebra(f"identity of {c} does not act as the identity", c)
        for (o, s), r in sorted(O.action.items()):
            inv = P.inverse(s)
            for y in _points(sz, O.inputs(r)):
                if self.evaluate(r, y) != self.evaluate(o, tuple(y[inv[i]] for i in range(len(s)))):
                    raise BadAlgebra(f"action on {o} by {list(s)} is not respected", (o, s, y))
        for (o, qs), r in sorted(O.table.items()):
            for z in _points(sz, O.inputs(r)):
                vals = []
                k = 0
                for q in qs:
                    a = O.arity(q)
                    vals.append(self.evaluate(q, z[k : k + a]))
                    k += a
                if self.evaluate(o, vals) != self.evaluate(r, z):
                    raise BadAlgebra(f"composite of {o} with {list(qs)} is not respected", (o, qs, z))
        return self

    def key(self):
        return (tuple(sorted(self.carrier.items())), tuple(sorted(self.tables.items())))

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def relabel(self, bijections):
        """Transport along ``bijections[c]``, a permutation of ``range(carrier[c])``."""
        O, sz = self.operad, self.carrier
        tables = {}
        inv = {c: P.inverse(b) for c, b in bijections.items()}
        for o, (ins, out) in O.ops.items():
            row = []
            for y in _points(sz, ins):
                pre = tuple(inv[c][v] for c, v in zip(ins, y))
                row.append(bijections[out][self.evaluate(o, pre)])
            tables[o] = tuple(row)
        return FiniteAlgebra(O, sz, tables, check=False)

    def canonical_form(self):
        """Least table key over all carrier relabellings."""
        cols = self.operad.colours
        best = None
        for bs in product(*(permutations(range(self.carrier[c])) for c in cols)):
            k = self.relabel(dict(zip(cols, bs))).key()
            if best is None or k < best:
                best = k
        return best

    def to_json(self):
        return {
            "carrier": dict(sorted(self.carrier.items())),
            "act": {o: list(t) for o, t in sorted(self.tables.items())},
        }


def algebra_from_json(raw, operad):
    try:
        return FiniteAlgebra(operad, raw["carrier"], {o: tuple(t) for o, t in raw["act"].items()})
    except KeyError as exc:
        raise BadAlgebra(f"algebra description lacks {exc}", str(exc)) from None


class _Search:
    """Cell-level constraint search: orbit cells, forced composites, trail undo."""

    def __init__(self, O, sizes):
        self.O = O
        self.sz = sizes
        self.cell = {}
        parent = []

        def new():
            parent.append(len(parent))
            return len(parent) - 1

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        raw = {}
        for o, (ins, out) in sorted(O.ops.items()):
            for y in _points(sizes, ins):
                raw[(o, y)] = new()
        for (o, s), r in O.action.items():
            inv = P.inverse(s)
            for y in _points(sizes, O.inputs(r)):
                a = raw[(r, y)]
                b = raw[(o, tuple(y[inv[i]] for i in range(len(s))))]
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        roots = sorted({find(a) for a in raw.values()})
        renum = {r: k for k, r in enumerate(roots)}
        self.cell = {key: renum[find(a)] for key, a in raw.items()}
        self.n = len(roots)
        self.domain = [0] * self.n
        for (o, y), k in self.cell.items():
            self.domain[k] = sizes[O.output(o)]
        self.val = [-1] * self.n
        self.trail = []
        # composition constraints: r(z) = o(q_1(z_1), ...)
        self.cons = []
        self.watch = [[] for _ in range(self.n)]
        for (o, qs), r in sorted(O.table.items()):
            if O.is_identity(o) and len(qs) == 1:
                continue
            if all(O.is_identity(q) for q in qs):
                continue
            for z in _points(sizes, O.inputs(r)):
                inner = []
                k = 0
                for q in qs:
                    a = O.arity(q)
                    inner.append(self.cell[(q, z[k : k + a])])
                    k += a
                c = (o, tuple(inner), self.cell[(r, z)])
                idx = len(self.cons)
                self.cons.append(c)
                for x in set(inner) | {c[2]}:
                    self.watch[x].append(idx)
        self.dyn = [[] for _ in range(self.n)]

    def assign(self, k, v, queue):
        if self.val[k] == -1:
            self.val[k] = v
            self.trail.append(("v", k))
            queue.append(k)
            return True
        return self.val[k] == v

    def propagate(self, queue):
        while queue:
            x = queue.pop()
            for idx in self.watch[x] + self.dyn[x]:
                o, inner, rc = self.cons[idx]
                vals = [self.val[i] for i in inner]
                if -1 in vals:
                    continue
                oc = self.cell[(o, tuple(vals))]
                a, b = self.val[oc], self.val[rc]
                if a != -1 and b != -1:
                    if a != b:
                        return False
                elif a != -1:
                    self.assign(rc, a, queue)
                elif b != -1:
                    self.assign(oc, b, queue)
                else:
                    self.dyn[oc].append(idx)
                    self.trail.append(("d", oc))
        return True

    def undo(self, mark):
        while len(self.trail) > mark:
            kind, k = self.trail.pop()
            if kind == "v":
                self.val[k] = -1
            else:
                self.dyn[k].pop()

    def run(self, limit, budget):
        O, sz = self.O, self.sz
        found = []
        queue = []
        for c in O.colours:
            for y in range(sz[c]):
                if not self.assign(self.cell[(O.identities[c], (y,))], y, queue):
                    return found
        if not self.propagate(queue):
            return found
        if any(d == 0 for d in self.domain):
            return found

        def go(k):
            while k < self.n and self.val[k] != -1:
                k += 1
            if k == self.n:
                tables = {}
                for o, (ins, out) in O.ops.items():
                    tables[o] = tuple(self.val[self.cell[(o, y)]] for y in _points(sz, ins))
                found.append(FiniteAlgebra(O, sz, tables, check=False))
                if len(found) > limit:
                    raise LimitExceeded(f"more than {limit} algebras")
                return
            for v in range(self.domain[k]):
                budget.spend()
                mark = len(self.trail)
                q = []
                self.assign(k, v, q)
                if self.propagate(q):
                    go(k + 1)
                self.undo(mark)

        go(0)
        return found


def _size_assignments(O, size_bound):
    if isinstance(size_bound, dict):
        yield {c: size_bound[c] for c in O.colours}
        return
    for sizes in product(range(size_bound + 1), repeat=len(O.colours)):
        yield dict(zip(O.colours, sizes))


def enumerate_algebras(O, size_bound, iso_classes=False, limit=100_000):
    """All algebras with the given carrier sizes (a dict) or all sizes ``0..size_bound``.

    With ``iso_classes`` only the first algebra of each isomorphism class is kept.
    """
    budget = Budget("enumerate_algebras")
    out = []
    for sizes in _size_assignments(O, size_bound):
        out.extend(_Search(O, sizes).run(limit, budget))
        if len(out) > limit:
            raise LimitExceeded(f"more than {limit} algebras")
    if not iso_classes:
        return out
    return IsoClasses(out).reps


class IsoClasses:
    """Isomorphism classes of a relabelling-closed list of algebras.

    Each orbit is generated once from its first member; ``index(A)`` is the
    class number of any algebra in the list.
    """

    def __init__(self, algebras):
        self.reps = []
        self._class = {}
        for A in algebras:
            if A.key() in self._class:
                continue
            k = len(self.reps)
            self.reps.append(A)
            cols = A.operad.colours
            for bs in product(*(permutations(range(A.carrier[c])) for c in cols)):
                self._class.setdefault(A.relabel(dict(zip(cols, bs))).key(), k)

    def __len__(self):
        return len(self.reps)

    def index(self, A):
        return self._class[A.key()]


def restrict_algebra(f, A):
    """Pull a ``target``-algebra back along ``f``."""
    S = f.source
    carrier = {c: A.carrier[f.colour_map[c]] for c in S.colours}
    tables = {o: A.tables[f.op_map[o]] for o in S.ops}
    return FiniteAlgebra(S, carrier, tables)


def defining_algebra(O):
    """A function operad acting on its own carriers."""
    return FiniteAlgebra(O, O.carriers, {o: v[2] for o, v in O.semantics.items()})


def _classes(O, size_bound, limit, cache):
    if cache is None:
        return IsoClasses(enumerate_algebras(O, size_bound, limit=limit))
    key = (id(O), size_bound, limit)
    if key not in cache:
        try:
            cache[key] = (O, IsoClasses(enumerate_algebras(O, size_bound, limit=limit)))
        except LimitExceeded as exc:
            cache[key] = (O, exc)
    hit = cache[key][1]
    if isinstance(hit, LimitExceeded):
        raise hit
    return hit


def restriction_on_iso_classes(f, size_bound=3, limit=100_000, cache=None):
    """Restriction along ``f`` on iso classes with carriers up to ``size_bound``.

    Returns ``(injective, surjective, witness)``; ``witness`` names two target
    classes with one image, or a source class that is not hit.  ``cache``
    (a dict) shares class lists between calls on the same operads.
    """
    S = _classes(f.source, size_bound, limit, cache)
    T = _classes(f.target, size_bound, limit, cache)
    image = {}
    witness = None
    for A in T.reps:
        k = S.index(restrict_algebra(f, A))
        if k in image and witness is None:
            witness = ("collision", image[k].to_json(), A.to_json())
        image.setdefault(k, A)
    injective = len(image) == len(T)
    surjective = len(image) == len(S)
    if witness is None and not surjective:
        missing = next(k for k in range(len(S)) if k not in image)
        witness = ("not hit", S.reps[missing].to_json())
    return injective, surjective, witness
