"""Two-sided bar constructions over finite data, diagonals and homotopy left Kan extensions."""

from .._limits import Budget
from ..errors import LimitExceeded, NotAFunctor, OracleDisagreement
from ..simpset.sset import TruncSSet


class BarData:
    """Everything a bar construction needs, as plain callables.

    Simplices are ``(objects, x, arrows, y)`` with ``x`` in ``X(objects[0])``,
    ``arrows[i]: objects[i] -> objects[i+1]`` and ``y`` in ``Y(objects[-1])``.
    """

    def __init__(self, objects, hom, compose, identity, xs, x_act, ys, y_act):
        self.objects = list(objects)
        self.hom = hom
        self.compose = compose
        self.identity = identity
        self.xs = xs
        self.x_act = x_act
        self.ys = ys
        self.y_act = y_act

    def face(self, s, k):
        objs, x, arrows, y = s
        n = len(objs) - 1
        if k == 0:
            return (objs[1:], self.x_act(arrows[0], x), arrows[1:], y)
        if k == n:
            return (objs[:-1], x, arrows[:-1], self.y_act(y, arrows[-1]))
        merged = self.compose(arrows[k], arrows[k - 1])
        return (objs[:k] + objs[k + 1 :], x, arrows[: k - 1] + (merged,) + arrows[k + 1 :], y)

    def degen(self, s, k):
        objs, x, arrows, y = s
        return (objs[: k + 1] + objs[k:], x, arrows[:k] + (self.identity(objs[k]),) + arrows[k:], y)

    def level(self, n, budget=None):
        budget = budget or Budget("bar level")
        out = []

        def chains(prefix, arrows):
            if len(prefix) == n + 1:
                yield tuple(prefix), tuple(arrows)
                return
            for c in self.objects:
                for a in self.hom(prefix[-1], c):
                    budget.spend()
                    prefix.append(c)
                    arrows.append(a)
                    yield from chains(prefix, arrows)
                    prefix.pop()
                    arrows.pop()

        for c0 in self.objects:
            xs = self.xs(c0)
            if not xs:
                continue
            for objs, arrows in chains([c0], []):
                ys = self.ys(objs[-1])
                for x in xs:
                    for y in ys:
                        budget.spend()
                        out.append((objs, x, arrows, y))
        return out


class BisimplicialTrunc:
    """Bar construction of discrete data: ``cell(n, m)`` does not depend on ``m``.

    Vertical faces and degeneracies are identities.
    """

    def __init__(self, data, N, M=None):
        self.data = data
        self.N = N
        self.M = N if M is None else M
        budget = Budget("bar_construction")
        self.levels = [data.level(n, budget) for n in range(N + 1)]

    def cell(self, n, m=0):
        if not (0 <= n <= self.N and 0 <= m <= self.M):
            raise LimitExceeded(f"cell ({n},{m}) is outside the truncation")
        return self.levels[n]

    def h_face(self, n, k, s):
        return self.data.face(s, k)

    def h_degen(self, n, k, s):
        return self.data.degen(s, k)

    def v_face(self, m, k, s):
        return s

    def v_degen(self, m, k, s):
        return s

    def counts(self):
        return tuple(len(lv) for lv in self.levels)


def diagonal(Bs, check=True):
    """The diagonal ``n |-> cell(n, n)`` as a truncated simplicial set."""
    D = min(Bs.N, Bs.M)
    faces, degens = {}, {}
    for n in range(1, D + 1):
        for k in range(n + 1):
            faces[(n, k)] = {s: Bs.v_face(n, k, Bs.h_face(n, k, s)) for s in Bs.levels[n]}
    for n in range(D):
        for k in range(n + 1):
            degens[(n, k)] = {s: Bs.v_degen(n, k, Bs.h_degen(n, k, s)) for s in Bs.levels[n]}
    return TruncSSet(D, [list(lv) for lv in Bs.levels[: D + 1]], faces, degens, check=check)


# -- modules over finite categories ---------------------------------------
class CModule:
    """Covariant ``X``: ``values[c]`` and ``action[m]`` as dicts ``X(dom m) -> X(cod m)``."""

    contravariant = False

    def __init__(self, base, values, action, check=True):
        self.base = base
        self.values = {c: list(values.get(c, [])) for c in base.objects}
        self.action = {m: dict(action.get(m, {})) for m in base.morphisms}
        for c in base.objects:
            self.action[base.identity[c]] = {v: v for v in self.values[c]}
        if check:
            self.validate()

    def act(self, m, v):
        return self.action[m][v]

    def validate(self):
        C = self.base
        for m, (d, c) in sorted(C.morphisms.items()):
            src, tgt = (c, d) if self.contravariant else (d, c)
            tv = set(self.values[tgt])
            for v in self.values[src]:
                if self.action[m].get(v) not in tv:
                    raise NotAFunctor(f"action of {m} undefined or misplaced on {v!r}", (m, v))
        for (g, f), gf in sorted(C.table.items()):
            src = C.cod(g) if self.contravariant else C.dom(f)
            for v in self.values[src]:
                if self.contravariant:
                    two = self.act(f, self.act(g, v))
                else:
                    two = self.act(g, self.act(f, v))
                if two != self.act(gf, v):
                    raise NotAFunctor(f"action does not respect {g} o {f}", (g, f, v))
        return self

    def to_json(self):
        return {
            "values": {c: list(vs) for c, vs in self.values.items()},
            "action": {m: {str(k): v for k, v in a.items()} for m, a in self.action.items()},
        }


class CComodule(CModule):
    """Contravariant ``Y``: ``action[m]`` maps ``Y(cod m) -> Y(dom m)``."""

    contravariant = True


def representable(C, c):
    """``C(c, -)``."""
    return CModule(
        C,
        {x: C.hom(c, x) for x in C.objects},
        {m: {g: C.compose(m, g) for g in C.hom(c, C.dom(m))} for m in C.morphisms},
        check=False,
    )


def corepresentable_comodule(C, c):
    """``C(-, c)``."""
    return CComodule(
        C,
        {x: C.hom(x, c) for x in C.objects},
        {m: {g: C.compose(g, m) for g in C.hom(C.cod(m), c)} for m in C.morphisms},
        check=False,
    )


def hom_comodule(f, d):
    """``D(f(-), d)`` as a comodule over the source of ``f``."""
    C, D = f.source, f.target
    return CComodule(
        C,
        {x: D.hom(f.obj_map[x], d) for x in C.objects},
        {m: {g: D.compose(g, f.mor_map[m]) for g in D.hom(f.obj_map[C.cod(m)], d)} for m in C.morphisms},
        check=False,
    )


def point_module(C, contravariant=False):
    cls = CComodule if contravariant else CModule
    return cls(C, {x: ["*"] for x in C.objects}, {m: {"*": "*"} for m in C.morphisms}, check=False)


def module_from_json(raw, C, contravariant=False):
    if "representable" in raw:
        c = raw["representable"]
        return corepresentable_comodule(C, c) if contravariant else representable(C, c)
    cls = CComodule if contravariant else CModule
    return cls(C, raw.get("values", {}), raw.get("action", {}))


def _finite_bar_data(X, C, Y):
    return BarData(
        objects=C.objects,
        hom=C.hom,
        compose=C.compose,
        identity=lambda c: C.identity[c],
        xs=lambda c: X.values[c],
        x_act=X.act,
        ys=lambda c: Y.values[c],
        y_act=lambda y, m: Y.act(m, y),
    )


def bar_construction(X, C, Y, N=2):
    """``B(X, C, Y)`` up to simplicial degree ``N``."""
    return BisimplicialTrunc(_finite_bar_data(X, C, Y), N)


def ho_kan_extension(f, X, d, N=2):
    """Diagonal of ``B(X, C, D(f(-), d))``: the homotopy left Kan extension at ``d``."""
    return diagonal(bar_construction(X, f.source, hom_comodule(f, d), N))


def kan_colim_oracle(f, X, d):
    """Classes of ``(c, x, g)`` with ``g: f(c) -> d`` under ``(c', X(a) x, g) ~ (c, x, g . f(a))``.

    Returned as a sorted list of sorted member lists.
    """
    C, D = f.source, f.target
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for c in C.objects:
        for x in X.values[c]:
            for g in D.hom(f.obj_map[c], d):
                parent[(c, x, g)] = (c, x, g)
    for a, (c, c2) in C.morphisms.items():
        for x in X.values[c]:
            xa = X.act(a, x)
            for g in D.hom(f.obj_map[c2], d):
                u, v = find((c2, xa, g)), find((c, x, D.compose(g, f.mor_map[a])))
                if u != v:
                    if repr(u) < repr(v):
                        u, v = v, u
                    parent[u] = v
    comps = {}
    for v in parent:
        comps.setdefault(find(v), []).append(v)
    return sorted((sorted(m, key=repr) for m in comps.values()), key=repr)


def compare_pi0(f, X, d, N=1, strict=True):
    """Do the components of the homotopy Kan extension match the coend classes?"""
    H = ho_kan_extension(f, X, d, max(N, 1))
    oracle = kan_colim_oracle(f, X, d)
    label = {}
    for k, members in enumerate(oracle):
        for m in members:
            label[m] = k
    comps = H.pi0()
    seen = {}
    ok = True
    for comp in comps:
        labels = {label[(objs[0], x, y)] for (objs, x, _arrows, y) in comp}
        if len(labels) != 1:
            ok = False
            break
        (lab,) = labels
        if lab in seen:
            ok = False
            break
        seen[lab] = comp
    ok = ok and len(seen) == len(oracle)
    if not ok and strict:
        raise OracleDisagreement(f"pi0 has {len(comps)} components but the coend has {len(oracle)} classes", d)
    return ok
