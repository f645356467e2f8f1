"""Bar constructions over algebraic theories and the explicit homotopies ``J`` and ``K``.

For a theory map ``f: S -> T`` (induced by an operad map), a product
preserving ``X`` on ``S`` and words ``a``, ``b`` of ``T``, three bar
constructions are compared:

* ``plain``: ``B(X, S, T(f(-), a b))``, with ``y`` stored as a pair ``(g, h)``;
* ``pair``:  ``B(X(- x -), S x S, T(f(-), a) x T(f(-), b))``;
* ``split``: ``B(X, S, T(f(-), a)) x B(X, S, T(f(-), b))``.

``psi: pair -> plain`` and ``sigma: plain -> pair`` are homotopy inverse via
``J: id ~ sigma psi`` and ``K: psi sigma ~ id``; ``delta: plain -> split``
is then a bijection on components.
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .._limits import Budget
from ..errors import BoundTooSmall, IndexOutOfRange
from ..operad.core import identity_operad_map
from ..theory.core import (
    compose_theory,
    diagonal as theory_diagonal,
    first_projection,
    identity_arrow,
    induced_theory_map,
    product_arrow,
    second_projection,
    theory_hom,
    words_up_to,
)
from .construction import BarData

STAR = "*"


def seq_operators(u, j):
    """``(u^{*j}, u^{|j}, u^{j|})`` for a sequence ``u`` and ``0 <= j < len(u)``.

    All three have length ``len(u) + 1``; ``STAR`` marks an empty entry.
    """
    u = tuple(u)
    if not 0 <= j < len(u):
        raise IndexOutOfRange(f"j={j} outside 0..{len(u) - 1}", (u, j))
    n2 = len(u) + 1
    star = tuple(u[i] if i <= j else u[i - 1] for i in range(n2))
    left = tuple(u[i] if i <= j else STAR for i in range(n2))
    right = tuple(STAR if i <= j else u[i - 1] for i in range(n2))
    return star, left, right


def _cat(*words):
    out = ()
    for w in words:
        if w != STAR:
            out += tuple(w)
    return out


class _Theories:
    """Source and target theories, the functor between them and a composition rng."""

    def __init__(self, f, rng=None):
        self.f = f
        self.S = f.source
        self.T = f.target
        self.rng = rng
        self.F = induced_theory_map(f)
        self._homS = {}
        self._homT = {}

    def fw(self, u):
        return tuple(self.f.colour_map[c] for c in u)

    def homS(self, u, v):
        key = (u, v)
        if key not in self._homS:
            self._homS[key] = theory_hom(self.S, u, v)
        return self._homS[key]

    def homT(self, u, v):
        key = (u, v)
        if key not in self._homT:
            self._homT[key] = theory_hom(self.T, u, v)
        return self._homT[key]

    def cS(self, g, h):
        return compose_theory(self.S, g, h, self.rng)

    def cT(self, g, h):
        return compose_theory(self.T, g, h, self.rng)


def plain_bar(th, X, a, b, bound):
    words = list(words_up_to(th.S.colours, bound))
    return BarData(
        objects=words,
        hom=th.homS,
        compose=th.cS,
        identity=lambda u: identity_arrow(th.S, u),
        xs=X.values,
        x_act=X.act,
        ys=lambda u: list(product(th.homT(th.fw(u), a), th.homT(th.fw(u), b))),
        y_act=lambda y, al: (th.cT(y[0], th.F(al)), th.cT(y[1], th.F(al))),
    )


def single_bar(th, X, a, bound):
    words = list(words_up_to(th.S.colours, bound))
    return BarData(
        objects=words,
        hom=th.homS,
        compose=th.cS,
        identity=lambda u: identity_arrow(th.S, u),
        xs=X.values,
        x_act=X.act,
        ys=lambda u: th.homT(th.fw(u), a),
        y_act=lambda y, al: th.cT(y, th.F(al)),
    )


def pair_bar(th, X, a, b, bound):
    objs = [(u, v) for u in words_up_to(th.S.colours, bound) for v in words_up_to(th.S.colours, bound - len(u))]
    return BarData(
        objects=objs,
        hom=lambda p, q: list(product(th.homS(p[0], q[0]), th.homS(p[1], q[1]))),
        compose=lambda g, h: (th.cS(g[0], h[0]), th.cS(g[1], h[1])),
        identity=lambda p: (identity_arrow(th.S, p[0]), identity_arrow(th.S, p[1])),
        xs=lambda p: X.values(p[0] + p[1]),
        x_act=lambda al, x: X.act(product_arrow(al[0], al[1]), x),
        ys=lambda p: list(product(th.homT(th.fw(p[0]), a), th.homT(th.fw(p[1]), b))),
        y_act=lambda y, al: (th.cT(y[0], th.F(al[0])), th.cT(y[1], th.F(al[1]))),
    )


class _Maps:
    def __init__(self, th, X, W, corrupt=None):
        self.th = th
        self.X = X
        self.W = W
        self.corrupt = corrupt
        self._memo = {}

    def memo(self, name, fn, *args):
        key = (name,) + args
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = fn(*args)
        return hit

    def _check_word(self, w, s):
        if len(w) > self.W:
            raise BoundTooSmall(f"word of length {len(w)} exceeds the bound {self.W}", s)

    def psi(self, s):
        return self.memo("psi", self._psi, s)

    def _psi(self, s):
        th = self.th
        objs, x, arrows, (g, h) = s
        u_n, v_n = objs[-1]
        new_objs = tuple(u + v for u, v in objs)
        for w in new_objs:
            self._check_word(w, s)
        fu, fv = th.fw(u_n), th.fw(v_n)
        y = (th.cT(g, first_projection(th.T, fu, fv)), th.cT(h, second_projection(th.T, fu, fv)))
        out = (new_objs, x, tuple(product_arrow(al, be) for al, be in arrows), y)
        if self.corrupt == "psi" and arrows:
            # negative control: collapse onto the first vertex
            v0 = (new_objs[:1], x, (), self._y_at_first(out))
            out = v0
            for k in range(len(arrows)):
                out = (out[0] + out[0][:1], out[1], out[2] + (identity_arrow(th.S, new_objs[0]),), out[3])
        return out

    def _y_at_first(self, s):
        th = self.th
        objs, x, arrows, (g, h) = s
        for al in reversed(arrows):
            g, h = th.cT(g, th.F(al)), th.cT(h, th.F(al))
        return (g, h)

    def sigma(self, s):
        return self.memo("sigma", self._sigma, s)

    def _sigma(self, s):
        th = self.th
        objs, x, arrows, y = s
        for u in objs:
            self._check_word(u + u, s)
        x2 = self.X.act(theory_diagonal(th.S, objs[0]), x)
        return (tuple((u, u) for u in objs), x2, tuple((al, al) for al in arrows), y)

    def delta(self, s):
        return self.memo("delta", self._delta, s)

    def _delta(self, s):
        objs, x, arrows, (g, h) = s
        return ((objs, x, arrows, g), (objs, x, arrows, h))

    def phi(self, s):
        return self.memo("phi", self._phi, s)

    def _phi(self, s):
        th = self.th
        objs, x, arrows, (g, h) = s
        u0, v0 = objs[0]
        xa = self.X.act(first_projection(th.S, u0, v0), x)
        xb = self.X.act(second_projection(th.S, u0, v0), x)
        return (
            (tuple(u for u, _ in objs), xa, tuple(al for al, _ in arrows), g),
            (tuple(v for _, v in objs), xb, tuple(be for _, be in arrows), h),
        )

    def J(self, s, j):
        return self.memo("J", self._J, s, j)

    def _J(self, s, j):
        """``J^n_j`` on a pair simplex: an ``(n+1)``-simplex of the pair bar."""
        th = self.th
        objs, x, arrows, y = s
        us = tuple(u for u, _ in objs)
        vs = tuple(v for _, v in objs)
        u_star, u_left, _ = seq_operators(us, j)
        v_star, v_left, _ = seq_operators(vs, j)
        new_objs = tuple((_cat(u_star[i], v_left[i]), _cat(u_left[i], v_star[i])) for i in range(len(objs) + 1))
        for p, q in new_objs:
            self._check_word(p + q, s)
        new_arrows = []
        for i in range(len(objs)):
            if i < j:
                ab = product_arrow(*arrows[i])
                new_arrows.append((ab, ab))
            elif i == j:
                u, v = objs[j]
                new_arrows.append((first_projection(th.S, u, v), second_projection(th.S, u, v)))
            else:
                new_arrows.append(arrows[i - 1])
        u0, v0 = objs[0]
        x2 = self.X.act(theory_diagonal(th.S, u0 + v0), x)
        return (new_objs, x2, tuple(new_arrows), y)

    def K(self, s, j):
        return self.memo("K", self._K, s, j)

    def _K(self, s, j):
        """``K^n_j`` on a plain simplex: an ``(n+1)``-simplex of the plain bar."""
        th = self.th
        objs, x, arrows, (g, h) = s
        u_star, _, u_right = seq_operators(objs, j)
        new_objs = tuple(_cat(u_right[i], u_star[i]) for i in range(len(objs) + 1))
        for w in new_objs:
            self._check_word(w, s)
        new_arrows = []
        for i in range(len(objs)):
            if i < j:
                new_arrows.append(arrows[i])
            elif i == j:
                new_arrows.append(theory_diagonal(th.S, objs[j]))
            else:
                new_arrows.append(product_arrow(arrows[i - 1], arrows[i - 1]))
        fu = th.fw(objs[-1])
        y = (th.cT(g, first_projection(th.T, fu, fu)), th.cT(h, second_projection(th.T, fu, fu)))
        return (new_objs, x, tuple(new_arrows), y)


@dataclass
class JKReport:
    counts: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    witness: object = None
    levels: tuple = ()

    @property
    def passed(self):
        return not any(self.failures.values())

    def fail(self, name, w):
        self.failures[name] = self.failures.get(name, 0) + 1
        if self.witness is None:
            self.witness = (name, w)

    def tick(self, name, ok, w=None):
        self.counts[name] = self.counts.get(name, 0) + 1
        self.failures.setdefault(name, 0)
        if not ok:
            self.fail(name, w)

    def to_json(self):
        return {
            "passed": self.passed,
            "levels": list(self.levels),
            "checks": {k: {"count": self.counts[k], "failures": self.failures.get(k, 0)} for k in sorted(self.counts)},
            "witness": None if self.witness is None else repr(self.witness),
        }


def _check_simplicial(report, name, F, dom, cod_face, cod_degen, simplices, n):
    for s in simplices:
        Fs = F(s)
        if n >= 1:
            for k in range(n + 1):
                report.tick(name, F(dom.face(s, k)) == cod_face(Fs, k), (s, "d", k))
        for k in range(n + 1):
            report.tick(name, F(dom.degen(s, k)) == cod_degen(Fs, k), (s, "s", k))


def _check_homotopy(report, name, H, f0, f1, dom, cod, simplices, n):
    """Simplicial homotopy identities for ``H_j: X_n -> Y_{n+1}`` from ``f0`` to ``f1``."""
    for s in simplices:
        Hs = [H(s, j) for j in range(n + 1)]
        report.tick(name, cod.face(Hs[0], 0) == f0(s), (s, "start"))
        report.tick(name, cod.face(Hs[n], n + 1) == f1(s), (s, "end"))
        for j in range(n + 1):
            for i in range(n + 2):
                if i < j:
                    ok = cod.face(Hs[j], i) == H(dom.face(s, i), j - 1)
                elif i == j + 1 and j + 1 <= n:
                    ok = cod.face(Hs[j + 1], j + 1) == cod.face(Hs[j], j + 1)
                elif i > j + 1:
                    ok = cod.face(Hs[j], i) == H(dom.face(s, i - 1), j)
                else:
                    continue
                report.tick(name, ok, (s, "d", i, j))
            for i in range(n + 2):
                if i <= j:
                    ok = cod.degen(Hs[j], i) == H(dom.degen(s, i), j + 1)
                else:
                    ok = cod.degen(Hs[j], i) == H(dom.degen(s, i - 1), j)
                report.tick(name, ok, (s, "s", i, j))


def _pi0_partition(data, level0, level1):
    parent = {s: s for s in level0}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in level1:
        a, b = find(data.face(e, 0)), find(data.face(e, 1))
        if a != b:
            parent[max(a, b, key=repr)] = min(a, b, key=repr)
    return {s: find(s) for s in level0}


def verify_homotopy_JK(O, X, a, b, levels=2, words=4, f=None, corrupt=None, seed=None, budget=None):
    """Materialize the bar constructions and check ``psi``, ``sigma``, ``delta``, ``phi``, ``J`` and ``K``.

    Domain words are bounded by ``words // 2`` so that every formula output
    stays within ``words``; an escaping output raises ``BoundTooSmall``.
    ``seed`` re-runs the maps with random representatives and compares.
    ``corrupt="psi"`` replaces ``psi`` by a map that ignores faces.
    """
    f = f or identity_operad_map(O)
    a, b = tuple(a), tuple(b)
    W = words
    half = W // 2
    if len(a) + len(b) > half:
        raise BoundTooSmall(f"words a b of length {len(a) + len(b)} need a word bound of at least {2 * (len(a) + len(b))}", (a, b))
    budget = budget or Budget("verify_homotopy_JK")
    th = _Theories(f)
    maps = _Maps(th, X, W, corrupt)
    plain = plain_bar(th, X, a, b, half)
    pair = pair_bar(th, X, a, b, half)
    A_bar = single_bar(th, X, a, half)
    B_bar = single_bar(th, X, b, half)
    # codomains evaluate faces by formula, so they need no enumeration
    plain_out = plain_bar(th, X, a, b, W)
    pair_out = pair_bar(th, X, a, b, W)

    def split_face(s, k):
        return (A_bar.face(s[0], k), B_bar.face(s[1], k))

    def split_degen(s, k):
        return (A_bar.degen(s[0], k), B_bar.degen(s[1], k))

    report = JKReport(levels=tuple(range(levels + 1)))
    plain_levels = [plain.level(n, budget) for n in range(levels + 1)]
    pair_levels = [pair.level(n, budget) for n in range(levels + 1)]
    for n in range(levels + 1):
        _check_simplicial(report, "psi", maps.psi, pair, plain_out.face, plain_out.degen, pair_levels[n], n)
        _check_simplicial(report, "sigma", maps.sigma, plain, pair_out.face, pair_out.degen, plain_levels[n], n)
        _check_simplicial(report, "delta", maps.delta, plain, split_face, split_degen, plain_levels[n], n)
        _check_simplicial(report, "phi", maps.phi, pair, split_face, split_degen, pair_levels[n], n)
        _check_homotopy(
            report,
            "J",
            maps.J,
            lambda s: s,
            lambda s: maps.sigma(maps.psi(s)),
            pair,
            pair_out,
            pair_levels[n],
            n,
        )
        _check_homotopy(
            report,
            "K",
            maps.K,
            lambda s: maps.psi(maps.sigma(s)),
            lambda s: s,
            plain,
            plain_out,
            plain_levels[n],
            n,
        )
    # components: delta induces pi0(plain) -> pi0(A) x pi0(B)
    if levels >= 1:
        part = _pi0_partition(plain, plain_levels[0], plain_levels[1])
        pa = _pi0_partition(A_bar, A_bar.level(0, budget), A_bar.level(1, budget))
        pb = _pi0_partition(B_bar, B_bar.level(0, budget), B_bar.level(1, budget))
        img = {}
        for s, r in part.items():
            da, db = maps.delta(s)
            img.setdefault(r, set()).add((pa[da], pb[db]))
        well_defined = all(len(v) == 1 for v in img.values())
        targets = [next(iter(v)) for v in img.values()]
        bijective = well_defined and len(set(targets)) == len(targets) == len(set(pa.values())) * len(set(pb.values()))
        report.tick("delta_pi0", bijective, ("pi0", len(img), len(set(pa.values())), len(set(pb.values()))))
    if seed is not None:
        rng = random.Random(seed)
        th2 = _Theories(f, rng)
        maps2 = _Maps(th2, X, W, corrupt)
        pair2 = pair_bar(th2, X, a, b, half)
        plain2 = plain_bar(th2, X, a, b, half)
        for n in range(levels + 1):
            for s in pair_levels[n]:
                same = maps.psi(s) == maps2.psi(s) and all(maps.J(s, j) == maps2.J(s, j) for j in range(n + 1))
                if n >= 1:
                    same = same and all(pair.face(s, k) == pair2.face(s, k) for k in range(n + 1))
                report.tick("representatives", same, s)
            for s in plain_levels[n]:
                same = maps.sigma(s) == maps2.sigma(s) and all(maps.K(s, j) == maps2.K(s, j) for j in range(n + 1))
                if n >= 1:
                    same = same and all(plain.face(s, k) == plain2.face(s, k) for k in range(n + 1))
                report.tick("representatives", same, s)
    report.counts["cells"] = sum(len(lv) for lv in plain_levels) + sum(len(lv) for lv in pair_levels)
    report.failures["cells"] = 0
    return report
