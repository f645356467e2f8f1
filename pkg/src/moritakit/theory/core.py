"""The algebraic theory of a finite operad, materialized one hom-set at a time.

An element of the clone ``T(O)(c; d)`` is the term ``o(x_{f(1)}, ..., x_{f(n)})``
for an operation ``o`` with output ``d`` and a colour-preserving map ``f``
from its inputs to the positions of ``c``.  Two terms are equal when they
differ by a permutation ``s``: ``(f, o) ~ (f . s, o . s)``.  Every class has
a unique representative with ``f`` monotone and ``o`` least among the
permutations fixing ``f``.
"""

from itertools import product
from typing import NamedTuple

from ..errors import OracleDisagreement
from ..operad import perm as P


class TheoryClass(NamedTuple):
    f: tuple
    op: str

    def __str__(self):
        return f"[{','.join(str(i) for i in self.f)};{self.op}]"


class TheoryArrow(NamedTuple):
    source: tuple
    target: tuple
    components: tuple

    def __str__(self):
        return "<" + " ".join(str(c) for c in self.components) + ">"


def word(x):
    """A word from a tuple, list or comma-separated string; ``-`` or ``""`` is the empty word."""
    if isinstance(x, str):
        x = x.strip()
        if x in ("", "-", "[-]"):
            return ()
        return tuple(p.strip() for p in x.split(","))
    return tuple(x)


def is_ordered_map(f, b, c):
    return all(b[i] == c[f[i]] for i in range(len(b))) and all(f[i] <= f[i + 1] for i in range(len(f) - 1))


def fiber_stabilizer(f):
    """Permutations ``s`` with ``f . s == f`` (products of symmetric groups on the fibers)."""
    return _stab(tuple(f))


_STAB = {}


def _stab(f):
    out = _STAB.get(f)
    if out is None:
        out = P.stabilizer(f)
        _STAB[f] = out
    return out


def ordered_colour_maps(b, c):
    """Monotone colour-preserving maps ``b -> c`` with their fiber stabilizers."""
    b, c = tuple(b), tuple(c)
    out = []

    def go(i, lo, acc):
        if i == len(b):
            f = tuple(acc)
            out.append((f, fiber_stabilizer(f)))
            return
        for j in range(lo, len(c)):
            if c[j] == b[i]:
                acc.append(j)
                go(i + 1, j, acc)
                acc.pop()

    go(0, 0, [])
    return out


def normalize(O, g, o):
    """Canonical class of the term ``o(x_{g(1)}, ...)``; ``g`` need not be monotone."""
    memo = _cache(O).setdefault("normalize", {})
    key = (tuple(g), o)
    hit = memo.get(key)
    if hit is None:
        hit = memo[key] = _normalize(O, key[0], o)
    return hit


def _normalize(O, g, o):
    order = tuple(sorted(range(len(g)), key=lambda i: g[i]))
    f = tuple(g[i] for i in order)
    o1 = O.act(o, order)
    return TheoryClass(f, min(O.act(o1, s) for s in fiber_stabilizer(f)))


def _cache(O):
    c = getattr(O, "_theory_cache", None)
    if c is None:
        c = {}
        O._theory_cache = c
    return c


def clone_hom(O, c, d, oracle=False):
    """Classes of ``T(O)(c; d)`` in canonical order.

    With ``oracle`` the classes are recomputed as the colimit over all
    colour-preserving maps (not only monotone ones) and a bijection is asserted.
    """
    c = tuple(c)
    key = ("clone", c, d)
    cache = _cache(O)
    if key not in cache:
        classes = set()
        for (ins, out), ops in O.by_sig.items():
            if out != d:
                continue
            for f, stab in ordered_colour_maps(ins, c):
                for o in ops:
                    classes.add(TheoryClass(f, min(O.act(o, s) for s in stab)))
        cache[key] = sorted(classes)
    result = cache[key]
    if oracle:
        comma_colimit_check(O, c, d, result)
    return list(result)


def comma_colimit(O, c, d):
    """Components of all terms ``(g, o)`` under ``(g, o) ~ (g . s, o . s)`` for every permutation."""
    parent = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    nodes = []
    for (ins, out), ops in O.by_sig.items():
        if out != d:
            continue
        choices = [[j for j in range(len(c)) if c[j] == x] for x in ins]
        for g in product(*choices):
            for o in ops:
                parent[(g, o)] = (g, o)
                nodes.append((g, o))
    for g, o in nodes:
        for s in P.all_perms(len(g)):
            a, b = find((g, o)), find((P.act_word(g, s), O.act(o, s)))
            if a != b:
                parent[max(a, b)] = min(a, b)
    comps = {}
    for v in nodes:
        comps.setdefault(find(v), []).append(v)
    return parent, find, comps


def comma_colimit_check(O, c, d, classes=None):
    """Assert that the monotone formula and the full colimit give matching classes."""
    classes = clone_hom(O, c, d) if classes is None else classes
    parent, find, comps = comma_colimit(O, c, d)
    hit = {}
    for cl in classes:
        r = find((cl.f, cl.op))
        if r in hit:
            raise OracleDisagreement(f"classes {hit[r]} and {cl} meet in one colimit component", (c, d))
        hit[r] = cl
    if len(hit) != len(comps):
        missing = sorted(set(comps) - set(hit))[0]
        raise OracleDisagreement(f"colimit component of {missing} has no monotone representative", (c, d))
    return True


def theory_hom(O, c, d):
    """All arrows ``c -> d``: one class per entry of ``d``."""
    c, d = tuple(c), tuple(d)
    return [TheoryArrow(c, d, comps) for comps in product(*(clone_hom(O, c, x) for x in d))]


def theory_hom_size(O, c, d):
    n = 1
    for x in d:
        n *= len(clone_hom(O, c, x))
    return n


# -- structural arrows ----------------------------------------------------
def identity_arrow(O, c):
    c = tuple(c)
    return TheoryArrow(c, c, tuple(TheoryClass((k,), O.identities[x]) for k, x in enumerate(c)))


def projection(O, c, idx):
    """``c -> (c[i] for i in idx)``."""
    c, idx = tuple(c), tuple(idx)
    memo = _cache(O).setdefault("projection", {})
    hit = memo.get((c, idx))
    if hit is None:
        hit = memo[(c, idx)] = _projection(O, c, idx)
    return hit


def _projection(O, c, idx):
    return TheoryArrow(c, tuple(c[i] for i in idx), tuple(TheoryClass((i,), O.identities[c[i]]) for i in idx))


def first_projection(O, u, v):
    return projection(O, tuple(u) + tuple(v), range(len(u)))


def second_projection(O, u, v):
    return projection(O, tuple(u) + tuple(v), range(len(u), len(u) + len(v)))


def diagonal(O, u):
    """``u -> u u``."""
    u = tuple(u)
    return projection(O, u, list(range(len(u))) * 2)


def pairing(a, b):
    """``<a, b>: c -> d e`` from ``a: c -> d`` and ``b: c -> e``."""
    if a.source != b.source:
        raise ValueError("pairing needs a common source")
    return TheoryArrow(a.source, a.target + b.target, a.components + b.components)


def product_arrow(a, b):
    """``a x b: u v -> u' v'``."""
    k = len(a.source)
    shifted = tuple(TheoryClass(tuple(i + k for i in cl.f), cl.op) for cl in b.components)
    return TheoryArrow(a.source + b.source, a.target + b.target, a.components + shifted)


def compose_theory(O, h, g, rng=None):
    """``h . g`` for ``g: b -> c`` and ``h: c -> d``.

    Each component of ``h`` is substituted with the components of ``g`` it
    reads; ``rng`` picks random representatives first (for independence checks).
    """
    if h.source != g.target:
        raise ValueError(f"cannot compose: {h.source} != {g.target}")
    if rng is None:
        memo = _cache(O).setdefault("compose", {})
        hit = memo.get((h, g))
        if hit is None:
            hit = memo[(h, g)] = _substitute(O, h, g, None)
        return hit
    return _substitute(O, h, g, rng)


def _substitute(O, h, g, rng):
    comps = []
    inner = g.components
    if rng is not None:
        inner = tuple(_random_rep(O, cl, rng) for cl in inner)
    for cl in h.components:
        if rng is not None:
            cl = _random_rep(O, cl, rng)
        qs = [inner[i] for i in cl.f]
        p = O.gamma(cl.op, tuple(q.op for q in qs))
        G = tuple(i for q in qs for i in q.f)
        comps.append(normalize(O, G, p))
    return TheoryArrow(g.source, h.target, tuple(comps))


def _random_rep(O, cl, rng):
    """A random term ``(f . s, o . s)`` in the class; ``f . s`` is usually not monotone."""
    s = rng.choice(P.all_perms(len(cl.f)))
    return TheoryClass(P.act_word(cl.f, s), O.act(cl.op, s))


def induced_theory_map(f, c=None, d=None):
    """``T(f)`` as a function on arrows and classes.

    Given words ``c`` and ``d`` the result is instead the table of ``T(f)`` on
    ``theory_hom(source, c, d)``.
    """
    T = f.target

    def on_class(cl):
        return normalize(T, cl.f, f.op_map[cl.op])

    def on_arrow(a):
        if isinstance(a, TheoryClass):
            return on_class(a)
        return TheoryArrow(
            tuple(f.colour_map[x] for x in a.source),
            tuple(f.colour_map[x] for x in a.target),
            tuple(on_class(cl) for cl in a.components),
        )

    if c is not None and d is not None:
        return {a: on_arrow(a) for a in theory_hom(f.source, c, d)}
    return on_arrow


def words_up_to(colours, n):
    for k in range(n + 1):
        yield from product(colours, repeat=k)


def is_bijective_on(f, c, d):
    """Is ``T(f): clone_hom(S, c, d) -> clone_hom(T, f c, f d)`` a bijection?"""
    F = induced_theory_map(f)
    src = clone_hom(f.source, c, d)
    tgt = clone_hom(f.target, tuple(f.colour_map[x] for x in c), f.colour_map[d])
    imgs = {F(cl) for cl in src}
    return len(imgs) == len(src) == len(tgt)


def theory_fully_faithful(f, word_bound=3):
    """First ``(c, d)`` within the bound where ``T(f)`` is not bijective, or ``None``."""
    for c in words_up_to(f.source.colours, word_bound):
        for d in f.source.colours:
            if not is_bijective_on(f, c, d):
                return (c, d)
    return None


def is_retract_in_theory(O, c, d):
    """Least ``(r, i)`` with ``i: (c) -> d``, ``r: d -> (c)`` and ``r . i = id``, or ``None``."""
    one = (c,)
    ident = identity_arrow(O, one)
    for r in theory_hom(O, d, one):
        for i in theory_hom(O, one, d):
            if compose_theory(O, r, i) == ident:
                return (r, i)
    return None


def theory_retract_search(O, c, length_bound):
    """All words ``d`` of length at most ``length_bound`` exhibiting ``c`` as a retract, with witnesses."""
    out = []
    for d in words_up_to(O.colours, length_bound):
        w = is_retract_in_theory(O, c, d)
        if w is not None:
            out.append((d, w))
    return out
