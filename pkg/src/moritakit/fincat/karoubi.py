"""Idempotent splitting and the Karoubi envelope (Cauchy completion) of a finite category."""

from ..errors import NotIdempotent
from .category import FinCategory, Functor


def split_idempotent(C, e):
    """Return the lexicographically least splitting ``(r, i)`` of ``e``, or ``None``.

    A splitting is ``r: x -> y``, ``i: y -> x`` with ``r.i = id_y`` and
    ``i.r = e``.
    """
    x, x2 = C.morphisms[e]
    if x != x2 or C.compose(e, e) != e:
        raise NotIdempotent(f"{e} is not an idempotent", e)
    best = None
    for y in C.objects:
        for r in C.hom(x, y):
            for i in C.hom(y, x):
                if C.compose(r, i) == C.identity[y] and C.compose(i, r) == e:
                    if best is None or (r, i) < best:
                        best = (r, i)
    return best


def is_cauchy_complete(C):
    return all(split_idempotent(C, e) is not None for e in C.idempotents())


def _obj_name(x, e):
    return f"({x},{e})"


def _mor_name(g, src, dst):
    return f"{g}:{src}>{dst}"


def karoubi_envelope(C):
    """The Karoubi envelope of ``C`` and the canonical functor ``x |-> (x, id_x)``.

    Objects are pairs ``(x, e)`` with ``e`` idempotent on ``x``; a morphism
    ``(x, e) -> (x', e')`` is a ``g: x -> x'`` with ``g.e = g = e'.g``.
    """
    pairs = sorted((C.dom(e), e) for e in C.idempotents())
    objs = {_obj_name(x, e): (x, e) for x, e in pairs}
    mors = {}
    under = {}
    for s, (x, e) in objs.items():
        for t, (x2, e2) in objs.items():
            for g in C.hom(x, x2):
                if C.compose(g, e) == g and C.compose(e2, g) == g:
                    m = _mor_name(g, s, t)
                    mors[m] = (s, t)
                    under[m] = g
    ident = {s: _mor_name(e, s, s) for s, (x, e) in objs.items()}
    table = {}
    out = {}
    for m, (s, t) in mors.items():
        out.setdefault(s, []).append(m)
    for f, (a, b) in mors.items():
        for g in out.get(b, ()):
            table[(g, f)] = _mor_name(C.compose(under[g], under[f]), a, mors[g][1])
    K = FinCategory(objs, mors, ident, table, check=False)
    K.pair_of = objs
    K.underlying = under
    canon = Functor(
        C,
        K,
        {x: _obj_name(x, C.identity[x]) for x in C.objects},
        {
            g: _mor_name(g, _obj_name(C.dom(g), C.identity[C.dom(g)]), _obj_name(C.cod(g), C.identity[C.cod(g)]))
            for g in C.morphisms
        },
        check=False,
    )
    return K, canon


def karoubi_functor(F, source_env=None, target_env=None):
    """The functor induced by ``F`` between Karoubi envelopes."""
    KC = source_env or karoubi_envelope(F.source)[0]
    KD = target_env or karoubi_envelope(F.target)[0]
    obj_map = {}
    for s, (x, e) in KC.pair_of.items():
        obj_map[s] = _obj_name(F.obj_map[x], F.mor_map[e])
    mor_map = {}
    for m, (s, t) in KC.morphisms.items():
        mor_map[m] = _mor_name(F.mor_map[KC.underlying[m]], obj_map[s], obj_map[t])
    return Functor(KC, KD, obj_map, mor_map, check=False)
