"""Named operads, the adjunction between categories and operads, and function operads."""

from itertools import product

from ..fincat.category import FinCategory, Functor
from . import perm as P
from .core import OperadMap, SymOperad, build_closed_operad


def operad_B():
    """Colours ``a, b`` and one symmetric binary operation ``m: (a, a) -> b``."""
    ops = {"id_a": (("a",), "a"), "id_b": (("b",), "b"), "m": (("a", "a"), "b")}
    action = {("m", (1, 0)): "m"}
    return SymOperad(["a", "b"], ops, action, {}, {"a": "id_a", "b": "id_b"})


def terminal_operad(colour="x"):
    """One colour and only its identity."""
    return SymOperad([colour], {f"id_{colour}": ((colour,), colour)}, {}, {}, {colour: f"id_{colour}"})


def underlying_category(O):
    """Unary operations of ``O`` as a category on its colours."""
    mors = {}
    for (ins, out), os in O.by_sig.items():
        if len(ins) == 1:
            for o in os:
                mors[o] = (ins[0], out)
    table = {}
    for f, (a, b) in mors.items():
        for g, (b2, c) in mors.items():
            if b2 == b:
                table[(g, f)] = O.gamma(g, (f,))
    return FinCategory(list(O.colours), mors, dict(O.identities), table, check=False)


def category_to_operad(C):
    """``C`` as an operad with unary operations only."""
    ops = {m: ((d,), c) for m, (d, c) in C.morphisms.items()}
    compose = {(g, (f,)): gf for (g, f), gf in C.table.items()}
    return SymOperad(C.objects, ops, {}, compose, dict(C.identity), check=False)


def functor_to_operad_map(F, source=None, target=None):
    return OperadMap(
        source or category_to_operad(F.source),
        target or category_to_operad(F.target),
        dict(F.obj_map),
        dict(F.mor_map),
        check=False,
    )


def operad_map_to_functor(f, source=None, target=None):
    S = source or underlying_category(f.source)
    T = target or underlying_category(f.target)
    return Functor(S, T, dict(f.colour_map), {m: f.op_map[m] for m in S.morphisms}, check=False)


def suboperad(O, colours=None, keep=None):
    """Full suboperad on ``colours`` (default all), optionally restricted to ops in ``keep``.

    ``keep`` must be closed under action and composition; this is not checked here.
    """
    cols = set(O.colours if colours is None else colours)
    ok = {
        o
        for o, (ins, out) in O.ops.items()
        if out in cols and all(c in cols for c in ins) and (keep is None or o in keep or O.is_identity(o))
    }
    ops = {o: O.ops[o] for o in ok}
    action = {(o, s): r for (o, s), r in O.action.items() if o in ok}
    compose = {(o, qs): r for (o, qs), r in O.table.items() if o in ok and all(q in ok for q in qs)}
    S = SymOperad(sorted(cols), ops, action, compose, {c: O.identities[c] for c in cols}, check=False)
    return S, OperadMap(S, O, {c: c for c in cols}, {o: o for o in ok}, check=False)


# -- concrete function operads -------------------------------------------
class FunctionSemantics:
    """Operations are functions between finite carriers ``range(sizes[c])``.

    A value is ``(inputs, output, table)`` where ``table`` lists outputs over
    the lexicographic product of input carriers.
    """

    def __init__(self, sizes):
        self.sizes = dict(sizes)
        self._points = {}

    def points(self, ins):
        ins = tuple(ins)
        pts = self._points.get(ins)
        if pts is None:
            pts = list(product(*(range(self.sizes[c]) for c in ins)))
            self._points[ins] = pts
        return pts

    def index(self, ins, point):
        k = 0
        for c, y in zip(ins, point):
            k = k * self.sizes[c] + y
        return k

    def identity(self, c):
        return ((c,), c, tuple(range(self.sizes[c])))

    def signature(self, v):
        return (v[0], v[1])

    def act(self, v, s):
        ins, out, table = v
        s = tuple(s)
        if s == P.identity(len(s)):
            return v
        inv = P.inverse(s)
        new_ins = P.act_word(ins, s)
        new = tuple(table[self.index(ins, tuple(y[inv[i]] for i in range(len(s))))] for y in self.points(new_ins))
        return (new_ins, out, new)

    def compose(self, v, inners):
        ins, out, table = v
        new_ins = tuple(c for q in inners for c in q[0])
        rows = []
        for z in self.points(new_ins):
            vals = []
            k = 0
            for q in inners:
                a = len(q[0])
                vals.append(q[2][self.index(q[0], z[k : k + a])])
                k += a
            rows.append(table[self.index(ins, tuple(vals))])
        return (new_ins, out, tuple(rows))

    def evaluate(self, v, args):
        return v[2][self.index(v[0], tuple(args))]


def function_operad(sizes, generators, cap=200, max_arity=None):
    """Suboperad of the endomorphism operad on ``sizes`` generated by function tables.

    ``generators`` are ``(inputs, output, table)`` triples.  The result carries
    ``.semantics`` (op id -> value) and ``.carriers`` so that it doubles as an
    algebra over itself.
    """
    sem = FunctionSemantics(sizes)
    gens = [(tuple(ins), out, tuple(table)) for ins, out, table in generators]
    O = build_closed_operad(sorted(sizes), gens, sem, cap=cap, max_arity=max_arity)
    O.carriers = dict(sizes)
    O.function_semantics = sem
    return O
