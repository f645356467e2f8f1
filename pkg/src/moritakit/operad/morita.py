"""Cauchy completion of operads and the operadic Morita decision procedure."""

from itertools import product

from ..errors import OracleDisagreement
from ..fincat.morita import MoritaReport
from . import perm as P
from .core import OperadMap, SymOperad


def _colour_name(c, e):
    return f"({c},{e})"


def _op_name(p, ins, out):
    return f"{p}[{','.join(ins)};{out}]"


def unary_idempotents(O):
    return sorted(
        (c, e) for c in O.colours for e in O.unary(c, c) if O.gamma(e, (e,)) == e
    )


def cauchy_completion_operad(O):
    """Colours ``(c, e)`` with ``e`` a unary idempotent; returns ``(Cauchy(O), canonical map)``.

    An operation ``(c1,e1)...(cn,en) -> (c,e)`` is a ``p`` in ``O(c1...cn; c)``
    with ``p.(e1,...,en) = p = e.p``.  Operations are named
    ``p[<input colours>;<output colour>]``.
    """
    pairs = unary_idempotents(O)
    names = {_colour_name(c, e): (c, e) for c, e in pairs}
    by_base = {}
    for name, (c, e) in names.items():
        by_base.setdefault(c, []).append(name)
    ops = {}
    under = {}
    for (ins, out), os in O.by_sig.items():
        for cols in product(*(by_base[c] for c in ins)):
            es = tuple(names[x][1] for x in cols)
            for tgt in by_base[out]:
                e = names[tgt][1]
                for p in os:
                    if O.gamma(p, es) == p and O.gamma(e, (p,)) == p:
                        n = _op_name(p, cols, tgt)
                        ops[n] = (tuple(cols), tgt)
                        under[n] = p
    lookup = {(under[n], ops[n]): n for n in ops}
    action = {}
    for n, (ins, out) in ops.items():
        for s in P.all_perms(len(ins)):
            action[(n, s)] = lookup[(O.act(under[n], s), (P.act_word(ins, s), out))]
    by_out = {}
    for n, (ins, out) in ops.items():
        by_out.setdefault(out, []).append(n)
    compose = {}
    for n, (ins, out) in ops.items():
        for qs in product(*(by_out.get(c, ()) for c in ins)):
            r = O.gamma(under[n], tuple(under[q] for q in qs))
            sig = (tuple(c for q in qs for c in ops[q][0]), out)
            compose[(n, qs)] = lookup[(r, sig)]
    identities = {x: lookup[(e, ((x,), x))] for x, (c, e) in names.items()}
    K = SymOperad(sorted(names), ops, action, compose, identities, check=False)
    K.pair_of = names
    K.underlying = under
    K.lookup = lookup
    canon_col = {c: _colour_name(c, O.identities[c]) for c in O.colours}
    canon_ops = {}
    for o, (ins, out) in O.ops.items():
        canon_ops[o] = lookup[(o, (tuple(canon_col[c] for c in ins), canon_col[out]))]
    return K, OperadMap(O, K, canon_col, canon_ops, check=False)


def cauchy_operad_map(f, source_env=None, target_env=None):
    """The map induced by ``f`` between Cauchy completions."""
    KS = source_env or cauchy_completion_operad(f.source)[0]
    KT = target_env or cauchy_completion_operad(f.target)[0]
    col = {x: _colour_name(f.colour_map[c], f.op_map[e]) for x, (c, e) in KS.pair_of.items()}
    ops = {}
    for n, (ins, out) in KS.ops.items():
        sig = (tuple(col[c] for c in ins), col[out])
        ops[n] = KT.lookup[(f.op_map[KS.underlying[n]], sig)]
    return OperadMap(KS, KT, col, ops, check=False)


def _words(colours, max_len):
    for k in range(max_len + 1):
        yield from product(colours, repeat=k)


def max_arity(O):
    return max((len(ins) for ins, _ in O.by_sig), default=0)


def ff_witness(f):
    """First source signature on which ``f`` is not a bijection, or ``None``."""
    S, T = f.source, f.target
    for ins in _words(S.colours, max_arity(T)):
        for out in S.colours:
            src = S.hom(ins, out)
            tgt = T.hom(tuple(f.colour_map[c] for c in ins), f.colour_map[out])
            if len(src) != len(tgt) or len({f.op_map[o] for o in src}) != len(tgt):
                return (ins, out)
    return None


def is_fully_faithful_op(f):
    return ff_witness(f) is None


def colour_retract_witness(O, c, c2):
    """Least ``(r, i)`` with ``r`` in ``O(c2; c)``, ``i`` in ``O(c; c2)`` and ``r.i = id_c``."""
    for r in O.unary(c2, c):
        for i in O.unary(c, c2):
            if O.gamma(r, (i,)) == O.identities[c]:
                return (r, i)
    return None


def colour_iso_witness(f, d):
    T = f.target
    for c in f.source.colours:
        x = f.colour_map[c]
        for g in T.unary(x, d):
            for h in T.unary(d, x):
                if T.gamma(g, (h,)) == T.identities[d] and T.gamma(h, (g,)) == T.identities[x]:
                    return (c, g)
    return None


def is_equivalence_op(f):
    if not is_fully_faithful_op(f):
        return False
    return all(colour_iso_witness(f, d) is not None for d in f.target.colours)


def morita_report_op(f, cross_check=True):
    """Definitional Morita check of an operad map.

    With ``cross_check`` the verdict is compared against equivalence of the
    induced map on Cauchy completions; a mismatch raises ``OracleDisagreement``.
    """
    T = f.target
    witnesses = {}
    es = esr = True
    for d in T.colours:
        iso = colour_iso_witness(f, d)
        ret = None
        for c in f.source.colours:
            w = colour_retract_witness(T, d, f.colour_map[c])
            if w is not None:
                ret = (c, *w)
                break
        witnesses[d] = {"iso": iso, "retract": ret}
        es = es and iso is not None
        esr = esr and ret is not None
    report = MoritaReport(is_fully_faithful_op(f), es, esr, witnesses)
    if cross_check:
        oracle = is_equivalence_op(cauchy_operad_map(f))
        if oracle != report.verdict:
            raise OracleDisagreement(
                f"operadic Morita verdict {report.verdict} but Cauchy equivalence {oracle}", f.to_json()
            )
    return report
