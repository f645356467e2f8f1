"""Functor enumeration, functor categories, lifting properties and iota-locality."""

from itertools import product

from .._limits import Budget
from ..errors import LimitExceeded
from .category import FinCategory, Functor, iota
from .morita import is_equivalence


def enumerate_functors(C, D, limit=10_000):
    """All functors ``C -> D`` in canonical order.

    Object maps vary lexicographically (in the order of ``D.objects``), then
    morphism maps in the order of ``D``'s morphism ids.  Raises
    ``LimitExceeded`` once more than ``limit`` functors exist.
    """
    budget = Budget("enumerate_functors")
    found = []
    mors = [m for m in C.morphisms if not C.is_identity(m)]
    # composable pairs whose constraint becomes checkable once both are set
    position = {m: k for k, m in enumerate(mors)}
    checks = [[] for _ in mors]
    for (g, f), gf in C.table.items():
        if C.is_identity(g) or C.is_identity(f):
            continue
        k = max(position[g], position[f], -1 if C.is_identity(gf) else position[gf])
        checks[k].append((g, f, gf))

    for images in product(D.objects, repeat=len(C.objects)):
        obj_map = dict(zip(C.objects, images))
        assign = {C.identity[x]: D.identity[obj_map[x]] for x in C.objects}

        def extend(k):
            if k == len(mors):
                found.append(Functor(C, D, obj_map, dict(assign), check=False))
                if len(found) > limit:
                    raise LimitExceeded(f"more than {limit} functors")
                return
            m = mors[k]
            d, c = C.morphisms[m]
            for cand in D.hom(obj_map[d], obj_map[c]):
                budget.spend()
                assign[m] = cand
                if all(D.compose(assign[g], assign[f]) == assign[gf] for g, f, gf in checks[k]):
                    extend(k + 1)
            assign.pop(m, None)

        extend(0)
    return found


def natural_transformations(F, G):
    """All natural transformations ``F => G`` as component dicts, in canonical order."""
    C, D = F.source, F.target
    objs = C.objects
    out = []
    for comps in product(*(D.hom(F.obj_map[x], G.obj_map[x]) for x in objs)):
        alpha = dict(zip(objs, comps))
        if all(
            D.compose(G.mor_map[m], alpha[d]) == D.compose(alpha[c], F.mor_map[m])
            for m, (d, c) in C.morphisms.items()
        ):
            out.append(alpha)
    return out


def functor_category(C, D, limit=10_000):
    """``Fun(C, D)`` as a finite category.  Objects ``F0, F1, ...`` follow enumeration order."""
    functors = enumerate_functors(C, D, limit)
    names = [f"F{k}" for k in range(len(functors))]
    mors = {}
    comps = {}
    for a, Fa in enumerate(functors):
        for b, Fb in enumerate(functors):
            for k, alpha in enumerate(natural_transformations(Fa, Fb)):
                m = f"F{a}>F{b}#{k}"
                mors[m] = (names[a], names[b])
                comps[m] = tuple(alpha[x] for x in C.objects)
    lookup = {(mors[m], comps[m]): m for m in mors}
    ident = {}
    for a, Fa in enumerate(functors):
        key = ((names[a], names[a]), tuple(D.identity[Fa.obj_map[x]] for x in C.objects))
        ident[names[a]] = lookup[key]
    out = {}
    for m, (s, t) in mors.items():
        out.setdefault(s, []).append(m)
    table = {}
    for f, (a, b) in mors.items():
        for g in out.get(b, ()):
            key = ((a, mors[g][1]), tuple(D.compose(x, y) for x, y in zip(comps[g], comps[f])))
            table[(g, f)] = lookup[key]
    FC = FinCategory(names, mors, ident, table, check=False)
    FC.functors = dict(zip(names, functors))
    FC.components = comps
    return FC


def has_rlp_cat(p, i, limit=10_000):
    """Does ``p: X -> Y`` have the right lifting property against ``i: A -> B``?

    Every commutative square ``u: A -> X``, ``v: B -> Y`` with ``p.u = v.i``
    is tested for a diagonal ``h: B -> X`` with ``h.i = u`` and ``p.h = v``.
    """
    A, B = i.source, i.target
    X, Y = p.source, p.target
    lifts = set()
    for h in enumerate_functors(B, X, limit):
        lifts.add((i.then(h).key(), h.then(p).key()))
    for u in enumerate_functors(A, X, limit):
        pu = u.then(p).key()
        for v in enumerate_functors(B, Y, limit):
            if i.then(v).key() != pu:
                continue
            if (u.key(), v.key()) not in lifts:
                return False
    return True


def to_terminal(C):
    from .category import standard_category

    T = standard_category("terminal")
    return Functor(C, T, {x: "0" for x in C.objects}, {m: "id_0" for m in C.morphisms}, check=False)


def restriction_functor(FB, FA, i):
    """``i^*: Fun(B, C) -> Fun(A, C)`` between functor categories built by :func:`functor_category`."""
    A = i.source
    by_key = {F.key(): name for name, F in FA.functors.items()}
    obj_map = {name: by_key[i.then(F).key()] for name, F in FB.functors.items()}
    B_objs = i.target.objects
    lookup = {(FA.morphisms[m], FA.components[m]): m for m in FA.morphisms}
    mor_map = {}
    for m, (s, t) in FB.morphisms.items():
        alpha = dict(zip(B_objs, FB.components[m]))
        restricted = tuple(alpha[i.obj_map[a]] for a in A.objects)
        mor_map[m] = lookup[((obj_map[s], obj_map[t]), restricted)]
    return Functor(FB, FA, obj_map, mor_map, check=False)


def iota_locality_check(C, limit=10_000):
    """Is ``iota^*: Iso Fun(Split, C) -> Iso Fun(Idem, C)`` an equivalence of groupoids?"""
    j = iota()
    FS = functor_category(j.target, C, limit)
    FI = functor_category(j.source, C, limit)
    res = restriction_functor(FS, FI, j)
    core_S, core_I = FS.core(), FI.core()
    core_res = Functor(
        core_S,
        core_I,
        res.obj_map,
        {m: res.mor_map[m] for m in core_S.morphisms},
        check=False,
    )
    return is_equivalence(core_res)
