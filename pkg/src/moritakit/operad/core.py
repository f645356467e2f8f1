"""Finite coloured symmetric operads and operad maps.

The symmetric action is a right action: ``o . s`` has inputs
``(c[s[0]], ..., c[s[n-1]])`` and ``o . (s t) = (o . s) . t`` with
``(s t)[i] = s[t[i]]``.
"""

from itertools import product

from .._limits import Budget
from ..errors import BadUnit, LimitExceeded, NonAssociative, NotAnOperadMap, NotClosed, NotEquivariant
from . import perm as P


class SymOperad:
    """Operations ``ops[id] = (inputs, output)`` with explicit action and composition tables.

    Identity-permutation actions and composites with identities are filled in
    when absent; explicitly listed entries are validated as given.
    """

    def __init__(self, colours, ops, action, compose, identities, check=True):
        self.colours = tuple(sorted(colours))
        self.ops = {o: (tuple(ins), out) for o, (ins, out) in ops.items()}
        self.identities = dict(identities)
        self.action = dict(action)
        self.table = {(o, tuple(qs)): r for (o, qs), r in compose.items()}
        self.by_sig = {}
        self.by_output = {c: [] for c in self.colours}
        for o in sorted(self.ops):
            ins, out = self.ops[o]
            self.by_sig.setdefault((ins, out), []).append(o)
            self.by_output.setdefault(out, []).append(o)
        for o, (ins, out) in self.ops.items():
            self.action.setdefault((o, P.identity(len(ins))), o)
            if not ins:
                self.table.setdefault((o, ()), o)
            if all(c in self.identities for c in ins):
                self.table.setdefault((o, tuple(self.identities[c] for c in ins)), o)
            idc = self.identities.get(out)
            if idc is not None:
                self.table.setdefault((idc, (o,)), o)
        if check:
            self._validate()

    # -- access ----------------------------------------------------------
    def sig(self, o):
        return self.ops[o]

    def arity(self, o):
        return len(self.ops[o][0])

    def inputs(self, o):
        return self.ops[o][0]

    def output(self, o):
        return self.ops[o][1]

    def hom(self, inputs, output):
        return list(self.by_sig.get((tuple(inputs), output), ()))

    def unary(self, c, d):
        return self.hom((c,), d)

    def act(self, o, s):
        return self.action[(o, tuple(s))]

    def gamma(self, o, inners):
        return self.table[(o, tuple(inners))]

    def inner_tuples(self, inputs):
        return product(*(self.by_output.get(c, ()) for c in inputs))

    def identity_of(self, c):
        return self.identities[c]

    def is_identity(self, o):
        ins, out = self.ops[o]
        return len(ins) == 1 and self.identities.get(out) == o

    def signatures(self):
        return sorted(self.by_sig)

    def __len__(self):
        return len(self.ops)

    def __repr__(self):
        return f"SymOperad(colours={list(self.colours)}, ops={len(self.ops)})"

    def key(self):
        return (
            self.colours,
            tuple(sorted(self.ops.items())),
            tuple(sorted(self.action.items())),
            tuple(sorted(self.table.items())),
        )

    # -- validation -------------------------------------------------------
    def _validate(self):
        cols = set(self.colours)
        for c in self.colours:
            u = self.identities.get(c)
            if u is None or self.ops.get(u) != ((c,), c):
                raise BadUnit(f"colour {c} has no unary identity", c)
        for o, (ins, out) in sorted(self.ops.items()):
            if out not in cols or any(c not in cols for c in ins):
                raise NotClosed(f"operation {o} uses an undeclared colour", o)
        budget = Budget("validate_operad")
        for o, (ins, out) in sorted(self.ops.items()):
            for s in P.all_perms(len(ins)):
                r = self.action.get((o, s))
                if r is None:
                    raise NotClosed(f"action of {list(s)} on {o} is missing", (o, s))
                if self.ops.get(r) != (P.act_word(ins, s), out):
                    raise NotClosed(f"{o}.{list(s)} = {r} has the wrong signature", (o, s, r))
        for o, (ins, out) in sorted(self.ops.items()):
            for qs in self.inner_tuples(ins):
                budget.spend()
                r = self.table.get((o, qs))
                if r is None:
                    raise NotClosed(f"composite of {o} with {list(qs)} is missing", (o, qs))
                want = (tuple(c for q in qs for c in self.ops[q][0]), out)
                if self.ops.get(r) != want:
                    raise NotClosed(f"composite of {o} with {list(qs)} has the wrong signature", (o, qs, r))
        for o, (ins, out) in sorted(self.ops.items()):
            if self.gamma(self.identities[out], (o,)) != o:
                raise BadUnit(f"id_{out} composed with {o} is not {o}", (self.identities[out], o))
            ids = tuple(self.identities[c] for c in ins)
            if self.gamma(o, ids) != o:
                raise BadUnit(f"{o} composed with identities is not {o}", (o, ids))
        self._validate_equivariance(budget)
        self._validate_associativity(budget)

    def _validate_equivariance(self, budget):
        for o, (ins, out) in sorted(self.ops.items()):
            n = len(ins)
            for s in P.all_perms(n):
                os_ = self.act(o, s)
                for t in P.all_perms(n):
                    budget.spend()
                    if self.act(os_, t) != self.act(o, P.compose(s, t)):
                        raise NotEquivariant(f"({o}.{list(s)}).{list(t)} != {o}.({list(s)}{list(t)})", (o, s, t))
        for (o, qs), r in sorted(self.table.items()):
            sizes = [self.arity(q) for q in qs]
            for s in P.all_perms(len(qs)):
                budget.spend()
                lhs = self.gamma(self.act(o, s), P.act_word(qs, s))
                rhs = self.act(r, P.block_perm(s, sizes))
                if lhs != rhs:
                    raise NotEquivariant(f"composite of {o} not equivariant under {list(s)}", (o, qs, s))
            for taus in product(*(P.all_perms(k) for k in sizes)):
                budget.spend()
                lhs = self.gamma(o, tuple(self.act(q, t) for q, t in zip(qs, taus)))
                if lhs != self.act(r, P.block_sum(taus)):
                    raise NotEquivariant(f"composite of {o} not equivariant in its inputs", (o, qs, taus))

    def _validate_associativity(self, budget):
        for (o, qs), p in sorted(self.table.items()):
            for rs in self.inner_tuples(self.ops[p][0]):
                budget.spend()
                lhs = self.gamma(p, rs)
                blocks = []
                k = 0
                for q in qs:
                    a = self.arity(q)
                    blocks.append(self.gamma(q, rs[k : k + a]))
                    k += a
                if lhs != self.gamma(o, blocks):
                    raise NonAssociative(f"composition of {o}, {list(qs)}, {list(rs)} is not associative", (o, qs, rs))

    # -- serialization ----------------------------------------------------
    def to_json(self):
        return {
            "colours": list(self.colours),
            "ops": [{"id": o, "inputs": list(ins), "output": out} for o, (ins, out) in sorted(self.ops.items())],
            "action": [
                {"op": o, "perm": list(s), "result": r}
                for (o, s), r in sorted(self.action.items())
                if s != P.identity(len(s))
            ],
            "compose": [
                {"outer": o, "inners": list(qs), "result": r}
                for (o, qs), r in sorted(self.table.items())
                if not self.is_identity(o) and not all(self.is_identity(q) for q in qs)
            ],
            "identities": dict(sorted(self.identities.items())),
        }


def validate_operad(raw):
    """Build a :class:`SymOperad` from the JSON description, raising on the first failed axiom."""
    try:
        ops = {e["id"]: (tuple(e["inputs"]), e["output"]) for e in raw["ops"]}
        action = {(e["op"], tuple(e["perm"])): e["result"] for e in raw.get("action", [])}
        compose = {(e["outer"], tuple(e["inners"])): e["result"] for e in raw.get("compose", [])}
        return SymOperad(raw["colours"], ops, action, compose, raw["identities"])
    except KeyError as exc:
        raise NotClosed(f"operad description lacks {exc}", str(exc)) from None


class OperadMap:
    def __init__(self, source, target, colour_map, op_map, check=True):
        self.source = source
        self.target = target
        self.colour_map = dict(colour_map)
        self.op_map = dict(op_map)
        for c in source.colours:
            self.op_map.setdefault(source.identities[c], target.identities.get(self.colour_map.get(c)))
        if check:
            self._validate()

    def __call__(self, o):
        return self.op_map[o]

    def _validate(self):
        S, T = self.source, self.target
        for c in S.colours:
            if self.colour_map.get(c) not in T.colours:
                raise NotAnOperadMap(f"colour {c} has no image", c)
        for o, (ins, out) in sorted(S.ops.items()):
            img = self.op_map.get(o)
            want = (tuple(self.colour_map[c] for c in ins), self.colour_map[out])
            if img not in T.ops or T.ops[img] != want:
                raise NotAnOperadMap(f"{o} is not sent to an operation of signature {want}", o)
        for c in S.colours:
            if self.op_map[S.identities[c]] != T.identities[self.colour_map[c]]:
                raise NotAnOperadMap(f"identity of {c} not preserved", c)
        for (o, s), r in sorted(S.action.items()):
            if T.act(self.op_map[o], s) != self.op_map[r]:
                raise NotAnOperadMap(f"action on {o} not preserved", (o, s))
        for (o, qs), r in sorted(S.table.items()):
            if T.gamma(self.op_map[o], tuple(self.op_map[q] for q in qs)) != self.op_map[r]:
                raise NotAnOperadMap(f"composite of {o} with {list(qs)} not preserved", (o, qs))

    def then(self, other):
        """``other . self``."""
        return OperadMap(
            self.source,
            other.target,
            {c: other.colour_map[d] for c, d in self.colour_map.items()},
            {o: other.op_map[p] for o, p in self.op_map.items()},
            check=False,
        )

    def key(self):
        return (tuple(sorted(self.colour_map.items())), tuple(sorted(self.op_map.items())))

    def __eq__(self, other):
        return isinstance(other, OperadMap) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"OperadMap({self.colour_map})"

    def to_json(self, with_operads=True):
        out = {"colour_map": dict(sorted(self.colour_map.items())), "op_map": dict(sorted(self.op_map.items()))}
        if with_operads:
            out["source"] = self.source.to_json()
            out["target"] = self.target.to_json()
        return out



def identity_operad_map(O):
    return OperadMap(O, O, {c: c for c in O.colours}, {o: o for o in O.ops}, check=False)


def operad_map_from_json(raw, source, target):
    return OperadMap(source, target, raw["colour_map"], raw["op_map"])


def build_closed_operad(colours, generators, sem, cap=200, name_of=None, max_arity=None):
    """Close ``generators`` under action and composition in a semantic model.

    ``sem`` supplies ``identity(c)``, ``signature(v)``, ``act(v, s)`` and
    ``compose(v, inners)`` on hashable values.  Identities are named
    ``id_<colour>``; other operations ``name_of(v, k)`` or ``o<k>`` in sorted
    order.  Raises ``LimitExceeded`` past ``cap`` operations or on an
    operation of arity above ``max_arity``.
    """
    colours = sorted(colours)
    ids = {c: sem.identity(c) for c in colours}
    values = set(ids.values())
    frontier = set()
    for g in generators:
        if g not in values:
            values.add(g)
            frontier.add(g)
    budget = Budget("build_closed_operad")

    def note(w):
        if w not in values and w not in fresh:
            fresh.add(w)
            if len(values) + len(fresh) > cap:
                raise LimitExceeded(f"operad closure exceeds {cap} operations")
            if max_arity is not None and len(sem.signature(w)[0]) > max_arity:
                raise LimitExceeded(f"operad closure reaches arity above {max_arity}")

    while frontier:
        fresh = set()
        for v in list(frontier):
            n = len(sem.signature(v)[0])
            for s in P.all_perms(n):
                note(sem.act(v, s))
        by_out = {}
        for v in values:
            by_out.setdefault(sem.signature(v)[1], []).append(v)
        for v in values:
            ins = sem.signature(v)[0]
            for qs in product(*(by_out.get(c, ()) for c in ins)):
                if v not in frontier and not any(q in frontier for q in qs):
                    continue
                budget.spend()
                note(sem.compose(v, qs))
        values |= fresh
        frontier = fresh
    id_vals = {v: c for c, v in ids.items()}
    rest = sorted((v for v in values if v not in id_vals), key=lambda v: (sem.signature(v), repr(v)))
    name = {v: f"id_{c}" for v, c in id_vals.items()}
    for k, v in enumerate(rest):
        name[v] = name_of(v, k) if name_of else f"o{k}"
    ops = {name[v]: sem.signature(v) for v in values}
    action = {}
    for v in values:
        n = len(sem.signature(v)[0])
        for s in P.all_perms(n):
            action[(name[v], s)] = name[sem.act(v, s)]
    by_out = {}
    for v in values:
        by_out.setdefault(sem.signature(v)[1], []).append(v)
    compose = {}
    for v in values:
        for qs in product(*(by_out.get(c, ()) for c in sem.signature(v)[0])):
            compose[(name[v], tuple(name[q] for q in qs))] = name[sem.compose(v, qs)]
    O = SymOperad(colours, ops, action, compose, {c: name[v] for c, v in ids.items()}, check=False)
    O.semantics = {name[v]: v for v in values}
    return O
