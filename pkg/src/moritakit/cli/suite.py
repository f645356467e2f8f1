"""The randomized verification suite: a seeded corpus and a registry of invariants."""

import hashlib
import json
from dataclasses import dataclass, field
from itertools import product

from .. import bar as BR
from .. import fincat as FC
from .. import operad as OP
from .. import simpset as SS
from .. import theory as TH
from ..errors import LimitExceeded, MoritaKitError, ValidationError
from . import corpus as CP

DEFAULT_BOUNDS = {
    "objects": 4,
    "morphisms": 15,
    "colours": 3,
    "operations": 10,
    "word": 3,
    "dim": 4,
    "carrier": 3,
    "bar_levels": 2,
}
DEFAULT_SIZES = {"categories": 100, "functors": 200, "operads": 40, "maps": 120}


@dataclass
class VerifyConfig:
    seed: int = 0
    sizes: dict = field(default_factory=lambda: dict(DEFAULT_SIZES))
    bounds: dict = field(default_factory=lambda: dict(DEFAULT_BOUNDS))
    only: tuple = ()
    inject: tuple = ()

    def __post_init__(self):
        for k, v in {**self.sizes, **self.bounds}.items():
            if not isinstance(v, int) or v <= 0:
                raise ValidationError(f"bound {k} must be a positive integer", k)

    def with_overrides(self, pairs):
        """Apply ``k=v`` overrides to sizes or bounds."""
        for k, v in pairs.items():
            if k in self.sizes:
                self.sizes[k] = int(v)
            elif k in self.bounds:
                self.bounds[k] = int(v)
            else:
                raise ValidationError(f"unknown bound {k}", k)
        self.__post_init__()
        return self


class Corpus:
    """Everything the properties draw on, generated lazily from the seed."""

    def __init__(self, config):
        self.config = config
        self._cache = {}

    def _get(self, name, build):
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    @property
    def categories(self):
        c, b = self.config, self.config.bounds
        return self._get(
            "categories",
            lambda: CP.category_corpus(CP.seeded(c.seed, "categories"), c.sizes["categories"], b["objects"], b["morphisms"]),
        )

    @property
    def functors(self):
        c = self.config
        return self._get("functors", lambda: CP.functor_corpus(CP.seeded(c.seed, "functors"), self.categories, c.sizes["functors"]))

    @property
    def operads(self):
        c, b = self.config, self.config.bounds
        return self._get(
            "operads",
            lambda: CP.operad_corpus(CP.seeded(c.seed, "operads"), c.sizes["operads"], b["colours"], b["operations"]),
        )

    @property
    def maps(self):
        c = self.config
        return self._get("maps", lambda: CP.map_corpus(CP.seeded(c.seed, "maps"), self.operads, self.functors, c.sizes["maps"]))

    def rng(self, tag):
        return CP.seeded(self.config.seed, tag)

    def fingerprint(self):
        h = hashlib.sha256()
        for C in self.categories:
            h.update(json.dumps(C.to_json(), sort_keys=True).encode())
        for F in self.functors:
            h.update(repr(F.key()).encode())
        for name, O in self.operads:
            h.update(name.encode() + json.dumps(O.to_json(), sort_keys=True).encode())
        for name, f in self.maps:
            h.update(name.encode() + repr(f.key()).encode())
        return h.hexdigest()


class Outcome:
    def __init__(self):
        self.checked = 0
        self.skipped = 0
        self.failures = []
        self.notes = {}

    def check(self, ok, kind=None, item=None, detail=None):
        self.checked += 1
        if not ok:
            self.failures.append((kind, item, detail))
        return ok

    def note(self, key, n=1):
        self.notes[key] = self.notes.get(key, 0) + n


@dataclass
class Property:
    name: str
    module: str
    statement: str
    run: object
    predicate: object = None


REGISTRY = []


def prop(name, module, statement, predicate=None):
    def deco(fn):
        REGISTRY.append(Property(name, module, statement, fn, predicate))
        return fn

    return deco


# -- shrinking ---------------------------------------------------------------
def _category_shrinks(C):
    for x in C.objects:
        rest = [y for y in C.objects if y != x]
        if rest:
            yield C.full_subcategory(rest)


def _functor_shrinks(F):
    for S in _category_shrinks(F.source):
        yield FC.Functor(
            S, F.target, {x: F.obj_map[x] for x in S.objects}, {m: F.mor_map[m] for m in S.morphisms}, check=False
        )


def _operad_shrinks(O):
    for c in O.colours:
        rest = [d for d in O.colours if d != c]
        if rest:
            yield OP.suboperad(O, rest)[0]


def _map_shrinks(f):
    for S in _operad_shrinks(f.source):
        yield OP.OperadMap(S, f.target, {c: f.colour_map[c] for c in S.colours}, {o: f.op_map[o] for o in S.ops}, check=False)


SHRINKERS = {"category": _category_shrinks, "functor": _functor_shrinks, "operad": _operad_shrinks, "map": _map_shrinks}


def shrink(kind, item, still_fails, rounds=20):
    """Delete objects or colours while ``still_fails`` holds."""
    step = SHRINKERS.get(kind)
    if step is None:
        return item
    for _ in range(rounds):
        for smaller in step(item):
            try:
                if still_fails(smaller):
                    item = smaller
                    break
            except MoritaKitError:
                continue
        else:
            return item
    return item


def describe(kind, item):
    if item is None:
        return None
    if kind in ("category", "functor", "operad", "map"):
        return item.to_json()
    return repr(item)


# -- fincat --------------------------------------------------------------------
@prop("morita_karoubi", "fincat", "Morita verdict of F agrees with equivalence of Karoubi(F)",
      predicate=("functor", lambda F: not FC.morita_cross_check(F, strict=False)))
def p_morita_karoubi(cp, out):
    for F in cp.functors:
        out.check(FC.morita_cross_check(F, strict=False), "functor", F)


def _cauchy_triple(C):
    a = FC.is_cauchy_complete(C)
    b = FC.has_rlp_cat(FC.to_terminal(C), FC.iota())
    c = FC.iota_locality_check(C)
    return a == b == c, (a, b, c)


@prop("cauchy_triple", "fincat", "Cauchy complete iff RLP against iota iff iota-local",
      predicate=("category", lambda C: not _cauchy_triple(C)[0]))
def p_cauchy_triple(cp, out):
    for C in cp.categories:
        ok, vals = _cauchy_triple(C)
        out.check(ok, "category", C, vals)
        out.note("cauchy complete", int(vals[0]))


@prop("karoubi_idempotent", "fincat", "Karoubi(C) -> Karoubi(Karoubi(C)) is an equivalence",
      predicate=("category", lambda C: not FC.is_equivalence(FC.karoubi_envelope(FC.karoubi_envelope(C)[0])[1])))
def p_karoubi_idempotent(cp, out):
    for C in cp.categories:
        K, _ = FC.karoubi_envelope(C)
        _, u = FC.karoubi_envelope(K)
        out.check(FC.is_equivalence(u), "category", C)


@prop("karoubi_unit_morita", "fincat", "C -> Karoubi(C) is a Morita equivalence",
      predicate=("category", lambda C: not FC.morita_report(FC.karoubi_envelope(C)[1]).verdict))
def p_karoubi_unit(cp, out):
    for C in cp.categories:
        out.check(FC.morita_report(FC.karoubi_envelope(C)[1]).verdict, "category", C)


def all_splittings(C, e):
    x = C.dom(e)
    return [
        (r, i)
        for y in C.objects
        for r in C.hom(x, y)
        for i in C.hom(y, x)
        if C.compose(r, i) == C.identity[y] and C.compose(i, r) == e
    ]


def _splittings_unique(C):
    for e in C.idempotents():
        sp = all_splittings(C, e)
        for (r, i), (r2, i2) in product(sp, repeat=2):
            a, b = C.compose(r2, i), C.compose(r, i2)
            if C.compose(a, b) != C.identity[C.dom(i2)] or C.compose(b, a) != C.identity[C.dom(i)]:
                return (e, (r, i), (r2, i2))
    return None


@prop("splitting_unique", "fincat", "any two splittings of an idempotent are related by mutually inverse maps",
      predicate=("category", lambda C: _splittings_unique(C) is not None))
def p_splitting_unique(cp, out):
    for C in cp.categories:
        for e in C.idempotents():
            sp = all_splittings(C, e)
            found = FC.split_idempotent(C, e)
            out.check((found is None) == (not sp) and (found is None or found == min(sp)), "category", C, e)
        w = _splittings_unique(C)
        out.check(w is None, "category", C, w)


@prop("morita_op_invariant", "fincat", "F is Morita iff F^op is Morita",
      predicate=("functor", lambda F: FC.morita_report(F).verdict != FC.morita_report(F.op()).verdict))
def p_morita_op(cp, out):
    for F in cp.functors:
        out.check(FC.morita_report(F).verdict == FC.morita_report(F.op()).verdict, "functor", F)


# -- simpset -------------------------------------------------------------------
def _composable_pairs(cp, limit=60):
    pairs = []
    by_source = {}
    for G in cp.functors:
        by_source.setdefault(G.source, []).append(G)
    for F in cp.functors:
        for G in by_source.get(F.target, [])[:2]:
            pairs.append((F, G))
        pairs.append((F, FC.karoubi_envelope(F.target)[1]))
        if len(pairs) >= limit:
            break
    return pairs


@prop("nerve_functorial", "simpset", "nerve(G.F) = nerve(G).nerve(F)")
def p_nerve_functorial(cp, out):
    D = min(3, cp.config.bounds["dim"])
    for F, G in _composable_pairs(cp):
        out.check(SS.nerve_map(F.then(G), D) == SS.nerve_map(F, D).then(SS.nerve_map(G, D)), "functor", F, G.to_json())


def _inner_horn_fillers(C):
    N = SS.nerve(C, 2)
    horn = SS.standard_cells("horn(2,1)", 2)
    simplex = SS.standard_cells(("simplex", 2), 2)
    counts = []
    for u in SS.enumerate_simp_maps(horn, N):
        fixed = {(n, t): u(n, t) for n in range(3) for t in horn.levels[n]}
        counts.append(len(SS.enumerate_simp_maps(simplex, N, fixed=fixed)))
    return counts


@prop("nerve_inner_horn", "simpset", "inner 2-horns in a nerve have unique fillers",
      predicate=("category", lambda C: any(k != 1 for k in _inner_horn_fillers(C))))
def p_inner_horn(cp, out):
    for C in cp.categories[:40]:
        counts = _inner_horn_fillers(C)
        out.check(all(k == 1 for k in counts), "category", C, counts)


@prop("ret_rho_injective", "simpset", "rho: Ret -> N(Split) is levelwise injective")
def p_ret(cp, out):
    for D in range(2, 7):
        R, rho = SS.build_ret(D)
        out.check(rho.is_mono(), "dimension", D)
        out.check(R.nondegenerate_counts() == (2, 2, 1) + (0,) * (D - 2), "dimension", D, R.nondegenerate_counts())


def _rlp_agree(C, D=3):
    a = FC.has_rlp_cat(FC.to_terminal(C), FC.iota())
    b = SS.has_rlp_sset(SS.terminal_map(SS.nerve(C, D)), SS.nerve_map(FC.iota(), D), D)
    return a == b


@prop("rlp_nerve_reflects", "simpset", "RLP against iota agrees with RLP of the nerve against N(iota)",
      predicate=("category", lambda C: not _rlp_agree(C)))
def p_rlp_nerve(cp, out):
    for C in cp.categories:
        out.check(_rlp_agree(C), "category", C)


# -- operad ----------------------------------------------------------------------
def corrupted_operad_json():
    """The operad B with a second binary operation that swaps with ``m``: closed and unital, not functorial."""
    raw = OP.operad_B().to_json()
    raw["ops"].append({"id": "n", "inputs": ["a", "a"], "output": "b"})
    raw["action"] = [{"op": "m", "perm": [1, 0], "result": "n"}, {"op": "n", "perm": [1, 0], "result": "n"}]
    return raw


@prop("operad_laws", "operad", "every corpus operad passes the axiom validator")
def p_operad_laws(cp, out):
    items = [(name, O.to_json()) for name, O in cp.operads]
    if "corrupt-operad" in cp.config.inject:
        items.append(("corrupted", corrupted_operad_json()))
    for name, raw in items:
        try:
            OP.validate_operad(raw)
            out.check(True)
        except MoritaKitError as exc:
            out.check(False, "json", name, f"{type(exc).__name__}: {exc}; witness={exc.witness!r}" if hasattr(exc, "witness") else str(exc))


def _cauchy_agree(f):
    return OP.morita_report_op(f, cross_check=False).verdict == OP.is_equivalence_op(OP.cauchy_operad_map(f))


@prop("morita_op_cauchy", "operad", "operadic Morita verdict agrees with equivalence of Cauchy completions",
      predicate=("map", lambda f: not _cauchy_agree(f)))
def p_morita_op(cp, out):
    for name, f in cp.maps:
        out.check(_cauchy_agree(f), "map", f, name)


def _esr_agree(f):
    a = OP.morita_report_op(f, cross_check=False).essentially_surjective_up_to_retracts
    b = FC.morita_report(OP.operad_map_to_functor(f)).essentially_surjective_up_to_retracts
    return a == b


@prop("ess_surj_jstar", "operad", "f is essentially surjective up to retracts iff j*(f) is",
      predicate=("map", lambda f: not _esr_agree(f)))
def p_esr(cp, out):
    for name, f in cp.maps:
        out.check(_esr_agree(f), "map", f, name)


@prop("algebra_restriction", "operad", "restriction along a Morita equivalence is bijective on algebra iso classes")
def p_algebra_restriction(cp, out):
    bound = cp.config.bounds["carrier"]
    cache = {}
    for name, f in cp.maps:
        verdict = OP.morita_report_op(f, cross_check=False).verdict
        try:
            inj, surj, w = OP.restriction_on_iso_classes(f, bound, limit=20_000, cache=cache)
        except LimitExceeded:
            out.skipped += 1
            out.note("skipped over enumeration cap")
            continue
        if verdict:
            out.check(inj and surj, "map", f, (name, w))
        else:
            out.note("non-Morita discrepancy found" if not (inj and surj) else "non-Morita inconclusive")


def _linear_iso(n):
    Om = OP.free_operad_on_tree(OP.linear_tree(n))
    J = OP.category_to_operad(FC.linear_category(n))
    if len(Om.colours) != len(J.colours) or len(Om.ops) != len(J.ops):
        return False
    for m in OP.enumerate_operad_maps(Om, J):
        if len(set(m.colour_map.values())) == len(J.colours) and len(set(m.op_map.values())) == len(J.ops):
            return True
    return False


@prop("free_linear_tree", "operad", "Omega(linear(n)) is isomorphic to j_!(linear(n))")
def p_free_linear(cp, out):
    for n in range(5):
        out.check(_linear_iso(n), "n", n)


def _dendroidal_vs_nerve(O, n):
    T = OP.linear_tree(n)
    chains = {OP.dendroidal_to_chain(T, m) for m in OP.dendroidal_nerve_at(O, T)}
    N = SS.nerve(OP.underlying_category(O), max(n, 1))
    count = len(OP.dendroidal_nerve_at(O, T))
    return count == len(chains) and chains == set(N.levels[n])


@prop("dendroidal_linear", "operad", "N_d(O) at linear(n) matches the nerve of j*(O) at level n",
      predicate=("operad", lambda O: not all(_dendroidal_vs_nerve(O, n) for n in range(4))))
def p_dendroidal(cp, out):
    for name, O in cp.operads:
        for n in range(4):
            out.check(_dendroidal_vs_nerve(O, n), "operad", O, (name, n))
    C2 = OP.free_operad_on_tree(OP.corolla())
    out.check(len(OP.dendroidal_nerve_at(C2, OP.corolla())) == 2, "named", "Omega(C2) at C2")


# -- theory ----------------------------------------------------------------------
def _sample_words(rng, colours, bound, k):
    words = list(TH.words_up_to(colours, bound))
    if len(words) <= k:
        return words
    return sorted(rng.sample(words, k))


@prop("finality", "theory", "ordered-map formula and comma colimit give bijective clone sets",
      predicate=("operad", lambda O: not all(TH.comma_colimit_check(O, w, d) for w in TH.words_up_to(O.colours, 2) for d in O.colours)))
def p_finality(cp, out):
    rng = cp.rng("finality")
    bound = cp.config.bounds["word"]
    for name, O in cp.operads:
        for w in _sample_words(rng, O.colours, bound, 6):
            for d in O.colours:
                try:
                    out.check(TH.comma_colimit_check(O, w, d))
                except MoritaKitError as exc:
                    out.check(False, "operad", O, (name, w, d, str(exc)))
    B = OP.operad_B()
    out.check(len(TH.clone_hom(B, ("a",), "b", oracle=True)) == 1, "named", "B (a) -> b")
    out.check(len(TH.clone_hom(B, ("a", "a"), "b", oracle=True)) == 3, "named", "B (a,a) -> b")


@prop("ff_transfer", "theory", "f is fully faithful iff T(f) is bijective on homs with short source words",
      predicate=("map", lambda f: OP.is_fully_faithful_op(f) != (TH.theory_fully_faithful(f, 3) is None)))
def p_ff(cp, out):
    bound = cp.config.bounds["word"]
    for name, f in cp.maps:
        w = TH.theory_fully_faithful(f, bound)
        out.check(OP.is_fully_faithful_op(f) == (w is None), "map", f, (name, w))


def _retract_transfer(O, bound):
    for c in O.colours:
        for d, _ in TH.theory_retract_search(O, c, bound):
            if not any(OP.colour_retract_witness(O, c, x) is not None for x in d):
                return ("theory retract without colour retract", c, d)
        for c2 in O.colours:
            if OP.colour_retract_witness(O, c, c2) is not None and TH.is_retract_in_theory(O, c, (c2,)) is None:
                return ("colour retract without theory retract", c, c2)
    return None


@prop("retract_transfer", "theory", "theory retracts come from colour retracts and conversely",
      predicate=("operad", lambda O: _retract_transfer(O, 2) is not None))
def p_retract(cp, out):
    bound = cp.config.bounds["word"]
    for name, O in cp.operads:
        w = _retract_transfer(O, bound)
        out.check(w is None, "operad", O, (name, w))


def _random_arrow(rng, O, c, d):
    hs = TH.theory_hom(O, c, d)
    return rng.choice(hs) if hs else None


@prop("compose_laws", "theory", "theory composition is associative, unital and independent of representatives")
def p_compose(cp, out):
    rng = cp.rng("compose")
    for name, O in cp.operads:
        words = list(TH.words_up_to(O.colours, 2))
        for _ in range(6):
            a, b, c, d = (rng.choice(words) for _ in range(4))
            f = _random_arrow(rng, O, a, b)
            g = _random_arrow(rng, O, b, c)
            h = _random_arrow(rng, O, c, d)
            if f is None or g is None:
                continue
            gf = TH.compose_theory(O, g, f)
            out.check(TH.compose_theory(O, g, f, rng) == gf, "operad", O, (name, "representatives", str(g), str(f)))
            out.check(TH.compose_theory(O, TH.identity_arrow(O, b), f) == f, "operad", O, (name, "left unit", str(f)))
            out.check(TH.compose_theory(O, f, TH.identity_arrow(O, a)) == f, "operad", O, (name, "right unit", str(f)))
            if h is not None:
                lhs = TH.compose_theory(O, TH.compose_theory(O, h, g), f)
                rhs = TH.compose_theory(O, h, gf)
                out.check(lhs == rhs, "operad", O, (name, "associativity", str(h), str(g), str(f)))


@prop("product_law", "theory", "|T(O)(c, d)| is the product of the clone sizes over d")
def p_product(cp, out):
    for name, O in cp.operads:
        for c in TH.words_up_to(O.colours, 2):
            for d in TH.words_up_to(O.colours, 2):
                n = 1
                for x in d:
                    n *= len(TH.clone_hom(O, c, x))
                out.check(len(TH.theory_hom(O, c, d)) == n == TH.theory_hom_size(O, c, d), "operad", O, (name, c, d))


# -- bar -------------------------------------------------------------------------
def bar_triples(cp, count=100):
    """``(f, X, d, label)`` with ``X`` a representable or the point module."""
    rng = cp.rng("bar")
    out = [(FC.iota(), BR.representable(FC.standard_category("Idem"), "0"), "1", "iota h0 1")]
    fs = [F for F in cp.functors if len(F.source.morphisms) <= 8 and len(F.target.morphisms) <= 8]
    while len(out) < count and fs:
        F = rng.choice(fs)
        C = F.source
        if rng.random() < 0.8:
            c = rng.choice(C.objects)
            X, lab = BR.representable(C, c), f"h{c}"
        else:
            X, lab = BR.point_module(C), "point"
        d = rng.choice(F.target.objects)
        out.append((F, X, d, lab))
    return out


@prop("bar_kan_pi0", "bar", "components of the diagonal bar construction match the coend classes")
def p_bar_kan(cp, out):
    N = cp.config.bounds["bar_levels"]
    for F, X, d, lab in bar_triples(cp):
        out.check(BR.compare_pi0(F, X, d, N, strict=False), "functor", F, (lab, d))
    f = FC.iota()
    classes = BR.kan_colim_oracle(f, BR.representable(f.source, "0"), "1")
    out.check(len(classes) == 1, "named", "iota h0 at 1", classes)


def jk_instances(cp):
    """``(label, operad, X, a, b)`` for the homotopy checker; operad maps are identities."""
    out = []
    T = OP.terminal_operad()
    out.append(("terminal point", T, TH.algebra_model(OP.enumerate_algebras(T, {"x": 1})[0]), ("x",), ("x",)))
    B = OP.operad_B()
    algs = OP.enumerate_algebras(B, {"a": 2, "b": 2}, iso_classes=True)
    rng = cp.rng("jk")
    for A in [algs[0]] + rng.sample(algs[1:], 2):
        out.append((f"B {A.tables['m']}", B, TH.algebra_model(A), ("a",), ("b",)))
    out.append(("B corepresentable a", B, TH.corepresentable(B, ("a",)), ("a",), ("a",)))
    for name, O in cp.operads:
        if len(out) >= 10:
            break
        if name.startswith("fun") and len(O.ops) <= 3 and len(O.colours) <= 2:
            cs = O.colours
            out.append((name, O, TH.algebra_model(OP.defining_algebra(O)), (cs[0],), (cs[-1],)))
    return out


@prop("jk_homotopy", "bar", "psi, sigma, delta, phi are simplicial; J and K are simplicial homotopies; delta is a pi0 bijection")
def p_jk(cp, out):
    L = cp.config.bounds["bar_levels"]
    corrupt = "psi" if "corrupt-psi" in cp.config.inject else None
    for k, (label, O, X, a, b) in enumerate(jk_instances(cp)):
        r = BR.verify_homotopy_JK(O, X, a, b, levels=L, words=4, corrupt=corrupt, seed=cp.config.seed + k)
        out.check(r.passed, "instance", label, r.to_json())


def _module_map_commutes(C, c, c2, m, d, d2, n, N):
    """``h_c -> h_c2`` by ``- . m`` and ``C(-, d) -> C(-, d2)`` by ``n . -`` on the bar levels."""
    B1 = BR.bar_construction(BR.representable(C, c), C, BR.corepresentable_comodule(C, d), N)
    B2 = BR.bar_construction(BR.representable(C, c2), C, BR.corepresentable_comodule(C, d2), N)

    def phi(s):
        objs, x, arrows, y = s
        return (objs, C.compose(x, m), arrows, C.compose(n, y))

    for lvl in range(N + 1):
        target = set(B2.cell(lvl))
        for s in B1.cell(lvl):
            if phi(s) not in target:
                return ("off target", s)
            for k in range(lvl + 1):
                if lvl >= 1 and phi(B1.h_face(lvl, k, s)) != B2.h_face(lvl, k, phi(s)):
                    return ("face", k, s)
                if phi(B1.h_degen(lvl, k, s)) != B2.h_degen(lvl, k, phi(s)):
                    return ("degeneracy", k, s)
    return None


@prop("bar_functorial", "bar", "module morphisms induce levelwise maps commuting with faces and degeneracies")
def p_bar_functorial(cp, out):
    rng = cp.rng("bar_functorial")
    N = cp.config.bounds["bar_levels"]
    for C in cp.categories[:40]:
        m = rng.choice(sorted(C.morphisms))
        c2, c = C.morphisms[m]
        n = rng.choice(sorted(C.morphisms))
        d, d2 = C.morphisms[n]
        w = _module_map_commutes(C, c, c2, m, d, d2, n, N)
        out.check(w is None, "category", C, (m, n, w))


@prop("ff_kan_retract", "bar", "for f fully faithful, components of the Kan extension of h_c at f(c') are C(c, c')")
def p_ff_kan(cp, out):
    N = cp.config.bounds["bar_levels"]
    for F in cp.functors:
        if len(F.source.morphisms) > 8 or len(F.target.morphisms) > 10 or not FC.is_fully_faithful(F):
            continue
        C = F.source
        for c in C.objects:
            for c2 in C.objects:
                H = BR.ho_kan_extension(F, BR.representable(C, c), F.obj_map[c2], N)
                out.check(len(H.pi0()) == len(C.hom(c, c2)), "functor", F, (c, c2))


# -- cli -------------------------------------------------------------------------
@prop("corpus_reproducible", "cli", "the same seed and bounds regenerate the identical corpus")
def p_reproducible(cp, out):
    again = Corpus(cp.config)
    out.check(cp.fingerprint() == again.fingerprint(), "seed", cp.config.seed)


@prop("registry_complete", "cli", "every invariant is registered exactly once")
def p_registry(cp, out):
    names = [p.name for p in REGISTRY]
    out.check(len(names) == len(set(names)), "registry", names)
    out.check(sorted(names) == sorted(INVARIANTS), "registry", sorted(set(names) ^ set(INVARIANTS)))


INVARIANTS = (
    "morita_karoubi",
    "cauchy_triple",
    "karoubi_idempotent",
    "karoubi_unit_morita",
    "splitting_unique",
    "morita_op_invariant",
    "nerve_functorial",
    "nerve_inner_horn",
    "ret_rho_injective",
    "rlp_nerve_reflects",
    "operad_laws",
    "morita_op_cauchy",
    "ess_surj_jstar",
    "algebra_restriction",
    "free_linear_tree",
    "dendroidal_linear",
    "finality",
    "ff_transfer",
    "retract_transfer",
    "compose_laws",
    "product_law",
    "bar_kan_pi0",
    "jk_homotopy",
    "bar_functorial",
    "ff_kan_retract",
    "corpus_reproducible",
    "registry_complete",
)


# -- running -----------------------------------------------------------------------
def run_property(p, cp):
    out = Outcome()
    try:
        p.run(cp, out)
    except LimitExceeded as exc:
        out.skipped += 1
        out.note(f"limit: {exc}")
    except MoritaKitError as exc:
        out.check(False, None, None, f"{type(exc).__name__}: {exc}")
    return out


def _minimize(p, failure):
    kind, item, detail = failure
    if p.predicate is None or p.predicate[0] != kind:
        return describe(kind, item)
    pred = p.predicate[1]
    small = shrink(kind, item, pred)
    return describe(kind, small)


def verify_suite(config):
    """Run the registry (or ``config.only``) and return the summary dict."""
    selected = [p for p in REGISTRY if not config.only or p.name in config.only]
    unknown = sorted(set(config.only) - {p.name for p in REGISTRY})
    if unknown:
        raise ValidationError(f"unknown property {unknown[0]}", unknown[0])
    cp = Corpus(config)
    results = []
    for p in selected:
        o = run_property(p, cp)
        entry = {
            "property": p.name,
            "module": p.module,
            "statement": p.statement,
            "checked": o.checked,
            "failed": len(o.failures),
            "skipped": o.skipped,
            "status": "fail" if o.failures else "pass",
        }
        if o.notes:
            entry["notes"] = dict(sorted(o.notes.items()))
        if o.failures:
            kind, item, detail = o.failures[0]
            entry["witness"] = {"kind": kind, "item": _minimize(p, o.failures[0]), "detail": repr(detail)}
        results.append(entry)
    return {
        "seed": config.seed,
        "sizes": dict(sorted(config.sizes.items())),
        "bounds": dict(sorted(config.bounds.items())),
        "properties": results,
        "passed": all(r["status"] == "pass" for r in results),
    }


def format_report(summary):
    lines = [f"seed {summary['seed']}"]
    width = max((len(r["property"]) for r in summary["properties"]), default=8)
    for r in summary["properties"]:
        extra = f" skipped={r['skipped']}" if r["skipped"] else ""
        if "notes" in r:
            extra += " " + "; ".join(f"{k}={v}" for k, v in r["notes"].items())
        lines.append(f"{r['status'].upper():4}  {r['property']:<{width}}  {r['module']:<7}  checked={r['checked']} failed={r['failed']}{extra}")
    failing = [r for r in summary["properties"] if r["status"] == "fail"]
    if failing:
        r = failing[0]
        lines.append(f"first failure: {r['property']}")
        lines.append("witness: " + json.dumps(r["witness"], sort_keys=True, default=repr))
    lines.append("all properties pass" if summary["passed"] else f"{len(failing)} properties fail")
    return "\n".join(lines) + "\n"
