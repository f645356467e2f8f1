"""Finite categories given by explicit composition tables, and functors between them."""

import json

from ..errors import (
    BadIdentity,
    MissingComposite,
    NonAssociative,
    NotAFunctor,
    UnknownName,
    ValidationError,
)


class FinCategory:
    """A finite category.

    Objects and morphisms are identified by strings.  ``compose[(g, f)]`` is
    ``g . f`` and is defined exactly when ``cod(f) == dom(g)``.  Instances are
    treated as immutable once built; use :func:`validate_category` (or the
    ``check=True`` default) to obtain one.
    """

    def __init__(self, objects, morphisms, identity, compose, check=True):
        self.objects = tuple(sorted(objects))
        self.morphisms = dict(sorted((m, (d, c)) for m, (d, c) in morphisms.items()))
        self.identity = dict(identity)
        table = dict(compose)
        # identity composites may be left implicit
        for m, (d, c) in self.morphisms.items():
            if d in self.identity and c in self.identity:
                table.setdefault((m, self.identity[d]), m)
                table.setdefault((self.identity[c], m), m)
        self.table = table
        self._homs = {}
        for m, (d, c) in self.morphisms.items():
            self._homs.setdefault((d, c), []).append(m)
        self._out = {}
        self._in = {}
        for m, (d, c) in self.morphisms.items():
            self._out.setdefault(d, []).append(m)
            self._in.setdefault(c, []).append(m)
        if check:
            self._validate()

    # -- basic queries ---------------------------------------------------
    def dom(self, m):
        return self.morphisms[m][0]

    def cod(self, m):
        return self.morphisms[m][1]

    def hom(self, x, y):
        return self._homs.get((x, y), [])

    def outgoing(self, x):
        return self._out.get(x, [])

    def incoming(self, y):
        return self._in.get(y, [])

    def compose(self, g, f):
        """Return ``g . f``."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise MissingComposite(f"no composite {g} . {f}", (g, f)) from None

    def chain(self, *ms):
        """Compose right-to-left: ``chain(h, g, f) == h . g . f``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def is_identity(self, m):
        d, c = self.morphisms[m]
        return d == c and self.identity[d] == m

    def inverse(self, m):
        """The inverse of ``m`` if it is an isomorphism, else ``None``."""
        d, c = self.morphisms[m]
        for n in self.hom(c, d):
            if self.table[(n, m)] == self.identity[d] and self.table[(m, n)] == self.identity[c]:
                return n
        return None

    def idempotents(self):
        return [m for m, (d, c) in self.morphisms.items() if d == c and self.table[(m, m)] == m]

    def __len__(self):
        return len(self.morphisms)

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def __eq__(self, other):
        return (
            isinstance(other, FinCategory)
            and self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identity == other.identity
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.objects, tuple(self.morphisms.items())))

    # -- validation ------------------------------------------------------
    def _validate(self):
        objs = set(self.objects)
        for m, (d, c) in self.morphisms.items():
            if d not in objs or c not in objs:
                raise ValidationError(f"morphism {m} has unknown endpoint", m)
        for x in self.objects:
            i = self.identity.get(x)
            if i is None or self.morphisms.get(i) != (x, x):
                raise BadIdentity(f"object {x} lacks an identity endomorphism", x)
        for (g, f), gf in self.table.items():
            if g not in self.morphisms or f not in self.morphisms:
                raise ValidationError(f"composite entry {g} . {f} names unknown morphism", (g, f))
            if self.cod(f) != self.dom(g):
                raise ValidationError(f"composite entry {g} . {f} is not composable", (g, f))
            if gf not in self.morphisms or self.morphisms[gf] != (self.dom(f), self.cod(g)):
                raise ValidationError(f"{g} . {f} = {gf} has the wrong type", (g, f, gf))
        for f, (a, b) in self.morphisms.items():
            for g in self.outgoing(b):
                if (g, f) not in self.table:
                    raise MissingComposite(f"MissingComposite({g}, {f})", (g, f))
        for m, (d, c) in self.morphisms.items():
            if self.table[(m, self.identity[d])] != m:
                raise BadIdentity(f"BadIdentity: {m} . id_{d} != {m}", m)
            if self.table[(self.identity[c], m)] != m:
                raise BadIdentity(f"BadIdentity: id_{c} . {m} != {m}", m)
        for f, (a, b) in self.morphisms.items():
            for g in self.outgoing(b):
                gf = self.table[(g, f)]
                for h in self.outgoing(self.cod(g)):
                    if self.table[(h, gf)] != self.table[(self.table[(h, g)], f)]:
                        raise NonAssociative(
                            f"({h} . {g}) . {f} != {h} . ({g} . {f})", (h, g, f)
                        )

    # -- derived categories ----------------------------------------------
    def op(self):
        """Formal dual: every table entry reversed."""
        mors = {m: (c, d) for m, (d, c) in self.morphisms.items()}
        table = {(f, g): gf for (g, f), gf in self.table.items()}
        return FinCategory(self.objects, mors, self.identity, table, check=False)

    def full_subcategory(self, objects):
        keep = set(objects)
        mors = {m: dc for m, dc in self.morphisms.items() if dc[0] in keep and dc[1] in keep}
        table = {k: v for k, v in self.table.items() if k[0] in mors and k[1] in mors}
        ident = {x: self.identity[x] for x in keep}
        return FinCategory(keep, mors, ident, table, check=False)

    def core(self):
        """The maximal subgroupoid."""
        mors = {m: dc for m, dc in self.morphisms.items() if self.inverse(m) is not None}
        table = {k: v for k, v in self.table.items() if k[0] in mors and k[1] in mors}
        return FinCategory(self.objects, mors, self.identity, table, check=False)

    # -- serialisation ---------------------------------------------------
    def to_json(self):
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": m, "dom": d, "cod": c} for m, (d, c) in self.morphisms.items()],
            "identities": dict(sorted(self.identity.items())),
            "compose": [[g, f, gf] for (g, f), gf in sorted(self.table.items())],
        }


def validate_category(raw):
    """Build a :class:`FinCategory` from the JSON-style dictionary ``raw``.

    Raises the first violated axiom (``MissingComposite``, ``BadIdentity``,
    ``NonAssociative``) with the offending morphisms attached as ``witness``.
    """
    if isinstance(raw, str):
        raw = json.loads(raw)
    try:
        objects = [str(x) for x in raw["objects"]]
        morphisms = {}
        for entry in raw["morphisms"]:
            mid = str(entry["id"])
            if mid in morphisms:
                raise ValidationError(f"duplicate morphism id {mid}", mid)
            morphisms[mid] = (str(entry["dom"]), str(entry["cod"]))
        identity = {str(k): str(v) for k, v in raw["identities"].items()}
        compose = {}
        for g, f, gf in raw.get("compose", []):
            key = (str(g), str(f))
            if key in compose and compose[key] != str(gf):
                raise ValidationError(f"two values for {g} . {f}", key)
            compose[key] = str(gf)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed category description: {exc!r}") from None
    return FinCategory(objects, morphisms, identity, compose)


def category_from_function(objects, morphisms, identity, compose_fn):
    """Build a category whose composition is given by a Python callable."""
    table = {}
    out = {}
    for m, (d, c) in morphisms.items():
        out.setdefault(d, []).append(m)
    for f, (a, b) in morphisms.items():
        for g in out.get(b, []):
            table[(g, f)] = compose_fn(g, f)
    return FinCategory(objects, morphisms, identity, table)


def linear_category(n):
    """The poset ``0 -> 1 -> ... -> n``; morphism ``"i<j"`` for ``i <= j``."""
    objs = [str(k) for k in range(n + 1)]
    mors = {f"{i}<{j}": (str(i), str(j)) for i in range(n + 1) for j in range(i, n + 1)}
    ident = {str(k): f"{k}<{k}" for k in range(n + 1)}

    def comp(g, f):
        i = f.split("<")[0]
        j = g.split("<")[1]
        return f"{i}<{j}"

    return category_from_function(objs, mors, ident, comp)


def standard_category(name):
    """Named small categories with canonical ids.

    ``Idem`` has morphisms ``id_0, e``; ``Split`` has ``id_0, id_1, r: 0->1,
    i: 1->0, ir = i.r`` with ``r.i = id_1``.  ``I`` is the walking arrow
    ``a: 0->1``, ``P`` two parallel arrows ``a, b: 0->1``, ``J`` the walking
    isomorphism ``u: 0->1`` with inverse ``v``.  ``linear(n)`` is also
    accepted as ``"linear3"`` or ``("linear", 3)``.
    """
    if isinstance(name, tuple) and name[0] == "linear":
        return linear_category(int(name[1]))
    if isinstance(name, str) and name.startswith("linear"):
        digits = name[len("linear"):].strip("()")
        if digits.isdigit():
            return linear_category(int(digits))
    if name == "terminal":
        return FinCategory(["0"], {"id_0": ("0", "0")}, {"0": "id_0"}, {})
    if name == "Idem":
        return FinCategory(
            ["0"], {"id_0": ("0", "0"), "e": ("0", "0")}, {"0": "id_0"}, {("e", "e"): "e"}
        )
    if name == "Split":
        mors = {
            "id_0": ("0", "0"),
            "id_1": ("1", "1"),
            "r": ("0", "1"),
            "i": ("1", "0"),
            "ir": ("0", "0"),
        }
        table = {
            ("r", "i"): "id_1",
            ("i", "r"): "ir",
            ("ir", "ir"): "ir",
            ("r", "ir"): "r",
            ("ir", "i"): "i",
        }
        return FinCategory(["0", "1"], mors, {"0": "id_0", "1": "id_1"}, table)
    if name == "I":
        mors = {"id_0": ("0", "0"), "id_1": ("1", "1"), "a": ("0", "1")}
        return FinCategory(["0", "1"], mors, {"0": "id_0", "1": "id_1"}, {})
    if name == "P":
        mors = {"id_0": ("0", "0"), "id_1": ("1", "1"), "a": ("0", "1"), "b": ("0", "1")}
        return FinCategory(["0", "1"], mors, {"0": "id_0", "1": "id_1"}, {})
    if name == "J":
        mors = {"id_0": ("0", "0"), "id_1": ("1", "1"), "u": ("0", "1"), "v": ("1", "0")}
        table = {("v", "u"): "id_0", ("u", "v"): "id_1"}
        return FinCategory(["0", "1"], mors, {"0": "id_0", "1": "id_1"}, table)
    raise UnknownName(f"unknown standard category {name!r}", name)


class Functor:
    """A functor between finite categories given by its object and morphism maps."""

    def __init__(self, source, target, obj_map, mor_map, check=True):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        # identities may be left implicit
        for x, i in source.identity.items():
            if i not in self.mor_map and x in self.obj_map:
                self.mor_map[i] = target.identity[self.obj_map[x]]
        if check:
            self._validate()

    def _validate(self):
        S, T = self.source, self.target
        for x in S.objects:
            if self.obj_map.get(x) not in T.identity:
                raise NotAFunctor(f"object {x} has no valid image", x)
        for m, (d, c) in S.morphisms.items():
            fm = self.mor_map.get(m)
            if fm is None or T.morphisms.get(fm) != (self.obj_map[d], self.obj_map[c]):
                raise NotAFunctor(f"morphism {m} is sent to {fm} of the wrong type", m)
        for x in S.objects:
            if self.mor_map[S.identity[x]] != T.identity[self.obj_map[x]]:
                raise NotAFunctor(f"identity of {x} not preserved", x)
        for (g, f), gf in S.table.items():
            if T.compose(self.mor_map[g], self.mor_map[f]) != self.mor_map[gf]:
                raise NotAFunctor(f"composite {g} . {f} not preserved", (g, f))

    def __call__(self, m):
        return self.mor_map[m]

    def key(self):
        return (
            tuple(self.obj_map[x] for x in self.source.objects),
            tuple(self.mor_map[m] for m in self.source.morphisms),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Functor)
            and self.source == other.source
            and self.target == other.target
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Functor({self.obj_map})"

    def then(self, other):
        """``other . self``."""
        return Functor(
            self.source,
            other.target,
            {x: other.obj_map[y] for x, y in self.obj_map.items()},
            {m: other.mor_map[n] for m, n in self.mor_map.items()},
            check=False,
        )

    def op(self):
        return Functor(self.source.op(), self.target.op(), self.obj_map, self.mor_map, check=False)

    def to_json(self, with_categories=True):
        out = {
            "obj_map": dict(sorted(self.obj_map.items())),
            "mor_map": dict(sorted(self.mor_map.items())),
        }
        if with_categories:
            out["source"] = self.source.to_json()
            out["target"] = self.target.to_json()
        return out


def identity_functor(C):
    return Functor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms}, check=False)


def constant_functor(C, D, y):
    return Functor(C, D, {x: y for x in C.objects}, {m: D.identity[y] for m in C.morphisms})


def inclusion_functor(C, sub):
    """Inclusion of a full subcategory built with :meth:`FinCategory.full_subcategory`."""
    return Functor(sub, C, {x: x for x in sub.objects}, {m: m for m in sub.morphisms}, check=False)


def iota():
    """The comparison functor ``Idem -> Split`` with ``e |-> i.r``."""
    return Functor(
        standard_category("Idem"),
        standard_category("Split"),
        {"0": "0"},
        {"id_0": "id_0", "e": "ir"},
    )


def functor_from_json(raw, categories):
    """``raw`` is ``{"source", "target", "obj_map", "mor_map"}``; names resolve via ``categories``."""
    src = categories[raw["source"]] if isinstance(raw["source"], str) else validate_category(raw["source"])
    tgt = categories[raw["target"]] if isinstance(raw["target"], str) else validate_category(raw["target"])
    return Functor(src, tgt, raw["obj_map"], raw.get("mor_map", {}))
