"""Rooted trees, the free operad they generate, and the dendroidal nerve."""

from itertools import product

from .._limits import Budget
from ..errors import BadTree, LimitExceeded
from . import perm as P
from .core import OperadMap, build_closed_operad


class Tree:
    """A rooted tree with edges as colours and vertices ``name -> (inputs, output)``.

    Leaves are edges that are no vertex's output.  Vertex inputs keep the
    listed order, which serves as the canonical order in the dendroidal nerve.
    """

    def __init__(self, edges, root, vertices, check=True):
        self.edges = tuple(edges)
        self.root = root
        self.vertices = {v: (tuple(ins), out) for v, (ins, out) in vertices.items()}
        self.producer = {out: v for v, (ins, out) in self.vertices.items()}
        self.consumer = {}
        for v, (ins, out) in self.vertices.items():
            for e in ins:
                self.consumer[e] = v
        if check:
            self._validate()

    def _validate(self):
        es = set(self.edges)
        if len(es) != len(self.edges):
            raise BadTree("duplicate edge", self.edges)
        if self.root not in es:
            raise BadTree(f"root {self.root} is not an edge", self.root)
        outs = [out for _, out in self.vertices.values()]
        if len(set(outs)) != len(outs):
            raise BadTree("two vertices share an output edge", outs)
        seen_in = []
        for v, (ins, out) in sorted(self.vertices.items()):
            if out not in es or any(e not in es for e in ins):
                raise BadTree(f"vertex {v} uses an unknown edge", v)
            seen_in.extend(ins)
        if len(set(seen_in)) != len(seen_in):
            raise BadTree("an edge feeds two vertices", seen_in)
        if self.root in self.consumer:
            raise BadTree("the root feeds a vertex", self.root)
        for e in self.edges:
            if e != self.root and e not in self.consumer:
                raise BadTree(f"edge {e} is disconnected from the root", e)
            # walk down to the root; a repeat means a cycle
            seen = {e}
            x = e
            while x != self.root:
                x = self.vertices[self.consumer[x]][1]
                if x in seen:
                    raise BadTree("cycle through edge " + x, x)
                seen.add(x)

    @property
    def leaves(self):
        return tuple(e for e in self.edges if e not in self.producer)

    def to_json(self):
        return {
            "edges": list(self.edges),
            "root": self.root,
            "vertices": [{"id": v, "inputs": list(ins), "output": out} for v, (ins, out) in self.vertices.items()],
        }


def tree_from_json(raw):
    try:
        verts = {}
        for k, v in enumerate(raw.get("vertices", [])):
            verts[v.get("id", f"v{k}")] = (v["inputs"], v["output"])
        return Tree(raw["edges"], raw["root"], verts)
    except KeyError as exc:
        raise BadTree(f"tree description lacks {exc}", str(exc)) from None


def eta(edge="e"):
    """The tree with one edge and no vertices."""
    return Tree([edge], edge, {})


def corolla(leaves=("a", "b"), root="r", name="v"):
    return Tree([*leaves, root], root, {name: (tuple(leaves), root)})


def linear_tree(n):
    """Edges ``0..n`` and vertices ``v1..vn`` with ``vk: k-1 -> k``."""
    return Tree([str(k) for k in range(n + 1)], str(n), {f"v{k}": ((str(k - 1),), str(k)) for k in range(1, n + 1)})


class _TreeSemantics:
    """Values ``(vertex set, input order, output edge)``."""

    def __init__(self, tree):
        self.tree = tree

    def identity(self, e):
        return (frozenset(), (e,), e)

    def signature(self, v):
        return (v[1], v[2])

    def act(self, v, s):
        return (v[0], P.act_word(v[1], s), v[2])

    def compose(self, v, inners):
        verts = set(v[0])
        order = []
        for q in inners:
            verts |= q[0]
            order.extend(q[1])
        return (frozenset(verts), tuple(order), v[2])


def free_operad_on_tree(T):
    """``Omega(T)``: one operation per subtree and ordering of its leaves, plus identities."""
    sem = _TreeSemantics(T)
    gens = [(frozenset([v]), ins, out) for v, (ins, out) in sorted(T.vertices.items())]

    def name_of(v, k):
        return "+".join(sorted(v[0])) + "[" + ",".join(v[1]) + "]"

    O = build_closed_operad(T.edges, gens, sem, cap=10_000, name_of=name_of)
    O.tree = T
    return O


def _extend(T, O, colouring, vertex_ops, target_names=None):
    """Operad map ``Omega(T) -> O`` determined by its vertex images."""
    Om = target_names or free_operad_on_tree(T)
    op_map = {}
    for name, (verts, order, out) in Om.semantics.items():
        if not verts:
            op_map[name] = O.identities[colouring[out]]
            continue
        img, leaves = _subtree_image(T, O, colouring, vertex_ops, verts, out)
        s = tuple(leaves.index(e) for e in order)
        op_map[name] = O.act(img, s)
    return OperadMap(Om, O, dict(colouring), op_map, check=False)


def _subtree_image(T, O, colouring, vertex_ops, verts, edge):
    v = T.producer.get(edge)
    if v is None or v not in verts:
        return O.identities[colouring[edge]], [edge]
    ins, _ = T.vertices[v]
    subs = []
    leaves = []
    for e in ins:
        img, lv = _subtree_image(T, O, colouring, vertex_ops, verts, e)
        subs.append(img)
        leaves.extend(lv)
    return O.gamma(vertex_ops[v], tuple(subs)), leaves


def dendroidal_nerve_at(O, T, limit=100_000):
    """All operad maps ``Omega(T) -> O``, as :class:`OperadMap` values in canonical order."""
    budget = Budget("dendroidal_nerve_at")
    Om = free_operad_on_tree(T)
    out = []
    verts = sorted(T.vertices)
    for cols in product(O.colours, repeat=len(T.edges)):
        colouring = dict(zip(T.edges, cols))
        choices = []
        for v in verts:
            ins, o = T.vertices[v]
            choices.append(O.hom(tuple(colouring[e] for e in ins), colouring[o]))
        for ops in product(*choices):
            budget.spend()
            out.append(_extend(T, O, colouring, dict(zip(verts, ops)), Om))
            if len(out) > limit:
                raise LimitExceeded(f"more than {limit} dendroidal simplices")
    return out


def dendroidal_to_chain(T_n, m):
    """Read a map ``Omega(linear(n)) -> O`` as a nerve simplex of the underlying category."""
    n = len(T_n.vertices)
    if n == 0:
        return (m.colour_map["0"],)
    sem = m.source.semantics
    by_vertex = {}
    for name, (verts, order, out) in sem.items():
        if len(verts) == 1:
            by_vertex[next(iter(verts))] = m.op_map[name]
    return tuple(by_vertex[f"v{k}"] for k in range(1, n + 1))
