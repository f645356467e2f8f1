"""Word-indexed functors on a theory: algebra models, corepresentables, product preservation."""

from itertools import product

from .core import compose_theory, projection, theory_hom, words_up_to


class WordFunctor:
    """Finite sets ``values(w)`` on words and an action ``act(arrow, x)``."""

    def __init__(self, operad, values, act, name="X"):
        self.operad = operad
        self._values = values
        self._act = act
        self.name = name
        self._cache = {}

    def values(self, w):
        w = tuple(w)
        v = self._cache.get(w)
        if v is None:
            v = list(self._values(w))
            self._cache[w] = v
        return v

    def act(self, arrow, x):
        return self._act(arrow, x)


def algebra_model(A):
    """``X(w) = A(w_1) x ... x A(w_n)``; arrows act by evaluating their terms."""
    O = A.operad

    def values(w):
        return product(*(range(A.carrier[c]) for c in w))

    def act(arrow, x):
        return tuple(A.evaluate(cl.op, tuple(x[i] for i in cl.f)) for cl in arrow.components)

    return WordFunctor(O, values, act, name="algebra")


def corepresentable(O, c):
    """``w |-> T(O)(c, w)`` acting by postcomposition."""
    c = tuple(c)

    def values(w):
        return theory_hom(O, c, w)

    def act(arrow, x):
        return compose_theory(O, arrow, x)

    return WordFunctor(O, values, act, name=f"h{c}")


def table_functor(O, values, actions):
    """Explicit data: ``values[w]`` lists elements; ``actions[(arrow, x)]`` gives images."""
    return WordFunctor(O, lambda w: values.get(tuple(w), []), lambda a, x: actions[(a, x)], name="table")


def product_comparison_witness(X, w):
    """``None`` if ``X(w) -> prod X(w_i)`` is a bijection, else a short reason."""
    O = X.operad
    w = tuple(w)
    projs = [projection(O, w, [i]) for i in range(len(w))]
    seen = set()
    for x in X.values(w):
        img = tuple(X.act(p, x) for p in projs)
        if img in seen:
            return ("not injective", w, img)
        seen.add(img)
    n = 1
    for c in w:
        n *= len(X.values((c,)))
    if len(seen) != n:
        return ("not surjective", w, len(seen), n)
    return None


def is_product_preserving(X, word_bound=2, colours=None):
    colours = X.operad.colours if colours is None else colours
    return all(product_comparison_witness(X, w) is None for w in words_up_to(colours, word_bound))
