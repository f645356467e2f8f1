"""Permutations as tuples: ``s[i]`` is the image of ``i``.

Conventions: ``compose(s, t)[i] = s[t[i]]``; a word acted on by ``s`` is
``(w[s[0]], ..., w[s[n-1]])``.
"""

from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def all_perms(n):
    return tuple(permutations(range(n)))


def identity(n):
    return tuple(range(n))


def compose(s, t):
    return tuple(s[i] for i in t)


def inverse(s):
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def act_word(word, s):
    return tuple(word[i] for i in s)


def block_perm(sigma, sizes):
    """Reindex blocks: block ``k`` of the result is block ``sigma[k]`` of the source.

    ``sizes`` are the block sizes in source order.
    """
    starts = []
    acc = 0
    for n in sizes:
        starts.append(acc)
        acc += n
    out = []
    for k in sigma:
        out.extend(range(starts[k], starts[k] + sizes[k]))
    return tuple(out)


def block_sum(taus):
    out = []
    acc = 0
    for t in taus:
        out.extend(acc + i for i in t)
        acc += len(t)
    return tuple(out)


def stabilizer(word):
    """Permutations ``s`` with ``act_word(word, s) == word``."""
    return tuple(s for s in all_perms(len(word)) if act_word(word, s) == tuple(word))
