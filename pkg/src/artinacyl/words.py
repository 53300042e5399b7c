"""Word problem in the Coxeter quotient via braid moves and deletion.

An Artin word maps to the Coxeter quotient by adding v^2 = 1.  Reduction
exhausts braid moves breadth-first; whenever a word with two adjacent
equal letters appears, the pair is deleted and the search restarts from
the shorter word.  The normal form is the shortlex-least reduced word.
Hitting the configured closure cap raises, never truncates.
"""
from __future__ import annotations

import os
from collections import deque

from .errors import ResourceLimitError
from .graphs import DefiningGraph, INF

DEFAULT_CAP = 10**6


def default_cap() -> int:
    raw = os.environ.get("ARTINACYL_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("ARTINACYL_CAP must be >= 1")
    return cap


def check_letters(g: DefiningGraph, word) -> tuple:
    word = tuple(word)
    vs = set(g.vertices)
    for x in word:
        if x not in vs:
            raise ValueError(f"letter {x!r} is not a vertex")
    return word


def braid_neighbors(g: DefiningGraph, word: tuple):
    """All words one braid move away (sts... <-> tst..., length = label)."""
    n = len(word)
    out = []
    for a in range(n - 1):
        s, t = word[a], word[a + 1]
        if s == t:
            continue
        m = g.label(s, t)
        if m == INF or a + m > n:
            continue
        ok = True
        for i in range(2, int(m)):
            if word[a + i] != (s if i % 2 == 0 else t):
                ok = False
                break
        if ok:
            m = int(m)
            swapped = tuple(t if i % 2 == 0 else s for i in range(m))
            out.append(word[:a] + swapped + word[a + m:])
    return out


def _first_equal_pair(word: tuple):
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return None


def _closure(g: DefiningGraph, word: tuple, budget: list):
    """Braid-move closure of `word`; returns (closure, deletion_site).

    Stops early when some member has an adjacent equal pair, returning
    that shortened word as deletion_site.  `budget` is a 1-element list
    holding the remaining visited-word allowance (shared across restarts).
    """
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        i = _first_equal_pair(w)
        if i is not None:
            return seen, w[:i] + w[i + 2:]
        for nb in braid_neighbors(g, w):
            if nb not in seen:
                budget[0] -= 1
                if budget[0] < 0:
                    raise ResourceLimitError(
                        "braid-move closure exceeded the word cap")
                seen.add(nb)
                queue.append(nb)
    return seen, None


def reduce_word(g: DefiningGraph, word, cap: int | None = None) -> tuple:
    """Shortlex-least reduced word equal to `word` in the Coxeter quotient."""
    word = check_letters(g, word)
    budget = [default_cap() if cap is None else cap]
    while True:
        closure, shorter = _closure(g, word, budget)
        if shorter is None:
            return min(closure)
        word = shorter


def reduced_expressions(g: DefiningGraph, word, cap: int | None = None) -> frozenset:
    """All reduced words of the element (braid-move closure of its normal form)."""
    budget = [default_cap() if cap is None else cap]
    nf = reduce_word(g, word, budget[0])
    closure, shorter = _closure(g, nf, budget)
    assert shorter is None  # nf is reduced
    return frozenset(closure)


def support(g: DefiningGraph, word, cap: int | None = None) -> frozenset:
    """Letter set of the normal form; element lies in W_U iff support <= U."""
    return frozenset(reduce_word(g, word, cap))


def cox_equal(g: DefiningGraph, w1, w2, cap: int | None = None) -> bool:
    return reduce_word(g, w1, cap) == reduce_word(g, w2, cap)
