"""Exact point calculus in the reflection representation.

An element w of the Coxeter quotient is represented by the coordinate
vector of w.f0 where f0 is an interior point of the fundamental chamber
(all coordinates 1).  Left multiplication by a generator s sends the
coordinate block p_t to p_t + c(label(s,t)) * p_s for t != s and flips
the sign of p_s, where c(m) = 2cos(pi/m) (2 for label infinity).  The
map w -> w.f0 is injective, so points are exact element identifiers.

This module is the small-scale pure-Python path (words, cosets, product
membership); the bulk counting path lives in `kernel`.
"""
from __future__ import annotations

from .algebra import build_ring
from .graphs import DefiningGraph, INF
from .errors import ResourceLimitError


class ReflectionRep:
    def __init__(self, g: DefiningGraph):
        self.g = g
        self.vertices = g.vertices
        self.index = {v: i for i, v in enumerate(g.vertices)}
        finite = {m for _, _, m in g.pairs() if m != INF}
        self.ring = build_ring(finite)
        self.dim = self.ring.dim
        n = len(g.vertices)
        # value matrices per ordered vertex pair (entries are small ints)
        self.mats = [[None] * n for _ in range(n)]
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                m = g.label(g.vertices[s], g.vertices[t])
                self.mats[s][t] = self.ring.value_matrix(m)

    def identity_point(self) -> tuple:
        return tuple(self.ring.one for _ in self.vertices)

    def apply(self, point, s: str) -> tuple:
        """Point of sigma_s * w from the point of w."""
        si = self.index[s]
        D = self.dim
        ps = point[si]
        new = list(point)
        for t in range(len(self.vertices)):
            if t == si:
                new[t] = tuple(-x for x in ps)
                continue
            M = self.mats[si][t]
            pt = point[t]
            new[t] = tuple(
                pt[i] + sum(M[i][d] * ps[d] for d in range(D) if ps[d])
                for i in range(D))
        return tuple(new)

    def point_of_word(self, word) -> tuple:
        p = self.identity_point()
        for s in reversed(tuple(word)):
            p = self.apply(p, s)
        return p

    def same_element(self, w1, w2) -> bool:
        return self.point_of_word(w1) == self.point_of_word(w2)


class GroupTable:
    """Complete enumeration of a finite Coxeter quotient with normal forms.

    Elements come out in breadth-first shortlex order, so the recorded
    word for each element is its shortlex-least reduced expression
    (shortlex normal forms are closed under prefixes).  Tracks points of
    w^{-1} so that right multiplication is a table lookup.
    """

    def __init__(self, g: DefiningGraph, cap: int):
        self.g = g
        self.rep = ReflectionRep(g)
        rep = self.rep
        ident = rep.identity_point()
        words = [()]
        index_of = {ident: 0}
        inv_points = [ident]  # point of w^{-1}; generators are involutions
        frontier = [0]
        while frontier:
            nxt = []
            for e in frontier:
                base = inv_points[e]
                w = words[e]
                for s in g.vertices:
                    # (w s)^{-1} = s w^{-1}: left-apply s to the inverse point
                    q = rep.apply(base, s)
                    if q in index_of:
                        continue
                    if len(index_of) >= cap:
                        raise ResourceLimitError(
                            f"group enumeration exceeded cap {cap}")
                    index_of[q] = len(words)
                    words.append(w + (s,))
                    inv_points.append(q)
                    nxt.append(index_of[q])
            frontier = nxt
        self.words = words
        self._index_of = index_of
        self._inv_points = inv_points
        self.order = len(words)
        # right-multiplication table: row e, column s -> index of w*s
        self.right = []
        for e in range(self.order):
            row = {}
            for s in g.vertices:
                row[s] = index_of[rep.apply(self._inv_points[e], s)]
            self.right.append(row)

    def index_of_word(self, word) -> int:
        e = 0
        for s in word:
            e = self.right[e][s]
        return e

    def normal_form(self, word) -> tuple:
        return self.words[self.index_of_word(word)]

    def length(self, e: int) -> int:
        return len(self.words[e])

    def inverse(self, e: int) -> int:
        return self.index_of_word(tuple(reversed(self.words[e])))

    def multiply(self, e1: int, e2: int) -> int:
        e = e1
        for s in self.words[e2]:
            e = self.right[e][s]
        return e


def enumerate_elements(g: DefiningGraph, cap: int):
    """Breadth-first shortlex enumeration with words, capped.

    Returns (words, saturated): `words` lists shortlex normal forms in
    increasing shortlex order; if more than `cap` elements exist, exactly
    `cap` are returned with saturated=False.
    """
    rep = ReflectionRep(g)
    ident = rep.identity_point()
    words = [()]
    seen = {ident}
    frontier = [((), ident)]
    while frontier:
        nxt = []
        for w, q in frontier:  # frontier is in shortlex order already
            for s in g.vertices:  # vertices sorted -> candidates in shortlex order
                p = rep.apply(q, s)  # point of (w s)^{-1} = s w^{-1}
                if p in seen:
                    continue
                if len(words) >= cap:
                    return words, False
                seen.add(p)
                words.append(w + (s,))
                nxt.append((w + (s,), p))
        frontier = nxt
    return words, True
