"""Public oracle API for the Coxeter quotient W of a defining graph.

Word-problem operations (reduce, equality, reduced expressions, support)
are braid-move based (`words`); enumeration and membership oracles use
the exact reflection-representation calculus (`reflection`, `kernel`).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import words as _words
from .errors import InfiniteParabolicError
from .graphs import DefiningGraph
from .kernel import count_ball
from .reflection import ReflectionRep, enumerate_elements

reduce_word = _words.reduce_word
reduced_expressions = _words.reduced_expressions
support = _words.support
cox_equal = _words.cox_equal
default_cap = _words.default_cap

#: caps at or below this size return explicit normal-form words by default
_ELEMENT_TRACKING_LIMIT = 50_000


@dataclass(frozen=True)
class BallResult:
    size: int
    saturated: bool
    elements: tuple | None  # shortlex-ordered normal forms, or None

    def element_set(self) -> frozenset:
        assert self.elements is not None
        return frozenset(self.elements)


def enumerate_ball(g: DefiningGraph, cap: int,
                   want_elements: bool | None = None) -> BallResult:
    """Breadth-first ball of W capped at `cap` elements.

    Returns all of W (saturated=True) when |W| <= cap, else exactly
    `cap` elements forming a breadth-first prefix.  Elements are
    returned as shortlex normal forms unless `want_elements` is False
    (or left defaulted with a cap too large for word tracking), in
    which case only the count is produced.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if want_elements is None:
        want_elements = cap <= _ELEMENT_TRACKING_LIMIT
    if want_elements:
        elems, saturated = enumerate_elements(g, cap)
        return BallResult(len(elems), saturated, tuple(elems))
    size, saturated = count_ball(g, cap)
    return BallResult(size, saturated, None)


def is_finite_parabolic(g: DefiningGraph, U, cap: int | None = None) -> bool:
    if not U:
        return True
    cap = default_cap() if cap is None else cap
    return count_ball(g.induced(U), cap)[1]


def in_product_of_parabolics(g: DefiningGraph, x, U1, U2,
                             cap: int | None = None) -> bool:
    """Does the image of x lie in W_{U1} * W_{U2} (both finite)?

    Decided by exhaustive product enumeration: for every a in W_{U1},
    check whether a^{-1} x lies in W_{U2} via exact point comparison in
    the ambient reflection representation.
    """
    cap = default_cap() if cap is None else cap
    U1, U2 = sorted(set(U1)), sorted(set(U2))
    parts = []
    for U in (U1, U2):
        if not U:
            parts.append([()])
            continue
        elems, saturated = enumerate_elements(g.induced(U), cap)
        if not saturated:
            raise InfiniteParabolicError(
                f"parabolic on {U} is infinite (or exceeds cap {cap})")
        parts.append(elems)
    elems1, elems2 = parts
    rep = ReflectionRep(g)
    x = tuple(x)
    targets = {rep.point_of_word(b) for b in elems2}
    for a in elems1:
        # a^{-1} = reversed(a) since generators are involutions in W
        if rep.point_of_word(tuple(reversed(a)) + x) in targets:
            return True
    return False
