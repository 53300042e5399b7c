"""Classification of the Artin group read off its defining graph.

Finite-type recognition classifies each connected component of the
label>=3-or-infinity graph against the list of finite Coxeter diagrams;
the verdict logic then follows the irreducible/clique/spherical case
split, with "Unknown" as a first-class outcome for irreducible
non-spherical cliques.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError
from .graphs import (DefiningGraph, INF, coxeter_components, derived_graphs,
                     join_decompose, shape_flags)

# orders of the irreducible finite Coxeter groups, for cross-checks
_FACTORIALS = [1]
for _i in range(1, 20):
    _FACTORIALS.append(_FACTORIALS[-1] * _i)

_EXCEPTIONAL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600,
                       "F4": 1152, "H3": 120, "H4": 14400}


def type_order(name: str) -> int:
    """|W| for an irreducible finite type name."""
    if name in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[name]
    if name.startswith("I2("):
        return 2 * int(name[3:-1])
    fam, n = name.split("_")
    n = int(n)
    if fam == "A":
        return _FACTORIALS[n + 1]
    if fam == "B":
        return 2**n * _FACTORIALS[n]
    if fam == "D":
        return 2 ** (n - 1) * _FACTORIALS[n]
    raise ValueError(name)


def _recognize_component(g: DefiningGraph, comp) -> str | None:
    """Finite type name of one connected diagram component, or None.

    The diagram has the component's vertices, edges = pairs with label
    >= 3 (label-2 pairs are non-edges), and any infinite label or any
    non-tree shape means the group is infinite.
    """
    n = len(comp)
    labels = {}
    for i, u in enumerate(comp):
        for v in comp[i + 1:]:
            m = g.label(u, v)
            if m == INF:
                return None
            if m >= 3:
                labels[(u, v)] = m
    if n == 1:
        return "A_1"
    if n == 2:
        (m,) = labels.values()
        return f"I2({m})"
    if len(labels) != n - 1:
        return None  # not a tree (component is connected by construction)
    deg = {v: 0 for v in comp}
    for u, v in labels:
        deg[u] += 1
        deg[v] += 1
    high = sorted(labels.values(), reverse=True)
    if high[0] >= 7 or high[0] == 6:
        return None
    n_high = sum(1 for m in high if m > 3)
    if n_high > 1:
        return None
    branch = [v for v in comp if deg[v] >= 3]
    if any(deg[v] >= 4 for v in comp) or len(branch) > 1:
        return None
    if n_high == 1:
        if branch:
            return None
        # path with one marked edge; find its position from an endpoint
        (mark_pair, mark) = next((p, m) for p, m in labels.items() if m > 3)
        ends = [v for v in comp if deg[v] == 1]
        at_end = any(e in mark_pair for e in ends)
        if mark == 4:
            if at_end:
                return f"B_{n}"
            if n == 4:
                return "F4"  # the 3-4-3 path
            return None
        # mark == 5
        if at_end and n == 3:
            return "H3"
        if at_end and n == 4:
            return "H4"
        return None
    # all labels 3
    if not branch:
        return f"A_{n}"
    # arms from the unique branch vertex
    adj = {v: [] for v in comp}
    for u, v in labels:
        adj[u].append(v)
        adj[v].append(u)
    b = branch[0]
    arms = []
    for start in adj[b]:
        length = 1
        prev, cur = b, start
        while deg[cur] == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D_{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    return None


def finite_type_recognize(g: DefiningGraph):
    """List of irreducible finite type names, or None if W is infinite."""
    names = []
    for comp in coxeter_components(g):
        name = _recognize_component(g, comp)
        if name is None:
            return None
        names.append(name)
    return names


def _maximal_cliques(g: DefiningGraph):
    """Bron-Kerbosch without pivoting; fine at desk scale."""
    adj = {v: set() for v in g.vertices}
    for u, v in g.labels:
        adj[u].add(v)
        adj[v].add(u)
    out = []

    def extend(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        for v in sorted(p):
            extend(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    extend(set(), set(g.vertices), set())
    return out


@dataclass(frozen=True)
class ClassificationReport:
    spherical: bool
    irreducible: bool
    free_of_infinity: bool
    type_fc: bool
    two_dimensional: bool
    finite_type_name: tuple | None

    def to_json(self) -> dict:
        return {
            "spherical": self.spherical,
            "irreducible": self.irreducible,
            "free_of_infinity": self.free_of_infinity,
            "type_fc": self.type_fc,
            "two_dimensional": self.two_dimensional,
            "finite_type_name": (None if self.finite_type_name is None
                                 else list(self.finite_type_name)),
        }


def classify(g: DefiningGraph) -> ClassificationReport:
    names = finite_type_recognize(g)
    is_clique, _ = shape_flags(g)
    irreducible = len(coxeter_components(g)) == 1
    type_fc = all(finite_type_recognize(g.induced(c)) is not None
                  for c in _maximal_cliques(g))
    two_dim = True
    vs = g.vertices
    for i, u in enumerate(vs):
        for j in range(i + 1, len(vs)):
            for l in range(j + 1, len(vs)):
                v, w = vs[j], vs[l]
                ms = (g.label(u, v), g.label(u, w), g.label(v, w))
                if all(m != INF for m in ms):
                    if sum(1.0 / m for m in ms) > 1.0:
                        two_dim = False
    return ClassificationReport(
        spherical=names is not None,
        irreducible=irreducible,
        free_of_infinity=is_clique,
        type_fc=type_fc,
        two_dimensional=two_dim,
        finite_type_name=None if names is None else tuple(names),
    )


AH = "AcylindricallyHyperbolic"
NOT_AH = "NotAcylindricallyHyperbolic"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    justification: tuple = field(default_factory=tuple)  # of {claim, citation}

    def to_json(self) -> dict:
        return {"status": self.status,
                "justifications": [dict(j) for j in self.justification]}


def decide_acyl(g: DefiningGraph) -> Verdict:
    rep = classify(g)
    if not rep.irreducible:
        return Verdict(NOT_AH, ((
            ("claim", "the group splits as a direct product of two infinite"
                      " factors, which obstructs acylindrical hyperbolicity"),
            ("citation", "rule:reducible-direct-product")),))
    if not rep.free_of_infinity:
        return Verdict(AH, ((
            ("claim", "irreducible with some pair of generators subject to"
                      " no relation"),
            ("citation", "rule:irreducible-non-clique")),))
    if rep.spherical:
        return Verdict(NOT_AH, ((
            ("claim", "spherical type: the group has an infinite cyclic"
                      " center, which obstructs acylindrical hyperbolicity"),
            ("citation", "rule:spherical-infinite-center")),))
    return Verdict(UNKNOWN, ((
        ("claim", "irreducible non-spherical graph with all labels finite:"
                  " outside the decided cases"),
        ("citation", "rule:undecided-clique-non-spherical")),))


@dataclass(frozen=True)
class CenterReport:
    center_finite: bool
    contained_in_clique_factor_center: bool
    trivial: bool | None

    def to_json(self) -> dict:
        return {"center_finite": self.center_finite,
                "contained_in_clique_factor_center":
                    self.contained_in_clique_factor_center,
                "trivial": self.trivial}


def center_report(g: DefiningGraph) -> CenterReport:
    rep = classify(g)
    is_clique, _ = shape_flags(g)
    if not rep.irreducible:
        raise HypothesisError("center report needs an irreducible graph")
    if is_clique:
        raise HypothesisError("center report needs a non-clique graph")
    v0 = join_decompose(g).clique_factor
    return CenterReport(
        center_finite=True,
        contained_in_clique_factor_center=True,
        trivial=True if len(v0) <= 3 else None,
    )
