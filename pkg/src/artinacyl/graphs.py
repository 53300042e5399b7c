"""Defining graphs and their derived structures.

A defining graph is a finite simple graph whose edges carry integer
labels >= 2; a missing edge means label infinity.  From it we derive the
complement graph (edges = infinite pairs), the labeled graph of pairs
with label >= 3 or infinity, and the unique join decomposition into a
maximal clique factor plus indecomposable factors of size >= 2.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import GraphFormatError

INF = float("inf")


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class DefiningGraph:
    vertices: tuple[str, ...]
    labels: dict = field(compare=False)  # (u,v) sorted pair -> int >= 2

    def label(self, u, v):
        if u == v:
            raise ValueError(f"label of a self-pair requested: {u!r}")
        return self.labels.get(_pair(u, v), INF)

    def is_edge(self, u, v) -> bool:
        return _pair(u, v) in self.labels

    def pairs(self):
        """All unordered vertex pairs with their (possibly infinite) labels."""
        vs = self.vertices
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                yield u, v, self.labels.get((u, v), INF)

    def induced(self, subset) -> "DefiningGraph":
        keep = set(subset)
        unknown = keep - set(self.vertices)
        if unknown:
            raise ValueError(f"unknown vertices: {sorted(unknown)}")
        verts = tuple(v for v in self.vertices if v in keep)
        labels = {p: m for p, m in self.labels.items()
                  if p[0] in keep and p[1] in keep}
        return DefiningGraph(verts, labels)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[u, v, m] for (u, v), m in sorted(self.labels.items())],
        }


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset  # of frozenset({u,v})

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class LabeledGraph:
    """Graph whose edges carry labels in {3,4,...} or infinity."""

    vertices: tuple[str, ...]
    labels: dict = field(compare=False)  # sorted pair -> int >= 3 or INF

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.labels:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class JoinDecomposition:
    clique_factor: tuple[str, ...]          # V0, sorted
    factors: tuple[tuple[str, ...], ...]    # V1..Vk, each sorted, size >= 2


def make_defining_graph(vertices, edge_triples) -> DefiningGraph:
    """Validate and build a graph from raw vertex/edge data."""
    if not isinstance(vertices, list) or not vertices:
        raise GraphFormatError("vertices must be a nonempty list", "vertices")
    seen = set()
    for i, v in enumerate(vertices):
        if not isinstance(v, str) or not v:
            raise GraphFormatError("vertex names must be nonempty strings",
                                   f"vertices[{i}]")
        if v in seen:
            raise GraphFormatError(f"duplicate vertex {v!r}", f"vertices[{i}]")
        seen.add(v)
    labels = {}
    for i, e in enumerate(edge_triples):
        loc = f"edges[{i}]"
        if not isinstance(e, (list, tuple)) or len(e) != 3:
            raise GraphFormatError("edge must be [u, v, label]", loc)
        u, v, m = e
        if u not in seen or v not in seen:
            raise GraphFormatError(f"unknown vertex in edge {e!r}", loc)
        if u == v:
            raise GraphFormatError(f"self-edge on {u!r}", loc)
        if not isinstance(m, int) or isinstance(m, bool):
            raise GraphFormatError(f"non-integer label {m!r}", loc)
        if m < 2:
            raise GraphFormatError(f"label {m} < 2", loc)
        p = _pair(u, v)
        if p in labels:
            raise GraphFormatError(f"duplicate edge {p}", loc)
        labels[p] = m
    return DefiningGraph(tuple(sorted(vertices)), labels)


def parse_defining_graph(document: str) -> DefiningGraph:
    """Parse the JSON input format; absent pairs get label infinity."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphFormatError("top-level value must be an object")
    if "vertices" not in data:
        raise GraphFormatError("missing key 'vertices'")
    return make_defining_graph(data["vertices"], data.get("edges", []))


def derived_graphs(g: DefiningGraph) -> tuple[SimpleGraph, LabeledGraph]:
    """Complement graph (infinite pairs) and the label>=3-or-infinity graph."""
    comp = set()
    lab = {}
    for u, v, m in g.pairs():
        if m == INF:
            comp.add(frozenset((u, v)))
            lab[(u, v)] = INF
        elif m >= 3:
            lab[(u, v)] = m
    return SimpleGraph(g.vertices, frozenset(comp)), LabeledGraph(g.vertices, lab)


def _components(vertices, adj):
    comps = []
    left = set(vertices)
    for start in vertices:          # deterministic: vertices are sorted
        if start not in left:
            continue
        comp = {start}
        left.discard(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in left:
                    left.discard(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def join_decompose(g: DefiningGraph) -> JoinDecomposition:
    """Factors = complement components of size >= 2; V0 = the singletons."""
    comp, _ = derived_graphs(g)
    comps = _components(g.vertices, comp.adjacency())
    clique = sorted(v for c in comps if len(c) == 1 for v in c)
    factors = sorted((c for c in comps if len(c) >= 2), key=lambda c: c[0])
    return JoinDecomposition(tuple(clique), tuple(factors))


def shape_flags(g: DefiningGraph) -> tuple[bool, bool]:
    """(is_clique, is_cone)."""
    d = join_decompose(g)
    return (not d.factors, bool(d.clique_factor))


def coxeter_components(g: DefiningGraph):
    """Connected components of the label>=3-or-infinity graph."""
    _, cox = derived_graphs(g)
    return _components(g.vertices, cox.adjacency())


def is_irreducible(g: DefiningGraph) -> bool:
    return len(coxeter_components(g)) == 1


def to_dot(g: DefiningGraph, variant: str = "defining") -> str:
    """DOT export of the defining graph or a derived graph."""
    lines = ["graph {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    if variant == "defining":
        for (u, v), m in sorted(g.labels.items()):
            lines.append(f'  "{u}" -- "{v}" [label={m}];')
    elif variant == "complement":
        comp, _ = derived_graphs(g)
        for e in sorted(comp.edges, key=sorted):
            u, v = sorted(e)
            lines.append(f'  "{u}" -- "{v}";')
    elif variant == "coxeter":
        _, cox = derived_graphs(g)
        for (u, v), m in sorted(cox.labels.items()):
            text = "inf" if m == INF else str(m)
            lines.append(f'  "{u}" -- "{v}" [label="{text}"];')
    else:
        raise ValueError(f"unknown variant {variant!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"
