"""Shared builders for the test suite."""
import itertools

import pytest

from artinacyl.graphs import DefiningGraph, make_defining_graph

# 0 encodes "no edge" in the generators below
NO_EDGE = 0


def graph(vertices, edges=()):
    return make_defining_graph(list(vertices),
                               [[u, v, m] for u, v, m in edges])


def dihedral(m):
    """Two generators with one relation of length m (0 = none)."""
    edges = [] if m == NO_EDGE else [("s", "t", m)]
    return graph("st", edges)


def path_graph(n, label=3, filler=2):
    """Path with `label` along it and `filler` on the remaining pairs."""
    verts = [f"x{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = label if j == i + 1 else filler
            edges.append((verts[i], verts[j], m))
    return make_defining_graph(verts, [[u, v, m] for u, v, m in edges])


@pytest.fixture
def pentad():
    return graph("stuvw", [("w", "s", 3), ("w", "u", 3), ("s", "u", 2),
                           ("s", "v", 2), ("t", "u", 2), ("t", "v", 2),
                           ("w", "t", 2), ("w", "v", 2)])


def all_graphs(n, labels):
    """Every labeled graph on n fixed vertices (0 in labels = no edge)."""
    verts = [chr(ord("a") + i) for i in range(n)]
    pairs = list(itertools.combinations(verts, 2))
    for assignment in itertools.product(labels, repeat=len(pairs)):
        edges = [[u, v, m] for (u, v), m in zip(pairs, assignment)
                 if m != NO_EDGE]
        yield make_defining_graph(verts, edges)


def _is_connected(n, assignment, pairs):
    if n == 1:
        return True
    adj = {i: set() for i in range(n)}
    for (i, j), m in zip(pairs, assignment):
        if m != NO_EDGE:
            adj[i].add(j)
            adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def connected_iso_classes(n, labels):
    """Connected graphs on n vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    pair_pos = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    verts = [chr(ord("a") + i) for i in range(n)]
    seen = set()
    out = []
    for assignment in itertools.product(labels, repeat=len(pairs)):
        if not _is_connected(n, assignment, pairs):
            continue
        canon = min(
            tuple(assignment[pair_pos[tuple(sorted((p[i], p[j])))]]
                  for i, j in pairs)
            for p in perms)
        if canon in seen:
            continue
        seen.add(canon)
        edges = [[verts[i], verts[j], m]
                 for (i, j), m in zip(pairs, assignment) if m != NO_EDGE]
        out.append(make_defining_graph(verts, edges))
    return out
