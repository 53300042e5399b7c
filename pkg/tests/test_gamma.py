"""Candidate-element synthesis: golden values and structural invariants."""
import json

import pytest

from artinacyl.errors import HypothesisError
from artinacyl.gamma import (build_gamma, build_q, closed_cover_walks,
                             plan_from_json, spanning_tree_and_tour)
from artinacyl.graphs import INF, derived_graphs, join_decompose
from conftest import dihedral, graph


def check_plan_invariants(g, plan):
    k = len(plan.factors)
    n = plan.n
    # walks live on the factor complements and cover every factor vertex
    for i in range(1, k + 1):
        w = plan.walks[i]
        assert len(w) == n + 1 and w[0] == w[n]
        assert set(w) == set(plan.factors[i - 1])
        for a in range(n):
            assert g.label(w[a], w[a + 1]) == INF
    # alignment: the walks meet the connecting paths at the aligned slot
    for (i, j), l in plan.align.items():
        path = plan.paths[(i, j)]
        assert plan.walks[i][l - 1] == path[0]
        assert plan.walks[j][l - 1] == path[-1]
        assert plan.align[(j, i)] == l
    # connecting paths: label > 2 everywhere, interior in the clique factor
    v0 = set(plan.clique_factor)
    for (i, j), path in plan.paths.items():
        assert path[0] in plan.factors[i - 1]
        assert path[-1] in plan.factors[j - 1]
        assert set(path[1:-1]) <= v0
        for a in range(len(path) - 1):
            m = g.label(path[a], path[a + 1])
            assert m == INF or m > 2
    # gamma covers every factor vertex
    assert {v for f in plan.factors for v in f} <= set(plan.gamma)
    # prefix-table endpoint identities
    assert plan.prefixes[0] == ()
    assert plan.prefixes[plan.m * n] == plan.gamma_flat
    assert plan.prefixes[-1] == plan.gamma == plan.gamma_flat + plan.gamma_nat
    assert len(plan.prefixes) == (plan.m + plan.r) * n + 1
    for step in range(1, (plan.m + plan.r) * n + 1):
        assert plan.prefixes[step] == (plan.prefixes[step - 1]
                                       + plan.block(step))
    # tour shape
    assert plan.tour[0] == plan.tour[-1] == 1
    assert len(plan.tour) == plan.r + 1


def test_pentad_golden_values(pentad):
    plan = build_gamma(pentad)
    assert plan.factors == (("s", "t"), ("u", "v"))
    assert plan.paths[(1, 2)] == ("s", "w", "u")
    assert plan.walks[1] == ("s", "t", "s", "t", "s")
    assert plan.walks[2] == ("u", "v", "u", "v", "u")
    assert plan.n == 4 and plan.m == 1 and plan.r == 2
    assert plan.align[(1, 2)] == 1
    assert plan.frak_d == 1 and plan.w0_set == ("s",)
    assert plan.order == ("s",)
    assert "".join(plan.gamma_flat) == "ustvsutv"
    assert "".join(plan.gamma_nat) == "swutvsutvuwstvsutv"
    assert len(plan.gamma) == 26
    check_plan_invariants(pentad, plan)


def test_pentad_determinism_and_round_trip(pentad):
    p1 = build_gamma(pentad)
    p2 = build_gamma(pentad)
    assert p1 == p2
    p3 = plan_from_json(pentad, json.loads(json.dumps(p1.to_json())))
    assert p3 == p1


def test_empty_clique_factor():
    g = graph("abcd", [("a", "c", 3), ("a", "d", 2), ("b", "c", 2),
                       ("b", "d", 2)])
    plan = build_gamma(g)
    assert plan.clique_factor == ()
    assert plan.m == 0 and plan.gamma_flat == ()
    assert plan.frak_d == 0 and plan.strata == ()
    check_plan_invariants(g, plan)


def test_single_factor_cone():
    g = graph("abw", [("w", "a", 3), ("w", "b", 3)])
    plan = build_gamma(g)
    assert plan.degenerate_single_factor
    assert plan.tour == (1, 1) and plan.r == 1
    check_plan_invariants(g, plan)


def test_hypothesis_guards():
    with pytest.raises(HypothesisError):
        build_gamma(dihedral(3))  # clique
    with pytest.raises(HypothesisError):
        build_gamma(graph("ab", [("a", "b", 2)]))  # reducible


def test_q_graph_edge_criterion(pentad):
    d = join_decompose(pentad)
    q = build_q(pentad, d)
    assert q.edges == frozenset({(1, 2)})
    # factors connected by a direct label-3 cross edge instead of
    # through the cone vertex
    g2 = graph("stuvw", [("w", "s", 3), ("w", "u", 2), ("s", "u", 2),
                         ("s", "v", 3), ("t", "u", 2), ("t", "v", 2),
                         ("w", "t", 2), ("w", "v", 2)])
    d2 = join_decompose(g2)
    q2 = build_q(g2, d2)
    assert q2.edges == frozenset({(1, 2)})  # direct s-v label-3 edge
    g3 = graph("stuvw", [("w", "s", 2), ("w", "u", 2), ("s", "u", 2),
                         ("s", "v", 2), ("t", "u", 2), ("t", "v", 2),
                         ("w", "t", 2), ("w", "v", 2)])
    with pytest.raises(HypothesisError):
        build_q(g3, join_decompose(g3))  # reducible: no label>2 pair


def test_tour_is_a_depth_first_closed_walk():
    # three factors in a path: tree 1-2, 2-3
    verts = ["a1", "a2", "b1", "b2", "c1", "c2"]
    edges = []
    import itertools
    for u, v in itertools.combinations(verts, 2):
        if u[0] == v[0]:
            continue  # factor pairs stay unrelated
        m = 2
        if {u, v} == {"a1", "b1"} or {u, v} == {"b1", "c1"}:
            m = 3
        edges.append((u, v, m))
    g = graph(verts, edges)
    plan = build_gamma(g)
    assert plan.tree_edges == ((1, 2), (2, 3))
    assert plan.tour == (1, 2, 3, 2, 1)
    assert plan.r == 4
    check_plan_invariants(g, plan)


def test_walk_is_minimal_closed_cover():
    # factor complement = path on 3 vertices: minimal cover walk length 4
    g = graph("abcw", [("a", "c", 2), ("w", "a", 3), ("w", "b", 3),
                       ("w", "c", 3)])
    plan = build_gamma(g)
    assert plan.factors == (("a", "b", "c"),)
    assert plan.n == 4
    assert plan.walks[1] == ("a", "b", "c", "b", "a")
    check_plan_invariants(g, plan)


def test_corpus_of_small_irreducible_non_cliques():
    graphs = [
        graph("st", []),                                  # free group
        graph("abw", [("w", "a", 3), ("w", "b", 3)]),
        graph("abcd", [("a", "c", 3), ("a", "d", 2), ("b", "c", 2),
                       ("b", "d", 2)]),
        graph("abcd", [("a", "c", 3), ("a", "d", 3), ("b", "c", 3),
                       ("b", "d", 3)]),
        graph("abcw", [("a", "c", 2), ("w", "a", 3), ("w", "b", 3),
                       ("w", "c", 3)]),
    ]
    for g in graphs:
        plan = build_gamma(g)
        check_plan_invariants(g, plan)
        assert plan == build_gamma(g)
