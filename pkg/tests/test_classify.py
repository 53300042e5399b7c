"""Finite-type recognition, verdicts, and the center report."""
import pytest

from artinacyl.classify import (AH, NOT_AH, UNKNOWN, center_report,
                                classify, decide_acyl,
                                finite_type_recognize, type_order)
from artinacyl.coxeter import enumerate_ball
from artinacyl.errors import HypothesisError
from conftest import connected_iso_classes, dihedral, graph, path_graph


@pytest.mark.parametrize("g,names", [
    (dihedral(3), ["I2(3)"]),
    (dihedral(0), None),
    (graph("a"), ["A_1"]),
    (graph("ab", [("a", "b", 2)]), ["A_1", "A_1"]),
    (path_graph(3), ["A_3"]),
    (graph("abc", [("a", "b", 4), ("b", "c", 3), ("a", "c", 2)]), ["B_3"]),
    (graph("abc", [("a", "b", 5), ("b", "c", 3), ("a", "c", 2)]), ["H3"]),
    (graph("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]), None),
    (graph("abc", [("a", "b", 6), ("b", "c", 3), ("a", "c", 2)]), None),
    (path_graph(4, label=3), ["A_4"]),
])
def test_recognition_examples(g, names):
    assert finite_type_recognize(g) == names


def test_recognition_f4_and_h4():
    verts = list("abcd")
    base = [("a", "c", 2), ("a", "d", 2), ("b", "d", 2)]
    f4 = graph(verts, [("a", "b", 3), ("b", "c", 4), ("c", "d", 3)] + base)
    h4 = graph(verts, [("a", "b", 5), ("b", "c", 3), ("c", "d", 3)] + base)
    d4 = graph(verts, [("a", "b", 3), ("a", "c", 3), ("a", "d", 3),
                       ("b", "c", 2), ("b", "d", 2), ("c", "d", 2)])
    assert finite_type_recognize(f4) == ["F4"]
    assert finite_type_recognize(h4) == ["H4"]
    assert finite_type_recognize(d4) == ["D_4"]


def test_type_orders():
    assert type_order("A_3") == 24
    assert type_order("B_3") == 48
    assert type_order("D_4") == 192
    assert type_order("I2(7)") == 14
    assert type_order("H3") == 120
    assert type_order("F4") == 1152


def test_recognition_agrees_with_enumeration_on_3_vertex_classes():
    # spot version of the exhaustive acceptance criterion
    for g in connected_iso_classes(3, (0, 2, 3, 4, 5, 6)):
        names = finite_type_recognize(g)
        res = enumerate_ball(g, cap=2000, want_elements=False)
        assert (names is not None) == res.saturated, g.labels
        if names is not None:
            want = 1
            for nm in names:
                want *= type_order(nm)
            assert res.size == want


def test_verdict_table(pentad):
    f2 = dihedral(0)
    f2xf2 = graph("abcd", [("a", "b", 2), ("b", "c", 2), ("c", "d", 2),
                           ("a", "d", 2)])
    b3 = dihedral(3)
    assert decide_acyl(f2).status == AH
    assert decide_acyl(f2xf2).status == NOT_AH
    assert decide_acyl(b3).status == NOT_AH
    assert decide_acyl(pentad).status == AH
    tri = graph("abc", [("a", "b", 4), ("b", "c", 4), ("a", "c", 4)])
    assert decide_acyl(tri).status == UNKNOWN
    for g in (f2, f2xf2, b3, pentad, tri):
        v = decide_acyl(g)
        assert v.justification and all(
            dict(j).get("citation") for j in v.justification)


def test_classification_flags(pentad):
    rep = classify(pentad)
    assert not rep.spherical
    assert rep.irreducible
    assert not rep.free_of_infinity
    assert rep.type_fc
    assert rep.finite_type_name is None
    rep2 = classify(path_graph(3))
    assert rep2.spherical and rep2.finite_type_name == ("A_3",)
    assert rep2.free_of_infinity


def test_two_dimensional_flag():
    flat = graph("abc", [("a", "b", 4), ("b", "c", 4), ("a", "c", 2)])
    assert classify(flat).two_dimensional
    assert not classify(path_graph(3)).two_dimensional  # (3,3,2): sum > 1


def test_center_report(pentad):
    rep = center_report(pentad)
    assert rep.center_finite and rep.contained_in_clique_factor_center
    assert rep.trivial is True
    with pytest.raises(HypothesisError):
        center_report(graph("ab", [("a", "b", 2)]))  # reducible
    with pytest.raises(HypothesisError):
        center_report(dihedral(3))  # clique


def test_center_trivial_unknown_for_large_clique_factor():
    # two free-group factors joined through four cone vertices
    verts = list("abcdwxyz")
    edges = []
    for u in "ab":
        for v in "cd":
            edges.append((u, v, 2))
    for c in "wxyz":
        for o in "abcd" + "wxyz":
            if o != c and (c, o, 3) not in edges and (o, c, 3) not in edges:
                edges.append((c, o, 3))
    g = graph(verts, edges)
    rep = center_report(g)
    assert rep.center_finite and rep.trivial is None
