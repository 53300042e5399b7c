"""Bulk ball counting: exact kernels vs the word-level enumerator."""
import pytest

from artinacyl import kernel
from artinacyl.errors import ResourceLimitError
from artinacyl.reflection import GroupTable, enumerate_elements
from conftest import dihedral, graph, path_graph

KNOWN_ORDERS = [
    (dihedral(2), 4), (dihedral(3), 6), (dihedral(4), 8),
    (dihedral(5), 10), (dihedral(6), 12), (dihedral(7), 14),
    (path_graph(3), 24),
    (graph("abc", [("a", "b", 4), ("b", "c", 3), ("a", "c", 2)]), 48),
    (graph("abc", [("a", "b", 5), ("b", "c", 3), ("a", "c", 2)]), 120),
]

INFINITE = [
    dihedral(0),
    graph("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]),
    graph("abc", [("a", "b", 6), ("b", "c", 3), ("a", "c", 2)]),
    graph("ab", []),
]


@pytest.mark.parametrize("g,order", KNOWN_ORDERS)
def test_count_matches_known_orders(g, order):
    assert kernel.count_ball(g, 10**6) == (order, True)


@pytest.mark.parametrize("g", INFINITE)
def test_infinite_groups_hit_the_cap(g):
    count, saturated = kernel.count_ball(g, 500)
    assert count == 500 and not saturated


def test_cap_boundary_exact():
    g = dihedral(3)
    assert kernel.count_ball(g, 6) == (6, True)   # |W| == cap saturates
    assert kernel.count_ball(g, 5) == (5, False)
    assert kernel.count_ball(g, 7) == (6, True)


@pytest.mark.parametrize("g,order", KNOWN_ORDERS)
def test_count_matches_word_enumeration(g, order):
    words, saturated = enumerate_elements(g, 10**5)
    assert saturated and len(words) == order
    assert kernel.count_ball(g, 10**5)[0] == len(words)


def test_backends_agree(monkeypatch):
    results = {}
    for backend in ("numba", "numpy"):
        monkeypatch.setenv("ARTINACYL_KERNEL", backend)
        results[backend] = [kernel.count_ball(g, 2000)
                            for g, _ in KNOWN_ORDERS] + \
            [kernel.count_ball(g, 300) for g in INFINITE]
    assert results["numba"] == results["numpy"]


def test_backend_env_validation(monkeypatch):
    monkeypatch.setenv("ARTINACYL_KERNEL", "cuda")
    with pytest.raises(ValueError):
        kernel.backend_name()


def test_group_table_cap_raises():
    with pytest.raises(ResourceLimitError):
        GroupTable(dihedral(0), 50)
    with pytest.raises(ResourceLimitError):
        GroupTable(dihedral(5), 9)  # order 10 > 9


def test_group_table_algebra():
    g = path_graph(2)  # S_3
    t = GroupTable(g, 100)
    assert t.order == 6
    for e in range(t.order):
        assert t.multiply(e, t.inverse(e)) == 0
        assert t.normal_form(t.words[e] + t.words[e][::-1]) == ()
    # longest element of S_3 has length 3
    assert max(t.length(e) for e in range(6)) == 3
