"""Braid-move word problem in the Coxeter quotient."""
import pytest
from hypothesis import given, settings, strategies as st

from artinacyl.errors import ResourceLimitError
from artinacyl.words import (braid_neighbors, cox_equal, reduce_word,
                             reduced_expressions, support)
from conftest import dihedral, graph


def dihedral_oracle(m, word):
    """Element of the dihedral group of order 2m as an affine map on Z_m.

    s and t act as x -> -x and x -> 1-x; composing with either sends the
    tracked map eps*x + rot to -eps*x + (k - rot).  The 2m states
    (eps, rot) are exactly the group elements.
    """
    refl, rot = False, 0
    for x in word:
        k = 0 if x == "s" else 1
        rot = (k - rot) % m
        refl = not refl
    return refl, rot


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
def test_dihedral_words_against_rotation_model(m):
    import itertools
    g = dihedral(m)
    for n in range(0, 7):
        for word in itertools.product("st", repeat=n):
            for other in (("s",), ("t",), ("s", "t", "s")):
                w2 = word + other
                same = dihedral_oracle(m, word) == dihedral_oracle(m, w2)
                assert cox_equal(g, word, w2) == same


small_graphs = st.sampled_from([
    dihedral(0), dihedral(3), dihedral(4),
    graph("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 2)]),
    graph("abc", [("a", "b", 3), ("b", "c", 4), ("a", "c", 2)]),
    graph("abc", [("a", "b", 3)]),
    graph("abcd", [("a", "b", 3), ("b", "c", 3), ("c", "d", 3),
                   ("a", "c", 2), ("a", "d", 2), ("b", "d", 2)]),
])


@st.composite
def graph_and_word(draw, max_len=10):
    g = draw(small_graphs)
    word = tuple(draw(st.lists(st.sampled_from(g.vertices),
                               max_size=max_len)))
    return g, word


@given(graph_and_word())
@settings(max_examples=150, deadline=None)
def test_reduce_is_idempotent_and_equal(gw):
    g, word = gw
    nf = reduce_word(g, word)
    assert reduce_word(g, nf) == nf
    assert cox_equal(g, word, nf)
    assert len(nf) <= len(word)
    assert (len(word) - len(nf)) % 2 == 0  # deletion preserves parity


@given(graph_and_word(max_len=8))
@settings(max_examples=100, deadline=None)
def test_braid_moves_preserve_the_element(gw):
    g, word = gw
    for nb in braid_neighbors(g, word):
        assert cox_equal(g, word, nb)


@given(graph_and_word(max_len=6))
@settings(max_examples=100, deadline=None)
def test_square_insertion_preserves_the_element(gw):
    g, word = gw
    for i in range(len(word) + 1):
        for s in g.vertices:
            padded = word[:i] + (s, s) + word[i:]
            assert cox_equal(g, word, padded)


@given(graph_and_word(max_len=8))
@settings(max_examples=80, deadline=None)
def test_reduced_expressions_closure(gw):
    g, word = gw
    nf = reduce_word(g, word)
    exprs = reduced_expressions(g, word)
    assert nf in exprs
    assert all(len(e) == len(nf) for e in exprs)
    assert min(exprs) == nf
    # the closure is closed under braid moves
    for e in exprs:
        for nb in braid_neighbors(g, e):
            assert nb in exprs


def test_support_is_the_normal_form_letter_set():
    g = graph("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 2)])
    assert support(g, ("a", "a")) == frozenset()
    assert support(g, ("a", "b", "a", "b")) == frozenset("ab")
    assert support(g, ("a", "b", "a", "b", "a", "b")) == frozenset()
    assert support(g, ("c", "a", "a", "c")) == frozenset()


def test_cap_raises_instead_of_truncating():
    # long alternating word in a label-7 dihedral has a large closure
    g = dihedral(7)
    word = tuple("st" * 20)
    with pytest.raises(ResourceLimitError):
        reduce_word(g, word, cap=3)


def test_unknown_letter_rejected():
    with pytest.raises(ValueError):
        reduce_word(dihedral(3), ("s", "x"))
