import pytest
from hypothesis import given, strategies as st

from fourblocks.decomposition import ArcClass, classify_arc, decompose
from fourblocks.digraph import build_digraph, find_spanning_root
from fourblocks.errors import ContractViolation
from fourblocks.outtree import OutTree, grow_out_tree, maximal_out_tree

from .helpers import rooted_graphs

PATH5 = [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_classify_examples():
    chain = OutTree(0, (-1, 0, 1))
    assert classify_arc(chain, (0, 2)) is ArcClass.A1
    assert classify_arc(chain, (2, 0)) is ArcClass.A2
    assert classify_arc(OutTree(0, (-1, 0, 0)), (1, 2)) is ArcClass.A3


def test_path_slices():
    D = build_digraph(5, PATH5)
    dec = decompose(D, maximal_out_tree(D, 0), 2)
    assert [s.vertices for s in dec.slices] == [(0, 2, 4), (1, 3)]
    assert all(not s.induced.arcs for s in dec.slices)


def test_chord_lands_in_a1():
    D = build_digraph(5, PATH5 + [(0, 2)])
    T = OutTree(0, (-1, 0, 1, 2, 3))
    dec = decompose(D, T, 2)
    assert dec.slices[0].original_arcs(ArcClass.A1) == {(0, 2)}


def test_k1_single_slice():
    D = build_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    dec = decompose(D, maximal_out_tree(D, 0), 1)
    (s,) = dec.slices
    assert s.vertices == (0, 1, 2, 3) and s.induced == D


def test_non_maximal_tree_rejected():
    D = build_digraph(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(ContractViolation):
        decompose(D, grow_out_tree(D, 0), 1)
    with pytest.raises(ValueError):
        decompose(D, maximal_out_tree(D, 0), 0)


@given(rooted_graphs(max_n=10), st.integers(1, 4))
def test_decomposition_invariants(D, k):
    T = maximal_out_tree(D, find_spanning_root(D))
    dec = decompose(D, T, k)
    assert sorted(v for s in dec.slices for v in s.vertices) == list(range(D.n))
    for s in dec.slices:
        assert all(T.level[v] % k == s.index for v in s.vertices)
        parts = [s.original_arcs(c) for c in ArcClass]
        assert sum(map(len, parts)) == len(s.induced.arcs)
        assert set().union(*parts) == {(s.to_original[u], s.to_original[v]) for u, v in s.induced.arcs}
        for x, y in s.original_arcs(ArcClass.A1):
            assert T.is_ancestor(x, y) and T.level[y] - T.level[x] >= k
        for x, y in s.original_arcs(ArcClass.A2):
            assert T.is_ancestor(y, x) and T.level[x] - T.level[y] >= k
        for x, y in s.original_arcs(ArcClass.A3):
            assert not T.comparable(x, y)
            assert (T.level[y] - T.level[x]) % k == 0 and T.level[x] != T.level[y]
