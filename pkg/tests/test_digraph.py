import pytest
from hypothesis import given

from fourblocks.digraph import (build_digraph, find_spanning_root, induced_subdigraph,
                                no_root_evidence, reachable_from, reaching, strong_components)
from fourblocks.errors import DigraphError

from .helpers import oriented_graphs


def test_path_digraph():
    D = build_digraph(3, [(0, 1), (1, 2)])
    assert D.n == 3
    assert D.sorted_arcs() == [(0, 1), (1, 2)]
    assert D.has_arc(0, 1) and not D.has_arc(1, 0)
    assert D.adjacent(1, 0)


def test_arc_order_irrelevant():
    assert build_digraph(4, [(2, 3), (0, 1)]) == build_digraph(4, [(0, 1), (2, 3)])


@pytest.mark.parametrize("arcs, kind", [
    ([(0, 1), (1, 0)], "digon"),
    ([(1, 1)], "loop"),
    ([(0, 1), (0, 1)], "duplicate"),
    ([(0, 3)], "range"),
    ([(-1, 0)], "range"),
])
def test_build_rejects(arcs, kind):
    with pytest.raises(DigraphError) as exc:
        build_digraph(3, arcs)
    assert exc.value.kind == kind


def test_four_cycle_sources_and_sinks():
    D = build_digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    assert [v for v in range(4) if not D.pred[v]] == [0, 2]
    assert [v for v in range(4) if not D.succ[v]] == [1, 3]


def test_induced_subdigraph_examples():
    P = build_digraph(3, [(0, 1), (1, 2)])
    sub, m = induced_subdigraph(P, {0, 2})
    assert sub.n == 2 and not sub.arcs and m == (0, 2)
    C = build_digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    sub, m = induced_subdigraph(C, {0, 1, 2})
    assert {(m[u], m[v]) for u, v in sub.arcs} == {(0, 1), (2, 1)}
    sub, m = induced_subdigraph(C, range(4))
    assert sub == C and m == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        induced_subdigraph(C, {0, 7})


def test_spanning_root_examples():
    assert find_spanning_root(build_digraph(3, [(0, 1), (1, 2)])) == 0
    assert find_spanning_root(build_digraph(3, [(0, 1), (1, 2), (2, 0)])) == 0
    assert find_spanning_root(build_digraph(3, [(0, 1), (2, 1)])) is None
    assert find_spanning_root(build_digraph(0, [])) is None
    assert find_spanning_root(build_digraph(1, [])) == 0


def test_no_root_evidence_on_two_sources():
    D = build_digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    u, v = no_root_evidence(D)
    assert not reaching(D, u) & reaching(D, v)


@given(oriented_graphs(max_n=8))
def test_root_reaches_everything(D):
    r = find_spanning_root(D)
    if r is None:
        if D.n:
            u, v = no_root_evidence(D)
            assert not reaching(D, u) & reaching(D, v)
    else:
        assert reachable_from(D, r) == set(range(D.n))
        assert all(reachable_from(D, v) != set(range(D.n)) for v in range(r))


@given(oriented_graphs(max_n=8))
def test_strong_components_partition(D):
    comps = strong_components(D)
    assert sorted(v for c in comps for v in c) == list(range(D.n))
    for c in comps:
        for u in c:
            assert set(c) <= reachable_from(D, u)
