import itertools

import pytest
from hypothesis import given, settings

from fourblocks.coloring import exact_k_color
from fourblocks.digraph import build_digraph
from fourblocks.errors import SizeCapExceeded
from fourblocks.witness.wheels import chordless_cycles, find_wheel, is_wheel

from .helpers import oriented_graphs


def complete(n):
    return build_digraph(n, list(itertools.combinations(range(n), 2)))


def test_k4_wheel():
    w = find_wheel(complete(4))
    assert len(w.cycle) == 3 and len(w.spokes) == 3
    assert is_wheel(complete(4), w)


def test_trees_and_cycles_have_no_wheel():
    assert find_wheel(build_digraph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])) is None
    assert find_wheel(build_digraph(5, [(j, (j + 1) % 5) for j in range(5)])) is None


def test_five_cycle_with_hub():
    arcs = [(j, (j + 1) % 5) for j in range(5)] + [(5, 0), (5, 2), (5, 3)]
    G = build_digraph(6, arcs)
    w = find_wheel(G)
    assert w is not None and is_wheel(G, w)
    # exhaustive: the only wheel with a hub of degree 3 on a chordless 5-cycle
    wheels = [(c, h) for c in chordless_cycles(G) for h in range(6)
              if h not in c and sum(G.adjacent(h, v) for v in c) >= 3]
    assert ((0, 1, 2, 3, 4), 5) in wheels


def test_cap():
    with pytest.raises(SizeCapExceeded):
        find_wheel(build_digraph(40, []))


def _is_chordless_cycle(G, c):
    n = len(c)
    return all(G.adjacent(c[i], c[j]) == (j == i + 1 or (i == 0 and j == n - 1))
               for i in range(n) for j in range(i + 1, n))


@given(oriented_graphs(max_n=7))
def test_chordless_cycles_unique_and_chordless(G):
    cycles = list(chordless_cycles(G))
    keys = [frozenset(c) for c in cycles]
    assert len(keys) == len(set(keys))
    assert all(_is_chordless_cycle(G, c) for c in cycles)


@given(oriented_graphs(max_n=6))
def test_chordless_cycles_complete(G):
    found = {frozenset(c) for c in chordless_cycles(G)}
    for r in range(3, G.n + 1):
        for sub in itertools.combinations(range(G.n), r):
            for perm in itertools.permutations(sub[1:]):
                c = (sub[0],) + perm
                if perm[0] < perm[-1] and _is_chordless_cycle(G, c):
                    assert frozenset(c) in found


@settings(max_examples=300)
@given(oriented_graphs(max_n=9))
def test_wheel_free_graphs_are_three_colorable(G):
    if find_wheel(G) is None:
        assert exact_k_color(G, 3) is not None
