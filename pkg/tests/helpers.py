"""Strategies and brute-force references shared by the tests."""

import itertools
import json
from pathlib import Path

from hypothesis import strategies as st

from fourblocks.digraph import Digraph, build_digraph

DATA = Path(__file__).parent / "data"


@st.composite
def oriented_graphs(draw, min_n=0, max_n=8):
    """Oriented graph: each pair absent, forward or backward."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    choice = draw(st.lists(st.sampled_from((0, 0, 1, 2)), min_size=len(pairs), max_size=len(pairs)))
    return build_digraph(n, [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c])


@st.composite
def rooted_graphs(draw, min_n=1, max_n=8):
    """Oriented graph containing an out-tree rooted at 0."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    tree = {(p, v) for v, p in zip(range(1, n), parents)}
    arcs = set(tree)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) in tree or (v, u) in tree:
            continue
        c = draw(st.sampled_from((0, 0, 1, 2)))
        if c:
            arcs.add((u, v) if c == 1 else (v, u))
    return build_digraph(n, arcs)


def all_oriented_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        yield build_digraph(n, [(u, v) if c == 1 else (v, u)
                                for (u, v), c in zip(pairs, choice) if c])


def naive_has_subdivision(D: Digraph, k: int) -> bool:
    """Enumerate all simple paths per end pair and all end 4-tuples."""
    paths = {}

    def simple_paths(a, b):
        out, stack = [], [[a]]
        while stack:
            p = stack.pop()
            if p[-1] == b:
                out.append(p)
                continue
            stack.extend(p + [w] for w in D.succ[p[-1]] if w not in p)
        return out

    for a, b in itertools.permutations(range(D.n), 2):
        paths[a, b] = simple_paths(a, b)
    for x1, y1, x2, y2 in itertools.permutations(range(D.n), 4):
        ends = {x1, y1, x2, y2}
        for p1 in paths[x1, y1]:
            if len(p1) - 1 < k or set(p1[1:-1]) & ends:
                continue
            used1 = set(p1)
            for p2 in paths[x2, y1]:
                i2 = set(p2[1:-1])
                if i2 & (ends | used1):
                    continue
                for p3 in paths[x2, y2]:
                    i3 = set(p3[1:-1])
                    if i3 & (ends | used1 | i2):
                        continue
                    for p4 in paths[x1, y2]:
                        if not set(p4[1:-1]) & (ends | used1 | i2 | i3):
                            return True
    return False


def load_extractor_cases():
    return json.loads((DATA / "extractor_cases.json").read_text())
