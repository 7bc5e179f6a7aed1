"""Wheels: a chordless cycle plus a hub adjacent to at least three of its vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..digraph import Digraph
from ..errors import SizeCapExceeded

WHEEL_CAP = 16


@dataclass(frozen=True)
class Wheel:
    cycle: tuple[int, ...]
    hub: int
    spokes: tuple[int, ...]  # cycle vertices adjacent to the hub, in cycle order


def chordless_cycles(G: Digraph) -> Iterator[tuple[int, ...]]:
    """Every chordless cycle of the underlying graph, once each.

    A cycle is reported from its smallest vertex ``s`` with its second vertex
    smaller than its last.
    """
    nbr = G.neighbors
    for s in range(G.n):
        path = [s]
        # blocked[v] counts path vertices (other than the last) adjacent to v
        def extend():
            last = path[-1]
            for w in sorted(nbr[last]):
                if w <= s or w in path:
                    continue
                if any(w in nbr[u] for u in path[1:-1]):
                    continue
                if s in nbr[w] and len(path) >= 2:
                    if path[1] < w:
                        yield tuple(path + [w])
                    continue
                path.append(w)
                yield from extend()
                path.pop()
        yield from extend()


def find_wheel(G: Digraph, cap: int = WHEEL_CAP) -> Wheel | None:
    """A wheel in the underlying graph of ``G``, preferring the shortest cycle
    and then the lexicographically smallest (cycle, hub)."""
    if G.n > cap:
        raise SizeCapExceeded("find_wheel", G.n, cap)
    nbr = G.neighbors
    best = None
    for cyc in chordless_cycles(G):
        on = set(cyc)
        for h in range(G.n):
            if h in on:
                continue
            spokes = tuple(v for v in cyc if v in nbr[h])
            if len(spokes) >= 3:
                cand = (len(cyc), cyc, h)
                if best is None or cand < best[0]:
                    best = (cand, Wheel(cyc, h, spokes))
                break
    return None if best is None else best[1]


def is_wheel(G: Digraph, w: Wheel) -> bool:
    cyc = w.cycle
    n = len(cyc)
    if n < 3 or len(set(cyc)) != n or w.hub in cyc:
        return False
    for i, u in enumerate(cyc):
        for j in range(i + 1, n):
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if G.adjacent(u, cyc[j]) != consecutive:
                return False
    spokes = [v for v in cyc if G.adjacent(w.hub, v)]
    return len(spokes) >= 3 and tuple(spokes) == tuple(w.spokes)
