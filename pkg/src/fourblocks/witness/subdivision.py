"""C(k,1,1,1)-subdivision witnesses: type, validator and exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..digraph import Digraph
from ..errors import SizeCapExceeded
from .cycles import OrientedCycle, blocks_of, FullyDirectedCycle

ORACLE_CAP = 16


@dataclass(frozen=True)
class FourBlocksWitness:
    """Paths ``p1: x1->y1`` (length >= k), ``p2: x2->y1``, ``p3: x2->y2``,
    ``p4: x1->y2``, all internally disjoint."""

    p1: tuple[int, ...]
    p2: tuple[int, ...]
    p3: tuple[int, ...]
    p4: tuple[int, ...]
    k: int

    @property
    def paths(self) -> tuple[tuple[int, ...], ...]:
        return self.p1, self.p2, self.p3, self.p4

    @property
    def ends(self) -> tuple[int, int, int, int]:
        """``(x1, y1, x2, y2)``."""
        return self.p1[0], self.p1[-1], self.p2[0], self.p3[-1]

    def vertices(self) -> set[int]:
        return {v for p in self.paths for v in p}

    def relabel(self, mapping: Sequence[int]) -> "FourBlocksWitness":
        return FourBlocksWitness(*(tuple(mapping[v] for v in p) for p in self.paths), k=self.k)

    def cycle_vertices(self) -> list[int]:
        """The underlying cycle x1 -> y1 <- x2 -> y2 <- x1."""
        return (list(self.p1) + list(reversed(self.p2))[1:]
                + list(self.p3)[1:] + list(reversed(self.p4))[1:-1])


def validate_witness(D: Digraph, k: int, w: FourBlocksWitness) -> tuple[bool, str]:
    """Check every clause of the subdivision definition; return ``(ok, diagnostic)``."""
    paths = w.paths
    if any(len(p) < 2 for p in paths):
        return False, "length: every path needs at least one arc"
    # arcs before shape, so a reversed path is reported as the missing arc it uses
    for name, p in zip(("P1", "P2", "P3", "P4"), paths):
        for a, b in zip(p, p[1:]):
            if not (0 <= a < D.n and 0 <= b < D.n) or not D.has_arc(a, b):
                return False, f"arc missing: {name} uses ({a},{b}) which is not an arc"
    x1, y1, x2, y2 = w.ends
    if (w.p2[-1], w.p3[0], w.p4[0], w.p4[-1]) != (y1, x2, x1, y2):
        return False, "shape: path ends do not match x1->y1, x2->y1, x2->y2, x1->y2"
    if len({x1, y1, x2, y2}) != 4:
        return False, "ends: x1, y1, x2, y2 must be pairwise distinct"
    if len(w.p1) - 1 < k:
        return False, f"length: P1 has length {len(w.p1) - 1} < k={k}"
    seen: dict[int, str] = {}
    ends = {x1, y1, x2, y2}
    for name, p in zip(("P1", "P2", "P3", "P4"), paths):
        if len(set(p)) != len(p):
            return False, f"disjointness: {name} repeats a vertex"
        for v in p[1:-1]:
            if v in ends:
                return False, f"disjointness: {name} passes through end vertex {v}"
            if v in seen:
                return False, f"disjointness: {name} and {seen[v]} share internal vertex {v}"
            seen[v] = name
    return True, "ok"


def witness_from_cycle(D: Digraph, vertices: Sequence[int], k: int) -> FourBlocksWitness | None:
    """The witness carried by an oriented cycle with exactly four blocks, one of
    length >= k; ``None`` for any other cycle."""
    try:
        bs = blocks_of(OrientedCycle(D, tuple(vertices)))
    except (ValueError, FullyDirectedCycle):
        return None
    if len(bs) != 4:
        return None
    b = bs.blocks
    j = max(range(4), key=lambda t: (b[t].length, -t))
    if b[j].length < k:
        return None
    # rotate so the long block is first; blocks alternate out/in around the cycle
    if j % 2 == 0:
        # long block leaves a source forward: order P1=b[j], P2=b[j+1], P3=b[j+2], P4=b[j+3]
        p1, p2, p3, p4 = (b[(j + t) % 4].path for t in range(4))
    else:
        # traverse the other way so that the long block comes first
        p1, p2, p3, p4 = (b[(j - t) % 4].path for t in range(4))
    return FourBlocksWitness(p1, p2, p3, p4, k)


def oracle_find_subdivision(D: Digraph, k: int, cap: int = ORACLE_CAP) -> FourBlocksWitness | None:
    """Exhaustive search for a subdivision of C(k,1,1,1) in ``D``.

    Walks the cycle x1 -> y1 <- x2 -> y2 <- x1 as one simple path: forward
    along P1 until length >= k, backward along P2, forward along P3, backward
    along P4 back to x1. Every ordered choice of ends and internally disjoint
    paths is one such walk. Dead states ``(vertex, phase, used set, capped
    block length)`` are memoized per start vertex.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if D.n > cap:
        raise SizeCapExceeded("oracle_find_subdivision", D.n, cap)
    succ = D.succ_mask
    pred = D.pred_mask
    n = D.n

    for x1 in range(n):
        if bin(succ[x1]).count("1") < 2:
            continue  # x1 starts both P1 and P4
        dead: set[tuple[int, int, int, int]] = set()
        path: list[int] = [x1]
        marks: list[int] = []  # positions where phases end (y1, x2, y2)

        def search(v: int, phase: int, used: int, length: int) -> bool:
            key = (v, phase, used, length)
            if key in dead:
                return False
            need = k if phase == 0 else 1
            if length >= need and phase < 3:
                marks.append(len(path) - 1)
                if search(v, phase + 1, used, 0):
                    return True
                marks.pop()
            nxt_len = min(length + 1, need)
            if phase % 2 == 0:
                options = succ[v] & ~used
            else:
                options = pred[v] & ~used
                if phase == 3 and pred[v] >> x1 & 1:
                    # the arc x1 -> v closes P4
                    path.append(x1)
                    return True
            while options:
                low = options & -options
                w = low.bit_length() - 1
                options ^= low
                path.append(w)
                if search(w, phase, used | low, nxt_len):
                    return True
                path.pop()
            dead.add(key)
            return False

        if search(x1, 0, 1 << x1, 0):
            y1_i, x2_i, y2_i = marks
            p1 = tuple(path[: y1_i + 1])
            p2 = tuple(reversed(path[y1_i: x2_i + 1]))
            p3 = tuple(path[x2_i: y2_i + 1])
            p4 = tuple(reversed(path[y2_i:]))
            return FourBlocksWitness(p1, p2, p3, p4, k)
    return None
