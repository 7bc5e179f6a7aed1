"""Oriented cycles of a digraph and their block structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..digraph import Digraph


class FullyDirectedCycle(ValueError):
    """Raised by :func:`blocks_of` for a cycle without direction changes."""


class CompositionError(ValueError):
    """Pieces handed to :func:`close_walk` do not form a closed walk."""


@dataclass(frozen=True)
class OrientedCycle:
    """Cyclic vertex sequence whose consecutive pairs are arcs of ``host``."""

    host: Digraph
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not self.host.adjacent(a, b):
                raise ValueError(f"{a} and {b} are not adjacent")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def forward(self) -> tuple[bool, ...]:
        """``forward[j]`` is true iff the arc goes ``vertices[j] -> vertices[j+1]``."""
        vs = self.vertices
        return tuple(self.host.has_arc(a, b) for a, b in zip(vs, vs[1:] + vs[:1]))

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(a, b) if f else (b, a)
                for a, b, f in zip(vs, vs[1:] + vs[:1], self.forward)]

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def rotated(self, start: int, reverse: bool = False) -> "OrientedCycle":
        vs = list(self.vertices)
        if reverse:
            vs.reverse()
        i = vs.index(start)
        return OrientedCycle(self.host, tuple(vs[i:] + vs[:i]))

    def route(self, a: int, b: int, via: int | None = None, avoid: int | None = None) -> list[int]:
        """The cycle path from ``a`` to ``b``; the side containing ``via`` or
        not containing ``avoid`` (ties resolved in sequence order)."""
        vs = self.vertices
        n = len(vs)
        i, j = vs.index(a), vs.index(b)
        fwd = [vs[(i + t) % n] for t in range((j - i) % n + 1)]
        bwd = [vs[(i - t) % n] for t in range((i - j) % n + 1)]
        for side in (fwd, bwd):
            inner = side[1:-1]
            if via is not None and via not in side:
                continue
            if avoid is not None and avoid in inner:
                continue
            return side
        raise CompositionError(f"no route from {a} to {b} with via={via} avoid={avoid}")


@dataclass(frozen=True)
class Block:
    source: int
    sink: int
    path: tuple[int, ...]  # directed, source first

    @property
    def length(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class BlockStructure:
    """Blocks in cyclic order; ``blocks[0]`` leaves the first source of the
    cycle sequence in sequence direction, so sources and sinks alternate."""

    blocks: tuple[Block, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def sources(self) -> list[int]:
        return [b.source for b in self.blocks[::2]]

    @property
    def sinks(self) -> list[int]:
        return [b.sink for b in self.blocks[::2]]

    @property
    def lengths(self) -> list[int]:
        return [b.length for b in self.blocks]


def blocks_of(C: OrientedCycle) -> BlockStructure:
    fwd = C.forward
    vs = C.vertices
    n = len(vs)
    if all(fwd) or not any(fwd):
        raise FullyDirectedCycle(f"cycle {vs} is directed")
    # a source: incoming arc (j-1, j) points backward and outgoing points forward
    start = next(j for j in range(n) if fwd[j] and not fwd[j - 1])
    blocks = []
    j = start
    while True:
        run = [vs[j]]
        d = fwd[j]
        while True:
            run.append(vs[(j + 1) % n])
            j = (j + 1) % n
            if fwd[j] != d:
                break
        path = tuple(run) if d else tuple(reversed(run))
        blocks.append(Block(path[0], path[-1], path))
        if j == start:
            break
    return BlockStructure(tuple(blocks))


def block_count(C: OrientedCycle) -> int:
    fwd = C.forward
    return sum(1 for j in range(len(fwd)) if fwd[j] != fwd[j - 1])


def close_walk(pieces: Sequence[Sequence[int]]) -> list[int]:
    """Chain vertex sequences end-to-end into a closed walk.

    Each piece may be reversed to meet its predecessor. Returns the walk
    without the repeated closing vertex.
    """
    if not pieces:
        raise CompositionError("no pieces")
    pieces = [list(p) for p in pieces]
    walk = pieces[0]
    rest = pieces[1:]
    if rest and walk[-1] not in (rest[0][0], rest[0][-1]):
        walk = walk[::-1]
    for p in rest:
        if p[0] == walk[-1]:
            walk.extend(p[1:])
        elif p[-1] == walk[-1]:
            walk.extend(reversed(p[:-1]))
        else:
            raise CompositionError(f"piece {p} does not continue walk ending at {walk[-1]}")
    if walk[0] != walk[-1] or len(walk) < 2:
        raise CompositionError(f"walk {walk} is not closed")
    return walk[:-1]


def split_closed_walk(walk: Sequence[int]) -> list[list[int]]:
    """Decompose a closed walk into simple closed sub-walks at repeated vertices.

    Sub-walks of length below 3 (back-and-forth over one edge) are dropped.
    """
    out = []
    stack: list[int] = []
    pos: dict[int, int] = {}
    for v in list(walk) + [walk[0]]:
        if v in pos:
            i = pos[v]
            loop = stack[i:]
            for w in loop[1:]:
                del pos[w]
            del stack[i + 1:]
            if len(loop) >= 3:
                out.append(loop)
        else:
            pos[v] = len(stack)
            stack.append(v)
    return out
