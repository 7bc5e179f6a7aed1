"""Simple oriented graphs on dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import DigraphError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """An oriented graph: no loops, no digons, at most one arc per pair.

    Build instances with :func:`build_digraph`; the constructor does not
    re-validate.
    """

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    @cached_property
    def succ(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def pred(self) -> tuple[frozenset[int], ...]:
        inc: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].add(u)
        return tuple(frozenset(s) for s in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        return tuple(self.succ[v] | self.pred[v] for v in range(self.n))

    @cached_property
    def succ_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in s) for s in self.succ)

    @cached_property
    def pred_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in s) for s in self.pred)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def build_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Validate ``arcs`` and return the digraph on vertices ``0..n-1``.

    Raises :class:`DigraphError` with ``kind`` one of ``"range"``, ``"loop"``,
    ``"duplicate"`` or ``"digon"``.
    """
    if n < 0:
        raise DigraphError("range", f"negative vertex count {n}")
    seen: set[Arc] = set()
    for arc in arcs:
        u, v = (int(arc[0]), int(arc[1]))
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError("range", f"arc {(u, v)} has an endpoint outside 0..{n - 1}", (u, v))
        if u == v:
            raise DigraphError("loop", f"loop at vertex {u}", (u, v))
        if (u, v) in seen:
            raise DigraphError("duplicate", f"duplicate arc {(u, v)}", (u, v))
        if (v, u) in seen:
            raise DigraphError("digon", f"digon between {u} and {v}", (u, v))
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph induced by ``S``, relabelled to ``0..|S|-1``.

    Returns ``(sub, to_original)`` where ``to_original[i]`` is the original id
    of new vertex ``i``; vertices keep their relative order.
    """
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < D.n:
            raise DigraphError("range", f"vertex {v} not in digraph on {D.n} vertices")
    index = {v: i for i, v in enumerate(verts)}
    arcs = frozenset((index[u], index[v]) for u, v in D.arcs if u in index and v in index)
    return Digraph(len(verts), arcs), tuple(verts)


def reachable_from(D: Digraph, r: int) -> set[int]:
    seen = {r}
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in D.succ[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def reaching(D: Digraph, r: int) -> set[int]:
    """Vertices from which ``r`` is reachable (including ``r``)."""
    seen = {r}
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in D.pred[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def strong_components(D: Digraph) -> list[list[int]]:
    """Strongly connected components (iterative Tarjan), each sorted."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for s in range(D.n):
        if s in index:
            continue
        work = [(s, iter(sorted(D.succ[s])))]
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack.add(s)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(D.succ[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def source_components(D: Digraph) -> list[list[int]]:
    """Components of the condensation with no incoming arc, ordered by min vertex."""
    comps = strong_components(D)
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    has_in = [False] * len(comps)
    for u, v in D.arcs:
        if where[u] != where[v]:
            has_in[where[v]] = True
    return sorted((c for i, c in enumerate(comps) if not has_in[i]), key=lambda c: c[0])


def find_spanning_root(D: Digraph) -> int | None:
    """Smallest vertex from which every vertex is reachable, or ``None``.

    Such a vertex exists iff the condensation has a unique source component;
    the root is then the smallest id in that component.
    """
    if D.n == 0:
        return None
    sources = source_components(D)
    if len(sources) != 1:
        return None
    r = sources[0][0]
    # A unique source component of a finite condensation reaches everything.
    return r


def no_root_evidence(D: Digraph) -> tuple[int, int] | None:
    """Two vertices no single vertex can reach both of, when no root exists."""
    sources = source_components(D)
    if len(sources) < 2:
        return None
    return sources[0][0], sources[1][0]
