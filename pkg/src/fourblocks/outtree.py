"""Spanning out-trees, the maximalization procedure and ancestry queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraph import Digraph
from .errors import HypothesisFailure


@dataclass(frozen=True)
class OutTree:
    """Rooted spanning arborescence; ``parent[root] == -1``.

    Ancestry (``u <=_T v``) is answered in O(1) from Euler intervals computed
    at construction.
    """

    root: int
    parent: tuple[int, ...]
    level: tuple[int, ...] = field(init=False)
    _tin: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _tout: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if v == self.root:
                if p != -1:
                    raise ValueError("root must have no parent")
            elif not 0 <= p < n:
                raise ValueError(f"vertex {v} has no parent")
            else:
                children[p].append(v)
        level = [-1] * n
        tin = [0] * n
        tout = [0] * n
        clock = 0
        level[self.root] = 0
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                clock += 1
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in sorted(children[v], reverse=True):
                level[c] = level[v] + 1
                stack.append((c, False))
        if -1 in level:
            raise ValueError("parent links contain a cycle")
        object.__setattr__(self, "level", tuple(level))
        object.__setattr__(self, "_tin", tuple(tin))
        object.__setattr__(self, "_tout", tuple(tout))

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the root-to-``v`` tree path (reflexive)."""
        return self._tin[u] <= self._tin[v] and self._tout[v] <= self._tout[u]

    def comparable(self, u: int, v: int) -> bool:
        return self.is_ancestor(u, v) or self.is_ancestor(v, u)

    def least_common_ancestor(self, u: int, v: int) -> int:
        while not self.is_ancestor(u, v):
            u = self.parent[u]
        return u

    def tree_path(self, u: int, v: int) -> list[int]:
        """Vertices of the directed tree path from ``u`` down to ``v``."""
        if not self.is_ancestor(u, v):
            raise ValueError(f"{u} is not an ancestor of {v}")
        path = [v]
        while path[-1] != u:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path

    def is_tree_arc(self, u: int, v: int) -> bool:
        return self.parent[v] == u

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((p, v) for v, p in enumerate(self.parent) if p != -1)

    def is_maximal_for(self, D: Digraph) -> bool:
        return first_violation(D, self) is None


def is_ancestor(T: OutTree, u: int, v: int) -> bool:
    return T.is_ancestor(u, v)


def least_common_ancestor(T: OutTree, u: int, v: int) -> int:
    return T.least_common_ancestor(u, v)


def tree_path(T: OutTree, u: int, v: int) -> list[int]:
    return T.tree_path(u, v)


def grow_out_tree(D: Digraph, r: int) -> OutTree:
    """Breadth-first out-tree from ``r``; each vertex hangs under its
    smallest-id predecessor in the previous BFS layer."""
    dist = [-1] * D.n
    dist[r] = 0
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in sorted(D.succ[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    unreachable = frozenset(v for v in range(D.n) if dist[v] < 0)
    if unreachable:
        raise HypothesisFailure(
            f"{len(unreachable)} vertices unreachable from root {r}", unreachable)
    parent = [-1] * D.n
    for v in range(D.n):
        if v != r:
            parent[v] = min(u for u in D.pred[v] if dist[u] == dist[v] - 1)
    return OutTree(r, tuple(parent))


def _ancestor_walk(parent: list[int], u: int, v: int) -> bool:
    while v != -1:
        if v == u:
            return True
        v = parent[v]
    return False


def first_violation(D: Digraph, T: OutTree) -> tuple[int, int] | None:
    """Smallest backward arc ``(x, y)`` whose head is not an ancestor of its tail."""
    for x, y in D.sorted_arcs():
        if T.level[x] >= T.level[y] and not T.is_ancestor(y, x):
            return x, y
    return None


def maximalize(D: Digraph, T: OutTree) -> OutTree:
    """Re-hang subtrees until every backward arc points to an ancestor.

    Each step takes the smallest violating backward arc ``(x, y)`` and makes
    ``x`` the parent of ``y``. ``x`` is outside the subtree of ``y``, so the
    result is still an out-tree and the level sum strictly grows.
    """
    parent = list(T.parent)
    level = list(T.level)
    children: list[set[int]] = [set() for _ in range(D.n)]
    for v, p in enumerate(parent):
        if p != -1:
            children[p].add(v)
    arcs = D.sorted_arcs()
    while True:
        for x, y in arcs:
            if level[x] >= level[y] and not _ancestor_walk(parent, y, x):
                break
        else:
            break
        children[parent[y]].discard(y)
        parent[y] = x
        children[x].add(y)
        level[y] = level[x] + 1
        stack = [y]
        while stack:
            v = stack.pop()
            for c in children[v]:
                level[c] = level[v] + 1
                stack.append(c)
    return OutTree(T.root, tuple(parent))


def maximal_out_tree(D: Digraph, r: int) -> OutTree:
    return maximalize(D, grow_out_tree(D, r))
