"""Seeded random oriented graphs."""

from __future__ import annotations

import heapq
import random
from collections import deque

from .digraph import Digraph, build_digraph

MODELS = ("gnp", "tree-plus")


def _random_labelled_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _orient_from(n: int, edges: list[tuple[int, int]], root: int) -> list[tuple[int, int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {root}
    queue = deque([root])
    arcs = []
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                arcs.append((u, w))
                queue.append(w)
    return arcs


def generate(model: str, n: int, seed: int, p: float = 0.3) -> Digraph:
    """Random oriented graph; identical output for identical arguments.

    ``gnp``: every pair is an edge with probability ``p``, oriented by a fair
    coin. ``tree-plus``: a uniform random out-tree rooted at 0, plus every other
    pair with probability ``p`` and a random orientation.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(f"{model}:{n}:{seed}:{p!r}")
    arcs: list[tuple[int, int]] = []
    used: set[frozenset[int]] = set()
    if model == "tree-plus":
        arcs = _orient_from(n, _random_labelled_tree(n, rng), 0)
        used = {frozenset(a) for a in arcs}
    for u in range(n):
        for v in range(u + 1, n):
            if frozenset((u, v)) in used:
                continue
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build_digraph(n, arcs)
