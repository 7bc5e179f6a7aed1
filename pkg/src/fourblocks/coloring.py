"""Slice colorings, their product, and the certify pipeline."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .decomposition import ArcClass, Slice, decompose
from .digraph import Digraph, find_spanning_root, no_root_evidence, reaching
from .errors import ContractViolation, SizeCapExceeded
from .outtree import OutTree, maximal_out_tree
from .witness.cycles import OrientedCycle
from .witness.extract import (ExtractionStats, extract_odd_cycle_a3, extract_wheel_a1,
                              extract_wheel_a2)
from .witness.subdivision import FourBlocksWitness, validate_witness
from .witness.wheels import Wheel, find_wheel

EXACT_CAP = 64
SLICE_PALETTE = 18


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette: int

    def __len__(self) -> int:
        return len(self.colors)

    def used(self) -> int:
        return len(set(self.colors))


def validate_coloring(D: Digraph, c: Coloring) -> tuple[bool, str]:
    if len(c.colors) != D.n:
        return False, f"size: coloring covers {len(c.colors)} vertices, digraph has {D.n}"
    for v, col in enumerate(c.colors):
        if not 0 <= col < c.palette:
            return False, f"palette: vertex {v} has color {col} outside 0..{c.palette - 1}"
    for u, v in D.sorted_arcs():
        if c.colors[u] == c.colors[v]:
            return False, f"monochromatic arc ({u},{v}) with color {c.colors[u]}"
    return True, "ok"


def _degeneracy_order(G: Digraph) -> list[int]:
    """Vertices by repeatedly removing a minimum-degree vertex, reversed."""
    nbr = G.neighbors
    deg = [len(nbr[v]) for v in range(G.n)]
    alive = set(range(G.n))
    removed = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        alive.remove(v)
        removed.append(v)
        for w in nbr[v]:
            if w in alive:
                deg[w] -= 1
    return removed[::-1]


def exact_k_color(G: Digraph, c: int, cap: int = EXACT_CAP) -> Coloring | None:
    """A proper ``c``-coloring of the underlying graph of ``G`` or ``None``."""
    if G.n > cap:
        raise SizeCapExceeded("exact_k_color", G.n, cap)
    if c < 1:
        return Coloring((), c) if G.n == 0 else None
    order = _degeneracy_order(G)
    nbr = G.neighbors
    color = [-1] * G.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in nbr[v]}
        for col in range(c):
            if col not in taken:
                color[v] = col
                if place(i + 1):
                    return True
        color[v] = -1
        return False

    if not place(0):
        return None
    return Coloring(tuple(color), c)


def two_color_or_odd_cycle(G: Digraph) -> Union[Coloring, OrientedCycle]:
    """Bipartition of the underlying graph, or an odd cycle found by BFS layering."""
    nbr = G.neighbors
    side = [-1] * G.n
    parent = [-1] * G.n
    depth = [0] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(nbr[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w], depth[w] = u, depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return OrientedCycle(G, tuple(_odd_cycle(parent, depth, u, w)))
    return Coloring(tuple(side), 2)


def _odd_cycle(parent, depth, u, w) -> list[int]:
    a, b = [u], [w]
    while depth[a[-1]] > depth[b[-1]]:
        a.append(parent[a[-1]])
    while depth[b[-1]] > depth[a[-1]]:
        b.append(parent[b[-1]])
    while a[-1] != b[-1]:
        a.append(parent[a[-1]])
        b.append(parent[b[-1]])
    return a + b[-2::-1]


def product_coloring(cA: Coloring, cB: Coloring) -> Coloring:
    """Color ``a * |B| + b``; proper on the union of the two graphs."""
    if len(cA) != len(cB):
        raise ValueError(f"vertex sets differ: {len(cA)} vs {len(cB)} vertices")
    return Coloring(tuple(a * cB.palette + b for a, b in zip(cA.colors, cB.colors)),
                    cA.palette * cB.palette)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class ProperColoring:
    coloring: Coloring
    kind = "coloring"


@dataclass(frozen=True)
class Witness:
    witness: FourBlocksWitness
    kind = "witness"


@dataclass(frozen=True)
class NoSpanningOutTree:
    """``evidence`` is one vertex from each of two different source strong
    components: nothing reaches both, so no vertex reaches all."""

    evidence: tuple[int, ...]
    kind = "no-spanning-out-tree"


Certificate = Union[ProperColoring, Witness, NoSpanningOutTree]


def validate_certificate(D: Digraph, k: int, cert: Certificate) -> tuple[bool, str]:
    if isinstance(cert, ProperColoring):
        if cert.coloring.palette > SLICE_PALETTE * k:
            return False, f"palette {cert.coloring.palette} exceeds {SLICE_PALETTE * k}"
        return validate_coloring(D, cert.coloring)
    if isinstance(cert, Witness):
        if cert.witness.k != k:
            return False, f"witness is for k={cert.witness.k}, expected k={k}"
        return validate_witness(D, k, cert.witness)
    if isinstance(cert, NoSpanningOutTree):
        ev = cert.evidence
        if len(ev) != 2 or not all(0 <= v < D.n for v in ev) or ev[0] == ev[1]:
            return False, "evidence: need two distinct vertices of the digraph"
        if reaching(D, ev[0]) & reaching(D, ev[1]):
            return False, f"evidence: some vertex reaches both {ev[0]} and {ev[1]}"
        return True, "ok"
    return False, f"unknown certificate type {type(cert).__name__}"


# ---------------------------------------------------------------------------
# slices


def _wheel_to_original(W: Wheel, m: tuple[int, ...]) -> Wheel:
    return Wheel(tuple(m[v] for v in W.cycle), m[W.hub], tuple(m[v] for v in W.spokes))


def color_slice(slc: Slice, T: OutTree, k: int, D: Digraph,
                stats: ExtractionStats | None = None) -> Union[Coloring, FourBlocksWitness]:
    """An 18-coloring of the slice, or a witness in original labels."""
    m = slc.to_original
    parts = []
    for cls, extractor in ((ArcClass.A1, extract_wheel_a1), (ArcClass.A2, extract_wheel_a2)):
        G = slc.part(cls)
        c = exact_k_color(G, 3)
        if c is None:
            W = find_wheel(G)
            if W is None:
                raise ContractViolation(f"slice {slc.index} {cls.value}: not 3-colorable "
                                        "yet wheel-free")
            return extractor(_wheel_to_original(W, m), T, k, D, stats)
        parts.append(c)
    res = two_color_or_odd_cycle(slc.part(ArcClass.A3))
    if isinstance(res, OrientedCycle):
        C = OrientedCycle(D, tuple(m[v] for v in res.vertices))
        return extract_odd_cycle_a3(C, T, k, D, stats)
    c1, c2 = parts
    return product_coloring(c1, product_coloring(c2, res))


def certify(D: Digraph, k: int, stats: ExtractionStats | None = None) -> Certificate:
    """Proper coloring with at most 18k colors, a subdivision witness, or
    evidence that no spanning out-tree exists."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    palette = SLICE_PALETTE * k
    if D.n == 0:
        return ProperColoring(Coloring((), palette))
    r = find_spanning_root(D)
    if r is None:
        return NoSpanningOutTree(no_root_evidence(D))
    T = maximal_out_tree(D, r)
    dec = decompose(D, T, k)
    colors = [0] * D.n
    for slc in dec.slices:
        res = color_slice(slc, T, k, D, stats)
        if isinstance(res, FourBlocksWitness):
            ok, diag = validate_witness(D, k, res)
            if not ok:
                raise ContractViolation(f"slice {slc.index} produced an invalid witness: {diag}")
            return Witness(res)
        for local, v in enumerate(slc.to_original):
            colors[v] = slc.index * SLICE_PALETTE + res.colors[local]
    cert = ProperColoring(Coloring(tuple(colors), palette))
    ok, diag = validate_coloring(D, cert.coloring)
    if not ok:
        raise ContractViolation(f"combined coloring is not proper: {diag}")
    return cert
