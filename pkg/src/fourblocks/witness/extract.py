"""Constructive extraction of C(k,1,1,1)-subdivisions from the structures that
block a small coloring of a slice.

Every extractor composes the subdivision that the corresponding argument
prescribes (tree paths spliced into oriented cycles), validates it, and only
if that fails falls back to the exhaustive oracle on the subgraph induced by
the structure plus all tree ancestors. Fallbacks are counted in
:class:`ExtractionStats`.

Conventions, shared by all routines here:

* a cycle is a vertex list read cyclically; arc directions come from ``D``;
* ``route(a, b, via=...)`` picks one of the two cycle paths between ``a``
  and ``b``;
* minimal/maximal elements for the ancestor order are chosen by smallest
  level, then smallest id (resp. largest level).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from ..decomposition import ArcClass, in_slice_class
from ..digraph import Digraph, induced_subdigraph
from ..errors import ContractViolation
from ..outtree import OutTree
from .cycles import (CompositionError, OrientedCycle, block_count, blocks_of,
                     close_walk, split_closed_walk)
from .subdivision import (FourBlocksWitness, oracle_find_subdivision,
                          validate_witness, witness_from_cycle)
from .wheels import Wheel


class CaseFailure(Exception):
    """A prescribed construction did not yield a valid structure."""


@dataclass
class ExtractionStats:
    """Counts which constructions fired and how often the oracle was needed."""

    fallbacks: int = 0
    cases: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)

    def merge(self, other: "ExtractionStats") -> None:
        self.fallbacks += other.fallbacks
        self.cases.update(other.cases)
        self.failures.update(other.failures)


@dataclass(frozen=True)
class MixedCycle:
    """Cycle listed from ``x1`` along the mixed block ``x1 -> z1 -> y1``.

    The part up to ``z1`` is a tree path; everything else uses A1 arcs of one
    slice. ``z1 == x1`` is the degenerate all-A1 cycle.
    """

    cycle: OrientedCycle
    z1: int
    slice_index: int

    @property
    def x1(self) -> int:
        return self.cycle.vertices[0]

    @property
    def tree_segment(self) -> tuple[int, ...]:
        vs = self.cycle.vertices
        return vs[: vs.index(self.z1) + 1]


@dataclass(frozen=True)
class BackMixedCycle:
    """Cycle listed from ``x1``, first along ``B1`` (entering ``x1``), ending
    with the back-mixed block ``y_{s/2} -> z1 -> x1`` whose last part is a tree
    path. ``z1 == x1`` is the degenerate all-A2 cycle."""

    cycle: OrientedCycle
    z1: int
    slice_index: int

    @property
    def x1(self) -> int:
        return self.cycle.vertices[0]

    @property
    def tree_segment(self) -> tuple[int, ...]:
        vs = self.cycle.vertices
        return vs[vs.index(self.z1):] + vs[:1] if self.z1 != vs[0] else vs[:1]


class _Ctx:
    def __init__(self, D: Digraph, T: OutTree, k: int, stats: ExtractionStats | None):
        self.D = D
        self.T = T
        self.k = k
        self.stats = stats if stats is not None else ExtractionStats()

    # ancestor-order helpers ------------------------------------------------
    def tp(self, a: int, b: int) -> list[int]:
        if not self.T.is_ancestor(a, b):
            raise CaseFailure(f"tree path {a}->{b} does not exist")
        return self.T.tree_path(a, b)

    def lca(self, a: int, b: int) -> int:
        return self.T.least_common_ancestor(a, b)

    def anc(self, a: int, b: int) -> bool:
        return self.T.is_ancestor(a, b)

    def lev(self, v: int) -> int:
        return self.T.level[v]

    def minimal(self, S: Iterable[int]) -> int:
        S = set(S)
        mins = [v for v in S if not any(u != v and self.anc(u, v) for u in S)]
        if not mins:
            raise CaseFailure("empty set has no minimal element")
        return min(mins, key=lambda v: (self.lev(v), v))

    def max_proper_ancestor(self, S: Iterable[int], v: int) -> int | None:
        cands = [u for u in S if u != v and self.anc(u, v)]
        return max(cands, key=lambda u: self.lev(u)) if cands else None

    def arc_in(self, a: int, b: int, cls: ArcClass, i: int) -> bool:
        return self.lev(a) % self.k == i and in_slice_class(self.T, self.k, (a, b), cls)

    # composition -----------------------------------------------------------
    def witness(self, pieces: Sequence[Sequence[int]], case: str) -> FourBlocksWitness:
        """Witness carried by the closed walk made of ``pieces`` or one of
        its simple sub-cycles."""
        try:
            walk = close_walk(pieces)
        except CompositionError as exc:
            raise CaseFailure(f"{case}: {exc}") from None
        subs = [walk] if len(set(walk)) == len(walk) else split_closed_walk(walk)
        for cyc in subs:
            w = witness_from_cycle(self.D, cyc, self.k)
            if w is not None and validate_witness(self.D, self.k, w)[0]:
                self.stats.cases[case] += 1
                return w
        raise CaseFailure(f"{case}: composed cycle carries no witness")


def _turns(D: Digraph, seq: Sequence[int]) -> list[int]:
    """Indices of block ends in ``seq`` order (direction changes)."""
    n = len(seq)
    fwd = [D.has_arc(seq[j], seq[(j + 1) % n]) for j in range(n)]
    return [j for j in range(n) if fwd[j] != fwd[j - 1]]


def _ends(D: Digraph, seq: Sequence[int]) -> tuple[list, list]:
    """1-indexed block ends ``(x, y)`` of a cycle listed from block end ``x1``:
    ``x[j] = seq[turn 2j-2]``, ``y[j] = seq[turn 2j-1]``."""
    t = _turns(D, seq)
    if not t or t[0] != 0:
        raise CaseFailure("cycle listing does not start at a block end")
    x = [None] + [seq[t[j]] for j in range(0, len(t), 2)]
    y = [None] + [seq[t[j]] for j in range(1, len(t), 2)]
    return x, y


def _cycle(D: Digraph, seq: Sequence[int]) -> OrientedCycle:
    try:
        return OrientedCycle(D, tuple(seq))
    except ValueError as exc:
        raise CaseFailure(str(exc)) from None


def _shortcut(tree: list[int], rest: list[int]) -> tuple[list[int], int]:
    """Close ``tree`` (a tree path ending where ``rest`` starts, ``rest`` ending
    where ``tree`` starts) into a simple cycle listed from the tree's top.

    If the tree path's interior meets ``rest``, the cycle is cut at the deepest
    such vertex. Returns ``(cycle, index of the tree path's bottom)``.
    """
    inner = set(rest[1:-1])
    hits = [t for t in tree[1:-1] if t in inner]
    if hits:
        w = hits[-1]
        tree = tree[tree.index(w):]
        rest = rest[: rest.index(w) + 1]
    seq = tree + rest[1:-1]
    return seq, len(tree) - 1


# ---------------------------------------------------------------------------
# mixed cycles (A1 slices)


def _check_mixed(ctx: _Ctx, seq: Sequence[int], zi: int) -> int:
    """Verify the mixed-cycle invariants; return the block count."""
    D, T = ctx.D, ctx.T
    C = _cycle(D, seq)
    fwd = C.forward
    if not fwd[0] or fwd[-1]:
        raise CaseFailure("mixed cycle must start at the source x1 of B1")
    t = _turns(D, seq)
    s = len(t)
    if s < 4 or s % 2:
        raise CaseFailure(f"mixed cycle has {s} blocks")
    y1_i = t[1]
    if zi >= y1_i:
        raise CaseFailure("z1 must lie before y1 on B1")
    x1 = seq[0]
    i = ctx.lev(x1) % ctx.k
    n = len(seq)
    for j in range(n):
        a, b = seq[j], seq[(j + 1) % n]
        if j < zi:
            if not T.is_tree_arc(a, b):
                raise CaseFailure(f"({a},{b}) on the tree segment is not a tree arc")
        else:
            arc = (a, b) if fwd[j] else (b, a)
            if not ctx.arc_in(*arc, ArcClass.A1, i):
                raise CaseFailure(f"arc {arc} is not an A1 arc of slice {i}")
    sources = [seq[j] for j in t[0::2]]
    if not all(ctx.anc(x1, x) for x in sources):
        raise CaseFailure("x1 is not below every source")
    return s


def _mixed(ctx: _Ctx, seq: list[int], zi: int, depth: int = 0) -> FourBlocksWitness:
    D = ctx.D
    s = _check_mixed(ctx, seq, zi)
    C = _cycle(D, seq)
    x, y = _ends(D, seq)
    z1 = seq[zi]
    if s == 4:
        if zi >= ctx.k:
            return ctx.witness([seq + [seq[0]]], "mixed.base.tree-segment>=k")
        w = witness_from_cycle(D, seq, ctx.k)
        if w is not None:
            ctx.stats.cases["mixed.base.cycle"] += 1
            return w
        rest = seq[zi + 1:]
        z = ctx.minimal(rest)
        b1_after = seq[zi + 1: seq.index(y[1])]
        b4_inner = C.route(x[1], y[2], avoid=y[1])[1:-1]
        if z in b1_after:
            return ctx.witness([ctx.tp(x[1], z), C.route(z, x[1], via=y[1])], "mixed.base.z-on-B1")
        if z in b4_inner:
            return ctx.witness([ctx.tp(z1, z), C.route(z, z1, via=x[2])], "mixed.base.z-on-B4")
        if z != x[2]:
            raise CaseFailure(f"mixed.base: minimal vertex {z} in no listed position")
        zp = ctx.minimal(v for v in rest if v != x[2])
        where = ("B2/B3" if zp in C.route(y[1], y[2], via=x[2])
                 else "B4" if zp in b4_inner else "B1")
        return ctx.witness([ctx.tp(x[2], zp), C.route(zp, x[2], via=x[1])],
                           f"mixed.base.z=x2.z'-on-{where}")

    m = s // 2
    i = min(range(2, m + 1), key=lambda j: (ctx.lev(x[j]), x[j]))
    if i >= 3:
        tree = ctx.tp(z1, x[i])
        rest = C.route(x[i], z1, via=y[1])
        case = "mixed.step.i>=3"
    else:
        tree = seq[: zi + 1] + ctx.tp(z1, x[2])[1:]
        rest = C.route(x[2], x[1], via=y[2])
        case = "mixed.step.i=2"
    new, new_zi = _shortcut(tree, rest)
    if i == 2 and new[0] == x[1]:
        new_zi = len(tree) - 1
    if len(_turns(D, new)) > s - 2:
        raise CaseFailure(f"{case}: block count did not drop")
    ctx.stats.cases[case] += 1
    return _mixed(ctx, new, new_zi, depth + 1)


def _mixed_from_a1_cycle(ctx: _Ctx, cyc: Sequence[int]) -> tuple[list[int], int]:
    """Degenerate mixed form of a cycle whose arcs are all A1 slice arcs."""
    D = ctx.D
    n = len(cyc)
    t = _turns(D, cyc)
    sources = [cyc[j] for j in t if D.has_arc(cyc[j], cyc[(j + 1) % n])]
    x1 = min(sources, key=lambda v: (ctx.lev(v), v))
    C = OrientedCycle(D, tuple(cyc))
    fw = C.rotated(x1).vertices
    bw = C.rotated(x1, reverse=True).vertices
    seq = min(fw, bw, key=lambda s: s[1])
    return list(seq), 0


def extract_from_mixed(M: MixedCycle, T: OutTree, k: int, D: Digraph,
                       stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from a mixed cycle (or an all-A1 cycle with >= 4 blocks)."""
    ctx = _Ctx(D, T, k, stats)
    seq = list(M.cycle.vertices)
    zi = seq.index(M.z1)
    try:
        _check_mixed(ctx, seq, zi)
    except CaseFailure as exc:
        raise ValueError(f"invalid mixed cycle: {exc}") from None
    return _guarded(ctx, lambda: _mixed(ctx, seq, zi), seq, "mixed")


# ---------------------------------------------------------------------------
# back-mixed cycles (A2 slices)


def _check_back_mixed(ctx: _Ctx, seq: Sequence[int], zi: int) -> int:
    D, T = ctx.D, ctx.T
    C = _cycle(D, seq)
    fwd = C.forward
    n = len(seq)
    if fwd[0] or not fwd[-1]:
        raise CaseFailure("back-mixed cycle must start at the sink x1")
    t = _turns(D, seq)
    s = len(t)
    if s < 6 or s % 2:
        raise CaseFailure(f"back-mixed cycle has {s} blocks")
    ys = seq[t[-1]]  # y_{s/2}
    if zi != 0 and zi <= t[-1]:
        raise CaseFailure("z1 must lie on the back-mixed block after y_{s/2}")
    z1 = seq[zi]
    i = ctx.lev(z1) % ctx.k
    for j in range(n):
        a, b = seq[j], seq[(j + 1) % n]
        if zi != 0 and j >= zi:
            if not T.is_tree_arc(a, b):
                raise CaseFailure(f"({a},{b}) on the tree segment is not a tree arc")
        else:
            arc = (a, b) if fwd[j] else (b, a)
            if not ctx.arc_in(*arc, ArcClass.A2, i):
                raise CaseFailure(f"arc {arc} is not an A2 arc of slice {i}")
    if z1 == ys:
        raise CaseFailure("z1 equals y_{s/2}")
    if any(v != z1 and ctx.anc(v, z1) for v in seq):
        raise CaseFailure("z1 is not minimal in the cycle")
    return s


def _back_mixed(ctx: _Ctx, seq: list[int], zi: int, depth: int = 0) -> FourBlocksWitness:
    D = ctx.D
    s = _check_back_mixed(ctx, seq, zi)
    C = _cycle(D, seq)
    x, y = _ends(D, seq)  # x: sinks, y: sources
    m = s // 2
    i = min(range(2, m + 1), key=lambda j: (ctx.lev(x[j]), x[j]))
    if i == 3:
        return ctx.witness([C.route(x[1], x[3], via=y[1]), ctx.tp(x[1], x[3])], "back-mixed.i=3")
    if s == 6:
        return ctx.witness([C.route(x[2], x[1], via=y[2]), ctx.tp(x[1], x[2])], "back-mixed.base.i=2")
    if i > 3:
        route = C.route(x[i], x[1], via=y[i - 1])
        tree = ctx.tp(x[1], x[i])
        case = "back-mixed.step.i>3"
        # cycle listed from x_i: back along B1' to y_{i-1}, ..., up to x1, tree to x_i
        new, new_zi = _close_back(route, tree, x[1])
    else:
        route = C.route(x[2], x[1], via=y[2])
        tree = ctx.tp(x[1], x[2])
        case = "back-mixed.step.i=2"
        new, new_zi = _close_back(route, tree, seq[zi])
    if len(_turns(D, new)) > s - 2:
        raise CaseFailure(f"{case}: block count did not drop")
    ctx.stats.cases[case] += 1
    return _back_mixed(ctx, new, new_zi, depth + 1)


def _close_back(route: list[int], tree: list[int], z1: int) -> tuple[list[int], int]:
    """Cycle ``route`` (from the new x1 back to the tree's top) closed by
    ``tree`` (top down to the new x1); the new z1 is ``z1`` unless the tree
    path has to be cut where it meets ``route``."""
    inner = set(route[1:-1])
    hits = [t for t in tree[1:-1] if t in inner]
    if hits:
        w = hits[-1]
        route = route[: route.index(w) + 1]
        tree = tree[tree.index(w):]
        z1 = w
    seq = route + tree[1:-1]
    return seq, seq.index(z1) if z1 in seq else 0


def _back_mixed_from_a2_cycle(ctx: _Ctx, cyc: Sequence[int]) -> tuple[list[int], int]:
    D = ctx.D
    x1 = ctx.minimal(cyc)
    C = OrientedCycle(D, tuple(cyc))
    fw = C.rotated(x1).vertices
    bw = C.rotated(x1, reverse=True).vertices
    seq = min(fw, bw, key=lambda s: s[1])
    return list(seq), 0


def extract_from_back_mixed(B: BackMixedCycle, T: OutTree, k: int, D: Digraph,
                            stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from a back-mixed cycle (or an all-A2 cycle with >= 6 blocks)."""
    ctx = _Ctx(D, T, k, stats)
    seq = list(B.cycle.vertices)
    zi = seq.index(B.z1)
    try:
        _check_back_mixed(ctx, seq, zi)
    except CaseFailure as exc:
        raise ValueError(f"invalid back-mixed cycle: {exc}") from None
    return _guarded(ctx, lambda: _back_mixed(ctx, seq, zi), seq, "back-mixed")


# ---------------------------------------------------------------------------
# four-block cycles in A2 slices


GOOD, BAD1, BAD2 = "Good", "BadType1", "BadType2"


def _bad2_labels(ctx: _Ctx, C: OrientedCycle):
    """``(x1, x2, y1, y2, z1)`` if ``C`` is a C(2,1,1,1) with the ancestor
    chain x1 <= x2 <= z1 <= y2 <= y1, else ``None``."""
    bs = blocks_of(C)
    if sorted(bs.lengths) != [1, 1, 1, 2]:
        return None
    b = bs.blocks
    j = bs.lengths.index(2)
    long = b[j].path
    y1, z1, x1 = long
    other = [blk for blk in b if blk is not b[j]]
    x2 = next(blk.sink for blk in other if blk.sink != x1)
    y2 = next(blk.source for blk in other if blk.source != y1)
    chain = [x1, x2, z1, y2, y1]
    if all(ctx.anc(a, c) for a, c in zip(chain, chain[1:])):
        return x1, x2, y1, y2, z1
    return None


def classify_4block_a2(C: OrientedCycle, T: OutTree) -> str:
    """``"BadType1"``, ``"BadType2"`` or ``"Good"`` for a 4-block A2 cycle."""
    bs = blocks_of(C)
    if len(bs) != 4:
        raise ValueError(f"expected 4 blocks, got {len(bs)}")
    if bs.lengths == [1, 1, 1, 1]:
        return BAD1
    ctx = _Ctx(C.host, T, 1, None)
    if _bad2_labels(ctx, C) is not None:
        return BAD2
    return GOOD


def _good4(ctx: _Ctx, cyc: Sequence[int]) -> FourBlocksWitness:
    D = ctx.D
    x1 = ctx.minimal(cyc)
    C = _cycle(D, cyc)

    def labelled(reverse: bool):
        seq = list(C.rotated(x1, reverse=reverse).vertices)
        x, y = _ends(D, seq)
        if len(x) != 3:
            raise CaseFailure("not a 4-block cycle")
        return seq, x, y

    seq, x, y = labelled(False)
    Cs = _cycle(D, seq)

    def inner(a, b, avoid):
        return Cs.route(a, b, avoid=avoid)[1:-1]

    z = ctx.minimal(v for v in seq if v != x1)
    if z in inner(x1, y[1], None) + inner(x1, y[2], y[1]):
        return ctx.witness([ctx.tp(x1, z), Cs.route(z, x1, via=x[2])], "good4.z-next-to-x1")
    if z != x[2]:
        raise CaseFailure(f"good4: minimal vertex {z} is neither inner nor x2")
    rest = [v for v in seq if v not in (x1, x[2])]
    zp = ctx.minimal(rest)
    minimal_rest = [v for v in rest if not any(u != v and ctx.anc(u, v) for u in rest)]
    if zp in inner(x[2], y[1], x1) + inner(x[2], y[2], x1):
        return ctx.witness([ctx.tp(x[2], zp), Cs.route(zp, x[2], via=x1)], "good4.z'-next-to-x2")
    if zp in (y[1], y[2]):
        if y[1] in minimal_rest and y[2] in minimal_rest:
            raise CaseFailure("good4: both sources minimal (bad of type 1)")
        if zp == y[2]:
            seq, x, y = labelled(True)
            Cs = _cycle(D, seq)
        zpp = ctx.max_proper_ancestor([v for v in seq if v != y[2]], y[2])
        if zpp in inner(x[2], y[2], x1) + inner(x1, y[2], y[1]):
            return ctx.witness([ctx.tp(zpp, y[2]), Cs.route(y[2], zpp, via=y[1])],
                               "good4.y1-minimal.z''-on-B3/B4")
        raise CaseFailure("good4: y1 minimal but z'' not next to y2 (bad of type 1)")
    # z' is inside B1 or B4; relabel so that it is inside B1
    if zp in inner(x1, y[2], y[1]):
        seq, x, y = labelled(True)
        Cs = _cycle(D, seq)
    if zp not in inner(x1, y[1], None):
        raise CaseFailure(f"good4: z'={zp} in no listed position")
    zpp = ctx.minimal(v for v in seq if v not in (x1, x[2], zp))
    if zpp == y[1]:
        return ctx.witness([ctx.tp(zp, y[1]), Cs.route(y[1], zp, via=x[2])], "good4.z''=y1")
    if zpp in inner(x[2], y[1], x1) + inner(x[2], y[2], x1):
        return ctx.witness([ctx.tp(zp, zpp), Cs.route(zpp, zp, avoid=y[1])], "good4.z''-on-B2/B3")
    if zpp in inner(x1, y[2], y[1]):
        return ctx.witness([ctx.tp(zp, zpp), Cs.route(zpp, zp, avoid=x1)], "good4.z''-on-B4")
    if zpp in inner(y[1], zp, x1):
        return ctx.witness([ctx.tp(zp, zpp), Cs.route(zpp, y[1], avoid=x1),
                            Cs.route(y[1], x[2], avoid=x1), ctx.tp(x1, x[2]),
                            Cs.route(x1, zp, avoid=y[1])], "good4.z''-between-y1-z'")
    if zpp == y[2]:
        zppp = ctx.max_proper_ancestor([v for v in seq if v != y[1]], y[1])
        if zppp in inner(x1, y[1], None) + inner(x[2], y[1], x1):
            return ctx.witness([ctx.tp(zppp, y[1]), Cs.route(y[1], zppp, via=y[2])],
                               "good4.z''=y2.z'''-on-B1/B2")
        raise CaseFailure("good4: z''=y2 and z''' not next to y1 (bad of type 2)")
    raise CaseFailure(f"good4: z''={zpp} in no listed position")


def extract_good_4block_a2(C: OrientedCycle, T: OutTree, k: int, D: Digraph,
                           stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from a good 4-block cycle of an A2 slice."""
    if classify_4block_a2(C, T) != GOOD:
        raise ValueError("cycle is bad, not good")
    ctx = _Ctx(D, T, k, stats)
    seq = list(C.vertices)
    return _guarded(ctx, lambda: _good4(ctx, seq), seq, "good-4-block")


# ---------------------------------------------------------------------------
# odd cycles in A3 slices


def _odd_a3(ctx: _Ctx, cyc: Sequence[int]) -> FourBlocksWitness:
    D = ctx.D
    lev = ctx.lev
    x1 = min(cyc, key=lambda v: (lev(v), v))
    C = _cycle(D, cyc)
    seq = list(C.rotated(x1).vertices)
    t = len(seq)
    if t % 2 == 0:
        raise CaseFailure("cycle is not odd")

    def X(s, j):  # 1-indexed, cyclic
        return s[(j - 1) % t]

    a, b = seq[1], seq[-1]
    if not ctx.T.comparable(a, b):
        # Case 1
        yv = ctx.lca(a, b)
        try:
            return ctx.witness([ctx.tp(yv, a), [a, x1], [x1, b], ctx.tp(yv, b)], "odd-a3.case1.lca")
        except CaseFailure:
            if lev(a) != lev(b):
                raise
        for s in (seq, [seq[0]] + seq[:0:-1]):
            x2, xt, xt1 = X(s, 2), X(s, t), X(s, t - 1)
            if not ctx.anc(x2, xt1):
                z = ctx.lca(x2, xt1)
                if x1 not in ctx.T.tree_path(z, xt1):
                    return ctx.witness([ctx.tp(z, xt1), [xt1, xt], [xt, x1], [x1, x2],
                                        ctx.tp(z, x2)], "odd-a3.case1.x2-not-above-xt-1")
                yv = ctx.lca(x2, xt)
                return ctx.witness([ctx.tp(yv, xt), [xt, xt1], ctx.tp(x1, xt1), [x1, x2],
                                    ctx.tp(yv, x2)], "odd-a3.case1.x2-not-above-xt-1.x1-above")
        x2, x3, xt, xt1 = X(seq, 2), X(seq, 3), X(seq, t), X(seq, t - 1)
        return ctx.witness([ctx.tp(xt, x3), [x3, x2], ctx.tp(x2, xt1), [xt1, xt]],
                           "odd-a3.case1.final")

    # Case 2: orient so that x2 <=_T xt
    if not ctx.anc(a, b):
        seq = [seq[0]] + seq[:0:-1]
    x = [None] + seq
    i = next((j for j in range(3, t + 1) if lev(x[j]) > lev(x[j - 1])), None)
    if i is None:
        raise CaseFailure("odd-a3.case2: no level increase after x2")
    if i == 3:
        yv = ctx.lca(x[1], x[3])
        return ctx.witness([ctx.tp(yv, x[1]), [x[1], x[t]], ctx.tp(x[2], x[t])[::-1],
                            [x[2], x[3]], ctx.tp(yv, x[3])[::-1]], "odd-a3.case2.i=3")
    if i == t:
        z = ctx.lca(x[1], x[t - 2])
        return ctx.witness([ctx.tp(z, x[1]), [x[1], x[t]], [x[t], x[t - 1]], [x[t - 1], x[t - 2]],
                            ctx.tp(z, x[t - 2])[::-1]], "odd-a3.case2.i=t")
    # 4 <= i < t
    if lev(x[i]) <= lev(x[i - 2]):
        yv = ctx.lca(x[1], x[i])
        return ctx.witness([ctx.tp(yv, x[1]), [x[1], x[t]], ctx.tp(x[2], x[t])[::-1]]
                           + [x[2:i + 1]] + [ctx.tp(yv, x[i])[::-1]], "odd-a3.case2.x_i-not-below")
    if not ctx.anc(x[i - 2], x[i]):
        yv = ctx.lca(x[i - 2], x[i])
        return ctx.witness([ctx.tp(yv, x[i - 2]), [x[i - 2], x[i - 1], x[i]],
                            ctx.tp(yv, x[i])[::-1]], "odd-a3.case2.x_i-2-not-above-x_i")
    if i != 4:
        p, q, r, d = x[i - 1], x[i - 2], x[i - 3], x[i]
        yv = ctx.lca(p, r)
        return ctx.witness([ctx.tp(yv, p), [p, d], ctx.tp(q, d)[::-1], [q, r],
                            ctx.tp(yv, r)[::-1]], "odd-a3.case2.P(1,2)")
    if ctx.T.comparable(x[4], x[t]):
        top, bot = (x[4], x[t]) if ctx.anc(x[4], x[t]) else (x[t], x[4])
        return ctx.witness([ctx.tp(top, bot), C.route(bot, top, via=x[1])],
                           "odd-a3.case2.x4-xt-comparable")
    yv = ctx.lca(x[4], x[t])
    z = ctx.lca(x[1], x[3])
    try:
        return ctx.witness([ctx.tp(z, x[1]), [x[1], x[t]], ctx.tp(yv, x[t])[::-1],
                            ctx.tp(yv, x[4]), [x[4], x[3]], ctx.tp(z, x[3])[::-1]],
                           "odd-a3.case2.levels")
    except CaseFailure:
        pass
    if t < 7:
        raise CaseFailure("odd-a3.case2: t < 7 with equal levels")
    yv = ctx.lca(x[5], x[t])
    if yv not in ctx.T.tree_path(z, x[1]) and yv not in ctx.T.tree_path(z, x[3]):
        return ctx.witness([ctx.tp(z, x[3]), [x[3], x[4], x[5]], ctx.tp(yv, x[5])[::-1],
                            ctx.tp(yv, x[t]), [x[t], x[1]], ctx.tp(z, x[1])[::-1]],
                           "odd-a3.case2.final.y-off")
    return ctx.witness([ctx.tp(yv, x[2]), [x[2], x[3], x[4], x[5]], ctx.tp(yv, x[5])[::-1]],
                       "odd-a3.case2.final.y-on")


def extract_odd_cycle_a3(C: OrientedCycle, T: OutTree, k: int, D: Digraph,
                         stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from an odd cycle of the underlying graph of an A3 slice."""
    if len(C) % 2 == 0:
        raise ValueError("cycle is not odd")
    ctx = _Ctx(D, T, k, stats)
    seq = list(C.vertices)
    return _guarded(ctx, lambda: _odd_a3(ctx, seq), seq, "odd-a3")


# ---------------------------------------------------------------------------
# wheels


def _wheel_a1(ctx: _Ctx, W: Wheel) -> FourBlocksWitness:
    D = ctx.D
    C = _cycle(D, W.cycle)
    s = block_count(C)
    if s >= 4:
        ctx.stats.cases["wheel-a1.cycle-has->=4-blocks"] += 1
        seq, zi = _mixed_from_a1_cycle(ctx, W.cycle)
        return _mixed(ctx, seq, zi)
    if s != 2:
        raise CaseFailure("wheel-a1: directed cycle in an A1 slice")
    bs = blocks_of(C)
    z1, z2 = bs.sources[0], bs.sinks[0]
    hub = W.hub
    spokes = sorted(W.spokes, key=lambda v: (ctx.lev(v), v))
    last: CaseFailure | None = None
    for x1, x2, x3 in combinations(spokes, 3):
        try:
            if ctx.lev(hub) < ctx.lev(x2):
                new = close_walk([[hub, x2], C.route(x2, x3, via=z1), [x3, hub]])
                case = "wheel-a1.hub-below-x2"
            else:
                new = close_walk([[x1, hub], [hub, x2], C.route(x2, x1, via=z2)])
                case = "wheel-a1.hub-above-x2"
            if block_count(_cycle(D, new)) < 4:
                raise CaseFailure(f"{case}: fewer than 4 blocks")
            ctx.stats.cases[case] += 1
            seq, zi = _mixed_from_a1_cycle(ctx, new)
            return _mixed(ctx, seq, zi)
        except (CaseFailure, CompositionError) as exc:
            last = CaseFailure(str(exc))
    raise last or CaseFailure("wheel-a1: fewer than three spokes")


def _a2_cycle(ctx: _Ctx, cyc: Sequence[int], case: str) -> FourBlocksWitness:
    """Dispatch an A2-slice cycle with >= 4 blocks to the matching extractor."""
    D = ctx.D
    C = _cycle(D, cyc)
    s = block_count(C)
    if s >= 6:
        ctx.stats.cases[f"{case}.->=6-blocks"] += 1
        seq, zi = _back_mixed_from_a2_cycle(ctx, cyc)
        return _back_mixed(ctx, seq, zi)
    if s == 4:
        kind = classify_4block_a2(C, ctx.T)
        if kind == GOOD:
            ctx.stats.cases[f"{case}.good-4-block"] += 1
            return _good4(ctx, cyc)
        if kind == BAD2:
            x1, x2, y1, y2, z1 = _bad2_labels(ctx, C)
            if D.adjacent(y1, x1):
                return ctx.witness([ctx.tp(x2, z1), [z1, y1], [y1, x1], [x1, y2], [y2, x2]],
                                   f"{case}.bad-type-2.chord")
        raise CaseFailure(f"{case}: cycle is {kind}")
    raise CaseFailure(f"{case}: {s} blocks")


def _wheel_a2(ctx: _Ctx, W: Wheel) -> FourBlocksWitness:
    D = ctx.D
    C = _cycle(D, W.cycle)
    s = block_count(C)
    hub = W.hub
    lev = ctx.lev
    if s >= 6 or (s == 4 and classify_4block_a2(C, ctx.T) == GOOD):
        return _a2_cycle(ctx, W.cycle, "wheel-a2.cycle")
    if s == 4:
        # bad cycle: splice the hub between two adjacent spokes
        n = len(W.cycle)
        last: CaseFailure | None = None
        for j in range(n):
            a, b = W.cycle[j], W.cycle[(j + 1) % n]
            if a in W.spokes and b in W.spokes:
                new = list(W.cycle[: j + 1]) + [hub] + list(W.cycle[j + 1:])
                try:
                    return _a2_cycle(ctx, new, "wheel-a2.bad")
                except CaseFailure as exc:
                    last = exc
        raise last or CaseFailure("wheel-a2.bad: no adjacent spokes")
    if s != 2:
        raise CaseFailure("wheel-a2: directed cycle in an A2 slice")
    bs = blocks_of(C)
    z2, z1 = bs.sources[0], bs.sinks[0]  # bottom source, top sink
    spokes = sorted(W.spokes, key=lambda v: (lev(v), v))
    last = None
    for x1, x2, x3 in combinations(spokes, 3):
        try:
            return _wheel_a2_two_blocks(ctx, C, hub, x1, x2, x3, z1, z2)
        except (CaseFailure, CompositionError) as exc:
            last = CaseFailure(str(exc))
    raise last or CaseFailure("wheel-a2: fewer than three spokes")


def _wheel_a2_two_blocks(ctx, C, hub, x1, x2, x3, z1, z2) -> FourBlocksWitness:
    lev = ctx.lev

    def same_block(a, b):
        return z1 not in C.route(a, b, avoid=z2)[1:-1] and z2 not in C.route(a, b, avoid=z1)[1:-1] \
            and any(z1 not in r[1:-1] and z2 not in r[1:-1]
                    for r in (C.route(a, b, avoid=z1), C.route(a, b, avoid=z2)))

    def direct(a, b):
        for r in (C.route(a, b, avoid=z1), C.route(a, b, avoid=z2)):
            if z1 not in r[1:-1] and z2 not in r[1:-1]:
                return r
        raise CaseFailure("no direct route")

    if lev(hub) < lev(x1):
        if same_block(x2, x3):
            r = direct(x2, x3)
        else:
            r = C.route(x2, x3, avoid=x1)
        return ctx.witness([ctx.tp(x1, x2), r, [x3, hub], [hub, x1]], "wheel-a2.hub-below-all")
    if lev(hub) > lev(x3):
        r = direct(x2, x1) if same_block(x1, x2) else C.route(x2, x1, via=z1)
        return ctx.witness([ctx.tp(x2, x3), r, [x1, hub], [hub, x3]], "wheel-a2.hub-above-all")
    low = x1 if lev(hub) < lev(x2) else x2
    case = "wheel-a2.hub-between-x1-x2" if low == x1 else "wheel-a2.hub-between-x2-x3"
    below = [v for v in C.vertices if ctx.anc(hub, v)]
    z = min(below, key=lambda v: (lev(v), v))
    if z != z2:
        return ctx.witness([[x1, hub], ctx.tp(hub, z), C.route(z, x1, via=z2)], case)
    zp = ctx.max_proper_ancestor(C.vertices, hub)
    if zp is None:
        raise CaseFailure(f"{case}: no cycle vertex above the hub")
    return ctx.witness([[z2, hub], ctx.tp(zp, hub)[::-1], C.route(zp, z2, via=z1)],
                       f"{case}.z=z2")


def extract_wheel_a1(W: Wheel, T: OutTree, k: int, D: Digraph,
                     stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from a wheel in the underlying graph of an A1 slice."""
    ctx = _Ctx(D, T, k, stats)
    return _guarded(ctx, lambda: _wheel_a1(ctx, W), list(W.cycle) + [W.hub], "wheel-a1")


def extract_wheel_a2(W: Wheel, T: OutTree, k: int, D: Digraph,
                     stats: ExtractionStats | None = None) -> FourBlocksWitness:
    """Subdivision from a wheel in the underlying graph of an A2 slice."""
    ctx = _Ctx(D, T, k, stats)
    return _guarded(ctx, lambda: _wheel_a2(ctx, W), list(W.cycle) + [W.hub], "wheel-a2")


# ---------------------------------------------------------------------------


def _guarded(ctx: _Ctx, attempt: Callable[[], FourBlocksWitness], support: Sequence[int],
             label: str) -> FourBlocksWitness:
    try:
        w = attempt()
        ok, diag = validate_witness(ctx.D, ctx.k, w)
        if ok:
            return w
        ctx.stats.failures[f"{label}: {diag}"] += 1
    except (CaseFailure, CompositionError) as exc:
        ctx.stats.failures[f"{label}: {exc}"] += 1
    return _fallback(ctx, support, label)


def support_with_ancestors(T: OutTree, vertices: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in vertices:
        while v != -1 and v not in out:
            out.add(v)
            v = T.parent[v]
    return out


def _fallback(ctx: _Ctx, support: Sequence[int], label: str) -> FourBlocksWitness:
    verts = support_with_ancestors(ctx.T, support)
    sub, to_orig = induced_subdigraph(ctx.D, verts)
    ctx.stats.fallbacks += 1
    w = oracle_find_subdivision(sub, ctx.k)
    if w is not None:
        w = w.relabel(to_orig)
        if validate_witness(ctx.D, ctx.k, w)[0]:
            return w
    raise ContractViolation(f"{label}: no subdivision found even by the oracle "
                            f"on {len(verts)} supporting vertices")
