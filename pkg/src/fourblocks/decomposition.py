"""Level-residue slices of a digraph and the three arc classes of each slice."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .digraph import Digraph, induced_subdigraph
from .errors import ContractViolation
from .outtree import OutTree, first_violation


class ArcClass(str, Enum):
    A1 = "A1"  # tail <=_T head
    A2 = "A2"  # head <=_T tail
    A3 = "A3"  # incomparable ends


def classify_arc(T: OutTree, arc: tuple[int, int]) -> ArcClass:
    x, y = arc
    if T.is_ancestor(x, y):
        return ArcClass.A1
    if T.is_ancestor(y, x):
        return ArcClass.A2
    return ArcClass.A3


@dataclass(frozen=True)
class Slice:
    """One slice ``D_i`` in relabelled form.

    ``to_original[j]`` is the original id of local vertex ``j``. ``parts``
    maps each arc class to the spanning subdigraph of ``induced`` on that
    class.
    """

    index: int
    to_original: tuple[int, ...]
    induced: Digraph
    parts: dict[ArcClass, Digraph]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.to_original

    def part(self, cls: ArcClass | str) -> Digraph:
        return self.parts[ArcClass(cls)]

    def original_arcs(self, cls: ArcClass | str) -> set[tuple[int, int]]:
        m = self.to_original
        return {(m[u], m[v]) for u, v in self.part(cls).arcs}


@dataclass(frozen=True)
class LevelDecomposition:
    k: int
    slices: tuple[Slice, ...]

    def slice_of(self, T: OutTree, v: int) -> Slice:
        return self.slices[T.level[v] % self.k]


def in_slice_class(T: OutTree, k: int, arc: tuple[int, int], cls: ArcClass) -> bool:
    """Whether an arc of the host lies in class ``cls`` of some slice."""
    x, y = arc
    if T.level[x] % k != T.level[y] % k:
        return False
    return classify_arc(T, arc) is cls


def decompose(D: Digraph, T: OutTree, k: int) -> LevelDecomposition:
    """Split ``D`` into ``k`` slices by level residue, each into classes A1/A2/A3.

    ``T`` must be a maximal out-tree of ``D``; otherwise a
    :class:`ContractViolation` names the offending arc.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    bad = first_violation(D, T)
    if bad is not None:
        raise ContractViolation(f"out-tree is not maximal: backward arc {bad} "
                                "does not point to an ancestor")
    slices = []
    for i in range(k):
        verts = [v for v in range(D.n) if T.level[v] % k == i]
        sub, to_orig = induced_subdigraph(D, verts)
        by_class: dict[ArcClass, set[tuple[int, int]]] = {c: set() for c in ArcClass}
        for u, v in sub.arcs:
            by_class[classify_arc(T, (to_orig[u], to_orig[v]))].add((u, v))
        parts = {c: Digraph(sub.n, frozenset(a)) for c, a in by_class.items()}
        slices.append(Slice(i, to_orig, sub, parts))
    return LevelDecomposition(k, tuple(slices))
