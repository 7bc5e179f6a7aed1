"""Text formats for instances and certificates, and dot export.

Instances::

    c optional comment
    p dig <n> <m>
    a <u> <v>        (m lines, 1-indexed)

Certificates are one of::

    COLORING <palette>          WITNESS k=<k>          NO-SPANNING-OUT-TREE
    v <vertex> <color>          P1: v v ...            e <u> <v>
    ...                         P2: ... P3: ... P4: ...
"""

from __future__ import annotations

import re

from .coloring import Certificate, Coloring, NoSpanningOutTree, ProperColoring, Witness
from .digraph import Digraph, build_digraph
from .errors import FormatError
from .witness.subdivision import FourBlocksWitness


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", no) from None


def parse_instance(text: str) -> Digraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "p":
        raise FormatError("missing problem line 'p dig <n> <m>'", lines[0][0] if lines else None)
    no, toks = lines[0]
    if len(toks) != 4 or toks[1] != "dig":
        raise FormatError("problem line must read 'p dig <n> <m>'", no)
    n, m = _int(toks[2], no, "vertex count"), _int(toks[3], no, "arc count")
    if n < 0 or m < 0:
        raise FormatError("counts must be non-negative", no)
    arcs: list[tuple[int, int]] = []
    seen: dict[frozenset[int], tuple[int, int]] = {}
    for no, toks in lines[1:]:
        if toks[0] != "a" or len(toks) != 3:
            raise FormatError(f"expected 'a <u> <v>', got {' '.join(toks)!r}", no)
        u, v = _int(toks[1], no, "tail"), _int(toks[2], no, "head")
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"endpoint out of range 1..{n}", no)
        if u == v:
            raise FormatError(f"loop at vertex {u}", no)
        key = frozenset((u, v))
        if key in seen:
            kind = "duplicate arc" if seen[key] == (u, v) else "digon"
            raise FormatError(f"{kind} between {u} and {v}", no)
        seen[key] = (u, v)
        arcs.append((u - 1, v - 1))
    if len(arcs) != m:
        raise FormatError(f"count mismatch: header declares {m} arcs, found {len(arcs)}",
                          lines[-1][0])
    return build_digraph(n, arcs)


def emit_instance(D: Digraph, comments: tuple[str, ...] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p dig {D.n} {len(D.arcs)}")
    out += [f"a {u + 1} {v + 1}" for u, v in D.sorted_arcs()]
    return "\n".join(out) + "\n"


def emit_certificate(cert: Certificate) -> str:
    if isinstance(cert, ProperColoring):
        c = cert.coloring
        lines = [f"COLORING {c.palette}"] + [f"v {v + 1} {col}" for v, col in enumerate(c.colors)]
    elif isinstance(cert, Witness):
        w = cert.witness
        lines = [f"WITNESS k={w.k}"] + [
            f"P{j}: " + " ".join(str(v + 1) for v in p) for j, p in enumerate(w.paths, start=1)]
    elif isinstance(cert, NoSpanningOutTree):
        lines = ["NO-SPANNING-OUT-TREE", "e " + " ".join(str(v + 1) for v in cert.evidence)]
    else:
        raise TypeError(f"not a certificate: {cert!r}")
    return "\n".join(lines) + "\n"


_PATH = re.compile(r"^P([1-4]):((?:\s+\d+)+)$")


def parse_certificate(text: str) -> Certificate:
    lines = [(no, raw.strip()) for no, raw in enumerate(text.splitlines(), start=1)
             if raw.strip() and not raw.strip().startswith("c ")]
    if not lines:
        raise FormatError("empty certificate")
    no, head = lines[0]
    body = lines[1:]
    if head.startswith("COLORING"):
        toks = head.split()
        if len(toks) != 2:
            raise FormatError("header must read 'COLORING <palette>'", no)
        palette = _int(toks[1], no, "palette")
        colors = []
        for no, line in body:
            toks = line.split()
            if len(toks) != 3 or toks[0] != "v":
                raise FormatError(f"expected 'v <vertex> <color>', got {line!r}", no)
            v, col = _int(toks[1], no, "vertex"), _int(toks[2], no, "color")
            if v != len(colors) + 1:
                raise FormatError(f"vertices must be listed in order; expected {len(colors) + 1}", no)
            colors.append(col)
        return ProperColoring(Coloring(tuple(colors), palette))
    if head.startswith("WITNESS"):
        m = re.fullmatch(r"WITNESS k=(\d+)", head)
        if not m:
            raise FormatError("header must read 'WITNESS k=<k>'", no)
        paths: dict[int, tuple[int, ...]] = {}
        for no, line in body:
            pm = _PATH.match(line)
            if not pm:
                raise FormatError(f"expected 'P<j>: v v ...', got {line!r}", no)
            j = int(pm.group(1))
            if j in paths or j != len(paths) + 1:
                raise FormatError(f"path P{j} out of order or repeated", no)
            paths[j] = tuple(int(t) - 1 for t in pm.group(2).split())
        if len(paths) != 4:
            raise FormatError(f"witness needs four paths, got {len(paths)}", lines[-1][0])
        return Witness(FourBlocksWitness(paths[1], paths[2], paths[3], paths[4], int(m.group(1))))
    if head == "NO-SPANNING-OUT-TREE":
        if len(body) != 1 or body[0][1].split()[0] != "e":
            raise FormatError("expected one evidence line 'e <u> <v>'", no)
        no, line = body[0]
        return NoSpanningOutTree(tuple(_int(t, no, "vertex") - 1 for t in line.split()[1:]))
    raise FormatError(f"unknown certificate header {head!r}", no)


_PATH_COLORS = ("red", "blue", "darkgreen", "orange")


def export_dot(D: Digraph, cert: Certificate | None = None) -> str:
    """Dot text; colorings become node fill indices, witness paths arc groups."""
    out = ["digraph D {", "  node [shape=circle];"]
    colors = cert.coloring.colors if isinstance(cert, ProperColoring) else None
    for v in range(D.n):
        if colors is None:
            out.append(f'  {v + 1} [label="{v + 1}"];')
        else:
            c = colors[v]
            out.append(f'  {v + 1} [label="{v + 1}:{c}", color_index={c}, style=filled, '
                       f'colorscheme=set312, fillcolor={c % 12 + 1}];')
    on_path: set[tuple[int, int]] = set()
    if isinstance(cert, Witness):
        for j, p in enumerate(cert.witness.paths):
            arcs = list(zip(p, p[1:]))
            on_path.update(arcs)
            out.append(f"  subgraph P{j + 1} {{")
            out.append(f"    edge [color={_PATH_COLORS[j]}, penwidth=2.5];")
            out += [f"    {a + 1} -> {b + 1};" for a, b in arcs]
            out.append("  }")
    out += [f"  {u + 1} -> {v + 1};" for u, v in D.sorted_arcs() if (u, v) not in on_path]
    out.append("}")
    return "\n".join(out) + "\n"
