import pytest
from hypothesis import given, strategies as st

from fourblocks.coloring import (Coloring, NoSpanningOutTree, ProperColoring, Witness, certify)
from fourblocks.errors import FormatError
from fourblocks.io import (emit_certificate, emit_instance, export_dot, parse_certificate,
                           parse_instance)
from fourblocks.witness import oracle_find_subdivision

from .helpers import oriented_graphs

C4_TEXT = "c four-cycle\np dig 4 4\na 1 2\na 3 2\na 3 4\na 1 4\n"


def test_parse_example():
    D = parse_instance(C4_TEXT)
    assert D.n == 4 and D.arcs == frozenset({(0, 1), (2, 1), (2, 3), (0, 3)})


@pytest.mark.parametrize("text, line, fragment", [
    ("p dig 2 1\na 1 1\n", 2, "loop"),
    ("p dig 2 2\na 1 2\na 1 2\n", 3, "duplicate arc"),
    ("p dig 2 2\na 1 2\na 2 1\n", 3, "digon"),
    ("p dig 2 1\na 1 3\n", 2, "out of range"),
    ("p dig 3 2\na 1 2\n", 2, "count mismatch"),
    ("p dig 3 x\n", 1, "integer"),
    ("a 1 2\n", 1, "problem line"),
    ("p dig 3 1\nb 1 2\n", 2, "expected"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(FormatError) as info:
        parse_instance(text)
    assert info.value.line == line and fragment in str(info.value)


def test_emit_coloring_example():
    text = emit_certificate(ProperColoring(Coloring((0, 0), 18)))
    assert text == "COLORING 18\nv 1 0\nv 2 0\n"


@given(oriented_graphs(max_n=10))
def test_instance_round_trip(D):
    assert parse_instance(emit_instance(D, ("comment",))) == D
    text = emit_instance(D)
    assert emit_instance(parse_instance(text)) == text


@given(oriented_graphs(max_n=8), st.integers(1, 3))
def test_certificate_round_trip(D, k):
    certs = [certify(D, k)]
    w = oracle_find_subdivision(D, k)
    if w is not None:
        certs.append(Witness(w))
    for cert in certs:
        text = emit_certificate(cert)
        assert parse_certificate(text) == cert
        assert emit_certificate(parse_certificate(text)) == text


def test_no_root_round_trip():
    cert = NoSpanningOutTree((0, 2))
    assert emit_certificate(cert) == "NO-SPANNING-OUT-TREE\ne 1 3\n"
    assert parse_certificate(emit_certificate(cert)) == cert


@pytest.mark.parametrize("text", [
    "", "COLORING\n", "COLORING 4\nv 2 0\n", "WITNESS k=1\nP1: 1 2\n",
    "WITNESS k=1\nP2: 1 2\n", "NO-SPANNING-OUT-TREE\n", "SOMETHING\n",
])
def test_bad_certificates(text):
    with pytest.raises(FormatError):
        parse_certificate(text)


def test_export_dot():
    D = parse_instance(C4_TEXT)
    plain = export_dot(D)
    assert plain.startswith("digraph D {") and plain.count("->") == 4
    w = oracle_find_subdivision(D, 1)
    dot = export_dot(D, Witness(w))
    assert dot.count("subgraph P") == 4 and dot.count("->") == 4
    assert "penwidth=2.5" in dot
    col = export_dot(D, ProperColoring(Coloring((0, 1, 0, 1), 2)))
    assert "color_index=1" in col and col.count("style=filled") == 4


def test_spec_style_examples():
    D = parse_instance("p dig 3 2\na 1 2\na 2 3\n")
    assert D.arcs == frozenset({(0, 1), (1, 2)})
    with pytest.raises(FormatError, match="count mismatch"):
        parse_instance("p dig 2 1\n")
    C4 = parse_instance(C4_TEXT)
    text = emit_certificate(Witness(oracle_find_subdivision(C4, 1)))
    assert text.splitlines()[0] == "WITNESS k=1"
    assert all(len(line.split()) == 3 for line in text.splitlines()[1:])
    dot = export_dot(D)
    assert dot.count("label=") == 3 and dot.count("->") == 2
