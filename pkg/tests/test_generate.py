import pytest
from hypothesis import given, strategies as st

from fourblocks.digraph import find_spanning_root, reachable_from
from fourblocks.generate import MODELS, generate


@given(st.sampled_from(MODELS), st.integers(1, 14), st.integers(0, 10**6),
       st.sampled_from((0.0, 0.2, 0.5, 1.0)))
def test_deterministic_and_oriented(model, n, seed, p):
    D = generate(model, n, seed, p)
    assert D == generate(model, n, seed, p)
    assert D.n == n
    assert all((v, u) not in D.arcs and u != v for u, v in D.arcs)


@given(st.integers(1, 14), st.integers(0, 10**6))
def test_tree_plus_is_rooted_at_zero(n, seed):
    D = generate("tree-plus", n, seed)
    assert reachable_from(D, 0) == set(range(n))
    assert find_spanning_root(D) is not None


def test_extremes():
    assert len(generate("gnp", 6, 1, 0.0).arcs) == 0
    assert len(generate("gnp", 6, 1, 1.0).arcs) == 15
    assert len(generate("tree-plus", 6, 1, 0.0).arcs) == 5


@pytest.mark.parametrize("args", [("nope", 3, 0), ("gnp", 0, 0), ("gnp", 3, 0, 1.5)])
def test_bad_parameters(args):
    with pytest.raises(ValueError):
        generate(*args)


def test_tree_only_instances_are_colored():
    from fourblocks.coloring import ProperColoring, certify

    D = generate("tree-plus", 5, 123, 0.0)
    assert len(D.arcs) == 4
    for k in (1, 2, 3):
        cert = certify(D, k)
        assert isinstance(cert, ProperColoring) and cert.coloring.palette == 18 * k
    assert generate("gnp", 1, 9).n == 1 and not generate("gnp", 1, 9).arcs
