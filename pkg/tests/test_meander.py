import pytest
from hypothesis import given, settings, strategies as st

from seaweed_index.meander import (
    CompositionPair,
    MeanderGraph,
    compositions_from_subsets,
    meander_index_sl,
)
from seaweed_index.rootsys import InputError
from seaweed_index.seaweed import index_of
from conftest import rsys


def test_compositions():
    a2 = rsys("A2")
    assert compositions_from_subsets(a2, {1, 2}, {1}).a == (3,)
    assert compositions_from_subsets(a2, {1, 2}, {1}).b == (2, 1)
    assert compositions_from_subsets(rsys("A3"), set(), set()).a == (1, 1, 1, 1)
    with pytest.raises(InputError):
        compositions_from_subsets(rsys("B2"), {1}, {2})
    with pytest.raises(InputError):
        CompositionPair(3, (2,), (3,))


def test_meander_examples():
    assert meander_index_sl(CompositionPair(2, (2,), (2,))) == 1
    assert meander_index_sl(CompositionPair(3, (3,), (2, 1))) == 0
    assert meander_index_sl(CompositionPair(2, (2,), (1, 1))) == 0
    # 2-vertex double arc is one cycle
    assert MeanderGraph.from_pair(CompositionPair(2, (2,), (2,))).components() == (1, 0)


def test_svg_has_every_arc():
    g = MeanderGraph.from_pair(CompositionPair(5, (5,), (2, 3)))
    svg = g.svg()
    assert svg.count("<path") == len(g.top) + len(g.bottom) == 4
    assert svg.count("<circle") == 5


compositions = st.integers(2, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, n), min_size=1).filter(lambda xs: sum(xs) >= n),
        st.lists(st.integers(1, n), min_size=1).filter(lambda xs: sum(xs) >= n),
    )
)


def _trim(parts, n):
    out, total = [], 0
    for p in parts:
        p = min(p, n - total)
        if p == 0:
            break
        out.append(p)
        total += p
    return tuple(out)


@settings(max_examples=200, deadline=None)
@given(compositions)
def test_graph_sanity(args):
    n, a, b = args
    cp = CompositionPair(n, _trim(a, n), _trim(b, n))
    g = MeanderGraph.from_pair(cp)
    cycles, paths = g.components()
    # vertex degrees at most 2; components of a degree<=2 graph
    deg = {v: 0 for v in range(1, n + 1)}
    for u, v in g.top + g.bottom:
        deg[u] += 1
        deg[v] += 1
    assert max(deg.values()) <= 2
    edges = len(g.top) + len(g.bottom)
    # paths have one edge fewer than vertices, cycles as many
    assert n - edges == paths
    swapped = MeanderGraph.from_pair(CompositionPair(n, cp.b, cp.a)).components()
    assert 2 * swapped[0] + swapped[1] == 2 * cycles + paths


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_agrees_with_rank_engine(n):
    rs = rsys(f"A{n - 1}")
    for sm in range(1 << rs.rank):
        for tm in range(1 << rs.rank):
            S = {i + 1 for i in range(rs.rank) if sm >> i & 1}
            T = {i + 1 for i in range(rs.rank) if tm >> i & 1}
            assert meander_index_sl(compositions_from_subsets(rs, S, T)) == index_of(rs, S, T)
