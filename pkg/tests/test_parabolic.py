import pytest

from seaweed_index.parabolic import parabolic_of_index
from seaweed_index.rootsys import InputError, all_types, build_root_system
from seaweed_index.seaweed import index_of
from conftest import rsys


def test_examples():
    assert parabolic_of_index(rsys("A3"), 0) == (frozenset({1, 2, 3}), frozenset({1}))
    b2 = rsys("B2")
    assert parabolic_of_index(b2, 2) == (b2.pi, b2.pi)
    g2 = rsys("G2")
    assert parabolic_of_index(g2, 1) == (g2.pi, frozenset({1}))


def test_special_branches():
    assert parabolic_of_index(rsys("D5"), 0)[1] == frozenset({4})
    assert parabolic_of_index(rsys("D7"), 0)[1] == frozenset({6})
    e6 = rsys("E6")
    assert parabolic_of_index(e6, 1)[1] == frozenset({1})
    assert parabolic_of_index(e6, 0)[1] == frozenset({1, 5})
    # T_k for A_l: alpha_1, alpha_l, alpha_3, alpha_{l-2}, ...
    assert parabolic_of_index(rsys("A8"), 0)[1] == frozenset({1, 7, 3, 5})


def test_out_of_range():
    with pytest.raises(InputError):
        parabolic_of_index(rsys("A3"), 4)
    with pytest.raises(InputError):
        parabolic_of_index(rsys("A3"), -1)


@pytest.mark.parametrize("t", [t for t in all_types(5)], ids=str)
def test_every_index_reached(t):
    rs = build_root_system(t)
    for i in range(rs.rank + 1):
        S, T = parabolic_of_index(rs, i)
        assert S == rs.pi
        assert index_of(rs, S, T) == i
