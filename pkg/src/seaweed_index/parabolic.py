"""Parabolic subalgebras g_{Pi,T} of any prescribed index 0..rank."""

from __future__ import annotations

from .cascade import cascade_chain, kg
from .rootsys import InputError, RootSystem, Subset


def _type_a_small(rs: RootSystem, k: int) -> Subset:
    """T_k: alternately add alpha_j from the left (odd j) and the right end."""
    ell = rs.rank
    T: set[int] = set()
    for j in range(1, k + 1):
        T.add(j if j % 2 else ell + 1 - j)
    return frozenset(T)


def parabolic_of_index(rs: RootSystem, i: int) -> tuple[Subset, Subset]:
    """(Pi, T) with index of g_{Pi,T} equal to i."""
    ell = rs.rank
    if not 0 <= i <= ell:
        raise InputError(f"index {i} outside 0..{ell}")
    n = kg(rs)
    pi = rs.pi
    if i >= ell - n:
        # index of g_{Pi,S_j} is ell + j - n along the cascade chain, S_0 empty
        chain = [frozenset()] + cascade_chain(rs, pi)
        return pi, chain[i - ell + n]
    letter = rs.simple_type.letter
    if letter == "A":
        return pi, _type_a_small(rs, ell - n - i)
    if letter == "D" and ell % 2 == 1:
        # i == 0 only, since n = ell - 1
        return pi, frozenset({ell - 1})
    if letter == "E" and ell == 6:
        return pi, frozenset({1}) if i == 1 else frozenset({1, 5})
    raise AssertionError(f"no construction for index {i} in {rs.simple_type}")
