"""Cascades of strongly orthogonal roots attached to subsets of simple roots.

For a subset S of simple roots the cascade K(S) is built recursively: split S
into connected components; a connected S contributes itself and then the
cascade of the simple roots of S orthogonal (under the coroot pairing) to its
highest root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import bareiss_rank
from .rootsys import (
    Root,
    RootSystem,
    Subset,
    check_subset,
    connected_components,
    highest_root,
    pairing,
    unit,
)


@dataclass(frozen=True)
class CascadeMember:
    subset: Subset
    epsilon: Root
    gamma: frozenset[Root]
    gamma0: frozenset[Root]
    n_pairs: int


@dataclass(frozen=True)
class CascadeSet:
    source: Subset
    members: tuple[CascadeMember, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def subsets(self) -> frozenset[Subset]:
        return frozenset(m.subset for m in self.members)

    @property
    def epsilons(self) -> list[Root]:
        return [m.epsilon for m in self.members]


def _orthogonal_part(rs: RootSystem, K: Subset, eps: Root) -> Subset:
    return frozenset(i for i in K if pairing(rs, unit(rs.rank, i), eps) == 0)


def _member(rs: RootSystem, K: Subset) -> CascadeMember:
    eps = highest_root(rs, K)
    gamma = frozenset(a for a in rs.positive_roots_in(K) if pairing(rs, a, eps) > 0)
    gamma0 = gamma - {eps}
    if len(gamma0) % 2:
        raise AssertionError(f"odd Heisenberg layer for {sorted(K)}")
    return CascadeMember(K, eps, gamma, gamma0, len(gamma0) // 2)


def _cascade_subsets(rs: RootSystem, S: Subset) -> list[Subset]:
    out = []
    for comp in connected_components(rs, S):
        out.append(comp)
        out.extend(_cascade_subsets(rs, _orthogonal_part(rs, comp, highest_root(rs, comp))))
    return out


def cascade(rs: RootSystem, S: Iterable[int]) -> CascadeSet:
    S = check_subset(rs, S)
    key = ("cascade", S)
    if key not in rs._cache:
        members = [_member(rs, K) for K in _cascade_subsets(rs, S)]
        members.sort(key=lambda m: rs.order_key(m.epsilon))
        rs._cache[key] = CascadeSet(S, tuple(members))
    return rs._cache[key]


def kg(rs: RootSystem) -> int:
    """Number of cascade members of the full set of simple roots."""
    return len(cascade(rs, rs.pi))


def dim_span_epsilons(rs: RootSystem, sets: Sequence[CascadeSet]) -> int:
    rows = [list(m.epsilon) for cs in sets for m in cs]
    return bareiss_rank(rows) if rows else 0


def cascade_chain(rs: RootSystem, S: Iterable[int]) -> list[Subset]:
    """S_1 < ... < S_n = S with nested cascades of sizes 1..n.

    Each step removes K minus its orthogonal part, K being the connected
    component of the current set with least index.
    """
    current = check_subset(rs, S)
    chain = []
    while current:
        chain.append(current)
        K = connected_components(rs, current)[0]
        Kp = _orthogonal_part(rs, K, highest_root(rs, K))
        current = current - (K - Kp)
    chain.reverse()
    return chain
