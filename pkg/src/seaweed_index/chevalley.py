"""Chevalley basis structure constants.

Basis of g: H_1..H_l (simple coroots) and X_a for every root a, with

    [H_i, X_a] = <a, a_i^vee> X_a
    [X_a, X_-a] = H_a
    [X_a, X_b] = N(a, b) X_{a+b},   |N(a, b)| = p + 1

where p is the largest integer with b - p*a a root. Signs are fixed on the
extraspecial pair of every non-simple positive root and propagated with the
standard identities (Carter, Simple Groups of Lie Type, 4.1-4.2):

    N(a, b) = -N(b, a)
    N(-a, -b) = -N(a, b)
    N(a, b)/(c, c) = N(b, c)/(a, a) = N(c, a)/(b, b)      if a + b + c = 0
    sum over the three pairings of a quadruple summing to zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .rootsys import (
    Root,
    RootSystem,
    SimpleType,
    add,
    build_root_system,
    coroot_coefficients,
    negate,
    pairing,
    sub,
)

# a basis label is a Cartan index 0..l-1 or a root tuple
Label = Union[int, Root]


def string_p(rs: RootSystem, a: Root, b: Root) -> int:
    """Largest p with b - p*a a root."""
    p = 0
    v = sub(b, a)
    while rs.is_root(v):
        p += 1
        v = sub(v, a)
    return p


def _is_positive(a: Root) -> bool:
    return any(c > 0 for c in a)


@dataclass(eq=False)
class StructureConstants:
    rs: RootSystem
    N: dict[tuple[Root, Root], int]
    extraspecial: dict[Root, tuple[Root, Root]]
    sign_seed: int | None = None
    _brackets: dict = field(default_factory=dict, repr=False)

    @property
    def labels(self) -> list[Label]:
        return list(range(self.rs.rank)) + self.rs.positive_roots + [negate(a) for a in self.rs.positive_roots]

    def bracket(self, x: Label, y: Label) -> dict[Label, int]:
        """[x, y] for basis labels, as a sparse combination of labels."""
        key = (x, y)
        hit = self._brackets.get(key)
        if hit is not None:
            return hit
        rs = self.rs
        xh, yh = isinstance(x, int), isinstance(y, int)
        if xh and yh:
            out = {}
        elif xh:
            c = sum(y[j] * rs.cartan[j][x] for j in range(rs.rank))
            out = {y: c} if c else {}
        elif yh:
            c = sum(x[j] * rs.cartan[j][y] for j in range(rs.rank))
            out = {x: -c} if c else {}
        else:
            s = add(x, y)
            if not any(s):
                out = {i: c for i, c in enumerate(coroot_coefficients(rs, x)) if c}
            elif (x, y) in self.N:
                out = {s: self.N[(x, y)]}
            else:
                out = {}
        self._brackets[key] = out
        return out

    def bracket_vec(self, u: dict[Label, int], v: dict[Label, int]) -> dict[Label, int]:
        out: dict[Label, int] = {}
        for x, cx in u.items():
            for y, cy in v.items():
                for z, cz in self.bracket(x, y).items():
                    out[z] = out.get(z, 0) + cx * cy * cz
        return {k: c for k, c in out.items() if c}

    def jacobi(self, x: Label, y: Label, z: Label) -> dict[Label, int]:
        """[[x,y],z] + [[y,z],x] + [[z,x],y]; zero in a Lie algebra."""
        total: dict[Label, int] = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for k, v in self.bracket_vec(self.bracket(a, b), {c: 1}).items():
                total[k] = total.get(k, 0) + v
        return {k: v for k, v in total.items() if v}


def _extraspecial_pairs(rs: RootSystem) -> dict[Root, tuple[Root, Root]]:
    """For each non-simple positive root g, the pair (a, g - a) with a least
    in the fixed order among positive a for which g - a is a positive root."""
    pos = rs.positive_roots
    out = {}
    for g in pos[rs.rank:]:
        for a in pos:
            b = sub(g, a)
            if b in rs.root_index and rs.order_key(a) < rs.order_key(b):
                out[g] = (a, b)
                break
    return out


def _compute_constants(rs: RootSystem, sign_seed: int | None) -> StructureConstants:
    ex = _extraspecial_pairs(rs)
    rng = random.Random(sign_seed) if sign_seed is not None else None
    signs = {g: (rng.choice((1, -1)) if rng else 1) for g in sorted(ex, key=rs.order_key)}
    sq = {}

    def norm(a):
        if a not in sq:
            sq[a] = rs.form(a, a)
        return sq[a]

    N: dict[tuple[Root, Root], int] = {}

    def get(a: Root, b: Root) -> int:
        """N(a, b) for roots with a + b a root."""
        key = (a, b)
        if key in N:
            return N[key]
        ap, bp = _is_positive(a), _is_positive(b)
        if ap and bp:
            val = positive(a, b)
        elif not ap and not bp:
            val = -get(negate(a), negate(b))
        else:
            # a + b + c = 0: rotate so the first two share a sign
            c = negate(add(a, b))
            cp = _is_positive(c)
            if bp == cp:
                # N(a,b)/(c,c) = N(b,c)/(a,a)
                val = Fraction(get(b, c) * norm(c), norm(a))
            else:
                # N(a,b)/(c,c) = N(c,a)/(b,b)
                val = Fraction(get(c, a) * norm(c), norm(b))
            assert val.denominator == 1
            val = int(val)
        N[key] = val
        return val

    def positive(a: Root, b: Root) -> int:
        g = add(a, b)
        xi, zeta = ex[g]
        if (a, b) == (xi, zeta):
            return signs[g] * (string_p(rs, xi, zeta) + 1)
        if (a, b) == (zeta, xi):
            return -get(xi, zeta)
        # quadruple a + b + (-xi) + (-zeta) = 0
        total = Fraction(0)
        s_minus_xi = sub(b, xi)
        if rs.is_root(s_minus_xi):
            total += Fraction(get(b, negate(xi)) * get(a, negate(zeta)), norm(s_minus_xi))
        r_minus_xi = sub(a, xi)
        if rs.is_root(r_minus_xi):
            total += Fraction(get(negate(xi), a) * get(b, negate(zeta)), norm(r_minus_xi))
        val = total * norm(g) / get(xi, zeta)
        assert val.denominator == 1
        return int(val)

    for a in rs.all_roots():
        for b in rs.all_roots():
            if rs.is_root(add(a, b)):
                get(a, b)
    for (a, b), v in N.items():
        if abs(v) != string_p(rs, a, b) + 1:
            raise AssertionError(f"|N({a},{b})| = {abs(v)} disagrees with root string")
    return StructureConstants(rs, N, ex, sign_seed)


def _self_check(sc: StructureConstants, budget: int = 3000) -> None:
    labels = sc.labels
    n = len(labels)
    if n ** 3 <= budget:
        triples = [(x, y, z) for x in labels for y in labels for z in labels]
    else:
        rng = random.Random(0)
        triples = [tuple(rng.choice(labels) for _ in range(3)) for _ in range(budget)]
    for x, y, z in triples:
        if sc.jacobi(x, y, z):
            raise RuntimeError(f"Jacobi identity fails on {x}, {y}, {z} for {sc.rs.simple_type}")


@lru_cache(maxsize=None)
def _cached(t: SimpleType, sign_seed: int | None) -> StructureConstants:
    sc = _compute_constants(build_root_system(t), sign_seed)
    _self_check(sc)
    return sc


def structure_constants(rs: RootSystem, sign_seed: int | None = None) -> StructureConstants:
    """Chevalley structure constants of g; `sign_seed` picks random signs on
    extraspecial pairs (None: all positive)."""
    return _cached(rs.simple_type, sign_seed)
