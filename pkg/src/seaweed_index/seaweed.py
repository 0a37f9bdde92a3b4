"""Standard seaweed subalgebras q = h + g^{R_+^S} + g^{R_-^T} and their index.

Every seaweed is conjugate to a standard one, so inputs are always a pair
(S, T) of subsets of simple roots.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cascade import cascade, dim_span_epsilons
from .chevalley import Label, StructureConstants, structure_constants
from .linalg import bareiss_rank, nullspace
from .rootsys import (
    InputError,
    Root,
    RootSystem,
    Subset,
    add,
    check_subset,
    negate,
    sub,
)

COEFF_BOUND = 2 ** 20


@dataclass(eq=False)
class Seaweed:
    rs: RootSystem
    S: Subset
    T: Subset
    basis: list[Label]
    position: dict[Label, int]
    _table: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_levi(self) -> bool:
        return self.S == self.T

    def __repr__(self):
        return f"Seaweed({self.rs.simple_type}, S={sorted(self.S)}, T={sorted(self.T)})"


def build_seaweed(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> Seaweed:
    S, T = check_subset(rs, S), check_subset(rs, T)
    basis: list[Label] = list(range(rs.rank))
    basis += rs.positive_roots_in(S)
    basis += [negate(b) for b in rs.positive_roots_in(T)]
    q = Seaweed(rs, S, T, basis, {x: k for k, x in enumerate(basis)})
    support = set(basis[rs.rank:])
    for a in support:
        for b in support:
            c = add(a, b)
            if rs.is_root(c) and c not in support:
                raise AssertionError(f"support of {q} not closed: {a} + {b}")
    return q


def _bracket_table(q: Seaweed, sc: StructureConstants) -> list[tuple[int, int, list[tuple[int, int]]]]:
    """Nonzero brackets [e_i, e_j], i < j, in seaweed coordinates."""
    if sc not in q._table:
        pos = q.position
        rows = []
        for i, x in enumerate(q.basis):
            for j in range(i + 1, q.dim):
                br = sc.bracket(x, q.basis[j])
                if br:
                    rows.append((i, j, [(pos[z], c) for z, c in br.items()]))
        q._table[sc] = rows
    return q._table[sc]


def phi_matrix(q: Seaweed, sc: StructureConstants, f: Sequence[int]) -> list[list[int]]:
    """Matrix of the alternating form (x, y) -> f([x, y]) on the seaweed basis."""
    if len(f) != q.dim:
        raise InputError(f"linear form has length {len(f)}, seaweed has dimension {q.dim}")
    M = [[0] * q.dim for _ in range(q.dim)]
    for i, j, terms in _bracket_table(q, sc):
        v = sum(c * f[k] for k, c in terms)
        M[i][j] = v
        M[j][i] = -v
    return M


def random_form(q: Seaweed, rng: random.Random) -> list[int]:
    return [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(q.dim)]


def generic_index(q: Seaweed, sc: StructureConstants, trials: int = 3, seed: int = 42) -> int:
    """dim q minus the largest rank of the form over `trials` random f.

    Never below the true index; equal to it unless every trial lands on the
    degeneracy hypersurface.
    """
    if trials < 1:
        raise InputError("trials must be >= 1")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        best = max(best, bareiss_rank(phi_matrix(q, sc, random_form(q, rng))))
    return q.dim - best


def d_bound(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> int:
    """rank + |K(S)| + |K(T)| - 2 dim E_{S,T}."""
    KS, KT = cascade(rs, S), cascade(rs, T)
    return rs.rank + len(KS) + len(KT) - 2 * dim_span_epsilons(rs, [KS, KT])


def candidate_form(q: Seaweed, coefficients: Sequence[int]) -> list[int]:
    """f = sum a_K X*_{eps_K} + sum b_L X*_{-eps_L}, coefficients in cascade order."""
    KS, KT = cascade(q.rs, q.S), cascade(q.rs, q.T)
    m = len(KS) + len(KT)
    if len(coefficients) != m:
        raise InputError(f"expected {m} coefficients, got {len(coefficients)}")
    if any(c == 0 for c in coefficients):
        raise InputError("candidate form coefficients must be nonzero")
    f = [0] * q.dim
    for member, c in zip(KS, coefficients[: len(KS)]):
        f[q.position[member.epsilon]] = c
    for member, c in zip(KT, coefficients[len(KS):]):
        f[q.position[negate(member.epsilon)]] = c
    return f


@dataclass(frozen=True)
class WitnessData:
    r: int
    s: int
    m: int
    H1: tuple[tuple[Root, Root], ...]
    H2: tuple[tuple[Root, Root], ...]
    I1: tuple[tuple[Root, Root], ...]
    I2: tuple[tuple[Root, Root], ...]
    J: tuple[tuple[Root, Root], ...]

    @property
    def H(self):
        return self.H1 + self.H2

    @property
    def Z(self):
        seen = []
        for z in self.H1 + self.H2 + self.I1 + self.I2 + self.J:
            if z not in seen:
                seen.append(z)
        return tuple(seen)


def witness_quantities(q: Seaweed) -> WitnessData:
    rs = q.rs
    KS, KT = cascade(rs, q.S), cascade(rs, q.T)
    before = lambda a, b: rs.order_key(a) < rs.order_key(b)
    eps_S = {m.epsilon for m in KS}
    eps_T = {m.epsilon for m in KT}

    H1 = []
    for K in KS:
        for a in sorted(K.gamma0, key=rs.order_key):
            if before(a, sub(K.epsilon, a)):
                H1.append((a, sub(K.epsilon, a)))
    H2 = []
    for L in KT:
        for b in sorted(L.gamma0, key=rs.order_key):
            if before(b, sub(L.epsilon, b)):
                H2.append((negate(b), add(negate(L.epsilon), b)))

    I1, I2, J = [], [], []
    for K in KS:
        g0K = sorted(K.gamma0, key=rs.order_key)
        for L in KT:
            g0L = sorted(L.gamma0, key=rs.order_key)
            for b in g0L:
                # eps_K - b = -eps_{L'}
                if negate(sub(K.epsilon, b)) in eps_T:
                    I1.append((negate(b), K.epsilon))
            for a in g0K:
                # a - eps_L = eps_{K'}, K' in K(S)
                if sub(a, L.epsilon) in eps_S:
                    I2.append((a, negate(L.epsilon)))
            for a in g0K:
                for b in g0L:
                    d = sub(a, b)
                    if d in eps_S or negate(d) in eps_T:
                        z = (a, negate(b))
                        if z not in J:
                            J.append(z)
    r = len(H1) + len(H2)
    assert r == sum(K.n_pairs for K in KS) + sum(L.n_pairs for L in KT)
    return WitnessData(
        r=r,
        s=dim_span_epsilons(rs, [KS, KT]),
        m=len(KS) + len(KT),
        H1=tuple(H1),
        H2=tuple(H2),
        I1=tuple(I1),
        I2=tuple(I2),
        J=tuple(J),
    )


def random_omega(m: int, rng: random.Random) -> list[int]:
    out = []
    for _ in range(m):
        c = 0
        while c == 0:
            c = rng.randint(-COEFF_BOUND, COEFF_BOUND)
        out.append(c)
    return out


def check_rank_bound(q: Seaweed, sc: StructureConstants, omega: Sequence[int] | None = None, seed: int = 0) -> bool:
    """rank Phi_f >= 2(r + s) at a candidate form.

    With `omega` given it is tried first; one fresh random sample is drawn
    if it (or the first random sample) falls short.
    """
    w = witness_quantities(q)
    rng = random.Random(seed)
    attempts = [list(omega)] if omega is not None else [random_omega(w.m, rng)]
    attempts.append(random_omega(w.m, rng))
    for om in attempts:
        if bareiss_rank(phi_matrix(q, sc, candidate_form(q, om))) >= 2 * (w.r + w.s):
            return True
    return False


def kernel_basis(q: Seaweed, sc: StructureConstants, f: Sequence[int]) -> list[list[Fraction]]:
    return nullspace(phi_matrix(q, sc, f), q.dim)


@dataclass(frozen=True)
class PairReport:
    S: Subset
    T: Subset
    chi: int
    d: int

    @property
    def bound_ok(self) -> bool:
        return self.chi <= self.d

    @property
    def equality(self) -> bool:
        return self.chi == self.d

    def as_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "T": sorted(self.T),
            "chi": self.chi,
            "d": self.d,
            "bound_ok": self.bound_ok,
            "equality": self.equality,
        }


def verify_pair(rs: RootSystem, S: Iterable[int], T: Iterable[int], seed: int = 42,
                trials: int = 3, sc: StructureConstants | None = None) -> PairReport:
    if sc is None:
        sc = structure_constants(rs)
    q = build_seaweed(rs, S, T)
    return PairReport(q.S, q.T, generic_index(q, sc, trials, seed), d_bound(rs, q.S, q.T))


def index_of(rs: RootSystem, S: Iterable[int], T: Iterable[int], seed: int = 42, trials: int = 3) -> int:
    return generic_index(build_seaweed(rs, S, T), structure_constants(rs), trials, seed)

