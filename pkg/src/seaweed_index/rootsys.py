"""Reduced irreducible root systems of types A-G in the simple-root basis.

Roots are integer tuples of coordinates over the simple roots, numbered
1..rank as in Bourbaki's plates. Subsets of simple roots are frozensets of
those 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

Root = tuple[int, ...]
Subset = frozenset[int]

# admissible ranks per letter; E/F/G are exceptional and fixed
RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class InputError(ValueError):
    """Invalid user-supplied data (bad rank, non-root, malformed subset)."""


@dataclass(frozen=True)
class SimpleType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper()
        object.__setattr__(self, "letter", letter)
        if letter not in RANK_RANGES:
            raise InputError(f"unknown type letter {self.letter!r}")
        lo, hi = RANK_RANGES[letter]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise InputError(f"rank {self.rank} not admissible for type {letter}")

    def __str__(self):
        return f"{self.letter}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise InputError(f"cannot parse type {text!r}") from exc


def _gram_matrix(t: SimpleType) -> list[list[int]]:
    """Symmetric form on simple roots, short roots of squared length 2."""
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def edge(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    letter = t.letter
    if letter in "ADE":
        for i in range(n):
            g[i][i] = 2
        if letter == "A":
            edges = [(i, i + 1) for i in range(1, n)]
        elif letter == "D":
            edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        else:
            edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
        for i, j in edges:
            edge(i, j, -1)
    elif letter == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -2)
    elif letter == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 1, n, -2)
    elif letter == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        edge(1, 2, -2)
        edge(2, 3, -2)
        edge(3, 4, -1)
    elif letter == "G":
        g[0][0] = 2
        g[1][1] = 6
        edge(1, 2, -3)
    return g


def classical_positive_count(t: SimpleType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.letter]


@dataclass(eq=False)
class RootSystem:
    simple_type: SimpleType
    cartan: list[list[int]]
    symmetric_form: list[list[int]]
    positive_roots: list[Root]
    root_index: dict[Root, int]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def simple_roots(self) -> list[Root]:
        return [unit(self.rank, i) for i in range(1, self.rank + 1)]

    @property
    def pi(self) -> Subset:
        return frozenset(range(1, self.rank + 1))

    def __repr__(self):
        return f"RootSystem({self.simple_type})"

    def form(self, a: Iterable[int], b: Iterable[int]) -> int:
        a, b = tuple(a), tuple(b)
        g = self.symmetric_form
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def is_root(self, v: Root) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-c for c in v) in self.root_index

    def height(self, v: Root) -> int:
        return sum(v)

    def order_key(self, v: Root) -> tuple:
        """Key of the fixed total order on positive roots."""
        return (sum(v), tuple(v))

    def positive_roots_in(self, S: Subset) -> list[Root]:
        """R_+^S in the fixed order."""
        key = ("pos", S)
        if key not in self._cache:
            allowed = [i - 1 for i in S]
            outside = [i for i in range(self.rank) if i not in allowed]
            self._cache[key] = [a for a in self.positive_roots if all(a[i] == 0 for i in outside)]
        return self._cache[key]

    def all_roots(self) -> list[Root]:
        return self.positive_roots + [negate(a) for a in self.positive_roots]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0


def negate(v: Root) -> Root:
    return tuple(-c for c in v)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def unit(rank: int, i: int) -> Root:
    """Coordinates of the simple root alpha_i (1-based)."""
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Generate R_+ by closure from the Cartan matrix (simple-root strings)."""
    n = t.rank
    g = _gram_matrix(t)
    cartan = [[2 * g[i][j] // g[j][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert 2 * g[i][j] % g[j][j] == 0

    simple = [unit(n, i + 1) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p - q = <beta, alpha_i^vee>; beta + alpha_i is a root iff q > 0
                p = 0
                v = sub(beta, simple[i])
                while v in roots:
                    p += 1
                    v = sub(v, simple[i])
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                q = p - pair
                cand = add(beta, simple[i])
                if q > 0 and cand not in roots:
                    roots.add(cand)
                    nxt.append(cand)
        layer = nxt

    positive = sorted(roots, key=lambda v: (sum(v), v))
    expected = classical_positive_count(t)
    if len(positive) != expected:
        raise AssertionError(f"{t}: generated {len(positive)} positive roots, expected {expected}")
    return RootSystem(
        simple_type=t,
        cartan=cartan,
        symmetric_form=g,
        positive_roots=positive,
        root_index={a: k for k, a in enumerate(positive)},
    )


def root_system(letter: str, rank: int) -> RootSystem:
    return build_root_system(SimpleType(letter, rank))


def pairing(rs: RootSystem, lam: Root, alpha: Root) -> int:
    """<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)."""
    if not rs.is_root(alpha):
        raise InputError(f"{alpha} is not a root of {rs.simple_type}")
    num = 2 * rs.form(lam, alpha)
    den = rs.form(alpha, alpha)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise InputError(f"pairing of {lam} with {alpha} is not integral")
    return int(value)


def coroot_coefficients(rs: RootSystem, alpha: Root) -> tuple[int, ...]:
    """H_alpha in the basis H_1..H_l of simple coroots."""
    g = rs.symmetric_form
    la = rs.form(alpha, alpha)
    out = []
    for i, c in enumerate(alpha):
        num = c * g[i][i]
        assert num % la == 0
        out.append(num // la)
    return tuple(out)


def check_subset(rs: RootSystem, S: Iterable[int]) -> Subset:
    S = frozenset(S)
    bad = [i for i in S if not isinstance(i, int) or i < 1 or i > rs.rank]
    if bad:
        raise InputError(f"subset indices {sorted(bad)} outside 1..{rs.rank}")
    return S


def connected_components(rs: RootSystem, S: Iterable[int]) -> list[Subset]:
    S = check_subset(rs, S)
    left = set(S)
    comps = []
    for start in sorted(S):
        if start not in left:
            continue
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            i = stack.pop()
            for j in list(left):
                if rs.adjacent(i, j):
                    left.discard(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(frozenset(comp))
    return comps


def is_connected(rs: RootSystem, S: Iterable[int]) -> bool:
    return len(connected_components(rs, S)) == 1


def highest_root(rs: RootSystem, S: Iterable[int]) -> Root:
    """epsilon_S, the highest root of R^S for a connected subset S."""
    S = check_subset(rs, S)
    if not S:
        raise InputError("highest root of the empty subset is undefined")
    if not is_connected(rs, S):
        raise InputError(f"subset {sorted(S)} is not connected")
    key = ("eps", S)
    if key in rs._cache:
        return rs._cache[key]
    roots = rs.positive_roots_in(S)
    top = roots[-1]
    if any(sum(a) == sum(top) for a in roots[:-1]):
        raise AssertionError("highest root not unique")
    for a in roots[:-1]:
        if pairing(rs, a, top) not in (0, 1):
            raise AssertionError(f"<{a}, {top}^vee> outside {{0,1}}")
    rs._cache[key] = top
    return top


def strongly_orthogonal(rs: RootSystem, a: Root, b: Root) -> bool:
    a, b = tuple(a), tuple(b)
    if a == b or a == negate(b):
        return False
    return not rs.is_root(add(a, b)) and not rs.is_root(sub(a, b))


def parse_subset(text: str, rank: int | None = None) -> Subset:
    """Parse "1,3,4" (or "none"/"" for the empty set, "all" for every index) into a subset."""
    text = text.strip().lower()
    if text in ("", "none", "empty"):
        return frozenset()
    if text == "all":
        if rank is None:
            raise InputError("'all' needs a known rank")
        return frozenset(range(1, rank + 1))
    try:
        S = frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise InputError(f"bad subset literal {text!r}") from exc
    if rank is not None and any(i < 1 or i > rank for i in S):
        raise InputError(f"subset {text!r} has indices outside 1..{rank}")
    return S


def format_subset(S: Iterable[int]) -> str:
    S = sorted(S)
    return ",".join(map(str, S)) if S else "none"


def subset_mask(S: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in S)


def subset_from_mask(mask: int) -> Subset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def all_types(max_rank: int = 8) -> list[SimpleType]:
    """Every admissible simple type with rank <= max_rank, in table order."""
    out = []
    for letter, (lo, hi) in RANK_RANGES.items():
        top = max_rank if hi is None else min(hi, max_rank)
        for n in range(lo, top + 1):
            out.append(SimpleType(letter, n))
    return out
