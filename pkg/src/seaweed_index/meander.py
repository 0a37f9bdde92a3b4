"""Meander-graph index of seaweeds in sl_n (Dergachev-Kirillov).

Vertices 1..n. Each block of a composition joins its i-th and
(size + 1 - i)-th positions by an arc: the top composition gives the upper
arcs, the bottom one the lower arcs. The index in gl_n is
2 * (#cycles) + (#paths), isolated vertices counting as paths; sl_n drops 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsys import InputError, RootSystem, check_subset


@dataclass(frozen=True)
class CompositionPair:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InputError("meander graphs need n >= 2")
        for comp in (self.a, self.b):
            if any(p <= 0 for p in comp) or sum(comp) != self.n:
                raise InputError(f"{comp} is not a composition of {self.n}")


def compositions_from_subsets(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> CompositionPair:
    if rs.simple_type.letter != "A":
        raise InputError(f"meander index needs type A, got {rs.simple_type}")
    S, T = check_subset(rs, S), check_subset(rs, T)
    n = rs.rank + 1
    return CompositionPair(n, _blocks(S, n), _blocks(T, n))


def _blocks(S: frozenset[int], n: int) -> tuple[int, ...]:
    parts, size = [], 1
    for i in range(1, n):
        if i in S:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return tuple(parts)


def block_arcs(comp: Sequence[int]) -> list[tuple[int, int]]:
    arcs, start = [], 1
    for k in comp:
        for i in range(k // 2):
            arcs.append((start + i, start + k - 1 - i))
        start += k
    return arcs


@dataclass(frozen=True)
class MeanderGraph:
    n: int
    top: tuple[tuple[int, int], ...]
    bottom: tuple[tuple[int, int], ...]

    @classmethod
    def from_pair(cls, cp: CompositionPair) -> "MeanderGraph":
        return cls(cp.n, tuple(block_arcs(cp.a)), tuple(block_arcs(cp.b)))

    def components(self) -> tuple[int, int]:
        """(#cycles, #paths); a double edge on two vertices is a cycle."""
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.top + self.bottom:
            adj[u].append(v)
            adj[v].append(u)
        seen: set[int] = set()
        cycles = paths = 0
        for v in adj:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if all(len(adj[x]) == 2 for x in comp):
                cycles += 1
            else:
                paths += 1
        return cycles, paths

    def svg(self, scale: int = 40) -> str:
        width = scale * (self.n + 1)
        height = scale * (self.n + 2)
        mid = height // 2
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
        for arcs, sweep in ((self.top, 1), (self.bottom, 0)):
            for u, v in arcs:
                x1, x2 = u * scale, v * scale
                rx = (x2 - x1) / 2
                out.append(
                    f'<path d="M {x1} {mid} A {rx} {rx} 0 0 {sweep} {x2} {mid}" '
                    'fill="none" stroke="black"/>'
                )
        for v in range(1, self.n + 1):
            out.append(f'<circle cx="{v * scale}" cy="{mid}" r="4" fill="black"/>')
        out.append("</svg>")
        return "\n".join(out)


def meander_index_sl(cp: CompositionPair) -> int:
    cycles, paths = MeanderGraph.from_pair(cp).components()
    return 2 * cycles + paths - 1
