"""Independent brute-force oracles used to freeze expected values."""

from fractions import Fraction
from itertools import product


def weyl_orbit_roots(cartan):
    """All roots as the orbit of the simple roots under simple reflections.

    s_i(v) = v - <v, a_i^vee> a_i with <v, a_i^vee> = sum_j v_j cartan[j][i].
    """
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(simple)
    stack = list(simple)
    while stack:
        v = stack.pop()
        for i in range(n):
            c = sum(v[j] * cartan[j][i] for j in range(n))
            w = tuple(v[k] - (c if k == i else 0) for k in range(n))
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def brute_cascade(rs, S):
    """K(S) straight from the recursive definition, using only root lists."""
    S = frozenset(S)
    if not S:
        return []
    # connected components by brute force on the cartan matrix
    comps, left = [], set(S)
    while left:
        comp = {min(left)}
        grow = True
        while grow:
            grow = False
            for j in list(left - comp):
                if any(rs.cartan[i - 1][j - 1] for i in comp):
                    comp.add(j)
                    grow = True
        left -= comp
        comps.append(frozenset(comp))
    out = []
    for K in comps:
        roots = [a for a in weyl_orbit_roots(rs.cartan)
                 if all(c >= 0 for c in a) and all(a[i] == 0 for i in range(rs.rank) if i + 1 not in K)]
        eps = max(roots, key=sum)
        # <a_i, eps^vee> via the symmetric form, computed with Fractions
        g = rs.symmetric_form
        form = lambda x, y: sum(x[i] * g[i][j] * y[j] for i in range(rs.rank) for j in range(rs.rank))
        orth = frozenset(i for i in K
                         if Fraction(2 * form([int(k == i - 1) for k in range(rs.rank)], eps), form(eps, eps)) == 0)
        out.append((K, eps))
        out.extend(brute_cascade(rs, orth))
    return out


def all_subset_pairs(rank):
    subsets = [frozenset(i + 1 for i in range(rank) if m >> i & 1) for m in range(1 << rank)]
    return list(product(subsets, subsets))
