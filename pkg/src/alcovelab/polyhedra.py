"""Exact rational polyhedra in low dimension.

A linear constraint is a triple (coeffs, rhs, strict) meaning
coeffs . x >= rhs, with strict=True for >.  Feasibility goes through
Fourier-Motzkin elimination, which is exact over Fraction and entirely
adequate at the ranks that occur here (d <= 4, a handful of constraints).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .arith import pairing, rat, vec


def _normalize(con):
    coeffs, rhs, strict = con
    return tuple(rat(c) for c in coeffs), rat(rhs), bool(strict)


def feasible(constraints, dim) -> bool:
    """Whether {x in R^dim : coeffs.x >= rhs (or >)} is nonempty."""
    cons = [_normalize(c) for c in constraints]
    for k in range(dim - 1, -1, -1):
        lower, upper, rest = [], [], []
        for coeffs, rhs, strict in cons:
            a = coeffs[k]
            if a > 0:
                # x_k >= (rhs - rest)/a
                lower.append((coeffs, rhs, strict, a))
            elif a < 0:
                upper.append((coeffs, rhs, strict, a))
            else:
                rest.append((coeffs[:k], rhs, strict))
        new = list(rest)
        for lc, lr, ls, la in lower:
            for uc, ur, us, ua in upper:
                # la > 0: lower bound; ua < 0: upper bound. Combine to
                # eliminate x_k: (1/la)(lr - l_rest) <= x_k <= (1/ua)(ur - u_rest)
                coeffs = tuple(lc[j] / la - uc[j] / ua for j in range(k))
                rhs = lr / la - ur / ua
                new.append((coeffs, rhs, ls or us))
        cons = new
    for _, rhs, strict in cons:
        # all variables eliminated: constraint is 0 >= rhs (or >)
        if rhs > 0 or (strict and rhs == 0):
            return False
    return True


def find_point(constraints, dim):
    """An exact rational point satisfying the constraints, or None.

    Fourier-Motzkin elimination keeping the constraint stack per level, then
    back-substitution choosing midpoints of the surviving slabs.
    """
    levels = []
    cons = [_normalize(c) for c in constraints]
    for k in range(dim - 1, -1, -1):
        levels.append(cons)
        lower, upper, rest = [], [], []
        for coeffs, rhs, strict in cons:
            a = coeffs[k]
            if a > 0:
                lower.append((coeffs, rhs, strict, a))
            elif a < 0:
                upper.append((coeffs, rhs, strict, a))
            else:
                rest.append((coeffs[:k], rhs, strict))
        new = list(rest)
        for lc, lr, ls, la in lower:
            for uc, ur, us, ua in upper:
                coeffs = tuple(lc[j] / la - uc[j] / ua for j in range(k))
                new.append((coeffs, lr / la - ur / ua, ls or us))
        cons = new
    for _, rhs, strict in cons:
        if rhs > 0 or (strict and rhs == 0):
            return None
    point = []
    for k, level_cons in zip(range(dim), reversed(levels)):
        lo = hi = None
        lo_strict = hi_strict = False
        for coeffs, rhs, strict in level_cons:
            a = coeffs[k]
            if a == 0:
                continue
            bound = (rhs - sum(coeffs[j] * point[j] for j in range(k))) / a
            if a > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
        if lo is None and hi is None:
            x = Fraction(0)
        elif lo is None:
            x = hi - 1 if hi_strict else hi
        elif hi is None:
            x = lo + 1 if lo_strict else lo
        elif lo == hi:
            if lo_strict or hi_strict:
                return None
            x = lo
        else:
            x = (lo + hi) / 2
        point.append(x)
    return tuple(point)


def solve_linear(rows, rhs):
    """Solve a square (or overdetermined, consistent) exact linear system.

    Returns the unique solution tuple, or None if singular/inconsistent.
    """
    m = [list(map(rat, row)) + [rat(b)] for row, b in zip(rows, rhs, strict=True)]
    n_rows, n_cols = len(m), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    if len(pivots) < n_cols:
        return None
    for i in range(r, n_rows):
        if m[i][-1] != 0:
            return None
    sol = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return tuple(sol)


def matrix_rank(rows) -> int:
    m = [list(map(rat, row)) for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    for c in range(n_cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def vertices(constraints, dim):
    """All vertices of {x : coeffs.x >= rhs}, from d-subsets of the
    (non-strict) constraint list.  The polyhedron must be pointed for the
    result to describe it fully."""
    cons = [_normalize(c) for c in constraints]
    verts = set()
    for subset in combinations(cons, dim):
        rows = [c for c, _, _ in subset]
        if matrix_rank(rows) < dim:
            continue
        sol = solve_linear(rows, [r for _, r, _ in subset])
        if sol is None:
            continue
        if all(pairing(c, sol) >= r for c, r, _ in cons):
            verts.add(vec(sol))
    return sorted(verts)


def interior_point(constraints, dim):
    """A rational point strictly inside a full-dimensional polytope, as the
    average of its vertices."""
    verts = vertices(constraints, dim)
    if not verts:
        return None
    n = len(verts)
    return tuple(sum(v[j] for v in verts) / n for j in range(dim))


def is_redundant(constraints, idx, dim) -> bool:
    """Whether dropping constraint idx leaves the region unchanged: the rest
    together with the strict negation of idx must be infeasible."""
    cons = [_normalize(c) for c in constraints]
    coeffs, rhs, _ = cons[idx]
    rest = [c for i, c in enumerate(cons) if i != idx]
    negated = (tuple(-a for a in coeffs), -rhs, True)  # coeffs.x < rhs
    return not feasible(rest + [negated], dim)


def irredundant(constraints, dim):
    """Prune constraints implied by the others; deterministic order."""
    cons = [_normalize(c) for c in constraints]
    keep = list(range(len(cons)))
    i = 0
    while i < len(keep):
        trial = [cons[j] for j in keep]
        if is_redundant(trial, i, dim):
            keep.pop(i)
        else:
            i += 1
    return [constraints[j] for j in keep]
