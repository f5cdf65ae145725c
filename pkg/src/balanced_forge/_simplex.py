"""Exact rational simplex and small elimination helpers.

Everything here is deterministic: Bland's anti-cycling rule picks the
lowest-index entering column and breaks ratio ties on the lowest basis
variable, so identical inputs always walk the same pivot path and land on
the same optimal basis.
"""
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LpResult:
    __slots__ = ("status", "objective", "x", "basis")

    def __init__(self, status, objective=None, x=None, basis=None):
        self.status = status
        self.objective = objective
        self.x = x
        self.basis = basis


def _pivot(rows, cost, basis, r, c):
    piv = rows[r][c]
    inv = ONE / piv
    row = [v * inv for v in rows[r]]
    rows[r] = row
    for i, other in enumerate(rows):
        if i != r and other[c]:
            f = other[c]
            rows[i] = [a - f * b for a, b in zip(other, row)]
    if cost[c]:
        f = cost[c]
        for j in range(len(cost)):
            cost[j] -= f * row[j]
    basis[r] = c


def _iterate(rows, cost, basis, allowed):
    """Bland pivots until optimal or unbounded; returns final status."""
    while True:
        enter = -1
        for j in range(allowed):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(rows, cost, basis, leave, enter)


def simplex_min(A, b, c, basis=None):
    """Minimize c.x subject to A x = b, x >= 0 (equality-form simplex).

    basis, when given, must list one column per row already forming a
    feasible basis; otherwise a phase-1 with artificial variables runs
    first. Returns LpResult(status, objective, x, basis) with status one
    of optimal, infeasible, unbounded.
    """
    m = len(A)
    ncols = len(c)
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        row.append(Fraction(b[i]))
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row)

    if basis is None:
        # phase 1: artificial identity basis
        for i in range(m):
            for k in range(m):
                rows[i].insert(ncols + k, ONE if k == i else ZERO)
        basis = [ncols + i for i in range(m)]
        cost = [ZERO] * (ncols + m) + [ZERO]
        for row in rows:
            for j in range(ncols + m + 1):
                cost[j] -= row[j]
        for i in range(m):
            cost[ncols + i] = ZERO
        status = _iterate(rows, cost, basis, ncols)
        if status != "optimal" or -cost[-1] != 0:
            return LpResult("infeasible")
        # pivot lingering artificials out; drop rows that are redundant
        keep = []
        for i in range(m):
            if basis[i] >= ncols:
                enter = -1
                for j in range(ncols):
                    if rows[i][j]:
                        enter = j
                        break
                if enter < 0:
                    continue  # all-zero constraint, drop
                _pivot(rows, cost, basis, i, enter)
            keep.append(i)
        rows = [rows[i] for i in keep]
        basis = [basis[i] for i in keep]
        rows = [row[:ncols] + row[-1:] for row in rows]
    else:
        basis = list(basis)
        for i in range(m):
            if rows[i][basis[i]] == 0:
                for r in range(i + 1, m):
                    if rows[r][basis[i]]:
                        rows[i], rows[r] = rows[r], rows[i]
                        break
            _pivot(rows, [ZERO] * (ncols + 1), basis, i, basis[i])
        for row in rows:
            if row[-1] < 0:
                return LpResult("infeasible")

    cost = [Fraction(v) for v in c] + [ZERO]
    for i, bi in enumerate(basis):
        if cost[bi]:
            f = cost[bi]
            for j in range(ncols + 1):
                cost[j] -= f * rows[i][j]
    status = _iterate(rows, cost, basis, ncols)
    if status != "optimal":
        return LpResult(status)
    x = [ZERO] * ncols
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    objective = sum((Fraction(c[j]) * x[j] for j in range(ncols)), ZERO)
    return LpResult("optimal", objective, x, list(basis))


def solve_square(M, rhs):
    """Exact solution of a square system, or None when singular."""
    n = len(M)
    rows = [[Fraction(v) for v in M[i]] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = ONE / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][-1] for i in range(n)]


def rank_of_masks(masks, n):
    """Rank over the rationals of 0/1 incidence vectors given as bitmasks."""
    rows = []
    for m in masks:
        row = [(m >> i) & 1 for i in range(n)]
        rows.append(row)
    rank = 0
    col_used = [False] * n
    for row in rows:
        row = list(row)
        piv = -1
        for j in range(n):
            if col_used[j] and row[j]:
                src = col_used[j]
                a, bq = src[j], row[j]
                row = [a * x - bq * y for x, y in zip(row, src)]
        for j in range(n):
            if row[j]:
                piv = j
                break
        if piv >= 0:
            col_used[piv] = row
            rank += 1
    return rank
