"""
Exact rational primal simplex (tableau form, Bland's rule).

Solves ``min c.x  s.t.  A x = b, x >= 0``.  Small dense problems only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


@dataclass
class LPResult:
    x: list[Fraction]
    value: Fraction
    basis: list[int]
    pivots: int


class _Tableau:
    def __init__(self, A, b, basis):
        self.rows = [[Fraction(v) for v in row] for row in A]
        self.rhs = [Fraction(v) for v in b]
        self.basis = list(basis)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self.pivots = 0
        for i, j in enumerate(self.basis):
            self.pivot(i, j, count=False)

    def pivot(self, i, j, count=True):
        row = self.rows[i]
        p = row[j]
        if p == 0:
            raise ArithmeticError("singular basis")
        if p != 1:
            self.rows[i] = row = [v / p for v in row]
            self.rhs[i] /= p
        for k, other in enumerate(self.rows):
            if k != i and other[j]:
                f = other[j]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
                self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j
        if count:
            self.pivots += 1

    def reduced_costs(self, c):
        r = [Fraction(v) for v in c]
        for i, j in enumerate(self.basis):
            cb = c[j]
            if cb:
                row = self.rows[i]
                r = [a - cb * b for a, b in zip(r, row)]
        return r

    def run(self, c, allowed=None):
        allowed = range(self.ncols) if allowed is None else allowed
        while True:
            r = self.reduced_costs(c)
            entering = next((j for j in allowed if r[j] < 0), None)  # Bland: lowest index
            if entering is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded("objective unbounded below")
            self.pivot(best[1], entering)

    def solution(self, n):
        x = [Fraction(0)] * n
        for i, j in enumerate(self.basis):
            if j < n:
                x[j] = self.rhs[i]
        return x


def solve_lp(c: Sequence, A: Sequence[Sequence], b: Sequence, basis: Sequence[int] | None = None) -> LPResult:
    """
    Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``.

    If ``basis`` is given it must index a feasible basis; otherwise a phase-one
    problem with artificial variables finds one.
    """
    m = len(A)
    n = len(c)
    if m == 0:
        if any(v < 0 for v in c):
            raise Unbounded("objective unbounded below")
        return LPResult([Fraction(0)] * n, Fraction(0), [], 0)
    if basis is not None:
        T = _Tableau(A, b, basis)
        if any(v < 0 for v in T.rhs):
            raise ValueError("supplied basis is not feasible")
        T.run(list(c))
        x = T.solution(n)
        return LPResult(x, sum(Fraction(ci) * xi for ci, xi in zip(c, x)), list(T.basis), T.pivots)

    rows, rhs = [], []
    for row, v in zip(A, b):
        if v < 0:
            rows.append([-a for a in row])
            rhs.append(-v)
        else:
            rows.append(list(row))
            rhs.append(v)
    aug = [row + [int(i == k) for k in range(m)] for i, row in enumerate(rows)]
    T = _Tableau(aug, rhs, range(n, n + m))
    T.run([0] * n + [1] * m)
    if sum(T.rhs[i] for i, j in enumerate(T.basis) if j >= n) != 0:
        raise Infeasible("no feasible point")
    # drive artificial variables out of the basis; drop redundant rows
    i = 0
    while i < len(T.rows):
        if T.basis[i] >= n:
            j = next((j for j in range(n) if T.rows[i][j] != 0), None)
            if j is None:
                del T.rows[i], T.rhs[i], T.basis[i]
                continue
            T.pivot(i, j)
        i += 1
    T.rows = [row[:n] for row in T.rows]
    T.ncols = n
    if not T.rows:
        if any(v < 0 for v in c):
            raise Unbounded("objective unbounded below")
        return LPResult([Fraction(0)] * n, Fraction(0), [], T.pivots)
    T.run(list(c))
    x = T.solution(n)
    return LPResult(x, sum(Fraction(ci) * xi for ci, xi in zip(c, x)), list(T.basis), T.pivots)


def in_convex_hull(point, others) -> bool:
    """Whether ``point`` is a convex combination of ``others`` (exact)."""
    if not others:
        return False
    dim = len(point)
    A = [[q[d] for q in others] for d in range(dim)] + [[1] * len(others)]
    b = list(point) + [1]
    try:
        solve_lp([0] * len(others), A, b)
    except Infeasible:
        return False
    return True


def convex_hull_vertices(points) -> list[tuple]:
    """Extreme points of a finite set, by one feasibility LP per point."""
    pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    if len(pts) <= 2:
        return pts
    return [p for k, p in enumerate(pts) if not in_convex_hull(p, pts[:k] + pts[k + 1:])]
