"""
Abelianization H = H_1 of a presented group via Smith normal form, with a
recorded splitting H = Tors H x G and the character group of Tors H.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .cyclotomic import CyclotomicField, CyclotomicNumber, lcm
from .presentation import FreeWord, Presentation


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A or not B:
        rows = len(A)
        cols = len(B[0]) if B else 0
        return [[0] * cols for _ in range(rows)]
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def smith_normal_form(M):
    """
    Smith normal form over the integers.

    Returns ``(U, D, V)`` with ``U @ M @ V == D``, U and V unimodular and D
    diagonal with nonnegative entries d_1 | d_2 | ...  Pivots are chosen as
    the entry of smallest absolute value, ties broken row-major.
    """
    D = [list(map(int, row)) for row in M]
    n = len(D)
    m = len(D[0]) if n else 0
    U = _identity(n)
    V = _identity(m)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row[dst] += k * row[src]
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return U, D, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, n):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, m):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(bad, t, 1)
                continue
            if p < 0:
                D[t] = [-a for a in D[t]]
                U[t] = [-a for a in U[t]]
            break
    return U, D, V


def determinant(M) -> int:
    """Exact integer determinant (Bareiss)."""
    A = [list(row) for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class Character:
    """
    A character of Tors H.  The i-th torsion generator goes to
    zeta_{d_i} ** exponents[i].
    """

    root_orders: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.root_orders) != len(self.exponents):
            raise ValueError("character exponent count does not match torsion rank")
        for d, a in zip(self.root_orders, self.exponents):
            if not 0 <= a < d:
                raise ValueError(f"character exponent {a} out of range for Z/{d}")

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    @property
    def conductor(self) -> int:
        return lcm(*self.root_orders)

    def zeta_exponent(self, torsion) -> int:
        """Exponent e with sigma(torsion element) = zeta_N ** e, N the conductor."""
        N = self.conductor
        return sum(a * (N // d) * c for d, a, c in zip(self.root_orders, self.exponents, torsion)) % N

    def value(self, torsion, field: CyclotomicField | None = None) -> CyclotomicNumber:
        field = field or CyclotomicField(self.conductor)
        return field.zeta_power(self.zeta_exponent(torsion) * (field.conductor // self.conductor))

    def label(self) -> str:
        return ",".join(map(str, self.exponents)) if self.exponents else "trivial"


@dataclass(frozen=True)
class AbelianStructure:
    """
    H = Z/d_1 x ... x Z/d_k x Z^r.

    ``basis`` is the column-change matrix V from the Smith form of the relation
    matrix: a generator exponent vector ``a`` has coordinates ``a @ V``.
    ``torsion_columns`` / ``free_columns`` pick out the coordinates kept;
    ``twist`` (r x k) shifts torsion coordinates by free coordinates, which
    realizes a different splitting H = Tors H x G.
    """

    m: int
    invariant_factors: tuple[int, ...]
    free_rank: int
    basis: tuple[tuple[int, ...], ...]
    torsion_columns: tuple[int, ...]
    free_columns: tuple[int, ...]
    twist: tuple[tuple[int, ...], ...] = ()

    @property
    def conductor(self) -> int:
        return lcm(*self.invariant_factors)

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    def field(self) -> CyclotomicField:
        return CyclotomicField(self.conductor)

    def coordinates(self, exponent_sums) -> tuple[tuple[int, ...], tuple[int, ...]]:
        full = [sum(a * self.basis[i][j] for i, a in enumerate(exponent_sums)) for j in range(self.m)]
        free = tuple(full[j] for j in self.free_columns)
        torsion = [full[j] for j in self.torsion_columns]
        if self.twist:
            for fi, f in enumerate(free):
                for ti in range(len(torsion)):
                    torsion[ti] += f * self.twist[fi][ti]
        torsion = tuple(c % d for c, d in zip(torsion, self.invariant_factors))
        return torsion, free

    def class_of_word(self, w: FreeWord):
        return self.coordinates(w.exponent_sums(self.m))

    def pr(self, w: FreeWord) -> tuple[int, ...]:
        return self.class_of_word(w)[1]

    def with_splitting(self, twist) -> AbelianStructure:
        """The same group with torsion coordinates shifted by ``free @ twist``."""
        twist = tuple(tuple(int(x) for x in row) for row in twist)
        if len(twist) != self.free_rank or any(len(r) != len(self.invariant_factors) for r in twist):
            raise ValueError("twist must be a free_rank x torsion_rank integer matrix")
        return AbelianStructure(
            self.m, self.invariant_factors, self.free_rank, self.basis,
            self.torsion_columns, self.free_columns, twist,
        )

    def characters(self) -> list[Character]:
        return characters(self)

    def describe(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
            "basis": [list(r) for r in self.basis],
            "torsion_columns": list(self.torsion_columns),
            "free_columns": list(self.free_columns),
            "twist": [list(r) for r in self.twist],
        }


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [r.exponent_sums(p.num_generators) for r in p.relators]


def abelianize(p: Presentation) -> AbelianStructure:
    m = p.num_generators
    M = relation_matrix(p)
    if M:
        _, D, V = smith_normal_form(M)
        diag = [D[i][i] if i < len(D) else 0 for i in range(m)]
    else:
        V = _identity(m)
        diag = [0] * m
    torsion = tuple(j for j in range(m) if diag[j] >= 2)
    free = tuple(j for j in range(m) if diag[j] == 0)
    return AbelianStructure(
        m=m,
        invariant_factors=tuple(diag[j] for j in torsion),
        free_rank=len(free),
        basis=tuple(tuple(row) for row in V),
        torsion_columns=torsion,
        free_columns=free,
    )


def class_of_word(a: AbelianStructure, w: FreeWord):
    return a.class_of_word(w)


def characters(a: AbelianStructure) -> list[Character]:
    """All characters of Tors H in lexicographic order of exponent tuples; the first is trivial."""
    orders = a.invariant_factors
    return [Character(orders, exps) for exps in product(*(range(d) for d in orders))]


def parse_character(a: AbelianStructure, text: str) -> Character:
    text = text.strip()
    if text in ("", "trivial"):
        exps = (0,) * len(a.invariant_factors)
    else:
        exps = tuple(int(x) for x in text.split(","))
    return Character(a.invariant_factors, exps)
