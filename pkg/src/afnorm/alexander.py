"""
Alexander-Fox matrices, elementary ideals and (twisted) Alexander-Fox
polynomials of finitely presented groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd as igcd

from .abelian import AbelianStructure, Character, abelianize, characters
from .cyclotomic import CyclotomicField
from .fox import fox_derivative
from .laurent import ZZ, LaurentPoly, canonicalize, determinant, exact_divide, gcd, span
from .presentation import Presentation

# An entry of the Alexander matrix lives in Z[H]; it is stored as a map
# (torsion coordinates, free coordinates) -> integer coefficient.
GroupRingElem = dict


@dataclass(frozen=True)
class AlexanderMatrix:
    entries: tuple[tuple[GroupRingElem, ...], ...]
    structure: AbelianStructure

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return self.structure.m

    def pr(self) -> list[list[LaurentPoly]]:
        """Entrywise image in Z[G] (torsion sent to 1)."""
        r = self.structure.free_rank
        out = []
        for row in self.entries:
            new = []
            for entry in row:
                terms = {}
                for (_, free), c in entry.items():
                    terms[free] = terms.get(free, 0) + c
                new.append(LaurentPoly(ZZ, r, terms))
            out.append(new)
        return out

    def twisted(self, sigma: Character, field: CyclotomicField | None = None) -> list[list[LaurentPoly]]:
        """Entrywise image under sigma-tilde: Z[H] -> Q(zeta_N)[G]."""
        field = field or self.structure.field()
        r = self.structure.free_rank
        out = []
        for row in self.entries:
            new = []
            for entry in row:
                terms = {}
                for (tors, free), c in entry.items():
                    v = sigma.value(tors, field) * c
                    terms[free] = terms[free] + v if free in terms else v
                new.append(LaurentPoly(field, r, terms))
            out.append(new)
        return out

    def specialized(self, sigma: Character, s, field: CyclotomicField | None = None) -> list[list[LaurentPoly]]:
        """Entrywise image under phi: Z[H] -> Q(zeta_N)[t, 1/t], g -> t**s(g)."""
        return [[e.substitute(s) for e in row] for row in self.twisted(sigma, field)]


def alexander_matrix(p: Presentation, a: AbelianStructure | None = None) -> AlexanderMatrix:
    """Abelianized Fox Jacobian, padded with zero rows up to at least m rows."""
    a = a or abelianize(p)
    m = p.num_generators
    rows = []
    for r in p.relators:
        row = []
        for j in range(m):
            entry: dict = {}
            for w, c in fox_derivative(r, j).items():
                key = a.class_of_word(w)
                entry[key] = entry.get(key, 0) + c
            row.append({k: v for k, v in entry.items() if v})
        rows.append(tuple(row))
    while len(rows) < m:
        rows.append(tuple({} for _ in range(m)))
    return AlexanderMatrix(tuple(rows), a)


def minors(M: list[list[LaurentPoly]], k: int, domain, nvars: int) -> list[LaurentPoly]:
    """Nonzero k x k minors, rows and columns in lexicographic subset order."""
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    if k <= 0:
        return [LaurentPoly.one(domain, nvars)]
    if k > nrows or k > ncols:
        return []
    live = [i for i, row in enumerate(M) if any(e.terms for e in row)]
    out = []
    for rows in combinations(live, k):
        for cols in combinations(range(ncols), k):
            d = determinant([[M[i][j] for j in cols] for i in rows])
            if d.terms:
                out.append(d)
    return out


def elementary_ideal(A: AlexanderMatrix, d: int, sigma: Character | None = None,
                     field: CyclotomicField | None = None) -> list[LaurentPoly]:
    """
    Generators of the image of E_d: pr(E_d) over the integers when
    ``sigma`` is None, otherwise sigma-tilde(E_d) over the cyclotomic field.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    r = A.structure.free_rank
    if sigma is None:
        return minors(A.pr(), A.ncols - d, ZZ, r)
    field = field or A.structure.field()
    return minors(A.twisted(sigma, field), A.ncols - d, field, r)


def af_polynomial(p: Presentation, sigma: Character | None = None, a: AbelianStructure | None = None,
                  over_field: bool = False, A: AlexanderMatrix | None = None) -> LaurentPoly:
    """
    Canonical (twisted) Alexander-Fox polynomial.

    The trivial character (or None) gives Delta over the integers; pass
    ``over_field=True`` to compute it over the cyclotomic field instead.
    """
    a = a or abelianize(p)
    A = A or alexander_matrix(p, a)
    if sigma is None:
        sigma = characters(a)[0]
    if sigma.is_trivial and not over_field:
        return gcd(elementary_ideal(A, 1), domain=ZZ, nvars=a.free_rank)
    field = a.field()
    return gcd(elementary_ideal(A, 1, sigma, field), domain=field, nvars=a.free_rank)


def specialize(p: Presentation, sigma: Character | None, s, a: AbelianStructure | None = None,
               A: AlexanderMatrix | None = None) -> LaurentPoly:
    """
    Delta_1 of the one-variable matrix phi(A): the canonical gcd of its
    (m-1)-minors over the cyclotomic field.
    """
    a = a or abelianize(p)
    A = A or alexander_matrix(p, a)
    sigma = sigma or characters(a)[0]
    s = tuple(s)
    if len(s) != a.free_rank:
        raise ValueError(f"class has {len(s)} coordinates, expected {a.free_rank}")
    field = a.field()
    return gcd(minors(A.specialized(sigma, s, field), A.ncols - 1, field, 1), domain=field, nvars=1)


@dataclass
class SpecializationCheck:
    specialized: LaurentPoly
    divisor: LaurentPoly
    delta: int
    af_norm: int
    applicable: bool
    regular: bool
    primitive: bool
    divisible: bool
    span_ok: bool

    @property
    def verdict(self) -> bool:
        """True unless a regular primitive class with nonzero Delta^sigma fails a check."""
        if not (self.applicable and self.regular and self.primitive):
            return True
        return self.divisible and self.span_ok and bool(self.specialized)


def _values_distinct(poly: LaurentPoly, s) -> bool:
    vals = [sum(x * y for x, y in zip(s, e)) for e in poly.terms]
    return len(set(vals)) == len(vals)


def specialization_check(p: Presentation, sigma: Character | None, s, a: AbelianStructure | None = None,
                         A: AlexanderMatrix | None = None) -> SpecializationCheck:
    """
    Compare Delta_1(phi(A)) with (t-1)**delta * s-tilde(Delta^sigma):
    divisibility and span >= delta + ||s||^sigma.
    """
    a = a or abelianize(p)
    A = A or alexander_matrix(p, a)
    sigma = sigma or characters(a)[0]
    s = tuple(s)
    field = a.field()
    one_var = specialize(p, sigma, s, a, A)
    gens = elementary_ideal(A, 1, sigma, field)
    delta_sigma = gcd(gens, domain=field, nvars=a.free_rank)
    delta = 1 if (sigma.is_trivial and a.free_rank >= 2) else 0
    t_minus_1 = LaurentPoly(field, 1, {(1,): 1, (0,): -1})
    divisor = canonicalize(delta_sigma.substitute(s) * t_minus_1 ** delta)[0]
    norm = span(delta_sigma, s)
    applicable = bool(delta_sigma)
    mu = gens[0] if gens else None
    regular = applicable and _values_distinct(delta_sigma, s) and _values_distinct(mu, s)
    primitive = any(s) and igcd(*s) == 1
    divisible = False
    if one_var and divisor:
        try:
            exact_divide(one_var, divisor)
            divisible = True
        except ArithmeticError:
            divisible = False
    span_ok = bool(one_var) and span(one_var, (1,)) >= delta + norm
    return SpecializationCheck(one_var, divisor, delta, norm, applicable, regular, bool(primitive), divisible, span_ok)
