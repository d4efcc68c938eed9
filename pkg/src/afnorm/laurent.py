"""
Multivariate Laurent polynomials over the integers or a cyclotomic field.

Polynomials are maps from exponent tuples to nonzero coefficients.  The
gcd works on the polynomial ring obtained by shifting supports into the
positive orthant; monomials are units, so this loses nothing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd as igcd
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber


class IntegerRing:
    is_field = False
    conductor = None

    zero = 0
    one = 1

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError("not an integer")
            return int(value.numerator)
        return int(value)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"

    def gcd(self, a, b):
        return igcd(a, b)

    def exquo(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def normal_unit(self, a):
        return -1 if a < 0 else 1

    def format(self, a):
        return str(a)


ZZ = IntegerRing()


class DomainMismatch(TypeError):
    pass


# --- sparse polynomial kernels (dict exponent tuple -> coefficient) ---------

def _add(f, g, sign=1):
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + (c if sign == 1 else -c)
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _scale(f, c):
    return {e: v * c for e, v in f.items() if v * c}


def _lead(f):
    e = max(f)
    return e, f[e]


def _exquo(f, g, K):
    """Exact quotient f / g in K[x]; raises ArithmeticError if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    ge, gc = _lead(g)
    q = {}
    r = dict(f)
    while r:
        re, rc = _lead(r)
        d = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in d):
            raise ArithmeticError("not divisible")
        c = K.exquo(rc, gc)
        q[d] = c
        r = _add(r, _mul({d: c}, g), sign=-1)
    return q


def _shift_positive(f):
    if not f:
        return {}, ()
    n = len(next(iter(f)))
    low = tuple(min(e[i] for e in f) for i in range(n))
    return {tuple(a - b for a, b in zip(e, low)): c for e, c in f.items()}, low


# Recursive gcd.  The main variable is index 0; coefficients are
# polynomials in the remaining variables, embedded with exponent 0 in slot 0.

def _split(f):
    parts = {}
    for e, c in f.items():
        parts.setdefault(e[0], {})[(0,) + e[1:]] = c
    return parts


def _drop_first(f):
    return {e[1:]: c for e, c in f.items()}


def _add_first(f):
    return {(0,) + e: c for e, c in f.items()}


def _normalize(f, K):
    if not f:
        return f
    _, lc = _lead(f)
    u = K.normal_unit(lc)
    if K.is_field:
        return {e: c / u for e, c in f.items()}
    return f if u == 1 else {e: -c for e, c in f.items()}


def _content(f, K, n):
    """gcd of the coefficients of f viewed in R[x_0], as an n-variable poly with x_0-degree 0."""
    g = {}
    for coeff in _split(f).values():
        g = _add_first(_gcd(_drop_first(g), _drop_first(coeff), K, n - 1)) if g else coeff
        if n - 1 == 0 and K.is_field and g:
            return {(0,) * n: K.one}
    return _normalize(g, K)


def _prem(a, b):
    """Pseudo-remainder of a by b in R[x_0]."""
    db = max(e[0] for e in b)
    lcb = _split(b)[db]
    while a:
        da = max(e[0] for e in a)
        if da < db:
            break
        lca = _split(a)[da]
        shift = {(da - db,) + (0,) * (len(next(iter(b))) - 1): 1}
        a = _add(_mul(lcb, a), _mul(_mul(lca, shift), b), sign=-1)
    return a


def _gcd(f, g, K, n):
    if not f:
        return _normalize(g, K)
    if not g:
        return _normalize(f, K)
    if n == 0:
        return {(): K.gcd(f[()], g[()])}
    cf, cg = _content(f, K, n), _content(g, K, n)
    c = _add_first(_gcd(_drop_first(cf), _drop_first(cg), K, n - 1))
    a, b = _exquo(f, cf, K), _exquo(g, cg, K)
    if max(e[0] for e in a) < max(e[0] for e in b):
        a, b = b, a
    while True:
        if max(e[0] for e in b) == 0:
            # b is a nonzero constant in x_0 and primitive, hence a unit factor
            return _normalize(c, K)
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _normalize(_exquo(r, _content(r, K, n), K), K)
    h = _exquo(b, _content(b, K, n), K)
    return _normalize(_mul(c, h), K)


class LaurentPoly:
    """
    Laurent polynomial in ``nvars`` variables.  ``domain`` is ``ZZ`` or a
    :class:`CyclotomicField`.  Immutable by convention.
    """

    __slots__ = ("domain", "nvars", "terms")

    def __init__(self, domain, nvars: int, terms=None):
        self.domain = domain
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = domain(c)
            if c:
                clean[e] = clean.get(e, domain.zero) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, domain, nvars, c):
        return cls(domain, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, domain, exponents, c=1):
        return cls(domain, len(exponents), {tuple(exponents): c})

    @classmethod
    def zero(cls, domain, nvars):
        return cls(domain, nvars)

    @classmethod
    def one(cls, domain, nvars):
        return cls.constant(domain, nvars, 1)

    @classmethod
    def univariate(cls, domain, coeffs: Sequence, low: int = 0):
        return cls(domain, 1, {(low + k,): c for k, c in enumerate(coeffs)})

    def _raw(self, terms):
        p = LaurentPoly.__new__(LaurentPoly)
        p.domain = self.domain
        p.nvars = self.nvars
        p.terms = terms
        return p

    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.domain != self.domain or other.nvars != self.nvars:
                raise DomainMismatch(f"{self.domain}/{self.nvars} vs {other.domain}/{other.nvars}")
            return other
        return LaurentPoly.constant(self.domain, self.nvars, other)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction, CyclotomicNumber)):
                other = LaurentPoly.constant(self.domain, self.nvars, other)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.domain == other.domain and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        return self._raw(_add(self.terms, self._check(other).terms))

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self._raw(_add(self.terms, self._check(other).terms, sign=-1))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return self._raw(_mul(self.terms, self._check(other).terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("only monomials are invertible")
            (e, c), = self.terms.items()
            inv = self.domain.one / c if self.domain.is_field else self.domain.exquo(1, c)
            return self._raw({tuple(-x for x in e): inv}) ** (-k)
        out = LaurentPoly.one(self.domain, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def leading(self):
        """(exponent, coefficient) of the lexicographically largest term."""
        return _lead(self.terms)

    def shift(self, exponents) -> LaurentPoly:
        return self._raw({tuple(a + b for a, b in zip(e, exponents)): c for e, c in self.terms.items()})

    def scale(self, c) -> LaurentPoly:
        return self._raw(_scale(self.terms, self.domain(c)))

    def map_coefficients(self, domain, fn=None) -> LaurentPoly:
        fn = fn or domain
        return LaurentPoly(domain, self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def canonicalize(self) -> tuple[LaurentPoly, CanonicalUnit]:
        return canonicalize(self)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree_range(self, i=0):
        es = [e[i] for e in self.terms]
        return (min(es), max(es)) if es else (0, 0)

    def divides(self, other: LaurentPoly) -> bool:
        try:
            exact_divide(other, self)
        except ArithmeticError:
            return False
        return True

    def substitute(self, values: Sequence[int]) -> LaurentPoly:
        """Univariate image sending each monomial g to t**<values, g>."""
        out = {}
        for e, c in self.terms.items():
            k = (sum(a * b for a, b in zip(values, e)),)
            out[k] = out.get(k, self.domain.zero) + c
        return LaurentPoly(self.domain, 1, out)

    def var_names(self):
        return ["t"] if self.nvars == 1 else [f"t{i + 1}" for i in range(self.nvars)]

    def format(self) -> str:
        if not self.terms:
            return "0"
        names = self.var_names()
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if isinstance(c, CyclotomicNumber):
                if c.is_rational():
                    c = c.coeffs[0]
                else:
                    coeff = f"({c.format()})"
                    parts.append(("+", coeff + (f"*{mono}" if mono else "")))
                    continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly[{self.domain}]({self.format()})"


class CanonicalUnit:
    """The unit ``scalar * t**shift`` with ``unit * canonical == original``."""

    __slots__ = ("shift", "scalar")

    def __init__(self, shift, scalar):
        self.shift = tuple(shift)
        self.scalar = scalar

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        return p.shift(self.shift).scale(self.scalar)

    def __repr__(self):
        return f"CanonicalUnit(shift={self.shift}, scalar={self.scalar})"


def canonicalize(p: LaurentPoly) -> tuple[LaurentPoly, CanonicalUnit]:
    """
    Representative of p up to units: the lexicographically smallest exponent
    is moved to 0 and the lexicographically largest coefficient is made
    positive (integers) or 1 (fields).
    """
    if not p.terms:
        return p, CanonicalUnit((0,) * p.nvars, p.domain.one)
    low = min(p.terms)
    q = p.shift(tuple(-x for x in low))
    _, lc = q.leading()
    u = p.domain.normal_unit(lc)
    if p.domain.is_field:
        q = q.scale(p.domain.one / u)
    elif u != 1:
        q = -q
    return q, CanonicalUnit(low, u)


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient a / b in the Laurent ring; ArithmeticError if b does not divide a."""
    b._check(a)
    if not b.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if not a.terms:
        return a
    fa, la = _shift_positive(a.terms)
    fb, lb = _shift_positive(b.terms)
    q = _exquo(fa, fb, a.domain)
    return a._raw(q).shift(tuple(x - y for x, y in zip(la, lb)))


def gcd(polys: Iterable[LaurentPoly], domain=None, nvars=None) -> LaurentPoly:
    """Canonical gcd; gcd of an empty or all-zero family is 0."""
    polys = list(polys)
    if polys:
        domain, nvars = polys[0].domain, polys[0].nvars
        for p in polys[1:]:
            polys[0]._check(p)
    if domain is None:
        raise ValueError("gcd of an empty list needs an explicit domain")
    g = {}
    for p in polys:
        if not p.terms:
            continue
        f, _ = _shift_positive(p.terms)
        if nvars == 0:
            g = {(): domain.gcd(g.get((), domain.zero), f[()])} if g else f
        else:
            g = _gcd(g, f, domain, nvars) if g else f
        if nvars and len(g) == 1 and not any(next(iter(g))) and (domain.is_field or abs(next(iter(g.values()))) == 1):
            break
    out = LaurentPoly(domain, nvars, g)
    return canonicalize(out)[0]


def span(p: LaurentPoly, direction: Sequence[int]) -> int:
    """max |<s, g> - <s, g'>| over the support; 0 for the zero polynomial."""
    if not p.terms:
        return 0
    vals = [sum(a * b for a, b in zip(direction, e)) for e in p.terms]
    return max(vals) - min(vals)


def determinant(M: Sequence[Sequence[LaurentPoly]], domain=None, nvars=None) -> LaurentPoly:
    """Exact determinant by cofactor expansion over column subsets."""
    n = len(M)
    if n == 0:
        if domain is None:
            raise ValueError("empty determinant needs a domain")
        return LaurentPoly.one(domain, nvars)
    domain, nvars = M[0][0].domain, M[0][0].nvars
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    zero = LaurentPoly.zero(domain, nvars)
    # memo[mask] = determinant of the bottom rows restricted to the columns in mask
    memo = {0: LaurentPoly.one(domain, nvars)}
    for k in range(1, n + 1):
        row = M[n - k]
        new = {}
        for cols in combinations(range(n), k):
            mask = sum(1 << c for c in cols)
            total = zero
            for pos, c in enumerate(cols):
                entry = row[c]
                if not entry.terms:
                    continue
                rest = memo.get(mask & ~(1 << c))
                if rest is None or not rest.terms:
                    continue
                term = entry * rest
                total = total - term if pos % 2 else total + term
            new[mask] = total
        memo = new
    return memo[(1 << n) - 1]


def newton_polytope(p: LaurentPoly) -> list[tuple[Fraction, ...]]:
    """
    Vertices of the hull of the half-differences (g - g')/2 over the support,
    in lexicographic order.  The zero polynomial gives the single vertex 0.
    """
    from .lp import convex_hull_vertices

    r = p.nvars
    if not p.terms:
        return [(Fraction(0),) * r]
    base = convex_hull_vertices([tuple(Fraction(x) for x in e) for e in p.terms])
    diffs = {tuple((a - b) / 2 for a, b in zip(u, v)) for u in base for v in base}
    return sorted(convex_hull_vertices(sorted(diffs)))
