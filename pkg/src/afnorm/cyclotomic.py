"""
Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are rational coefficient vectors of length phi(N), read as
polynomials in ``z`` reduced modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

# Univariate rational polynomials are coefficient lists, lowest degree first,
# with no trailing zeros.


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(x - y for x, y in zip(a, b))


def _pdivmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = _trim(r)
    return _trim(q), r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            p, r = _pdivmod(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(int(c) for c in p)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _xgcd(a, b):
    """Return (g, s) with s*a = g (mod b), g the monic gcd."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


class CyclotomicField:
    """The field Q(zeta_N); N = 1 gives Q."""

    is_field = True

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("cyclotomic", self.conductor))

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def _reduce(self, p):
        if len(p) <= self.degree:
            return tuple(Fraction(c) for c in p) + (Fraction(0),) * (self.degree - len(p))
        _, r = _pdivmod(p, self.modulus)
        return tuple(r) + (Fraction(0),) * (self.degree - len(r))

    def element(self, coeffs) -> CyclotomicNumber:
        return CyclotomicNumber(self, self._reduce(_trim(Fraction(c) for c in coeffs)))

    def __call__(self, value) -> CyclotomicNumber:
        if isinstance(value, CyclotomicNumber):
            if value.field != self:
                raise ValueError("conductor mismatch")
            return value
        return self.element([value])

    @property
    def zero(self):
        return self.element([])

    @property
    def one(self):
        return self.element([1])

    def zeta_power(self, k: int) -> CyclotomicNumber:
        """zeta_N ** k."""
        k %= self.conductor
        return self.element([0] * k + [1])

    def gen(self) -> CyclotomicNumber:
        return self.zeta_power(1)

    # coefficient-domain protocol used by laurent polynomials
    def gcd(self, a, b):
        return self.one if (a or b) else self.zero

    def exquo(self, a, b):
        return a / b

    def normal_unit(self, a):
        """Unit u with a/u normalized (monic)."""
        return a

    def format(self, a) -> str:
        return a.format()


class CyclotomicNumber:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise ValueError("conductor mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.element(_pmul(_trim(self.coeffs), _trim(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        a = _trim(self.coeffs)
        if not a:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        g, s = _xgcd(a, list(Fraction(c) for c in self.field.modulus))
        assert g == [1]
        return self.field.element(s)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self.coeffs == lifted.coeffs

    def __hash__(self):
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def format(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"CyclotomicNumber(N={self.field.conductor}: {self.format()})"


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
