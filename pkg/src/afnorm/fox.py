"""Fox derivatives in the integral group ring of a free group."""

from __future__ import annotations

from typing import Mapping

from .presentation import FreeWord


class FreeRingElem:
    """
    Finite integer combination of free-group words.  Treated as immutable;
    zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            if c:
                clean[w] = clean.get(w, 0) + c
        self._terms = {w: c for w, c in clean.items() if c}
        self._hash = None

    @classmethod
    def from_word(cls, w: FreeWord, coeff: int = 1) -> FreeRingElem:
        return cls({w: coeff})

    @classmethod
    def one(cls) -> FreeRingElem:
        return cls({FreeWord(): 1})

    @classmethod
    def zero(cls) -> FreeRingElem:
        return cls()

    @property
    def terms(self) -> dict[FreeWord, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FreeRingElem({FreeWord(): other})
        if not isinstance(other, FreeRingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> FreeRingElem:
        if isinstance(other, FreeRingElem):
            return other
        if isinstance(other, FreeWord):
            return FreeRingElem.from_word(other)
        if isinstance(other, int):
            return FreeRingElem({FreeWord(): other})
        raise TypeError(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return FreeRingElem(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeRingElem({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[FreeWord, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                out[w] = out.get(w, 0) + a * b
        return FreeRingElem(out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def format(self, names=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=FreeWord.sort_key):
            c = self._terms[w]
            word = w.format(names)
            if not w:
                body = str(abs(c))
            elif abs(c) == 1:
                body = word
            else:
                body = f"{abs(c)}*{word}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"FreeRingElem({self.format()})"


def ring_add(a: FreeRingElem, b: FreeRingElem) -> FreeRingElem:
    return a + b


def ring_mul(a: FreeRingElem, b: FreeRingElem) -> FreeRingElem:
    return a * b


def _power_derivative(gen: int, k: int) -> dict[FreeWord, int]:
    # d(x^k)/dx = 1 + x + ... + x^(k-1);  d(x^-k)/dx = -(x^-1 + ... + x^-k)
    if k > 0:
        return {FreeWord.generator(gen, a) if a else FreeWord(): 1 for a in range(k)}
    return {FreeWord.generator(gen, -a): -1 for a in range(1, -k + 1)}


def fox_derivative(f: FreeWord, j: int) -> FreeRingElem:
    """
    The j-th Fox derivative of ``f``.  Uses the product rule
    d(uv) = du + u dv over syllables, so a syllable x^k contributes
    prefix * (closed-form derivative of x^k).
    """
    out: dict[FreeWord, int] = {}
    prefix = FreeWord()
    for gen, exp in f.letters:
        if gen == j:
            for w, c in _power_derivative(gen, exp).items():
                pw = prefix * w
                out[pw] = out.get(pw, 0) + c
        prefix = FreeWord(prefix.letters + ((gen, exp),))
    return FreeRingElem(out)


def fundamental_identity_check(f: FreeWord, m: int | None = None) -> bool:
    """Whether f - 1 == sum_j (df/dx_j)(x_j - 1) holds exactly."""
    if m is None:
        m = max(f.generators_used(), default=-1) + 1
    rhs = FreeRingElem()
    for j in range(m):
        rhs = rhs + fox_derivative(f, j) * (FreeRingElem.from_word(FreeWord.generator(j)) - 1)
    return FreeRingElem.from_word(f) - 1 == rhs
