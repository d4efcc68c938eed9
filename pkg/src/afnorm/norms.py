"""
Norms on integral classes of a presented group, and the comparison

    sum_i (#(x_i)/2 - 1) |s(x_i)|  >=  max_sigma (||s||^sigma - [sigma = 1] |s|_0).

The right side runs over all characters sigma of the torsion subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .abelian import AbelianStructure, Character, abelianize, characters
from .alexander import AlexanderMatrix, af_polynomial, alexander_matrix
from .laurent import LaurentPoly, newton_polytope, span
from .presentation import Presentation, generator_occurrences


class GeneratorUnderused(ValueError):
    def __init__(self, index, name=None, count=None):
        self.index = index
        label = name if name is not None else f"#{index}"
        super().__init__(f"generator {label} appears {count} time(s) in the relators; need at least 2")


@dataclass(frozen=True)
class CohomologyClass:
    """Integral class on G = H/Tors H, given by its values on the chosen basis of G."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def generator_values(self, a: AbelianStructure) -> list[int]:
        """s(x_i) for each generator, via its free coordinates."""
        out = []
        for i in range(a.m):
            e = [0] * a.m
            e[i] = 1
            _, free = a.coordinates(e)
            out.append(sum(v * f for v, f in zip(self.values, free)))
        return out

    def __mul__(self, k: int) -> CohomologyClass:
        return CohomologyClass(tuple(k * v for v in self.values))

    __rmul__ = __mul__

    def __add__(self, other: CohomologyClass) -> CohomologyClass:
        return CohomologyClass(tuple(a + b for a, b in zip(self.values, other.values)))


def _values(s) -> tuple[int, ...]:
    return s.values if isinstance(s, CohomologyClass) else tuple(s)


def af_norm(delta: LaurentPoly, s) -> int:
    """||s||^sigma = max |s(g) - s(g')| over the support of Delta^sigma."""
    return span(delta, _values(s))


def af_norm_from_polytope(vertices, s) -> Fraction:
    """2 max |s(x)| over the vertices of the AF-polytope."""
    vals = _values(s)
    return 2 * max(abs(sum(Fraction(a) * b for a, b in zip(vals, v))) for v in vertices)


def trivial_norm(b1: int, s) -> int:
    vals = _values(s)
    if b1 != 1:
        return 0
    return abs(vals[0])


def presentation_complex_norm(p: Presentation, s, a: AbelianStructure | None = None) -> Fraction:
    """sum_i (#(x_i)/2 - 1) |s(x_i)|; every generator must occur at least twice."""
    a = a or abelianize(p)
    counts = [generator_occurrences(p, i) for i in range(p.num_generators)]
    for i, n in enumerate(counts):
        if n < 2:
            raise GeneratorUnderused(i, p.names[i], n)
    cls = s if isinstance(s, CohomologyClass) else CohomologyClass(tuple(s))
    return sum(
        (Fraction(n, 2) - 1) * abs(v) for n, v in zip(counts, cls.generator_values(a))
    ) or Fraction(0)


class GroupAnalysis:
    """Cached abelianization, Alexander matrix and Delta^sigma for every character."""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.structure = abelianize(p)
        self.matrix: AlexanderMatrix = alexander_matrix(p, self.structure)
        self.characters: list[Character] = characters(self.structure)

    @property
    def rank(self) -> int:
        return self.structure.free_rank

    @cached_property
    def polynomials(self) -> dict[tuple[int, ...], LaurentPoly]:
        out = {}
        for sigma in self.characters:
            out[sigma.exponents] = af_polynomial(
                self.presentation, sigma, self.structure, A=self.matrix
            )
        return out

    def polynomial(self, sigma: Character) -> LaurentPoly:
        return self.polynomials[sigma.exponents]

    def polytope(self, sigma: Character):
        return newton_polytope(self.polynomial(sigma))


@dataclass
class NormReport:
    class_values: tuple[int, ...]
    generator_values: list[int]
    lhs: Fraction
    af_norms: dict[str, int]
    trivial_norm: int
    rhs_terms: dict[str, int]
    rhs: int
    holds: bool
    equality: bool
    characters: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "class": list(self.class_values),
            "generator_values": self.generator_values,
            "lhs": _num(self.lhs),
            "af_norms": self.af_norms,
            "trivial_norm": self.trivial_norm,
            "rhs_terms": self.rhs_terms,
            "rhs": self.rhs,
            "holds": self.holds,
            "equality": self.equality,
        }


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def verify_inequality(p: Presentation, s, analysis: GroupAnalysis | None = None) -> NormReport:
    """
    Evaluate both sides of the comparison inequality for the class ``s``.
    ``equality`` certifies that the presentation attains the bound at ``s``.
    """
    analysis = analysis or GroupAnalysis(p)
    a = analysis.structure
    vals = _values(s)
    if len(vals) != a.free_rank:
        raise ValueError(f"class has {len(vals)} coordinates, expected {a.free_rank}")
    cls = CohomologyClass(vals)
    lhs = presentation_complex_norm(p, cls, a)
    zero = trivial_norm(a.free_rank, cls)
    af, terms = {}, {}
    for sigma in analysis.characters:
        label = sigma.label()
        n = af_norm(analysis.polynomial(sigma), cls)
        af[label] = n
        terms[label] = n - (zero if sigma.is_trivial else 0)
    rhs = max(terms.values())
    return NormReport(
        class_values=vals,
        generator_values=cls.generator_values(a),
        lhs=lhs,
        af_norms=af,
        trivial_norm=zero,
        rhs_terms=terms,
        rhs=rhs,
        holds=lhs >= rhs,
        equality=lhs == rhs,
        characters=[c.label() for c in analysis.characters],
    )


def integral_classes(rank: int, bound: int):
    """All integral classes with coordinates in [-bound, bound], lexicographic order."""
    from itertools import product

    for vals in product(range(-bound, bound + 1), repeat=rank):
        yield vals


def scan(p: Presentation, bound: int, analysis: GroupAnalysis | None = None) -> list[NormReport]:
    analysis = analysis or GroupAnalysis(p)
    return [verify_inequality(p, s, analysis) for s in integral_classes(analysis.rank, bound)]

