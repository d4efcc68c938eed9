"""
Finite group presentations and free-group words.

Concrete syntax::

    < x, y | x^2 y^3 >
    < x, y | x y x^-1 y^-1, y^2 >
    < a, b | a b = b a >

A relator written ``u = v`` is stored as ``u v^-1``.  Words are kept in
reduced syllable form: adjacent syllables use distinct generators and no
exponent is zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class PresentationError(ValueError):
    """Raised for malformed presentation text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            total = stack[-1][1] + exp
            stack.pop()
            if total:
                stack.append((gen, total))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True, order=False)
class FreeWord:
    """
    An element of the free group, as a tuple of (generator index, exponent)
    syllables.  Construction always reduces, so equal group elements compare
    equal.
    """

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(tuple(map(tuple, self.letters))))

    @classmethod
    def generator(cls, i: int, exp: int = 1) -> FreeWord:
        return cls(((i, exp),))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def __pow__(self, k: int) -> FreeWord:
        if k < 0:
            return self.inverse() ** (-k)
        return FreeWord(self.letters * k)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def sort_key(self):
        return (len(self), self.letters)

    def exponent_sums(self, m: int) -> list[int]:
        sums = [0] * m
        for g, e in self.letters:
            sums[g] += e
        return sums

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.letters}

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "1"
        out = []
        for g, e in self.letters:
            name = names[g] if names is not None else f"x{g + 1}"
            out.append(name if e == 1 else f"{name}^{e}")
        return " ".join(out)

    def __repr__(self):
        return f"FreeWord({self.format()})"


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


@dataclass(frozen=True)
class Generator:
    index: int
    name: str


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[FreeWord, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise PresentationError(f"generator {g.name!r} has index {g.index}, expected {i}")
        m = len(self.generators)
        for r in self.relators:
            if any(not 0 <= g < m for g in r.generators_used()):
                raise PresentationError("relator uses an undefined generator index")

    @classmethod
    def from_names(cls, names: Sequence[str], relators: Iterable[FreeWord] = ()) -> Presentation:
        return cls(tuple(Generator(i, n) for i, n in enumerate(names)), tuple(relators))

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def num_relators(self) -> int:
        return len(self.relators)

    def word(self, text: str) -> FreeWord:
        """Parse a single word over this presentation's generators."""
        parser = _Parser(text)
        w = parser.word({n: i for i, n in enumerate(self.names)})
        parser.expect_end()
        return w

    def format(self) -> str:
        rels = ", ".join(r.format(self.names) for r in self.relators)
        gens = ", ".join(self.names)
        return f"< {gens} | {rels} >" if rels else f"< {gens} | >"

    def __str__(self):
        return self.format()


def generator_occurrences(p: Presentation, i: int) -> int:
    """Total number of appearances of generator ``i`` in the relators; x^k counts |k|."""
    if not 0 <= i < p.num_generators:
        raise IndexError(i)
    return sum(abs(e) for r in p.relators for g, e in r.letters if g == i)


# --- parsing -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<int>-?[0-9]+)
  | (?P<punct>[<>|,^*=])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PresentationError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = pos + chunk.rfind("\n") + 1
        else:
            tokens.append(_Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return PresentationError(message, tok.line, tok.column)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "punct" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def expect_end(self):
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    def presentation(self) -> Presentation:
        self.expect("<")
        names = []
        while True:
            tok = self.tok
            name = self.ident()
            if name in names:
                raise self.error(f"duplicate generator {name!r}", tok)
            names.append(name)
            if not self.accept(","):
                break
        self.expect("|")
        index = {n: i for i, n in enumerate(names)}
        relators = []
        if not (self.tok.kind == "punct" and self.tok.text == ">"):
            relators.append(self.relator(index))
            while self.accept(","):
                relators.append(self.relator(index))
        self.expect(">")
        self.expect_end()
        return Presentation.from_names(names, relators)

    def ident(self) -> str:
        tok = self.tok
        if tok.kind != "ident":
            raise self.error(f"expected a generator name, found {tok.text or 'end of input'!r}")
        self.pos += 1
        return tok.text

    def relator(self, index) -> FreeWord:
        lhs = self.word(index)
        if self.accept("="):
            rhs = self.word(index)
            return lhs * rhs.inverse()
        return lhs

    def word(self, index) -> FreeWord:
        if self.tok.kind == "int":
            tok = self.tok
            if tok.text != "1":
                raise self.error(f"unexpected integer {tok.text!r}; only '1' denotes a word")
            self.pos += 1
            return FreeWord()
        letters = [self.syllable(index)]
        while True:
            if self.accept("*"):
                letters.append(self.syllable(index))
            elif self.tok.kind == "ident":
                letters.append(self.syllable(index))
            else:
                break
        return FreeWord(tuple(letters))

    def syllable(self, index) -> tuple[int, int]:
        tok = self.tok
        name = self.ident()
        if name not in index:
            raise self.error(f"unknown generator {name!r}", tok)
        exp = 1
        if self.accept("^"):
            etok = self.tok
            if etok.kind != "int":
                raise self.error("expected an integer exponent")
            exp = int(etok.text)
            if exp == 0:
                raise self.error("zero exponent", etok)
            self.pos += 1
        return (index[name], exp)


def parse_presentation(text: str) -> Presentation:
    """
    Parse presentation text::

        >>> p = parse_presentation("< x, y | x^2 y^3 >")
        >>> p.names, p.relators[0].format(p.names)
        (['x', 'y'], 'x^2 y^3')
    """
    return _Parser(text).presentation()
