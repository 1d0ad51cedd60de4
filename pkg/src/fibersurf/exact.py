"""Exact arithmetic: extended rationals, SL(2,Z) matrices and generator words.

Matrix conventions::

    A = ( 1 -1 )    B = ( 1 0 )    P = BAB = ( 0 -1 )    Q = B^-1 A^-1 = (  1 1 )
        ( 0  1 )        ( 1 1 )              ( 1  0 )                    ( -1 0 )

A matrix ``(x y; t u)`` is stored row by row as ``SL2Matrix(x, y, t, u)``.
Framing words use the letters alpha, beta, phi, psi with
``alpha = psi phi`` and ``beta = phi psi``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

__all__ = [
    "ExtendedRational", "INFINITY", "SL2Matrix", "IDENTITY", "MAT_A", "MAT_B",
    "MAT_P", "MAT_Q", "GeneratorWord", "MATRIX_LETTERS", "FRAMING_LETTERS",
    "mat_mul", "word_to_matrix", "exponent_sum", "letter_exponent_sums", "sign",
]


def sign(n: int) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True)
class ExtendedRational:
    """A reduced fraction in Q u {oo}; infinity is the single value 1/0."""

    numerator: int
    denominator: int

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if p == 0 and q == 0:
            raise ValueError("0/0 is not an extended rational")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        else:
            g = gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @classmethod
    def from_vector(cls, p: int, q: int) -> "ExtendedRational":
        """Projective point ``(p : q)``; any nonzero integer pair is accepted."""
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*", text)
        if not m:
            raise ValueError(f"not a rational slope: {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls(p, q)

    @classmethod
    def coerce(cls, value) -> "ExtendedRational":
        if isinstance(value, ExtendedRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, tuple):
            return cls(*value)
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.numerator, self.denominator)

    def __abs__(self) -> "ExtendedRational":
        return ExtendedRational(abs(self.numerator), self.denominator)

    def __eq__(self, other):
        if isinstance(other, ExtendedRational):
            return (self.numerator, self.denominator) == (other.numerator, other.denominator)
        if isinstance(other, (int, Fraction)):
            return not self.is_infinite and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self.numerator}, {self.denominator})"


INFINITY = ExtendedRational(1, 0)


@dataclass(frozen=True)
class SL2Matrix:
    """Integer matrix ``(x y; t u)`` with determinant 1."""

    x: int
    y: int
    t: int
    u: int

    def __post_init__(self):
        if self.x * self.u - self.y * self.t != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.x, self.y), (self.t, self.u))

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.x * other.x + self.y * other.t,
            self.x * other.y + self.y * other.u,
            self.t * other.x + self.u * other.t,
            self.t * other.y + self.u * other.u,
        )

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.x, -self.y, -self.t, -self.u)

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.u, -self.y, -self.t, self.x)

    def __pow__(self, n: int) -> "SL2Matrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IDENTITY
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    @property
    def trace(self) -> int:
        return self.x + self.u

    def apply(self, p: int, q: int) -> tuple[int, int]:
        return (self.x * p + self.y * q, self.t * p + self.u * q)

    def first_column(self) -> tuple[int, int]:
        return (self.x, self.t)

    def second_column(self) -> tuple[int, int]:
        return (self.y, self.u)

    def equals_up_to_sign(self, other: "SL2Matrix") -> bool:
        return self == other or self == -other

    def __str__(self) -> str:
        return f"({self.x} {self.y}; {self.t} {self.u})"


IDENTITY = SL2Matrix(1, 0, 0, 1)
MAT_A = SL2Matrix(1, -1, 0, 1)
MAT_B = SL2Matrix(1, 0, 1, 1)
MAT_P = SL2Matrix(0, -1, 1, 0)
MAT_Q = SL2Matrix(1, 1, -1, 0)


def mat_mul(a: SL2Matrix, b: SL2Matrix) -> SL2Matrix:
    return a @ b


def a_power(n: int) -> SL2Matrix:
    return SL2Matrix(1, -n, 0, 1)


def b_power(n: int) -> SL2Matrix:
    return SL2Matrix(1, 0, n, 1)


MATRIX_LETTERS = ("A", "B", "P", "Q")
FRAMING_LETTERS = ("alpha", "beta", "phi", "psi")

_LETTER_ALIASES = {
    "A": "A", "B": "B", "P": "P", "Q": "Q",
    "alpha": "alpha", "beta": "beta", "phi": "phi", "psi": "psi",
    "a": "alpha", "b": "beta", "α": "alpha", "β": "beta", "φ": "phi", "ψ": "psi",
}
_MATRIX_OF_LETTER = {"A": MAT_A, "B": MAT_B, "P": MAT_P, "Q": MAT_Q}
# alpha = psi phi, beta = phi psi: each contributes one phi and one psi.
_FRAMING_SUMS = {"alpha": (1, 1), "beta": (1, 1), "phi": (1, 0), "psi": (0, 1)}
_FRAMING_OF_MATRIX = {"A": "alpha", "B": "beta", "P": "phi", "Q": "psi"}

_TOKEN = re.compile(r"(alpha|beta|phi|psi|[ABPQabαβφψ])(?:\^?\{?([+-]?\d+)\}?)?")


class GeneratorWord:
    """Word in matrix letters {A,B,P,Q} or in framing letters {alpha,beta,phi,psi}.

    Adjacent equal letters are merged and zero exponents dropped on construction.
    Mixing the two alphabets in one word is rejected.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[str, int]] = ()):
        merged: list[list] = []
        for letter, exp in terms:
            letter = _LETTER_ALIASES.get(letter)
            if letter is None:
                raise ValueError(f"unknown generator letter in {terms!r}")
            exp = int(exp)
            if merged and merged[-1][0] == letter:
                merged[-1][1] += exp
                if merged[-1][1] == 0:
                    merged.pop()
            elif exp != 0:
                merged.append([letter, exp])
        kinds = {letter in MATRIX_LETTERS for letter, _ in merged}
        if len(kinds) > 1:
            raise ValueError("matrix letters and framing letters cannot be mixed in one word")
        self._terms = tuple((letter, exp) for letter, exp in merged)

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """Parse strings such as ``"A^-1 B^-1"``, ``"B^3A^4"`` or ``"alpha^-1 beta^-1"``."""
        compact = re.sub(r"[\s*·]", "", text)
        terms = []
        pos = 0
        while pos < len(compact):
            m = _TOKEN.match(compact, pos)
            if not m:
                raise ValueError(f"cannot parse word at {compact[pos:]!r}")
            terms.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
            pos = m.end()
        return cls(terms)

    @classmethod
    def alternating(cls, exponents: Iterable[int], first: str) -> "GeneratorWord":
        """``first^e1 other^e2 first^e3 ...`` with zero exponents kept as identity."""
        other = {"A": "B", "B": "A", "alpha": "beta", "beta": "alpha"}[first]
        letters = (first, other)
        terms = [(letters[i % 2], e) for i, e in enumerate(exponents)]
        return cls(terms)

    @property
    def terms(self) -> tuple[tuple[str, int], ...]:
        return self._terms

    def is_matrix_word(self) -> bool:
        return all(letter in MATRIX_LETTERS for letter, _ in self._terms)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self._terms + other._terms)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord((letter, -exp) for letter, exp in reversed(self._terms))

    def to_framing(self) -> "GeneratorWord":
        """Replace A, B, P, Q by their standard framings alpha, beta, phi, psi."""
        return GeneratorWord((_FRAMING_OF_MATRIX.get(letter, letter), exp) for letter, exp in self._terms)

    def __eq__(self, other):
        return isinstance(other, GeneratorWord) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "1"
        return " ".join(f"{letter}^{exp}" if exp != 1 else letter for letter, exp in self._terms)

    def __repr__(self) -> str:
        return f"GeneratorWord.parse({str(self)!r})"


def word_to_matrix(word: GeneratorWord) -> SL2Matrix:
    if not word.is_matrix_word():
        raise ValueError("word_to_matrix needs a word in A, B, P, Q")
    result = IDENTITY
    for letter, exp in word:
        if letter == "A":
            factor = a_power(exp)
        elif letter == "B":
            factor = b_power(exp)
        else:
            factor = _MATRIX_OF_LETTER[letter] ** exp
        result = result @ factor
    return result


def exponent_sum(word: GeneratorWord) -> int:
    return sum(exp for _, exp in word)


def letter_exponent_sums(word: GeneratorWord) -> tuple[int, int]:
    """Return ``(E_phi, E_psi)`` after rewriting alpha, beta in phi and psi."""
    if word.is_matrix_word() and len(word):
        raise ValueError("letter_exponent_sums needs a framing word")
    e_phi = e_psi = 0
    for letter, exp in word:
        d_phi, d_psi = _FRAMING_SUMS[letter]
        e_phi += d_phi * exp
        e_psi += d_psi * exp
    return e_phi, e_psi
