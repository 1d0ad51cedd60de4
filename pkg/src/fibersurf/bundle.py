"""Monodromies, special forms and the surface-listing algorithms for punctured torus bundles."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from fibersurf.contfrac import CF, coefficient_sum, enumerate_mcfe, eval_cf
from fibersurf.exact import (
    MAT_P,
    ExtendedRational,
    GeneratorWord,
    SL2Matrix,
    a_power,
    exponent_sum,
    letter_exponent_sums,
    word_to_matrix,
)
from fibersurf.surfaces import SurfaceDescriptor, classify


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the inputs were valid but the results disagree."""


class MonodromyKind(Enum):
    LEFT_TREFOIL = "left-trefoil"
    RIGHT_TREFOIL = "right-trefoil"
    FIGURE_EIGHT = "figure-eight"
    CUSTOM = "custom"


_BUILTIN_WORDS = {
    MonodromyKind.LEFT_TREFOIL: ("A^-1 B^-1", "alpha^-1 beta^-1"),
    MonodromyKind.RIGHT_TREFOIL: ("B A", "beta alpha"),
    MonodromyKind.FIGURE_EIGHT: ("A B^-1", "alpha beta^-1"),
}


@dataclass(frozen=True)
class Monodromy:
    kind: MonodromyKind
    matrix: SL2Matrix
    word: GeneratorWord | None = None
    framing: GeneratorWord | None = None

    def __post_init__(self):
        if self.matrix.trace == 2:
            raise ValueError("monodromy of trace 2 is not supported")
        if self.word is not None and word_to_matrix(self.word) != self.matrix:
            raise ValueError("monodromy word does not multiply out to its matrix")

    @classmethod
    def builtin(cls, kind: MonodromyKind | str) -> "Monodromy":
        kind = MonodromyKind(kind)
        if kind not in _BUILTIN_WORDS:
            raise ValueError(f"{kind.value} is not a built-in monodromy")
        word_text, framing_text = _BUILTIN_WORDS[kind]
        word = GeneratorWord.parse(word_text)
        return cls(kind, word_to_matrix(word), word, GeneratorWord.parse(framing_text))

    @classmethod
    def left_trefoil(cls) -> "Monodromy":
        return cls.builtin(MonodromyKind.LEFT_TREFOIL)

    @classmethod
    def right_trefoil(cls) -> "Monodromy":
        return cls.builtin(MonodromyKind.RIGHT_TREFOIL)

    @classmethod
    def figure_eight(cls) -> "Monodromy":
        return cls.builtin(MonodromyKind.FIGURE_EIGHT)

    @classmethod
    def custom(cls, matrix: SL2Matrix | None = None, word: GeneratorWord | None = None,
               framing: GeneratorWord | None = None) -> "Monodromy":
        if matrix is None:
            if word is None:
                raise ValueError("a custom monodromy needs a matrix or a word")
            matrix = word_to_matrix(word)
        if framing is None and word is not None:
            framing = word.to_framing()
        return cls(MonodromyKind.CUSTOM, matrix, word, framing)

    @property
    def is_builtin(self) -> bool:
        return self.kind is not MonodromyKind.CUSTOM

    @property
    def exponent_sum(self) -> int:
        if self.word is None:
            raise ValueError("exponent sum needs the monodromy as a word")
        return exponent_sum(self.word)

    @property
    def name(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class SpecialForm:
    """``P^J C^{a1} ... B^{a_{k-1}} A^{a_k}`` with ``a_i = n(k-i+1)``.

    ``coefficients`` holds ``a_1..a_k``, which is ``n(k), ..., n(1)``; the word
    starts with ``B`` when ``k`` is even and with ``A`` when ``k`` is odd.
    """

    J: int
    coefficients: CF
    N: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if self.J not in (-1, 0, 1, 2):
            raise ValueError(f"J must be one of -1, 0, 1, 2, got {self.J}")
        if not self.coefficients:
            raise ValueError("a special form has at least one coefficient")
        if (self.J % 2) != (len(self.coefficients) % 2):
            raise ValueError("J is odd exactly when the number of coefficients is odd")
        if any(abs(c) < 2 for c in self.coefficients[:-1]):
            raise ValueError("n(i) must have absolute value at least 2 for i >= 2")

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def n(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise IndexError(i)
        return self.coefficients[self.k - i]

    @property
    def n1(self) -> int:
        return self.coefficients[-1]

    @property
    def sigma(self) -> int:
        return coefficient_sum(self.coefficients)

    def word(self) -> GeneratorWord:
        first = "B" if self.k % 2 == 0 else "A"
        return GeneratorWord([("P", self.J)]) + GeneratorWord.alternating(self.coefficients, first)

    def framing_word(self) -> GeneratorWord:
        """The standard framing ``phi^J ... beta^{n(2)} alpha^{n(1)}``."""
        return self.word().to_framing()

    def matrix(self) -> SL2Matrix:
        return word_to_matrix(self.word())

    def __str__(self) -> str:
        return f"({self.J}; {', '.join(str(c) for c in self.coefficients)})"


@dataclass(frozen=True)
class BoundaryCoordinates:
    """Boundary curve ``wraps * t_zeta + longitude * (fiber boundary)`` up to sign."""

    wraps: int
    longitude: int
    j: int

    def __str__(self) -> str:
        return f"<{self.wraps}, {self.longitude}>"


@dataclass(frozen=True)
class Candidate:
    mcfe: CF
    J: int
    a_k: int
    coefficients: CF
    sigma: int
    accepted: bool


@dataclass(frozen=True)
class NRecord:
    N: int
    X: SL2Matrix
    mcfes: tuple[CF, ...]
    candidates: tuple[Candidate, ...]

    @property
    def p(self) -> int:
        return self.X.x

    @property
    def q(self) -> int:
        return self.X.t

    @property
    def r(self) -> int:
        return self.X.y

    @property
    def s(self) -> int:
        return self.X.u


@dataclass(frozen=True)
class AlgorithmTrace:
    slope: ExtendedRational
    monodromy: str
    W: SL2Matrix
    target_sigma: int
    records: tuple[NRecord, ...]
    notes: tuple[str, ...] = ()

    @property
    def valid_N(self) -> list[int]:
        return [rec.N for rec in self.records]

    def candidates(self) -> list[Candidate]:
        return [c for rec in self.records for c in rec.candidates]

    def to_dict(self) -> dict:
        return {
            "slope": str(self.slope),
            "monodromy": self.monodromy,
            "W": str(self.W),
            "target_sigma": self.target_sigma,
            "notes": list(self.notes),
            "records": [
                {
                    "N": rec.N,
                    "X": str(rec.X),
                    "p": rec.p, "q": rec.q, "r": rec.r, "s": rec.s,
                    "odd_length_mcfes": [list(m) for m in rec.mcfes],
                    "candidates": [
                        {
                            "mcfe": list(c.mcfe),
                            "a_k": c.a_k,
                            "J": c.J,
                            "coefficients": list(c.coefficients),
                            "sigma": c.sigma,
                            "accepted": c.accepted,
                        }
                        for c in rec.candidates
                    ],
                }
                for rec in self.records
            ],
        }


# -- special forms -------------------------------------------------------------

def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        quo = a // b
        a, b = b, a - quo * b
        x0, x1 = x1, x0 - quo * x1
        y0, y1 = y1, y0 - quo * y1
    return a, x0, y0


def choose_W(x: int, y: int) -> SL2Matrix:
    """A matrix of determinant 1 with first column ``(x, y)``, via extended Euclid."""
    g, s, t = _ext_gcd(x, y)
    if g < 0:
        g, s, t = -g, -s, -t
    if g != 1:
        raise ValueError(f"slope ({x}, {y}) is not a coprime pair")
    # s*x + t*y = 1
    return SL2Matrix(x, -t, y, s)


def build_X(H: SL2Matrix, W: SL2Matrix, N: int) -> SL2Matrix:
    WA = W @ a_power(N)
    return WA.inverse() @ H @ WA


def list_valid_N(H: SL2Matrix, W: SL2Matrix) -> list[int]:
    X0 = build_X(H, W, 0)
    p0, q = X0.x, X0.t
    if q == 0:
        raise ValueError("H fixes the curve (q = 0); no special forms exist")
    # p(N) = p0 + N q
    centre = -p0 // q
    return [N for N in range(centre - 1, centre + 3) if abs(p0 + N * q) < abs(q)]


def _resolve_final(mcfe: Sequence[int], X: SL2Matrix) -> tuple[int, int]:
    """Return ``(J, a_k)`` with ``P^J C^{a_1} ... A^{a_k} = X``.

    With ``W0`` the alternating word of ``mcfe`` the remaining factor
    ``W0^-1 P^-J X`` must be ``A^{a_k} = (1 -a_k; 0 1)``; the sign of ``X``
    decides ``J`` since ``P^2 = -I``.
    """
    k = len(mcfe) + 1
    first = "B" if k % 2 == 0 else "A"
    W0inv = word_to_matrix(GeneratorWord.alternating(mcfe, first)).inverse()
    for J in ((0, 2) if k % 2 == 0 else (1, -1)):
        Y = W0inv @ (MAT_P ** -J) @ X
        if Y.x == 1 and Y.t == 0 and Y.u == 1:
            return J, -Y.y
    raise ConsistencyError(f"{list(mcfe)} does not extend to a special form of {X}")


def find_final_coefficient(mcfe: Sequence[int], X: SL2Matrix) -> int:
    """The last coefficient ``a_k`` completing ``mcfe`` to a special form of ``X``.

    ``a_k`` is read off the matrix identity, then re-checked against
    ``eval_cf(mcfe + [a_k]) = r/s``.
    """
    if eval_cf(mcfe) != ExtendedRational.from_vector(X.x, X.t):
        raise ValueError(f"{list(mcfe)} does not evaluate to p/q = {X.x}/{X.t}")
    a_k = _resolve_final(mcfe, X)[1]
    if eval_cf(tuple(mcfe) + (a_k,)) != ExtendedRational.from_vector(X.y, X.u):
        raise ConsistencyError(f"{list(mcfe) + [a_k]} does not evaluate to r/s = {X.y}/{X.u}")
    return a_k


def special_forms_of(H: SL2Matrix, W: SL2Matrix, odd_length_only: bool = False) -> list[SpecialForm]:
    """Every special form of every ``X(N)``; ``odd_length_only`` keeps odd-length MCFEs."""
    forms: list[SpecialForm] = []
    for N in list_valid_N(H, W):
        X = build_X(H, W, N)
        for mcfe in enumerate_mcfe(ExtendedRational.from_vector(X.x, X.t), odd_length_only):
            J, a_k = _resolve_final(mcfe, X)
            forms.append(SpecialForm(J, tuple(mcfe) + (a_k,), N=N))
    return forms


# -- boundary slopes ----------------------------------------------------------

_COORDINATE_ROWS = {0: (1, 0), 2: (2, 1), 1: (4, 1), -1: (4, -1)}


def transition_index(e_phi: int, e_psi: int) -> int:
    """``j`` with ``(E_phi, E_psi) = (4j, 0)`` modulo the relation vector ``(2, 3)``."""
    if e_psi % 3:
        raise ValueError(f"E_psi = {e_psi} is not a multiple of 3")
    rest = e_phi - 2 * (e_psi // 3)
    if rest % 4:
        raise ValueError(f"({e_phi}, {e_psi}) is not congruent to any (4j, 0)")
    return rest // 4


def boundary_coordinates(form: SpecialForm, framing: GeneratorWord) -> BoundaryCoordinates:
    omega = framing.inverse() + form.framing_word()
    j = transition_index(*letter_exponent_sums(omega))
    wraps, offset = _COORDINATE_ROWS[form.J]
    return BoundaryCoordinates(wraps, offset - j, j)


# -- surfaces for the built-in knots ---------------------------------------------

def unknot_slopes(monodromy: Monodromy) -> set[ExtendedRational]:
    slopes = {ExtendedRational(0, 1), ExtendedRational(1, 1), ExtendedRational(-1, 1), ExtendedRational(1, 0)}
    if monodromy.kind is MonodromyKind.LEFT_TREFOIL:
        slopes.add(ExtendedRational(1, 2))
    return slopes


def algorithm_streamlined(monodromy: Monodromy, slope, W: SL2Matrix | None = None
                          ) -> tuple[list[SurfaceDescriptor], AlgorithmTrace]:
    """Closed essential surfaces for a knot of the given slope on the fiber.

    Keeps the even-``k`` special forms with ``J = 0`` whose coefficient sum is
    the exponent sum of the monodromy (meridional boundary).
    """
    if not monodromy.is_builtin:
        raise ValueError("the meridian filter is only defined for the built-in monodromies")
    slope = ExtendedRational.coerce(slope)
    if W is None:
        W = choose_W(slope.numerator, slope.denominator)
    elif W.first_column() not in ((slope.numerator, slope.denominator),
                                  (-slope.numerator, -slope.denominator)):
        raise ValueError(f"W does not carry (1, 0) to the slope {slope}")
    H = monodromy.matrix
    target = monodromy.exponent_sum
    notes = ("unknot slope",) if slope in unknot_slopes(monodromy) else ()
    records = []
    surfaces = []
    for N in list_valid_N(H, W):
        X = build_X(H, W, N)
        mcfes = enumerate_mcfe(ExtendedRational.from_vector(X.x, X.t), odd_length_only=True)
        cands = []
        for mcfe in mcfes:
            J, a_k = _resolve_final(mcfe, X)
            coeffs = tuple(mcfe) + (a_k,)
            ok = J == 0 and sum(coeffs) == target
            cands.append(Candidate(tuple(mcfe), J, a_k, coeffs, sum(coeffs), ok))
            if ok:
                surfaces.append(classify(SpecialForm(0, coeffs, N=N)))
        records.append(NRecord(N, X, tuple(mcfes), tuple(cands)))
    surfaces.sort(key=lambda s: (s.form.k, s.form.coefficients))
    trace = AlgorithmTrace(slope, monodromy.name, W, target, tuple(records), notes)
    return surfaces, trace


__all__ = [
    "ConsistencyError", "MonodromyKind", "Monodromy", "SpecialForm", "BoundaryCoordinates",
    "Candidate", "NRecord", "AlgorithmTrace", "choose_W", "build_X", "list_valid_N",
    "find_final_coefficient", "special_forms_of", "transition_index", "boundary_coordinates",
    "unknot_slopes", "algorithm_streamlined",
]
