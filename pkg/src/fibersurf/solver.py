"""Index-set solver for closed surfaces around knots on the left-trefoil fiber.

Given the SCFE ``[b_1, ..., b_k]`` of the slope, closed essential surfaces
correspond to pairs ``(I, J)`` of index sets solving a single linear
equation in the ``b_i``. Each solution is turned back into an explicit MCFE
``x_m`` by applying (M)/(M') moves to the SCFE of ``p(N)/q(N)``, and checked
against the conjugate ``X(N)`` by matrix multiplication.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from fibersurf.bundle import ConsistencyError, Monodromy, SpecialForm, build_X
from fibersurf.contfrac import CF, apply_moves, convergent_vectors, eval_cf, is_mcfe, is_scfe
from fibersurf.exact import ExtendedRational, GeneratorWord, SL2Matrix, sign, word_to_matrix
from fibersurf.surfaces import SurfaceDescriptor, classify


@dataclass(frozen=True)
class Theorem91Solution:
    case: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    N: int
    N_prime: int
    x_m: CF
    surface: SurfaceDescriptor

    @property
    def genus(self) -> int:
        return self.surface.genus

    @property
    def coefficients(self) -> CF:
        return self.x_m + (self.N_prime,)


@dataclass(frozen=True)
class _Layout:
    case: int
    lo: int
    xs0: CF
    # 1-based SCFE index -> 1-based position in xs0
    pos_I: dict
    pos_J: dict


def _check_input(b: Sequence[int]) -> CF:
    b = tuple(int(c) for c in b)
    if not b or not is_scfe(b):
        raise ValueError(f"{list(b)} is not a simple continued fraction expansion")
    slope = eval_cf(b)
    if slope.is_infinite or slope in (ExtendedRational(0, 1), ExtendedRational(1, 1),
                                      ExtendedRational(-1, 1), ExtendedRational(1, 2)):
        raise ValueError(f"slope {slope} is an unknot slope")
    return b


def case_of(b: Sequence[int]) -> int:
    if b[0] not in (0, 1):
        return 1
    if b[0] == 0:
        return 2 if b[1] != -1 else 3
    return 4


def _layout(b: CF) -> _Layout:
    k = len(b)
    case = case_of(b)
    neg = lambda idx: [-b[i - 1] for i in range(k, idx - 1, -1)]  # noqa: E731  -b_k..-b_idx
    if case == 1:
        xs0 = neg(2) + [1 - b[0]] + list(b)
        pos_I = {i: k - i + 1 for i in range(1, k + 1)}
        pos_J = {j: k + j for j in range(1, k + 1)}
        lo = 1
    elif case == 2:
        xs0 = neg(2) + [b[1] + 1] + list(b[2:])
        pos_I = {i: k - i + 1 for i in range(2, k + 1)}
        pos_J = {j: k + j - 2 for j in range(2, k + 1)}
        lo = 2
    elif case == 3:
        xs0 = neg(3) + [b[2] + 1] + list(b[3:])
        pos_I = {i: k - i + 1 for i in range(3, k + 1)}
        pos_J = {j: k + j - 4 for j in range(3, k + 1)}
        lo = 3
    else:
        xs0 = neg(3) + [1 - b[1]] + list(b[1:])
        pos_I = {i: k - i + 1 for i in range(2, k + 1)}
        pos_J = {j: k + j - 2 for j in range(2, k + 1)}
        lo = 2
    return _Layout(case, lo, tuple(xs0), pos_I, pos_J)


def build_x(scfe_b: Sequence[int], N: int) -> CF:
    """The (non-simple) expansion ``[0, -N, -b_k, ..., -b_1, -1, b_1 - 1, b_2, ..., b_k]`` of ``p(N)/q(N)``."""
    b = tuple(scfe_b)
    return (0, -N) + tuple(-c for c in reversed(b)) + (-1, b[0] - 1) + b[1:]


def build_xs(scfe_b: Sequence[int], N: int) -> CF:
    """SCFE of ``p(N)/q(N)`` for ``N = 0`` or ``N = sgn(b_k)``."""
    b = _check_input(scfe_b)
    xs0 = _layout(b).xs0
    if N == 0:
        return xs0
    if N != sign(b[-1]):
        raise ValueError(f"N must be 0 or sgn(b_k) = {sign(b[-1])}, got {N}")
    return (N, xs0[0] + N) + xs0[1:]


def proof_W(scfe_b: Sequence[int]) -> SL2Matrix:
    """Change of basis with first column the slope and second column its previous partial fraction."""
    vecs = convergent_vectors(scfe_b)
    (x, y), (t, u) = vecs[-1], vecs[-2]
    if x * u - t * y == -1:
        t, u = -t, -u
    return SL2Matrix(x, t, y, u)


def nonadjacent_subsets(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All subsets of ``lo..hi`` with no two consecutive integers, as sorted tuples."""
    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for i in range(start, hi + 1):
            for rest in rec(i + 2):
                yield (i,) + rest
    return rec(lo)


def _side_conditions(b: CF, case: int, lo: int, I: frozenset, J: frozenset) -> bool:
    k = len(b)
    for l in range(lo + 1, k + 1):
        if abs(b[l - 1]) == 1:
            near = {l - 1, l, l + 1}
            if not (near & I) or not (near & J):
                return False
    first, pair = lo, {lo, lo + 1}
    c = b[lo - 1]
    if case == 1:
        if c == -1 and not (first in I or pair & J):
            return False
        if c == 2 and not (first in J or pair & I):
            return False
    elif case == 2:
        if c == -2 and not (first in I or pair & J):
            return False
        if c == 1 and not (first in J or pair & I):
            return False
    elif case == 3:
        if c == 1 and not (first in J or pair & I):
            return False
    elif c == -1 and not (first in I or pair & J):
        return False
    return True


def equation_residue(b: Sequence[int], I: Iterable[int], J: Iterable[int]) -> int:
    """Left-hand side of the case equation; solutions make it zero."""
    b = tuple(b)
    case = case_of(b)
    I, J = set(I), set(J)
    lo = {1: 1, 2: 2, 3: 3, 4: 2}[case]
    special = (lo in I) if case in (1, 4) else (lo in J)
    return sum(-b[i - 1] for i in I) + sum(b[j - 1] for j in J) + (0 if special else -1)


def predicted_length(b: Sequence[int], I: Iterable[int], J: Iterable[int]) -> int:
    """Length of ``x_m`` read off from the index sets without building it."""
    b = tuple(b)
    lay = _layout(b)
    I, J = set(I), set(J)
    total = len(lay.xs0) + sum(abs(b[i - 1]) - 2 for i in I) + sum(abs(b[j - 1]) - 2 for j in J)
    lo = lay.lo
    # the merged coefficient differs from +-b_lo by one
    if lay.case == 1 and lo in I:
        total -= sign(b[0])
    elif lay.case in (2, 3) and lo in J:
        total += sign(b[lo - 1])
    elif lay.case == 4 and lo in I:
        total -= sign(b[1])
    return total


def _reconstruct(b: CF, lay: _Layout, I: tuple, J: tuple) -> tuple[int, int, CF] | None:
    k = len(b)
    N = sign(b[-1]) if k in I else 0
    if N == 0:
        xs, shift = lay.xs0, 0
    else:
        xs, shift = (N, lay.xs0[0] + N) + lay.xs0[1:], 1
    positions = sorted({lay.pos_I[i] + shift for i in I} | {lay.pos_J[j] + shift for j in J})
    if len(positions) != len(I) + len(J) or 1 in positions:
        return None
    try:
        x_m = apply_moves(xs, [p - 1 for p in positions])
    except ValueError:
        return None
    if k in I and k not in J:
        N_prime = sign(b[-1])
    elif k in J and k not in I:
        N_prime = -sign(b[-1])
    else:
        N_prime = 0
    return N, N_prime, x_m


def solve(scfe_b: Sequence[int], verify: bool = True) -> list[Theorem91Solution]:
    """Every index-set solution for the slope with SCFE ``scfe_b``, each turned into a surface."""
    b = _check_input(scfe_b)
    k = len(b)
    lay = _layout(b)
    lo = lay.lo
    subsets = list(nonadjacent_subsets(lo, k))
    by_sum: dict[tuple[int, bool], list[tuple[int, ...]]] = defaultdict(list)
    for J in subsets:
        by_sum[(sum(b[j - 1] for j in J), lo in J)].append(J)

    H = Monodromy.left_trefoil().matrix
    W = proof_W(b) if verify else None
    out: list[Theorem91Solution] = []
    for I in subsets:
        s_I = sum(b[i - 1] for i in I)
        for lo_in_J in (False, True):
            if lo_in_J and lo in I:
                continue
            if lay.case in (1, 4):
                special = lo in I
            else:
                special = lo_in_J
            # sum_J b_j = sum_I b_i + (0 if special else 1)
            need = s_I + (0 if special else 1)
            for J in by_sum.get((need, lo_in_J), ()):
                fI, fJ = frozenset(I), frozenset(J)
                if not _side_conditions(b, lay.case, lo, fI, fJ):
                    continue
                built = _reconstruct(b, lay, I, J)
                if built is None:
                    continue
                N, N_prime, x_m = built
                form = SpecialForm(0, x_m + (N_prime,), N=N)
                if verify:
                    _verify(b, H, W, N, N_prime, x_m, I, J)
                out.append(Theorem91Solution(lay.case, I, J, N, N_prime, x_m, classify(form)))
    out.sort(key=lambda s: (len(s.I) + len(s.J), s.I, s.J))
    return out


def _verify(b: CF, H: SL2Matrix, W: SL2Matrix, N: int, N_prime: int, x_m: CF,
            I: tuple, J: tuple) -> None:
    where = f"I={list(I)} J={list(J)} for {list(b)}"
    if not is_mcfe(x_m) or len(x_m) % 2 == 0:
        raise ConsistencyError(f"x_m = {list(x_m)} is not an odd-length MCFE ({where})")
    if len(x_m) != predicted_length(b, I, J):
        raise ConsistencyError(f"length of x_m disagrees with the index-set count ({where})")
    X = build_X(H, W, N)
    if word_to_matrix(GeneratorWord.alternating(x_m + (N_prime,), "B")) != X:
        raise ConsistencyError(f"x_m, N' do not multiply out to X({N}) ({where})")
    if sum(x_m) + N_prime != sum(build_x(b, N)) + N:
        raise ConsistencyError(f"coefficient sum of the surface is not meridional ({where})")


def solution_for(scfe_b: Sequence[int], I: Iterable[int], J: Iterable[int]) -> Theorem91Solution:
    """The solution attached to a prescribed pair of index sets; raises if it is not one."""
    b = _check_input(scfe_b)
    I, J = tuple(sorted(I)), tuple(sorted(J))
    for sol in solve(b):
        if sol.I == I and sol.J == J:
            return sol
    raise ValueError(f"I={list(I)}, J={list(J)} is not a solution for {list(b)}")


def solution_surfaces(scfe_b: Sequence[int]) -> list[CF]:
    """Sorted surface coefficient lists, comparable with the general algorithm's output."""
    return sorted((s.coefficients for s in solve(scfe_b)), key=lambda c: (len(c), c))


def small_knot_certificate(scfe_b: Sequence[int], phi0: int) -> bool:
    """Congruence test that rules out every solution of the case equation."""
    if phi0 < 5:
        raise ValueError("the modulus must be at least 5")
    b = tuple(scfe_b)
    if not b:
        return False
    return all(c % phi0 == 0 for c in b[1:]) and b[0] % phi0 not in (0, 1)


__all__ = [
    "Theorem91Solution", "case_of", "build_x", "build_xs", "proof_W", "nonadjacent_subsets",
    "equation_residue", "predicted_length", "solve", "solution_for", "solution_surfaces",
    "small_knot_certificate",
]
