"""Minus continued fractions ``[b1, ..., bk] = 1/(b1 - 1/(b2 - ... - 1/bk))``.

Continued fractions are plain tuples of ints. Positions taken by the move
functions are 0-based list indices.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from fibersurf.exact import ExtendedRational
from fibersurf.kernels import mcfe_search

CF = tuple[int, ...]

__all__ = [
    "CF", "convergent_vectors", "eval_cf", "partial_fraction", "coefficient_sum",
    "cf_length", "is_scfe", "is_mcfe", "scfe", "apply_cf1", "apply_cf1p",
    "apply_cf2", "apply_cf2p", "invert_cf1", "invert_cf1p", "invert_cf2",
    "invert_cf2p", "apply_moves", "apply_move_m", "enumerate_mcfe",
    "mcfe_move_sets", "format_cf", "parse_cf",
]


def convergent_vectors(cf: Sequence[int]) -> list[tuple[int, int]]:
    """Vertex vectors of the edge-path of ``cf``: ``v[-1] = (-1, 0)``, ``v[0] = (0, 1)``, ...

    ``v[i] = b_i v[i-1] - v[i-2]``; the returned list starts at ``v[-1]``.
    Consecutive vectors have determinant 1, so every one is primitive.
    """
    vecs = [(-1, 0), (0, 1)]
    for b in cf:
        (p2, q2), (p1, q1) = vecs[-2], vecs[-1]
        vecs.append((b * p1 - p2, b * q1 - q2))
    return vecs


def _final_vector(cf: Sequence[int]) -> tuple[int, int]:
    p2, q2, p1, q1 = -1, 0, 0, 1
    for b in cf:
        p2, q2, p1, q1 = p1, q1, b * p1 - p2, b * q1 - q2
    return p1, q1


def eval_cf(cf: Sequence[int]) -> ExtendedRational:
    """Value in Q u {oo}; intermediate infinities are fine (projective evaluation)."""
    return ExtendedRational.from_vector(*_final_vector(cf))


def partial_fraction(cf: Sequence[int], i: int) -> ExtendedRational:
    if not 0 <= i <= len(cf):
        raise IndexError(f"partial fraction index {i} out of range for length {len(cf)}")
    return eval_cf(cf[:i])


def coefficient_sum(cf: Sequence[int]) -> int:
    return sum(cf)


def cf_length(cf: Sequence[int]) -> int:
    return len(cf)


def is_mcfe(cf: Sequence[int]) -> bool:
    return all(abs(b) >= 2 for b in cf)


def is_scfe(cf: Sequence[int]) -> bool:
    """Alternating signs, no zero after the first slot, last coefficient of size >= 2.

    The one exception is the expansion ``[0, -+1]`` of ``+-1``, the only rational
    whose Euclidean expansion must end in a unit.
    """
    cf = tuple(cf)
    if not cf:
        return True
    if any(b == 0 for b in cf[1:]):
        return False
    start = 1 if cf[0] == 0 else 0
    if any(cf[i] * cf[i + 1] > 0 for i in range(start, len(cf) - 1)):
        return False
    if abs(cf[-1]) >= 2:
        return True
    return cf in ((0, 1), (0, -1))


def _trunc_div(n: int, d: int) -> int:
    q = abs(n) // abs(d)
    return q if (n >= 0) == (d > 0) else -q


def scfe(x) -> CF:
    """The simple continued fraction expansion of a finite rational."""
    x = ExtendedRational.coerce(x)
    if x.is_infinite:
        raise ValueError("1/0 has no simple continued fraction expansion")
    value = x.to_fraction()
    out: list[int] = []
    if value == 0:
        return ()
    if abs(value) >= 1:
        out.append(0)
        value = -1 / value
    while value:
        inv = 1 / value
        b = _trunc_div(inv.numerator, inv.denominator)
        out.append(b)
        value = b - inv
    return tuple(out)


# -- elementary moves -------------------------------------------------------

def _check_position(cf: Sequence[int], position: int, need_next: bool) -> None:
    last = len(cf) - (2 if need_next else 1)
    if not 0 <= position <= last:
        raise IndexError(f"invalid move position {position} for length {len(cf)}")


def _check_sign(s: int) -> None:
    if s not in (1, -1):
        raise ValueError("move sign must be +1 or -1")


def apply_cf1(cf: Sequence[int], position: int, s: int) -> CF:
    """(CF1) ``[..., r, s', ...] -> [..., r+e, e, s'+e, ...]`` with ``r`` at ``position``."""
    _check_position(cf, position, True)
    _check_sign(s)
    cf = tuple(cf)
    return cf[:position] + (cf[position] + s, s, cf[position + 1] + s) + cf[position + 2:]


def apply_cf1p(cf: Sequence[int], s: int) -> CF:
    """(CF1') ``[..., r] -> [..., r+e, e]``."""
    _check_position(cf, 0, False)
    _check_sign(s)
    cf = tuple(cf)
    return cf[:-1] + (cf[-1] + s, s)


def apply_cf2(cf: Sequence[int], position: int, r: int) -> CF:
    """(CF2) ``[..., r+s, ...] -> [..., r, 0, s, ...]`` splitting the coefficient at ``position``."""
    _check_position(cf, position, False)
    cf = tuple(cf)
    return cf[:position] + (r, 0, cf[position] - r) + cf[position + 1:]


def apply_cf2p(cf: Sequence[int], s: int) -> CF:
    """(CF2') ``[..., r] -> [..., r, s, 0]``."""
    _check_position(cf, 0, False)
    return tuple(cf) + (s, 0)


def invert_cf1(cf: Sequence[int], position: int) -> CF:
    """Undo (CF1) around the unit coefficient at ``position``."""
    cf = tuple(cf)
    if not 1 <= position <= len(cf) - 2 or abs(cf[position]) != 1:
        raise ValueError(f"no interior unit coefficient at position {position}")
    e = cf[position]
    return cf[:position - 1] + (cf[position - 1] - e, cf[position + 1] - e) + cf[position + 2:]


def invert_cf1p(cf: Sequence[int]) -> CF:
    cf = tuple(cf)
    if len(cf) < 2 or abs(cf[-1]) != 1:
        raise ValueError("last coefficient is not a unit")
    return cf[:-2] + (cf[-2] - cf[-1],)


def invert_cf2(cf: Sequence[int], position: int) -> CF:
    """Undo (CF2) at the zero coefficient at ``position``."""
    cf = tuple(cf)
    if not 1 <= position <= len(cf) - 2 or cf[position] != 0:
        raise ValueError(f"no interior zero coefficient at position {position}")
    return cf[:position - 1] + (cf[position - 1] + cf[position + 1],) + cf[position + 2:]


def invert_cf2p(cf: Sequence[int]) -> CF:
    cf = tuple(cf)
    if len(cf) < 3 or cf[-1] != 0:
        raise ValueError("continued fraction does not end in (s, 0)")
    return cf[:-2]


# -- (M) and (M') -----------------------------------------------------------

def apply_moves(cf: Sequence[int], positions: Iterable[int]) -> CF:
    """Apply (M), or (M') at the last slot, jointly at pairwise non-adjacent positions.

    A coefficient ``a`` is replaced by ``|a| - 1`` copies of ``2e`` and both
    neighbours gain ``e``, where ``e = +1`` if ``a < 0`` and ``e = -1`` if ``a > 0``.
    """
    cf = tuple(cf)
    chosen = sorted(set(positions))
    for i, pos in enumerate(chosen):
        if not 1 <= pos < len(cf):
            raise IndexError(f"(M) cannot act at position {pos} of a length-{len(cf)} expansion")
        if cf[pos] == 0:
            raise ValueError(f"(M) needs a nonzero coefficient at position {pos}")
        if i and chosen[i - 1] == pos - 1:
            raise ValueError("(M) positions must be non-adjacent")
    shift = [0] * len(cf)
    moved = set(chosen)
    for pos in chosen:
        e = 1 if cf[pos] < 0 else -1
        shift[pos - 1] += e
        if pos + 1 < len(cf):
            shift[pos + 1] += e
    out: list[int] = []
    for i, b in enumerate(cf):
        if i in moved:
            e = 1 if b < 0 else -1
            out.extend([2 * e] * (abs(b) - 1))
        else:
            out.append(b + shift[i])
    return tuple(out)


def apply_move_m(cf: Sequence[int], index: int, endpoint: bool | None = None) -> CF:
    """Single (M) move, or (M') when ``index`` is the last position.

    ``endpoint`` is optional; when given it must agree with ``index``.
    """
    if endpoint is not None and endpoint != (index == len(cf) - 1):
        raise ValueError("endpoint flag disagrees with the position of the move")
    return apply_moves(cf, [index])


def enumerate_mcfe(x, odd_length_only: bool = False) -> list[CF]:
    """All minimal expansions of ``x`` in lexicographic order.

    Values with ``|x| >= 1`` have none. Zero has exactly one, the empty expansion.
    """
    x = ExtendedRational.coerce(x)
    if x.is_infinite or abs(x.numerator) >= x.denominator and x.numerator != 0:
        return []
    found = mcfe_search(scfe(x))
    if odd_length_only:
        found = [m for m in found if len(m) % 2 == 1]
    return sorted(found)


def mcfe_move_sets(x) -> dict[CF, tuple[int, ...]]:
    """Map each minimal expansion of ``x`` to the SCFE positions whose joint move yields it."""
    x = ExtendedRational.coerce(x)
    if x.is_infinite or abs(x.numerator) >= x.denominator and x.numerator != 0:
        return {}
    base = scfe(x)
    return {apply_moves(base, pos): pos for pos in mcfe_search(base, positions=True)}


def format_cf(cf: Sequence[int]) -> str:
    return "[" + ",".join(str(b) for b in cf) + "]"


def parse_cf(text: str) -> CF:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.replace(" ", ",").split(",") if tok)
    except ValueError:
        raise ValueError(f"not a continued fraction: {text!r}") from None

