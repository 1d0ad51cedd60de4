"""Farey-diagram edge-paths and brute-force checks for the continued fraction code.

Nothing here uses the move calculus of :mod:`fibersurf.contfrac`; the MCFE
enumeration below walks Farey edges directly so that it can serve as an
independent oracle for :func:`fibersurf.contfrac.enumerate_mcfe`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from fibersurf.exact import ExtendedRational

Vector = tuple[int, int]


def _det(u: Vector, v: Vector) -> int:
    return u[0] * v[1] - u[1] * v[0]


def farey_adjacent(a: ExtendedRational, b: ExtendedRational) -> bool:
    return abs(a.numerator * b.denominator - a.denominator * b.numerator) == 1


@dataclass(frozen=True)
class EdgePath:
    """Oriented edge-path from 1/0 through 0/1 and then the partial fractions."""

    vertices: tuple[ExtendedRational, ...]

    def __post_init__(self):
        if self.vertices[:2] != (ExtendedRational(1, 0), ExtendedRational(0, 1)):
            raise ValueError("an edge-path starts with the edge 1/0 -> 0/1")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not farey_adjacent(a, b):
                raise ValueError(f"{a} and {b} are not joined by a Farey edge")

    @property
    def end(self) -> ExtendedRational:
        return self.vertices[-1]

    def coefficients(self) -> tuple[int, ...]:
        """Read each coefficient back as a signed count of triangles between consecutive edges."""
        vecs = [(v.numerator, v.denominator) for v in self.vertices]
        out = []
        for u, v, w in zip(vecs, vecs[1:], vecs[2:]):
            # with the path's own signed vectors w = b v - u and det(u, v) = -1
            out.append(-_det(u, v) * _det(u, w) // _det(v, w) if _det(v, w) else 0)
        return tuple(out)


def cf_to_edgepath(cf: Sequence[int]) -> EdgePath:
    vecs: list[Vector] = [(-1, 0), (0, 1)]
    for b in cf:
        u, v = vecs[-2], vecs[-1]
        vecs.append((b * v[0] - u[0], b * v[1] - u[1]))
    return EdgePath(tuple(ExtendedRational.from_vector(*v) for v in vecs))


def _floor_div(n: int, d: int) -> int:
    return n // d


def oracle_enumerate_mcfe(x) -> list[tuple[int, ...]]:
    """All minimal edge-paths from 1/0 to ``x``, read as continued fractions.

    The walk keeps the target in the fan of triangles ahead of the current
    edge: at vertex ``V`` reached from ``U``, the target is written as
    ``c1 V - c0 U`` and only the two fan edges of the triangle containing it
    are followed, provided the new edge has at least two triangles on each
    side of the turn (``|b| >= 2``). The target coordinate ``c0`` shrinks at
    every step, which confines the search to the finite strip around the SCFE.
    """
    x = ExtendedRational.coerce(x)
    if x.is_infinite or abs(x.numerator) >= x.denominator and x.numerator != 0:
        return []
    target = (x.numerator, x.denominator)
    guard = _length_guard(x)
    found: list[tuple[int, ...]] = []

    def walk(u: Vector, v: Vector, c1: int, c0: int, path: list[int]) -> None:
        if c0 == 0:
            found.append(tuple(path))
            return
        if len(path) >= guard:
            raise RuntimeError(f"edge-path search for {x} left the strip")
        if c0 < 0:
            c1, c0 = -c1, -c0
        lo = _floor_div(c1, c0)
        turns = (lo,) if lo * c0 == c1 else (lo, lo + 1)
        for b in turns:
            if abs(b) < 2:
                continue
            w = (b * v[0] - u[0], b * v[1] - u[1])
            # target = c0 * w - (b * c0 - c1) * v
            path.append(b)
            walk(v, w, c0, b * c0 - c1, path)
            path.pop()

    # target = c1 * (0, 1) - c0 * (-1, 0)
    walk((-1, 0), (0, 1), target[1], target[0], [])
    return sorted(found)


def _length_guard(x: ExtendedRational) -> int:
    from fibersurf.contfrac import scfe  # only for the termination bound

    base = scfe(x)
    return len(base) + sum(abs(b) for b in base) + 1


def alternating_expansions(max_height: int) -> dict[ExtendedRational, list[tuple[int, ...]]]:
    """Every SCFE-shaped expansion whose edge-path vertices have height <= ``max_height``.

    Shape means: signs alternate, no zero after the first slot, last coefficient
    of size at least 2, or the expansion is ``[0, -+1]``. Height is
    ``max(|p|, |q|)`` of a vertex vector. Along an alternating expansion the
    vertex heights never decrease, so this bounded search sees every such
    expansion of every value of height at most ``max_height``.
    """
    H = max_height
    table: dict[ExtendedRational, list[tuple[int, ...]]] = {ExtendedRational(0, 1): [()]}

    def height(v: Vector) -> int:
        return max(abs(v[0]), abs(v[1]))

    def extend(u: Vector, v: Vector, path: list[int]) -> None:
        last = path[-1] if path else None
        for sgn in (1, -1):
            if last is not None and last != 0 and (last > 0) == (sgn > 0):
                continue
            b = 1 if (path or sgn == -1) else 0
            while b <= H + 1:
                c = sgn * b
                w = (c * v[0] - u[0], c * v[1] - u[1])
                if height(w) > H:
                    if b >= 2:
                        break
                    b += 1
                    continue
                path.append(c)
                if (abs(c) >= 2 or tuple(path) in ((0, 1), (0, -1))) and w[1] != 0:
                    table.setdefault(ExtendedRational.from_vector(*w), []).append(tuple(path))
                extend(v, w, path)
                path.pop()
                b += 1

    extend((-1, 0), (0, 1), [])
    return table


def oracle_scfe_unique(x, max_denominator: int = 200) -> bool:
    """True iff exactly one SCFE-shaped expansion evaluates to ``x``."""
    x = ExtendedRational.coerce(x)
    if x.is_infinite:
        raise ValueError("1/0 has no SCFE")
    if x.denominator > max_denominator:
        raise ValueError(f"denominator {x.denominator} exceeds the search bound {max_denominator}")
    table = alternating_expansions(max(abs(x.numerator), x.denominator))
    return len(table.get(x, [])) == 1
