"""Parametrised slope families with known surface lists, used as golden tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from fibersurf.contfrac import CF, eval_cf, is_mcfe, is_scfe, scfe
from fibersurf.exact import ExtendedRational, sign
from fibersurf.solver import nonadjacent_subsets, predicted_length, solve


@dataclass(frozen=True)
class ExpectedSurface:
    genus: int
    coefficients: CF | None = None
    side_class: str | None = None
    annulus_slope: str | None = None


@dataclass(frozen=True)
class FamilyInstance:
    """A slope together with surfaces it is predicted to carry.

    When ``complete`` is true the prediction is the full list; otherwise the
    listed surfaces are only required to appear.
    """

    kind: str
    params: tuple
    slope: ExtendedRational
    expected: tuple[ExpectedSurface, ...]
    complete: bool
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def scfe(self) -> CF:
        return scfe(self.slope)


def ex82(z: int) -> FamilyInstance:
    if z < 3:
        raise ValueError("the genus-two family needs z >= 3")
    surf = ExpectedSurface(2, (-2, -z, 3, z, -2, -1), "BoundsHandlebody", "1/1")
    return FamilyInstance("Ex82", (z,), ExtendedRational(1 + 2 * z, 4 * z), (surf,), True)


def _ex83_check(z: int, zp: int) -> None:
    if abs(z) < 2 or abs(zp) < 2 or abs(zp - 1) < 2:
        raise ValueError("the genus-three family needs |z|, |z'|, |z'-1| >= 2")


def ex83(z: int, zp: int) -> FamilyInstance:
    """Slope ``(z+z'+2zz')/(-1+2z+4zz')`` with the genus-three surface predicted for it."""
    _ex83_check(z, zp)
    slope = ExtendedRational(z + zp + 2 * z * zp, -1 + 2 * z + 4 * z * zp)
    surf = ExpectedSurface(3, (-zp, -2, -z, 3, z, -2, zp - 1, 0), "NotHandlebody", "1/0")
    return FamilyInstance("Ex83", (z, zp), slope, (surf,), False)


def ex83_shifted(z: int, zp: int) -> FamilyInstance:
    """The same surface placed at the slope where it actually occurs (``z'`` lowered by one)."""
    _ex83_check(z, zp)
    w = zp - 1
    slope = ExtendedRational(z + w + 2 * z * w, -1 + 2 * z + 4 * z * w)
    surf = ExpectedSurface(3, (-zp, -2, -z, 3, z, -2, zp - 1, 0), "NotHandlebody", "1/0")
    return FamilyInstance("Ex83shifted", (z, zp), slope, (surf,), False)


def yzy(y: int, z: int) -> FamilyInstance:
    if y < 2 or z < 2:
        raise ValueError("the [y, -z, y] family needs y, z >= 2")
    slope = eval_cf((y, -z, y))
    return FamilyInstance("YZY", (y, z), slope, (ExpectedSurface(y),), True,
                          extra={"I": (1,), "J": (3,)})


def many_surfaces(base: CF, r: int, magnitude: int | None = None) -> FamilyInstance:
    """Extend ``base`` by an alternating tail of length ``r`` and predict one surface per tail subset.

    ``base`` must be a SCFE with ``b_1`` not 0 or 1 whose slope carries a
    surface. The tail ``[a_{k+1}, ..., a_{k+r}]`` has constant magnitude and
    starts with the sign opposite to ``b_k``. Every ``R`` of pairwise
    non-consecutive indices in ``k+2..k+r`` added to both index sets of a base
    solution gives another solution.
    """
    base = tuple(base)
    if r < 2:
        raise ValueError("tail length r must be at least 2")
    if not is_scfe(base) or base[0] in (0, 1):
        raise ValueError("base must be a SCFE with first coefficient other than 0 or 1")
    sols = solve(base)
    if not sols:
        raise ValueError(f"base {list(base)} carries no surface")
    # magnitude 2 adds no length, so nested index sets would share a genus
    mag = magnitude if magnitude is not None else max(3, abs(base[-1]))
    if mag < 2:
        raise ValueError("tail magnitude must be at least 2")
    s0 = -sign(base[-1])
    tail = tuple(s0 * mag * (-1) ** i for i in range(r))
    assert is_mcfe(tail)
    b = base + tail
    k = len(base)
    I0, J0 = sols[0].I, sols[0].J
    expected = []
    index_sets = []
    for R in nonadjacent_subsets(k + 2, k + r):
        I, J = tuple(sorted(I0 + R)), tuple(sorted(J0 + R))
        index_sets.append((R, I, J))
        expected.append(ExpectedSurface((predicted_length(b, I, J) + 1) // 2 - 1))
    return FamilyInstance("ManySurfaces", (base, r), eval_cf(b), tuple(expected), False,
                          extra={"index_sets": tuple(index_sets), "scfe": b})


def small_knot(phi: int, n: int) -> FamilyInstance:
    """``[phi+2, -phi, phi, ...]`` of length ``n``: no closed essential surfaces."""
    if phi < 5 or n < 2:
        raise ValueError("need phi >= 5 and length n >= 2")
    b = (phi + 2,) + tuple(phi * (-1) ** i for i in range(1, n))
    return FamilyInstance("SmallKnot", (phi, n), eval_cf(b), (), True, extra={"scfe": b})


def random_small_knot_scfe(phi: int, length: int, rng: random.Random, spread: int = 3) -> CF:
    """A random SCFE meeting the congruence hypotheses for modulus ``phi``."""
    if phi < 5 or length < 2:
        raise ValueError("need phi >= 5 and length >= 2")
    s = rng.choice((1, -1))
    while True:
        b1 = s * rng.randint(2, spread * phi)
        if b1 % phi not in (0, 1):
            break
    rest = tuple(-s * (-1) ** i * phi * rng.randint(1, spread) for i in range(length - 1))
    return (b1,) + rest


def gen_family(kind: str, *params) -> FamilyInstance:
    table = {
        "Ex82": ex82,
        "Ex83": ex83,
        "Ex83shifted": ex83_shifted,
        "YZY": yzy,
        "ManySurfaces": many_surfaces,
        "SmallKnot": small_knot,
    }
    if kind not in table:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(table)}")
    return table[kind](*params)
