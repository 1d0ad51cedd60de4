import random

import pytest

from fibersurf.bundle import Monodromy, algorithm_streamlined
from fibersurf.contfrac import eval_cf, is_scfe
from fibersurf.exact import ExtendedRational
from fibersurf.families import (
    ex83,
    ex83_shifted,
    gen_family,
    many_surfaces,
    random_small_knot_scfe,
    small_knot,
)
from fibersurf.solver import small_knot_certificate, solution_for, solve

LEFT = Monodromy.left_trefoil()


def coefficient_set(slope):
    return {s.coefficients for s in algorithm_streamlined(LEFT, slope)[0]}


def test_ex82_slope():
    f = gen_family("Ex82", 3)
    assert f.slope == ExtendedRational(7, 12) and f.complete
    assert f.expected[0].coefficients == (-2, -3, 3, 3, -2, -1)


def test_ex83_slope():
    f = gen_family("Ex83", 2, 3)
    assert f.slope == ExtendedRational(17, 27) and not f.complete
    assert f.expected[0].coefficients == (-3, -2, -2, 3, 2, -2, 2, 0)


def test_ex83_surface_sits_one_step_lower():
    for z in (2, 3, 4, -2, -3):
        for zp in (3, 4, 5, -2, -3):
            f = ex83_shifted(z, zp)
            assert f.expected[0].coefficients in coefficient_set(f.slope)


def test_yzy():
    f = gen_family("YZY", 4, 2)
    assert f.slope == eval_cf((4, -2, 4))
    assert f.expected[0].genus == 4 and f.extra == {"I": (1,), "J": (3,)}


def test_small_knot_family():
    f = small_knot(7, 4)
    assert f.extra["scfe"] == (9, -7, 7, -7) and f.expected == ()
    assert coefficient_set(f.slope) == set()


def test_random_small_knot_scfe():
    rng = random.Random(3)
    for phi in (5, 7, 11):
        for n in range(2, 7):
            b = random_small_knot_scfe(phi, n, rng)
            assert len(b) == n and is_scfe(b) and small_knot_certificate(b, phi)


@pytest.mark.parametrize("args", [("Ex82", 2), ("Ex83", 1, 3), ("Ex83", 2, 2), ("YZY", 1, 3),
                                  ("SmallKnot", 4, 3), ("Nope",)])
def test_parameter_errors(args):
    with pytest.raises(ValueError):
        gen_family(*args)


def test_many_surfaces_predictions():
    f = many_surfaces((3, -3, 3), 4)
    b = f.extra["scfe"]
    assert b == (3, -3, 3, -3, 3, -3, 3) and is_scfe(b)
    genera = [solution_for(b, I, J).genus for _, I, J in f.extra["index_sets"]]
    assert genera == [e.genus for e in f.expected]


def test_many_surfaces_base_checks():
    with pytest.raises(ValueError):
        many_surfaces((0, 3, -2), 3)
    with pytest.raises(ValueError):
        many_surfaces((9, -7, 7), 3)
    with pytest.raises(ValueError):
        many_surfaces((3, -3, 3), 1)


def test_many_surfaces_matches_general_algorithm():
    f = many_surfaces((2, -2, 2), 3)
    assert {s.coefficients for s in solve(f.extra["scfe"])} == coefficient_set(f.slope)


def test_ex83_paper_slope_carries_other_surfaces():
    assert coefficient_set(ex83(2, 3).slope) == {
        (-4, -2, -2, 3, 2, -2, 3, 0), (-3, 3, 4, 2, -3, -2, -2, -1)}
