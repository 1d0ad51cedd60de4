"""Closed surfaces obtained by capping off twisted surfaces, and their classification."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from fibersurf.exact import ExtendedRational

if TYPE_CHECKING:
    from fibersurf.bundle import SpecialForm

BOUNDARY_PARALLEL_CAVEAT = "possibly-boundary-parallel"


class SideClass(Enum):
    BOUNDS_HANDLEBODY = "BoundsHandlebody"
    NOT_HANDLEBODY = "NotHandlebody"
    INCOMPRESSIBLE_BOTH_SIDES = "IncompressibleBothSides"


@dataclass(frozen=True)
class SurfaceDescriptor:
    form: "SpecialForm"
    genus: int
    n1: int
    annulus_slope: ExtendedRational
    side_class: SideClass
    caveats: tuple[str, ...] = ()
    closed: bool = True

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.form.coefficients

    def to_dict(self) -> dict:
        out = {
            "coefficients": list(self.form.coefficients),
            "J": self.form.J,
            "genus": self.genus,
            "n1": self.n1,
            "annulus_slope": str(self.annulus_slope),
            "side_class": self.side_class.value,
            "caveats": list(self.caveats),
        }
        if self.caveats:
            out["caveat"] = self.caveats[0]
        if self.form.N is not None:
            out["N"] = self.form.N
        return out


def side_class_of(n1: int) -> SideClass:
    if abs(n1) == 1:
        return SideClass.BOUNDS_HANDLEBODY
    if n1 == 0:
        return SideClass.NOT_HANDLEBODY
    return SideClass.INCOMPRESSIBLE_BOTH_SIDES


def classify(form: "SpecialForm") -> SurfaceDescriptor:
    """Genus, annulus slope ``-1/n(1)`` and side class of the capped-off surface."""
    if form.J != 0 or form.k % 2:
        raise ValueError(f"closed surfaces come from J = 0 forms of even length, got {form}")
    genus = form.k // 2 - 1
    if genus < 1:
        raise ValueError(f"form {form} caps off to a sphere")
    n1 = form.n1
    caveats = (BOUNDARY_PARALLEL_CAVEAT,) if genus == 1 else ()
    return SurfaceDescriptor(
        form=form,
        genus=genus,
        n1=n1,
        annulus_slope=ExtendedRational(-1, n1),
        side_class=side_class_of(n1),
        caveats=caveats,
    )


def genus_from_solution_length(len_xm: int) -> int:
    """Genus of the surface built from an odd-length MCFE ``x_m`` plus one final coefficient."""
    if len_xm < 1 or len_xm % 2 == 0:
        raise ValueError(f"solution length must be odd and positive, got {len_xm}")
    return (len_xm + 1) // 2 - 1
