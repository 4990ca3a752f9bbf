"""
Picard lattices of F_e and P^2.

Classes on F_e are written (a, b) = aC0 + bF with C0^2 = -e, F^2 = 0 and
C0·F = 1; on P^2 a class is (m) = mH with H^2 = 1. Picard and Num agree on both
surfaces, so every operation here works with integer coordinates only.
"""

from bn_walls.exceptions import InvalidInputError
from bn_walls.models.surface import DivisorClass, Surface


def check_class(s: Surface, d: DivisorClass) -> None:
    """Raise InvalidInputError unless ``d`` has the Picard rank of ``s``."""
    if d.rank != s.picard_rank:
        raise InvalidInputError(
            f"Class {d} has {d.rank} coordinate(s) but Pic({s.label}) has rank {s.picard_rank}"
        )


def intersect(s: Surface, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number d1·d2.

    Raises:
        InvalidInputError: If a class does not belong to ``s``
    """
    check_class(s, d1)
    check_class(s, d2)
    if not s.is_hirzebruch:
        return d1[0] * d2[0]
    a1, b1 = d1.coords
    a2, b2 = d2.coords
    return -s.e * a1 * a2 + a1 * b2 + a2 * b1


def self_intersection(s: Surface, d: DivisorClass) -> int:
    """D^2."""
    return intersect(s, d, d)


def canonical(s: Surface) -> DivisorClass:
    """K_X: -2C0 - (e+2)F on F_e, -3H on P^2."""
    if s.is_hirzebruch:
        return DivisorClass.of(-2, -(s.e + 2))
    return DivisorClass.of(-3)


def is_ample(s: Surface, d: DivisorClass) -> bool:
    """Nakai criterion in coordinates: a > 0 and b > ae on F_e, m > 0 on P^2."""
    check_class(s, d)
    if not s.is_hirzebruch:
        return d[0] > 0
    a, b = d.coords
    return a > 0 and b > a * s.e


def is_effective(s: Surface, d: DivisorClass) -> bool:
    """True iff every coordinate is non-negative (C0 and F span the effective cone of F_e)."""
    check_class(s, d)
    return all(c >= 0 for c in d.coords)


def parity_compatible(s: Surface, xi: DivisorClass, c1: DivisorClass) -> bool:
    """True iff xi + c1 is divisible by 2 in Pic(X)."""
    return all(c % 2 == 0 for c in (xi + c1).coords)


def require_ample(s: Surface, d: DivisorClass, what: str = "Polarization") -> None:
    """Raise InvalidInputError unless ``d`` is ample on ``s``."""
    if not is_ample(s, d):
        raise InvalidInputError(f"{what} {d} is not ample on {s.label}")


def require_hirzebruch(s: Surface, operation: str) -> None:
    """Raise InvalidInputError when ``operation`` is attempted on P^2."""
    if not s.is_hirzebruch:
        raise InvalidInputError(f"{operation} is only available on Hirzebruch surfaces, not {s.label}")


def ample_boundary_rays(s: Surface) -> tuple[DivisorClass, DivisorClass]:
    """Generators F and C0 + eF of the closed ample (= nef) cone of F_e."""
    require_hirzebruch(s, "The ample cone figure")
    return DivisorClass.of(0, 1), DivisorClass.of(1, s.e)
