"""
Walls of type (c1, c2) in the ample cone of F_e.

A class ξ = (p, q) defines a wall when ξ² < 0, ξ + c1 is divisible by 2,
ℓ = c2 + (ξ² - c1²)/4 is a non-negative integer and ξ⊥ meets the open ample
cone. Since ξ·(aC0 + bF) = p(b - ae) + qa with a > 0 and b - ae > 0, the last
condition is pq < 0, and walls are listed with p > 0 (ξ and -ξ cut the same
hyperplane).
"""

from math import gcd

from bn_walls.core.picard import (
    check_class,
    intersect,
    parity_compatible,
    require_ample,
    require_hirzebruch,
)
from bn_walls.exceptions import ConsistencyError, InvalidInputError
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.models.walls import (
    ChamberComparison,
    ChamberRelation,
    WallCheck,
    WallClass,
    WallCondition,
)
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def wall_meets_ample_cone(s: Surface, xi: DivisorClass) -> bool:
    """True iff the hyperplane ξ⊥ meets the open ample cone.

    Raises:
        InvalidInputError: If ξ is the zero class
    """
    if xi.is_zero:
        raise InvalidInputError("The zero class defines no hyperplane")
    check_class(s, xi)
    if not s.is_hirzebruch:
        return False
    p, q = xi.coords
    return p * q < 0


def wall_length(s: Surface, xi: DivisorClass, c1: DivisorClass, c2: int) -> int:
    """ℓ = c2 + (ξ² - c1²)/4 for a parity-compatible ξ.

    Raises:
        ConsistencyError: If 4 does not divide ξ² - c1²
    """
    diff = intersect(s, xi, xi) - intersect(s, c1, c1)
    if diff % 4:
        raise ConsistencyError(f"ξ² - c1² = {diff} is not divisible by 4 for ξ={xi}, c1={c1}")
    return c2 + diff // 4


def is_wall_class(s: Surface, xi: DivisorClass, c1: DivisorClass, c2: int) -> WallCheck:
    """Test the wall conditions in order and report the first one that fails."""
    check_class(s, c1)
    xi_sq = intersect(s, xi, xi)
    if xi_sq >= 0:
        return WallCheck(xi=xi, failed=WallCondition.NEGATIVE_SQUARE, detail=f"ξ² = {xi_sq} >= 0")
    if not parity_compatible(s, xi, c1):
        return WallCheck(xi=xi, failed=WallCondition.PARITY, detail=f"ξ + c1 = {xi + c1} is not even")
    length = wall_length(s, xi, c1, c2)
    if length < 0:
        return WallCheck(xi=xi, failed=WallCondition.LENGTH, detail=f"ℓ = {length} < 0")
    if not wall_meets_ample_cone(s, xi):
        return WallCheck(
            xi=xi, failed=WallCondition.AMPLE_CONE, detail="ξ⊥ misses the open ample cone"
        )
    return WallCheck(xi=xi, wall=WallClass(xi=xi, xi_sq=xi_sq, length=length))


def enumeration_box(s: Surface, c1: DivisorClass, c2: int) -> tuple[int, int]:
    """Bounds (p_max, |q|_max) of the canonical search box.

    With p >= 1 and q <= -1 the conditions give e·p² + 2p|q| <= 4c2 - c1².
    """
    require_hirzebruch(s, "Wall enumeration")
    discriminant = 4 * c2 - intersect(s, c1, c1)
    if discriminant < 2:
        return 0, 0
    return discriminant // 2, discriminant // 2


def enumerate_walls(s: Surface, c1: DivisorClass, c2: int) -> list[WallClass]:
    """All walls of type (c1, c2), canonical sign p > 0, sorted by coordinates."""
    discriminant = 4 * c2 - intersect(s, c1, c1)
    p_max, _ = enumeration_box(s, c1, c2)
    walls: list[WallClass] = []
    candidates = 0
    for p in range(1, p_max + 1):
        if s.e * p * p + 2 * p > discriminant:
            break
        q_max = (discriminant - s.e * p * p) // (2 * p)
        for q in range(1, q_max + 1):
            candidates += 1
            check = is_wall_class(s, DivisorClass.of(p, -q), c1, c2)
            if check.wall is not None:
                walls.append(check.wall)
    walls.sort(key=lambda w: w.xi.coords)
    logger.debug(
        f"{s.label} c1={c1} c2={c2}: {candidates} candidates, {len(walls)} walls"
    )
    return walls


def separating_walls(
    s: Surface, c1: DivisorClass, c2: int, l1: DivisorClass, l2: DivisorClass
) -> list[WallClass]:
    """Walls with ξ·L1 > 0 > ξ·L2, oriented accordingly.

    Raises:
        InvalidInputError: If L1 or L2 is not ample
    """
    require_ample(s, l1, "L1")
    require_ample(s, l2, "L2")
    separating: list[WallClass] = []
    for wall in enumerate_walls(s, c1, c2):
        d1 = intersect(s, wall.xi, l1)
        d2 = intersect(s, wall.xi, l2)
        if d1 > 0 > d2:
            separating.append(wall)
        elif d1 < 0 < d2:
            separating.append(wall.flipped())
    return separating


def chamber_signature(
    s: Surface, c1: DivisorClass, c2: int, polarization: DivisorClass
) -> tuple[int, ...]:
    """Signs of ξ·L over the enumerated walls; 0 marks a wall through L."""
    require_ample(s, polarization)
    return tuple(_sign(intersect(s, w.xi, polarization)) for w in enumerate_walls(s, c1, c2))


def compare_chambers(
    s: Surface, c1: DivisorClass, c2: int, l1: DivisorClass, l2: DivisorClass
) -> ChamberComparison:
    """Chamber signatures of L1 and L2 and how they relate."""
    sig1 = chamber_signature(s, c1, c2, l1)
    sig2 = chamber_signature(s, c1, c2, l2)
    if 0 in sig1 or 0 in sig2:
        relation = ChamberRelation.ON_WALL
    elif sig1 == sig2:
        relation = ChamberRelation.SAME
    else:
        relation = ChamberRelation.SEPARATED
    return ChamberComparison(
        relation=relation,
        signature_1=list(sig1),
        signature_2=list(sig2),
        walls=enumerate_walls(s, c1, c2),
    )


def same_chamber(
    s: Surface, c1: DivisorClass, c2: int, l1: DivisorClass, l2: DivisorClass
) -> ChamberRelation:
    """Whether two ample classes share a chamber, are separated, or sit on a wall."""
    return compare_chambers(s, c1, c2, l1, l2).relation


def wall_polarization(
    s: Surface, xi: DivisorClass, l1: DivisorClass, l2: DivisorClass
) -> DivisorClass:
    """Primitive ample class |ξ·L2| L1 + |ξ·L1| L2 on the wall between L1 and L2.

    Raises:
        InvalidInputError: If ξ does not separate L1 and L2
    """
    d1 = intersect(s, xi, l1)
    d2 = intersect(s, xi, l2)
    if d1 * d2 >= 0:
        raise InvalidInputError(f"ξ={xi} does not separate {l1} and {l2}")
    point = abs(d2) * l1 + abs(d1) * l2
    divisor = gcd(*point.coords)
    return DivisorClass(coords=tuple(c // divisor for c in point.coords))


def primitive_direction(xi: DivisorClass) -> DivisorClass:
    """ξ divided by the gcd of its coordinates, first nonzero coordinate positive."""
    divisor = gcd(*xi.coords)
    if divisor == 0:
        raise InvalidInputError("The zero class has no direction")
    direction = DivisorClass(coords=tuple(c // divisor for c in xi.coords))
    leading = next(c for c in direction.coords if c != 0)
    return direction if leading > 0 else -direction


def wall_hyperplanes(walls: list[WallClass]) -> list[list[WallClass]]:
    """Group walls cutting the same hyperplane (proportional classes)."""
    groups: dict[tuple[int, ...], list[WallClass]] = {}
    for wall in walls:
        groups.setdefault(primitive_direction(wall.xi).coords, []).append(wall)
    return [groups[key] for key in sorted(groups)]


def wall_ray(s: Surface, xi: DivisorClass) -> DivisorClass:
    """Direction (p, ep - q) of the ray ξ⊥ ∩ ample cone for ξ = (p, q), p > 0."""
    if not wall_meets_ample_cone(s, xi):
        raise InvalidInputError(f"ξ={xi} does not meet the ample cone")
    p, q = primitive_direction(xi).coords
    return DivisorClass.of(p, s.e * p - q)
