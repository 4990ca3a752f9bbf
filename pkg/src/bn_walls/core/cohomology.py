"""
Line-bundle cohomology on F_e and P^2 and ideal sheaves of generic 0-cycles.

h0 comes from the pushforward to P^1 (F_e) or the monomial count (P^2). h2 is
h0(K - D) by Serre duality and h1 is whatever makes the Euler characteristic
agree with Riemann-Roch, so a negative h1 exposes a broken h0 formula.
"""

from math import factorial

from bn_walls.core.picard import canonical, check_class, intersect
from bn_walls.exceptions import ConsistencyError, InvalidInputError
from bn_walls.models.cohomology import CohomologyTriple, ZModel
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)


def chi_line(s: Surface, d: DivisorClass) -> int:
    """χ(O(D)) = 1 + D·(D - K)/2."""
    twice = intersect(s, d, d - canonical(s))
    if twice % 2:
        raise ConsistencyError(f"D·(D-K) is odd for D={d} on {s.label}")
    return 1 + twice // 2


def h0_line(s: Surface, d: DivisorClass) -> int:
    """h0(O(D)) for D = (a, b) on F_e or D = (m) on P^2."""
    check_class(s, d)
    if not s.is_hirzebruch:
        m = d[0]
        return 0 if m < 0 else (m + 1) * (m + 2) // 2
    a, b = d.coords
    if a < 0:
        return 0
    # π_* O(aC0 + bF) = ⊕_{j=0..a} O_{P^1}(b - je)
    return sum(max(0, b - j * s.e + 1) for j in range(a + 1))


def lattice_point_count(s: Surface, d: DivisorClass) -> int:
    """Lattice points of the section polytope of O(D), counted point by point.

    F_e is toric with fan rays (1,0), (0,1), (-1,e), (0,-1); the polytope of
    aC0 + bF is {(u, v) : 0 <= v <= a, 0 <= u <= b - e·v}.
    """
    check_class(s, d)
    if not s.is_hirzebruch:
        m = d[0]
        return sum(1 for i in range(m + 1) for j in range(m + 1 - i)) if m >= 0 else 0
    a, b = d.coords
    return sum(1 for v in range(a + 1) for u in range(b + 1) if u <= b - s.e * v)


def cohomology_line(s: Surface, d: DivisorClass) -> CohomologyTriple:
    """(h0, h1, h2) of O(D).

    Raises:
        ConsistencyError: If the derived h1 is negative
    """
    h0 = h0_line(s, d)
    h2 = h0_line(s, canonical(s) - d)
    h1 = h0 + h2 - chi_line(s, d)
    if h1 < 0:
        logger.error("h1 of O%s on %s came out as %d", d, s.label, h1)
        raise ConsistencyError(f"Negative h1 = {h1} for O{d} on {s.label}")
    return CohomologyTriple(h0=h0, h1=h1, h2=h2)


def validate_zmodel(s: Surface, z: ZModel) -> None:
    """Check every override against max(0, h0(M) - ℓ) <= value <= h0(M).

    Raises:
        InvalidInputError: If an override lies outside that range
    """
    for override in z.overrides:
        check_class(s, override.twist)
        top = h0_line(s, override.twist)
        bottom = max(0, top - z.length)
        if not bottom <= override.h0 <= top:
            raise InvalidInputError(
                f"Override h0(I_Z{override.twist}) = {override.h0} outside [{bottom}, {top}] "
                f"for a cycle of length {z.length}"
            )


def h0_ideal(s: Surface, d: DivisorClass, z: ZModel) -> int:
    """h0(I_Z(D)): the declared value, or max(0, h0(O(D)) - ℓ)."""
    declared = z.override_for(d)
    if declared is not None:
        return declared
    return max(0, h0_line(s, d) - z.length)


def cohomology_ideal(s: Surface, d: DivisorClass, z: ZModel) -> CohomologyTriple:
    """(h0, h1, h2) of I_Z(D) using χ(I_Z(D)) = χ(O(D)) - ℓ.

    Raises:
        InvalidInputError: If ``z`` carries an out-of-range override
        ConsistencyError: If the derived h1 is negative
    """
    validate_zmodel(s, z)
    h0 = h0_ideal(s, d, z)
    h2 = h0_line(s, canonical(s) - d)
    h1 = h0 - (chi_line(s, d) - z.length) + h2
    if h1 < 0:
        logger.error("h1 of I_Z%s with length %d came out as %d", d, z.length, h1)
        raise ConsistencyError(f"Negative h1 = {h1} for I_Z{d} with length {z.length}")
    return CohomologyTriple(h0=h0, h1=h1, h2=h2)


def chi_projective_space(n: int, d: int) -> int:
    """χ(O_{P^n}(d)) = C(d + n, n), valid for every integer d."""
    if n < 1:
        raise InvalidInputError(f"Projective space dimension must be positive, got {n}")
    numerator = 1
    for i in range(1, n + 1):
        numerator *= d + i
    result, rest = divmod(numerator, factorial(n))
    if rest:
        raise ConsistencyError(f"Non-integral χ(O_P{n}({d}))")
    return result
