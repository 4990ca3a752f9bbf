"""
Brute-force slope-stability oracle for rank-2 extensions on F_e.

For E given by 0 → O(D) → E → O(c1 - D) ⊗ I_Z → 0, a sub-line bundle O(A)
either maps into O(D), which needs D - A effective, or maps nonzero to the
quotient, which needs a section of I_Z(c1 - D - A). E is L-stable iff no such A
has 2(A·L) >= c1·L. Both routes bound A from above, and the slope inequality
with L ample bounds it from below, so the scan is finite.
"""

from fractions import Fraction
from math import ceil

from bn_walls.core.cohomology import cohomology_line, h0_ideal, h0_line, validate_zmodel
from bn_walls.core.picard import (
    check_class,
    intersect,
    is_effective,
    require_ample,
    require_hirzebruch,
)
from bn_walls.exceptions import InvalidInputError
from bn_walls.models.cohomology import SectionOverride, ZModel
from bn_walls.models.stability import (
    Destabilizer,
    ExtensionData,
    QuadricWitness,
    Route,
    SectionBound,
    StabilityVerdict,
)
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)


def extension_c2(s: Surface, ext: ExtensionData) -> int:
    """c2(E) = D·(c1 - D) + ℓ.

    Raises:
        InvalidInputError: If the resulting c2 is negative
    """
    c2 = intersect(s, ext.sub, ext.quotient) + ext.z.length
    if c2 < 0:
        raise InvalidInputError(f"Extension data gives c2 = {c2} < 0")
    return c2


def _check_extension(s: Surface, ext: ExtensionData) -> None:
    require_hirzebruch(s, "The stability oracle")
    check_class(s, ext.sub)
    check_class(s, ext.c1)
    validate_zmodel(s, ext.z)


def search_box(
    s: Surface, polarization: DivisorClass, c1: DivisorClass, top: DivisorClass, inflation: int = 1
) -> tuple[range, range]:
    """Ranges of x and y for candidates A = (x, y) <= top with 2(A·L) >= c1·L.

    With L = (a, b) and u = b - ae > 0, A·L = xu + ya, so x >= (c1·L - 2a·Y)/(2u)
    and y >= (c1·L - 2u·X)/(2a) where (X, Y) = top. ``inflation`` > 1 widens the
    box symmetrically by that factor.
    """
    if inflation < 1:
        raise InvalidInputError(f"Inflation must be at least 1, got {inflation}")
    a = polarization[0]
    u = polarization[1] - a * s.e
    c1_l = intersect(s, c1, polarization)
    x_top, y_top = top.coords
    x_low = ceil(Fraction(c1_l - 2 * a * y_top, 2 * u))
    y_low = ceil(Fraction(c1_l - 2 * u * x_top, 2 * a))
    x_extra = (inflation - 1) * max(x_top - x_low + 1, 1)
    y_extra = (inflation - 1) * max(y_top - y_low + 1, 1)
    return (
        range(x_low - x_extra, x_top + x_extra + 1),
        range(y_low - y_extra, y_top + y_extra + 1),
    )


def destabilizers(
    s: Surface, polarization: DivisorClass, ext: ExtensionData, inflation: int = 1
) -> list[Destabilizer]:
    """All O(A) ⊂ E violating strict L-stability, ordered by route then class.

    Raises:
        InvalidInputError: If L is not ample or the extension data is invalid
    """
    _check_extension(s, ext)
    require_ample(s, polarization)
    c1_l = intersect(s, ext.c1, polarization)
    found: list[Destabilizer] = []
    scanned = 0

    for route, top in ((Route.INTO_SUB, ext.sub), (Route.INTO_QUOTIENT, ext.quotient)):
        xs, ys = search_box(s, polarization, ext.c1, top, inflation)
        for x in xs:
            for y in ys:
                scanned += 1
                a = DivisorClass.of(x, y)
                twice_excess = 2 * intersect(s, a, polarization) - c1_l
                if twice_excess < 0:
                    continue
                if route is Route.INTO_SUB:
                    hit = is_effective(s, ext.sub - a)
                else:
                    hit = h0_ideal(s, ext.quotient - a, ext.z) > 0
                if hit:
                    found.append(
                        Destabilizer(a=a, route=route, slope_excess=Fraction(twice_excess, 2))
                    )

    found.sort(key=lambda d: (d.route.value, d.a.coords))
    logger.debug(f"Scanned {scanned} candidates at L={polarization}: {len(found)} destabilizers")
    return found


def is_stable(s: Surface, polarization: DivisorClass, ext: ExtensionData) -> bool:
    return not destabilizers(s, polarization, ext)


def h0_bundle(s: Surface, ext: ExtensionData) -> SectionBound:
    """h0(E) from the defining sequence.

    Exact when h1(O(D)) = 0, otherwise the interval between h0(O(D)) and
    h0(O(D)) + h0(I_Z(c1 - D)).
    """
    _check_extension(s, ext)
    sub_h0 = h0_line(s, ext.sub)
    quotient_h0 = h0_ideal(s, ext.quotient, ext.z)
    if cohomology_line(s, ext.sub).h1 == 0:
        return SectionBound(lower=sub_h0 + quotient_h0, upper=sub_h0 + quotient_h0)
    return SectionBound(lower=sub_h0, upper=sub_h0 + quotient_h0)


def stability_verdict(
    s: Surface, polarization: DivisorClass, ext: ExtensionData, inflation: int = 1
) -> StabilityVerdict:
    witnesses = destabilizers(s, polarization, ext, inflation)
    return StabilityVerdict(
        polarization=polarization,
        extension=ext,
        c2=extension_c2(s, ext),
        destabilizers=witnesses,
        stable=not witnesses,
        strictly_semistable=bool(witnesses) and all(w.strictly_semistable for w in witnesses),
        h0=h0_bundle(s, ext),
    )


def quadric_polarization(n: int) -> DivisorClass:
    """L = l_1 + n l_2 on P^1 x P^1 = F_0."""
    return DivisorClass.of(1, n)


def quadric_family_model(n: int, special: int | None = None) -> ExtensionData:
    """0 → O → E → O((2n-1)l_2) ⊗ I_Z → 0 with ℓ(Z) = 2n.

    The generic member uses a generic Z. E_i uses a cycle Z_i with
    h0(I_{Z_i}((2n-1)l_2)) = i and h0(I_{Z_i}((2n-i-1)l_2)) = 0.

    Raises:
        InvalidInputError: If n < 2 or i is outside 1..n-1
    """
    if n < 2:
        raise InvalidInputError(f"The quadric family needs n >= 2, got {n}")
    overrides: tuple[SectionOverride, ...] = ()
    if special is not None:
        if not 1 <= special <= n - 1:
            raise InvalidInputError(f"E_i needs 1 <= i <= n - 1 = {n - 1}, got {special}")
        overrides = (
            SectionOverride(twist=DivisorClass.of(0, 2 * n - 1), h0=special),
            SectionOverride(twist=DivisorClass.of(0, 2 * n - special - 1), h0=0),
        )
    return ExtensionData(
        sub=DivisorClass.zero(2),
        c1=DivisorClass.of(0, 2 * n - 1),
        z=ZModel(length=2 * n, overrides=overrides),
    )


def quadric_chain_witness(n: int, inflation: int = 1) -> list[QuadricWitness]:
    """Stability and h0 of the generic member and of each E_i, i = 1..n-1.

    E_i lies in W^1 ⊃ ... ⊃ W^{i+1}, so the list witnesses that each W^k,
    k <= n, is non-empty.
    """
    quadric = Surface.hirzebruch(0)
    polarization = quadric_polarization(n)
    witnesses: list[QuadricWitness] = []
    for special in [None, *range(1, n)]:
        ext = quadric_family_model(n, special)
        verdict = stability_verdict(quadric, polarization, ext, inflation)
        h0 = verdict.h0.lower
        witnesses.append(
            QuadricWitness(
                n=n,
                special=special,
                stable=verdict.stable,
                h0=h0,
                expected_h0=1 if special is None else special + 1,
                in_strata=[k for k in range(1, n + 1) if h0 >= k],
            )
        )
    return witnesses
