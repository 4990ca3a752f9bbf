"""
Extension families E_ξ and the wall-crossing decomposition.

Crossing a wall W^ξ from L2 to L1 (ξ·L1 > 0 > ξ·L2) removes the family E_ξ of
extensions 0 → O(D) → E → O(c1 - D) ⊗ I_Z → 0 with 2D - c1 = ξ and adds E_{-ξ}:

    M_{L1} = (M_{L2} minus E_ξ) ⊔ E_{-ξ}

The dimension of E_ξ is h1(I_Z(c1 - 2D + K)) + 2ℓ - h0(E(-D)) for a generic
cycle Z of length ℓ, with h0(E(-D)) = 1 for the defining section.
"""

from bn_walls.core.cohomology import cohomology_ideal
from bn_walls.core.invariants import bn_number, check_bn_defined, chi_sheaf
from bn_walls.core.picard import (
    canonical,
    intersect,
    is_ample,
    parity_compatible,
    require_ample,
    require_hirzebruch,
)
from bn_walls.core.walls import (
    compare_chambers,
    is_wall_class,
    separating_walls,
    wall_hyperplanes,
    wall_polarization,
)
from bn_walls.exceptions import (
    BoundaryPolarizationError,
    ConsistencyError,
    InvalidInputError,
)
from bn_walls.models.chern import ChernData
from bn_walls.models.cohomology import ZModel
from bn_walls.models.crossing import (
    BNIdentification,
    CrossingReport,
    ExtFamily,
    HirzebruchScenario,
    WallCrossingEntry,
)
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.models.walls import ChamberRelation, WallClass
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)

GENERIC_SUB_SECTIONS = 1
SUB_SECTIONS_ASSUMPTION = "h0(E(-D)) = 1 for generic members of every E_xi"


def sub_line_bundle(xi: DivisorClass, c1: DivisorClass) -> DivisorClass:
    """D = (ξ + c1)/2.

    Raises:
        ConsistencyError: If ξ + c1 is not divisible by 2
    """
    total = xi + c1
    if any(c % 2 for c in total.coords):
        raise ConsistencyError(f"ξ + c1 = {total} is not divisible by 2")
    return DivisorClass(coords=tuple(c // 2 for c in total.coords))


def _ext1(s: Surface, c1: DivisorClass, sub: DivisorClass, length: int) -> int:
    twist = c1 - 2 * sub + canonical(s)
    return cohomology_ideal(s, twist, ZModel.generic(length)).h1


def _family_dim(ext1: int, length: int, h0_sub: int) -> int | None:
    if length == 0 and ext1 == 0:
        return None
    dim = ext1 + 2 * length - h0_sub
    if dim < 0:
        raise ConsistencyError(f"Negative family dimension {dim} (ext1={ext1}, ℓ={length})")
    return dim


def ext_family(s: Surface, wall: WallClass, c1: DivisorClass, c2: int) -> ExtFamily:
    """The family E_ξ for an oriented wall ξ of type (c1, c2).

    A wall with ℓ = 0 whose extension group vanishes carries only split
    bundles, so its family is empty.
    """
    require_hirzebruch(s, "Extension families")
    if not parity_compatible(s, wall.xi, c1):
        raise ConsistencyError(f"ξ={wall.xi} is not parity compatible with c1={c1}")
    sub = sub_line_bundle(wall.xi, c1)
    ext1 = _ext1(s, c1, sub, wall.length)
    dim = _family_dim(ext1, wall.length, GENERIC_SUB_SECTIONS)
    if dim is None:
        logger.warning(f"E_ξ for ξ={wall.xi} is empty: ℓ = 0 and Ext^1 vanishes")
    else:
        logger.debug(f"E_ξ for ξ={wall.xi}: D={sub}, ℓ={wall.length}, ext1={ext1}, dim={dim}")
    return ExtFamily(
        wall=wall,
        c1=c1,
        c2=c2,
        sub=sub,
        length=wall.length,
        ext1=ext1,
        h0_sub=GENERIC_SUB_SECTIONS,
        dim=dim,
        empty=dim is None,
    )


def dim_ext_family(s: Surface, family: ExtFamily) -> int | None:
    """Recompute dim E_ξ from the cohomology of I_Z(c1 - 2D + K)."""
    ext1 = _ext1(s, family.c1, family.sub, family.length)
    return _family_dim(ext1, family.length, family.h0_sub)


def bn_identification(
    s: Surface, family: ExtFamily, polarization: DivisorClass
) -> BNIdentification:
    """Compare dim E_ξ with ρ^1 of (2; c1 - 2D, ℓ), the type of E(-D)."""
    chern = ChernData(rank=2, c1=family.c1 - 2 * family.sub, c2=family.length)
    check = check_bn_defined(s, polarization, 2, chern.c1)
    expected = bn_number(s, chern, 1).rho
    return BNIdentification(
        xi=family.xi,
        sub=family.sub,
        chern=chern,
        k=1,
        polarization=polarization,
        bn_defined=check.defined,
        expected_rho=expected,
        family_dim=family.dim,
        matched=family.dim == expected,
    )


def crossing_report(
    s: Surface, c1: DivisorClass, c2: int, l1: DivisorClass, l2: DivisorClass
) -> CrossingReport:
    """Families removed and added when moving the polarization from L2 to L1.

    Raises:
        InvalidInputError: If either class is not ample or lies on a wall
    """
    require_hirzebruch(s, "Crossing reports")
    require_ample(s, l1, "L1")
    require_ample(s, l2, "L2")
    comparison = compare_chambers(s, c1, c2, l1, l2)
    if comparison.relation is ChamberRelation.ON_WALL:
        raise InvalidInputError(f"{l1} or {l2} lies on a wall of type ({c1}, {c2})")
    if comparison.relation is ChamberRelation.SAME:
        return CrossingReport(from_pol=l1, to_pol=l2, c1=c1, c2=c2)

    walls = separating_walls(s, c1, c2, l1, l2)
    entries: list[WallCrossingEntry] = []
    removed: list[ExtFamily] = []
    added: list[ExtFamily] = []
    identifications: list[BNIdentification] = []
    for wall in walls:
        entries.append(
            WallCrossingEntry(
                wall=wall,
                from_dot=intersect(s, wall.xi, l1),
                to_dot=intersect(s, wall.xi, l2),
                wall_polarization=wall_polarization(s, wall.xi, l1, l2),
            )
        )
        leaving = ext_family(s, wall, c1, c2)
        entering = ext_family(s, wall.flipped(), c1, c2)
        removed.append(leaving)
        added.append(entering)
        identifications.append(bn_identification(s, leaving, l2))
        identifications.append(bn_identification(s, entering, l1))

    hyperplanes = len(wall_hyperplanes(walls))
    if hyperplanes > 1:
        logger.warning(
            f"{l1} and {l2} are separated by {hyperplanes} wall hyperplanes; "
            "the decomposition holds one wall at a time"
        )
    return CrossingReport(
        from_pol=l1,
        to_pol=l2,
        c1=c1,
        c2=c2,
        walls=entries,
        hyperplanes=hyperplanes,
        adjacent=hyperplanes == 1,
        removed=removed,
        added=added,
        bn_identifications=identifications,
        assumptions=[SUB_SECTIONS_ASSUMPTION],
    )


def hirzebruch_polarizations(
    e: int, alpha: int, c2: int, n: int
) -> tuple[DivisorClass, DivisorClass, DivisorClass]:
    """(L_n, L_{n+1}, ξ_n) for c1 = C0 + αF.

    L_n = C0 + (e + 2c2 - α - 2n + 1)F and ξ_n = C0 - (2c2 - α - 2n)F, so that
    L_{n+1}·ξ_n = -1 < 0 < 1 = L_n·ξ_n.
    """
    _check_scenario_range(e, alpha, c2, n)
    l_n = DivisorClass.of(1, e + 2 * c2 - alpha - 2 * n + 1)
    l_next = DivisorClass.of(1, e + 2 * c2 - alpha - 2 * n - 1)
    xi_n = DivisorClass.of(1, -(2 * c2 - alpha - 2 * n))
    return l_n, l_next, xi_n


def _check_scenario_range(e: int, alpha: int, c2: int, n: int) -> None:
    if e < 0:
        raise InvalidInputError(f"e must be non-negative, got {e}")
    if alpha not in (0, 1):
        raise InvalidInputError(f"alpha must be 0 or 1, got {alpha}")
    if c2 < 2:
        raise InvalidInputError(f"c2 must be at least 2, got {c2}")
    if not 1 <= n <= c2 - 1:
        raise InvalidInputError(f"n must satisfy 1 <= n <= c2 - 1 = {c2 - 1}, got {n}")


def _expect(label: str, computed: int | None, closed_form: int) -> int:
    if computed != closed_form:
        raise ConsistencyError(f"{label}: pipeline gives {computed}, closed form {closed_form}")
    return closed_form


def hirzebruch_scenario(e: int, alpha: int, c2: int, n: int) -> HirzebruchScenario:
    """The crossing between L_n and L_{n+1} for M(2; C0 + αF, c2) on F_e.

    Raises:
        InvalidInputError: If a parameter is out of range
        BoundaryPolarizationError: If L_{n+1} is not ample (α = 1, n = c2 - 1)
        ConsistencyError: If a pipeline value disagrees with its closed form
    """
    _check_scenario_range(e, alpha, c2, n)
    s = Surface.hirzebruch(e)
    c1 = DivisorClass.of(1, alpha)
    l_n, l_next, xi_n = hirzebruch_polarizations(e, alpha, c2, n)
    if not is_ample(s, l_next):
        raise BoundaryPolarizationError(
            f"L_{n + 1} = {l_next} lies on the boundary of the ample cone of F{e} "
            f"(alpha={alpha}, n={n}, c2={c2})"
        )

    check = is_wall_class(s, xi_n, c1, c2)
    if check.wall is None or check.wall.length != n:
        raise ConsistencyError(f"ξ_{n} = {xi_n} is not a wall of length {n}: {check.detail}")
    wall = check.wall
    _expect("ξ_n²", wall.xi_sq, -e - 2 * (2 * c2 - alpha - 2 * n))

    separating = separating_walls(s, c1, c2, l_n, l_next)
    extra = [w for w in separating if w.xi != xi_n]
    unique = len(separating) == 1 and not extra
    xi_hyperplane = next((g for g in wall_hyperplanes(separating) if xi_n in [w.xi for w in g]), [])
    unique_on_hyperplane = [w.xi for w in xi_hyperplane] == [xi_n]
    warnings: list[str] = []
    if not unique:
        message = (
            f"L_{n} and L_{n + 1} are also separated by "
            + ", ".join(str(w.xi) for w in extra)
        )
        logger.warning(message)
        warnings.append(message)

    dim_minus = _expect("dim E_{-ξ_n}", ext_family(s, wall.flipped(), c1, c2).dim, 3 * n - 1)
    dim_plus = _expect(
        "dim E_{ξ_n}", ext_family(s, wall, c1, c2).dim, 4 * c2 - n + e - 2 * alpha - 3
    )

    c1_tilde = DivisorClass.of(1, alpha + 2 * n - 2 * c2)
    c1_bar = DivisorClass.of(-1, 2 * c2 - alpha - 2 * n)
    tilde = ChernData(rank=2, c1=c1_tilde, c2=n)
    bar = ChernData(rank=2, c1=c1_bar, c2=n)
    chi_tilde = _expect("χ(2; c̃1, n)", chi_sheaf(s, tilde), 3 * n - 4 * c2 + 2 * alpha - e + 3)
    chi_bar = _expect("χ(2; c̄1, n)", chi_sheaf(s, bar), 1 - n)
    defined_tilde = check_bn_defined(s, l_n, 2, c1_tilde)
    defined_bar = check_bn_defined(s, l_next, 2, c1_bar)
    warnings.extend(defined_tilde.warnings + defined_bar.warnings)
    rho_tilde = bn_number(s, tilde, 1).rho
    rho_bar = bn_number(s, bar, 1).rho

    decomposition = (
        f"M_L{n}(2; {c1}, {c2}) = (M_L{n + 1}(2; {c1}, {c2}) minus "
        f"W^1_L{n + 1}(2; {c1_bar}, {n})) union W^1_L{n}(2; {c1_tilde}, {n})"
    )
    if extra:
        decomposition += (
            f" across the wall of xi_{n} alone; the path from L_{n} to L_{n + 1} also crosses "
            + ", ".join(str(w.xi) for w in extra)
        )
    return HirzebruchScenario(
        e=e,
        alpha=alpha,
        c2=c2,
        n=n,
        c1=c1,
        l_n=l_n,
        l_next=l_next,
        xi_n=xi_n,
        xi_n_sq=wall.xi_sq,
        separating=separating,
        unique_wall=unique,
        unique_on_hyperplane=unique_on_hyperplane,
        extra_walls=extra,
        c1_tilde=c1_tilde,
        c1_bar=c1_bar,
        chi_tilde=chi_tilde,
        chi_bar=chi_bar,
        bn_defined_tilde=defined_tilde.defined,
        bn_defined_bar=defined_bar.defined,
        dim_minus=dim_minus,
        dim_plus=dim_plus,
        rho_tilde=rho_tilde,
        rho_bar=rho_bar,
        matched_tilde=dim_minus == rho_tilde,
        matched_bar=dim_plus == rho_bar,
        decomposition=decomposition,
        warnings=warnings,
    )
