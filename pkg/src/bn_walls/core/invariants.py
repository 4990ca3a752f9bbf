"""
Euler characteristics, moduli dimensions and Brill-Noether numbers.

For a rank-r sheaf type (r; c1, c2) on a surface with P_a = 0, Riemann-Roch
gives χ = r - c1·K/2 + c1²/2 - c2, and rank-2 moduli on F_e and P^2 have
dimension 4c2 - c1² - 3. The Brill-Noether number is ρ^k = dim M - k(k - χ).
"""

from bn_walls.core.cohomology import chi_projective_space
from bn_walls.core.picard import canonical, check_class, intersect, require_ample
from bn_walls.exceptions import ConsistencyError, InvalidInputError
from bn_walls.models.chern import (
    BNDefinedCheck,
    BNRecord,
    ChernData,
    CodimInterval,
    InstantonReport,
    InstantonRow,
    QuadricStratum,
)
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)

# Sections of instanton bundles in MI_0(n) never exceed two.
INSTANTON_NONEMPTY_KS: tuple[int, ...] = (1, 2)
INSTANTON_ROWS: tuple[int, ...] = (1, 2, 3)
INSTANTON_STABLE_RANGE = 13


def _require_rank_two(c: ChernData) -> None:
    if c.rank != 2:
        raise InvalidInputError(f"Only rank-2 moduli dimensions are known, got rank {c.rank}")


def chi_sheaf(s: Surface, c: ChernData) -> int:
    """χ(r; c1, c2) = r(1 + P_a) - c1·K/2 + c1²/2 - c2.

    Raises:
        InvalidInputError: If c1 does not belong to ``s``
        ConsistencyError: If c1² - c1·K is odd
    """
    check_class(s, c.c1)
    twice = intersect(s, c.c1, c.c1) - intersect(s, c.c1, canonical(s))
    if twice % 2:
        raise ConsistencyError(f"c1² - c1·K is odd for c1={c.c1} on {s.label}")
    return c.rank * (1 + s.arithmetic_genus) + twice // 2 - c.c2


def moduli_dim(s: Surface, c: ChernData) -> int:
    """dim M(2; c1, c2) = 4c2 - c1² - 3."""
    _require_rank_two(c)
    return 4 * c.c2 - intersect(s, c.c1, c.c1) - 3


def bn_number(s: Surface, c: ChernData, k: int) -> BNRecord:
    """Brill-Noether number ρ^k with the χ and dim M it was built from."""
    _require_rank_two(c)
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    chi = chi_sheaf(s, c)
    dim = moduli_dim(s, c)
    return BNRecord(k=k, chi=chi, moduli_dim=dim, rho=dim - k * (k - chi))


def check_bn_defined(s: Surface, h: DivisorClass, r: int, c1: DivisorClass) -> BNDefinedCheck:
    """Test c1·H >= r(K·H), the hypothesis under which W^k_H is defined.

    Equality satisfies the stated hypothesis but not the strict inequality the
    vanishing H^2(E) = 0 is derived from, so it carries a warning.

    Raises:
        InvalidInputError: If H is not ample
    """
    require_ample(s, h)
    if r < 1:
        raise InvalidInputError(f"Rank must be positive, got {r}")
    lhs = intersect(s, c1, h)
    bound = r * intersect(s, canonical(s), h)
    warnings: list[str] = []
    if lhs == bound:
        message = (
            f"c1·H = r(K·H) = {lhs}: the hypothesis holds with equality; "
            "H^2 vanishing is only derived under strict inequality"
        )
        logger.warning(message)
        warnings.append(message)
    return BNDefinedCheck(
        defined=lhs >= bound, c1_dot_h=lhs, bound=bound, equality=lhs == bound, warnings=warnings
    )


def bn_defined(s: Surface, h: DivisorClass, r: int, c1: DivisorClass) -> bool:
    return check_bn_defined(s, h, r, c1).defined


def gh_codim_bounds(c: ChernData) -> CodimInterval:
    """Codimension bounds of W^{χ⁺+1}(r; c1, c2) on P^2.

    χ > 0 gives [2, χ + 1], χ = 0 gives [1, 1], and χ < 0 gives only the upper
    bound (χ⁺ + 1)(χ⁺ + 1 - χ).

    Raises:
        InvalidInputError: If c1 <= -3r or c1 is not a class on P^2
    """
    plane = Surface.projective_plane()
    check_class(plane, c.c1)
    if c.c1[0] <= -3 * c.rank:
        raise InvalidInputError(f"Need c1 > -3r, got c1={c.c1[0]} with r={c.rank}")
    chi = chi_sheaf(plane, c)
    chi_plus = max(chi, 0)
    k = chi_plus + 1
    if chi > 0:
        return CodimInterval(lower=2, upper=chi + 1, chi=chi, chi_plus=chi_plus, k=k)
    if chi == 0:
        return CodimInterval(lower=1, upper=1, chi=chi, chi_plus=chi_plus, k=k)
    return CodimInterval(lower=None, upper=k * (k - chi), chi=chi, chi_plus=chi_plus, k=k)


def quadric_strata(n: int) -> list[QuadricStratum]:
    """Rows k = 1..n for (2; (2n-1)l_2, 2n) on P^1 x P^1 at L = l_1 + n l_2.

    Raises:
        InvalidInputError: If n < 2
        ConsistencyError: If χ or dim M disagree with 1 and 8n - 3
    """
    if n < 2:
        raise InvalidInputError(f"The quadric family needs n >= 2, got {n}")
    quadric = Surface.hirzebruch(0)
    chern = ChernData(rank=2, c1=DivisorClass.of(0, 2 * n - 1), c2=2 * n)
    rows: list[QuadricStratum] = []
    for k in range(1, n + 1):
        record = bn_number(quadric, chern, k)
        if record.chi != 1 or record.moduli_dim != 8 * n - 3:
            raise ConsistencyError(
                f"Quadric family n={n}: χ={record.chi}, dim={record.moduli_dim}, "
                f"expected 1 and {8 * n - 3}"
            )
        known = 8 * n - 2 * k - 1
        rows.append(
            QuadricStratum(
                **record.model_dump(),
                known_dim=known,
                negative_but_nonempty=record.rho < 0,
                exceeds_expected=0 < record.rho < known,
            )
        )
    return rows


def instanton_chi_from_monad(n: int) -> int:
    """χ(E) from 0 → O(-1)^{n-1} → O^{2n} → O(1)^{n-1} → 0 twisted by O(1)."""
    return (
        2 * n * chi_projective_space(3, 1)
        - (n - 1) * chi_projective_space(3, 2)
        - (n - 1) * chi_projective_space(3, 0)
    )


def instanton_report(n: int) -> InstantonReport:
    """Brill-Noether table of the 't Hooft component MI_0(n) for k = 1, 2, 3.

    Raises:
        InvalidInputError: If n < 1
        ConsistencyError: If the monad χ disagrees with -3n + 11, or (for n > 13)
            non-emptiness, ρ^k >= 0 and k < 3 fail to coincide
    """
    if n < 1:
        raise InvalidInputError(f"Instanton charge must be positive, got {n}")
    chi = -3 * n + 11
    from_monad = instanton_chi_from_monad(n)
    if from_monad != chi:
        raise ConsistencyError(f"Monad χ = {from_monad} differs from -3n+11 = {chi}")
    dim = 8 * n - 11
    known = {1: 5 * n - 1, 2: 2 * n + 7}
    stable_range = n > INSTANTON_STABLE_RANGE

    rows: list[InstantonRow] = []
    for k in INSTANTON_ROWS:
        rows.append(
            InstantonRow(
                k=k,
                chi=chi,
                moduli_dim=dim,
                rho=dim - k * (k - chi),
                nonempty=k in INSTANTON_NONEMPTY_KS,
                known_dim=known.get(k) if stable_range else None,
            )
        )

    if stable_range:
        for row in rows:
            if not (row.nonempty == (row.rho >= 0) == (row.k < 3)):
                raise ConsistencyError(f"n={n}, k={row.k}: non-emptiness and ρ^k >= 0 disagree")

    return InstantonReport(
        n=n,
        chi=chi,
        chi_from_monad=from_monad,
        moduli_dim=dim,
        rows=rows,
        nonempty_ks=list(INSTANTON_NONEMPTY_KS),
        equivalence_asserted=stable_range,
    )


def classical_bn_number(g: int, r: int, d: int) -> int:
    """ρ(g, r, d) = g - (r + 1)(g - d + r) for linear series on a genus-g curve."""
    if g < 0 or r < 0:
        raise InvalidInputError(f"Need g >= 0 and r >= 0, got g={g}, r={r}")
    return g - (r + 1) * (g - d + r)
