"""Wall-crossing data models: extension families and crossing reports."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bn_walls.models.chern import ChernData
from bn_walls.models.surface import DivisorClass
from bn_walls.models.walls import WallClass


class ExtFamily(BaseModel):
    """The family E_ξ of extensions 0 → O(D) → E → O(c1-D) ⊗ I_Z → 0.

    Attributes:
        wall: Oriented wall class ξ = 2D - c1
        c1, c2: Chern classes of the bundles E
        sub: The sub-line-bundle class D
        length: Length ℓ of Z
        ext1: Dimension of the extension group, h1(I_Z(c1 - 2D + K))
        h0_sub: Assumed h0(E(-D)) of a generic member
        dim: Dimension of the family, None when the family is empty
        empty: True when only split extensions exist and ℓ = 0
    """

    wall: WallClass
    c1: DivisorClass
    c2: int
    sub: DivisorClass
    length: int = Field(..., ge=0)
    ext1: int = Field(default=0, ge=0)
    h0_sub: int = Field(default=1, ge=0)
    dim: int | None = Field(default=None, ge=0)
    empty: bool = False

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _consistent(self) -> "ExtFamily":
        if self.sub * 2 - self.c1 != self.wall.xi:
            raise ValueError("sub-line bundle D must satisfy 2D - c1 = xi")
        if self.length != self.wall.length:
            raise ValueError("family length must equal the wall length")
        if self.empty and self.dim is not None:
            raise ValueError("an empty family has no dimension")
        if not self.empty and self.dim is None:
            raise ValueError("a non-empty family needs a dimension")
        return self

    @property
    def xi(self) -> DivisorClass:
        return self.wall.xi


class BNIdentification(BaseModel):
    """Comparison of dim E_ξ with ρ^1 of the twisted bundles E(-D)."""

    xi: DivisorClass
    sub: DivisorClass
    chern: ChernData = Field(..., description="(2; c1 - 2D, ℓ), the type of E(-D)")
    k: int = 1
    polarization: DivisorClass
    bn_defined: bool
    expected_rho: int
    family_dim: int | None
    matched: bool

    model_config = ConfigDict(frozen=True)


class WallCrossingEntry(BaseModel):
    """One separating wall, oriented so that ξ·from > 0."""

    wall: WallClass
    from_dot: int = Field(..., gt=0)
    to_dot: int = Field(..., lt=0)
    wall_polarization: DivisorClass = Field(
        ..., description="Ample class on the wall: (ξ·L2)L1 - (ξ·L1)L2 up to sign"
    )

    model_config = ConfigDict(frozen=True)


class CrossingReport(BaseModel):
    """Families exchanged between the moduli spaces at two polarizations.

    M_{from} = (M_{to} minus the removed families) plus the added families,
    whenever the two chambers share a common wall (``adjacent``).
    """

    from_pol: DivisorClass
    to_pol: DivisorClass
    c1: DivisorClass
    c2: int
    walls: list[WallCrossingEntry] = Field(default_factory=list)
    hyperplanes: int = Field(default=0, ge=0, description="Distinct wall hyperplanes crossed")
    adjacent: bool = False
    removed: list[ExtFamily] = Field(default_factory=list)
    added: list[ExtFamily] = Field(default_factory=list)
    bn_identifications: list[BNIdentification] = Field(default_factory=list)
    assumptions: list[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _paired(self) -> "CrossingReport":
        removed = sorted(f.xi for f in self.removed)
        negated = sorted(-f.xi for f in self.added)
        if removed != negated:
            raise ValueError("removed and added families must pair up via xi <-> -xi")
        return self

    @property
    def is_empty(self) -> bool:
        return not self.removed and not self.added


class HirzebruchScenario(BaseModel):
    """The F_e wall-crossing between L_n and L_{n+1} for c1 = C0 + αF."""

    e: int = Field(..., ge=0)
    alpha: int = Field(..., ge=0, le=1)
    c2: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    c1: DivisorClass
    l_n: DivisorClass
    l_next: DivisorClass
    xi_n: DivisorClass
    xi_n_sq: int
    separating: list[WallClass]
    unique_wall: bool = Field(..., description="separating walls are exactly {ξ_n}")
    unique_on_hyperplane: bool = Field(
        ..., description="ξ_n is the only separating class on its own hyperplane"
    )
    extra_walls: list[WallClass] = Field(default_factory=list)
    c1_tilde: DivisorClass
    c1_bar: DivisorClass
    chi_tilde: int
    chi_bar: int
    bn_defined_tilde: bool
    bn_defined_bar: bool
    dim_minus: int = Field(..., description="dim E_{-ξ_n} through the cohomology pipeline")
    dim_plus: int = Field(..., description="dim E_{ξ_n} through the cohomology pipeline")
    rho_tilde: int = Field(..., description="ρ^1 of (2; c̃1, n) at L_n")
    rho_bar: int = Field(..., description="ρ^1 of (2; c̄1, n) at L_{n+1}")
    matched_tilde: bool
    matched_bar: bool
    decomposition: str
    warnings: list[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)
