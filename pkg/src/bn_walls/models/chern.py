"""Chern data and Brill-Noether invariant models."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bn_walls.models.surface import DivisorClass


class ChernData(BaseModel):
    """Topological type (r; c1, c2) of a sheaf on a surface."""

    rank: int = Field(..., ge=1, description="Rank r")
    c1: DivisorClass = Field(..., description="First Chern class")
    c2: int = Field(..., description="Second Chern class (degree)")

    model_config = ConfigDict(frozen=True)


class BNRecord(BaseModel):
    """Brill-Noether number ρ^k = dim M - k(k - χ) with its ingredients."""

    k: int = Field(..., ge=0)
    chi: int
    moduli_dim: int
    rho: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _rho_identity(self) -> "BNRecord":
        if self.rho != self.moduli_dim - self.k * (self.k - self.chi):
            raise ValueError("rho must equal moduli_dim - k(k - chi)")
        return self


class BNDefinedCheck(BaseModel):
    """Outcome of the c1·H >= r K·H test that makes the stratification defined."""

    defined: bool
    c1_dot_h: int
    bound: int = Field(..., description="r (K·H)")
    equality: bool = Field(..., description="True when c1·H = r K·H exactly")
    warnings: list[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)


class CodimInterval(BaseModel):
    """Codimension bounds of W^{χ⁺+1} on P^2; ``lower`` is absent when unknown."""

    lower: int | None = Field(default=None, ge=0)
    upper: int = Field(..., ge=0)
    chi: int
    chi_plus: int = Field(..., ge=0)
    k: int = Field(..., ge=1, description="Index χ⁺+1 of the locus")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _ordered(self) -> "CodimInterval":
        if self.lower is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        return self


class QuadricStratum(BNRecord):
    """One row of the quadric-surface stratification W^1 ⊃ ... ⊃ W^n."""

    known_dim: int = Field(..., description="Dimension 8n - 2k - 1 of the constructed locus")
    negative_but_nonempty: bool = Field(..., description="ρ^k < 0 although W^k is non-empty")
    exceeds_expected: bool = Field(..., description="known_dim > ρ^k > 0")


class InstantonRow(BNRecord):
    """ρ^k of the 't Hooft component for one k."""

    nonempty: bool
    known_dim: int | None = Field(default=None, description="Dimension of W^k when identified")


class InstantonReport(BaseModel):
    """Brill-Noether numerology of MI_0(n) on P^3 (c1 = 2, c2 = n)."""

    n: int = Field(..., ge=1)
    chi: int
    chi_from_monad: int
    moduli_dim: int
    rows: list[InstantonRow]
    nonempty_ks: list[int]
    equivalence_asserted: bool = Field(
        ..., description="W^k non-empty iff ρ^k >= 0 iff k < 3 (checked when n > 13)"
    )

    model_config = ConfigDict(frozen=True)
