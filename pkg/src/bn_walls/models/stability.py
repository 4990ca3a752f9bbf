"""Extension-bundle stability models."""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from bn_walls.models.cohomology import ZModel
from bn_walls.models.surface import DivisorClass


class Route(str, Enum):
    """How a destabilizing line bundle O(A) maps into the extension."""

    INTO_SUB = "into_sub"
    INTO_QUOTIENT = "into_quotient"


class ExtensionData(BaseModel):
    """A rank-2 bundle 0 → O(D) → E → O(c1 - D) ⊗ I_Z → 0 on F_e."""

    sub: DivisorClass = Field(..., description="Sub-line-bundle class D")
    c1: DivisorClass
    z: ZModel

    model_config = ConfigDict(frozen=True)

    @property
    def quotient(self) -> DivisorClass:
        return self.c1 - self.sub


class Destabilizer(BaseModel):
    """A sub-line bundle O(A) ⊂ E with μ_L(O(A)) >= μ_L(E)."""

    a: DivisorClass
    route: Route
    slope_excess: Fraction = Field(..., description="A·L - c1·L/2")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("slope_excess", mode="before")
    @classmethod
    def _parse_rational(cls, v: object) -> object:
        if isinstance(v, (str, int)) and not isinstance(v, bool):
            return Fraction(v)
        return v

    @field_validator("slope_excess")
    @classmethod
    def _non_negative(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError("slope excess must be non-negative")
        return v

    @field_serializer("slope_excess")
    def _rational(self, v: Fraction) -> str:
        return f"{v.numerator}/{v.denominator}"

    @property
    def strictly_semistable(self) -> bool:
        """True when the witness only violates strict stability."""
        return self.slope_excess == 0


class SectionBound(BaseModel):
    """h0(E), exact when ``lower == upper``."""

    lower: int = Field(..., ge=0)
    upper: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None


class StabilityVerdict(BaseModel):
    """Everything the oracle decides about one extension at one polarization."""

    polarization: DivisorClass
    extension: ExtensionData
    c2: int
    destabilizers: list[Destabilizer]
    stable: bool
    strictly_semistable: bool = Field(
        ..., description="Unstable only through witnesses of slope excess 0"
    )
    h0: SectionBound

    model_config = ConfigDict(frozen=True)


class QuadricWitness(BaseModel):
    """Verdict for one member of the quadric family at L = C0 + nF."""

    n: int
    special: int | None = Field(default=None, description="Index i of E_i, None for the generic member")
    stable: bool
    h0: int
    expected_h0: int
    in_strata: list[int] = Field(..., description="k with E in W^k")

    model_config = ConfigDict(frozen=True)
