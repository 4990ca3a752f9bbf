"""Cohomology data models: line-bundle triples and 0-cycle genericity models."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bn_walls.models.surface import DivisorClass


class CohomologyTriple(BaseModel):
    """Dimensions (h0, h1, h2) of the cohomology of a sheaf on a surface."""

    h0: int = Field(..., ge=0)
    h1: int = Field(..., ge=0)
    h2: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)

    @property
    def euler_characteristic(self) -> int:
        return self.h0 - self.h1 + self.h2


class SectionOverride(BaseModel):
    """Declared value of h0(I_Z(M)) for one twist M."""

    twist: DivisorClass = Field(..., description="Twist M of the ideal sheaf")
    h0: int = Field(..., ge=0, description="Declared h0(I_Z(M))")

    model_config = ConfigDict(frozen=True)


class ZModel(BaseModel):
    """Genericity model for a 0-cycle Z of length ℓ.

    Every twist M not listed in ``overrides`` takes the generic value
    h0(I_Z(M)) = max(0, h0(O(M)) - ℓ). Range checks of the overrides need the
    surface and live in :func:`bn_walls.core.cohomology.validate_zmodel`.

    Attributes:
        length: Length ℓ of the cycle
        overrides: Declared section counts for special cycles
    """

    length: int = Field(..., ge=0, description="Length of the 0-cycle")
    overrides: tuple[SectionOverride, ...] = Field(
        default=(), description="Declared h0(I_Z(M)) values for specific twists"
    )

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "examples": [{"length": 6, "overrides": [{"twist": [0, 5], "h0": 2}]}]
        },
    )

    @model_validator(mode="after")
    def _unique_twists(self) -> "ZModel":
        twists = [o.twist for o in self.overrides]
        if len(set(twists)) != len(twists):
            raise ValueError("each twist may be overridden at most once")
        return self

    @classmethod
    def generic(cls, length: int) -> "ZModel":
        return cls(length=length)

    def override_for(self, twist: DivisorClass) -> int | None:
        """Return the declared h0 for ``twist``, or None when it is generic."""
        for override in self.overrides:
            if override.twist == twist:
                return override.h0
        return None

    def without_overrides(self) -> "ZModel":
        return ZModel(length=self.length)
