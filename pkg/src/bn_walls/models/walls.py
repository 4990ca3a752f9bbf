"""Wall and chamber data models."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bn_walls.models.surface import DivisorClass


class WallCondition(str, Enum):
    """Defining conditions of a wall class, in the order they are tested."""

    NEGATIVE_SQUARE = "negative_square"
    PARITY = "parity"
    LENGTH = "length"
    AMPLE_CONE = "ample_cone"


class ChamberRelation(str, Enum):
    """Relative position of two polarizations with respect to the walls."""

    SAME = "same"
    SEPARATED = "separated"
    ON_WALL = "on_wall"


class WallClass(BaseModel):
    """A class ξ certified to define a wall of type (c1, c2).

    Attributes:
        xi: The class ξ; ξ and -ξ define the same wall
        xi_sq: Self-intersection ξ², always negative
        length: ℓ = c2 + (ξ² - c1²)/4, the length of the cycle in E_ξ
    """

    xi: DivisorClass
    xi_sq: int = Field(..., lt=0)
    length: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)

    @property
    def is_canonical(self) -> bool:
        """True when the first coordinate is positive."""
        return self.xi[0] > 0

    def flipped(self) -> "WallClass":
        """The same wall with the opposite orientation."""
        return WallClass(xi=-self.xi, xi_sq=self.xi_sq, length=self.length)

    def canonical(self) -> "WallClass":
        return self if self.is_canonical else self.flipped()


class WallCheck(BaseModel):
    """Result of testing a class against the wall conditions."""

    xi: DivisorClass
    wall: WallClass | None = None
    failed: WallCondition | None = None
    detail: str | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _exactly_one(self) -> "WallCheck":
        if (self.wall is None) == (self.failed is None):
            raise ValueError("a wall check either certifies a wall or names a failed condition")
        return self

    @property
    def certified(self) -> bool:
        return self.wall is not None


class ChamberComparison(BaseModel):
    """Sign data behind a same-chamber query."""

    relation: ChamberRelation
    signature_1: list[int]
    signature_2: list[int]
    walls: list[WallClass]

    model_config = ConfigDict(frozen=True)
