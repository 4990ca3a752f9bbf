"""Scenario sweep result models."""

from enum import Enum

from pydantic import BaseModel, Field

from bn_walls.models.crossing import HirzebruchScenario


class SweepStatus(str, Enum):
    """Outcome of one grid point."""

    OK = "ok"
    BOUNDARY = "boundary"
    ERROR = "error"


class SweepPoint(BaseModel):
    """One (e, α, c2, n) point of a sweep."""

    e: int
    alpha: int
    c2: int
    n: int
    status: SweepStatus
    unique_wall: bool | None = None
    dim_minus: int | None = None
    dim_plus: int | None = None
    matched: bool | None = None
    error: str | None = None

    @classmethod
    def from_scenario(cls, scenario: HirzebruchScenario) -> "SweepPoint":
        return cls(
            e=scenario.e,
            alpha=scenario.alpha,
            c2=scenario.c2,
            n=scenario.n,
            status=SweepStatus.OK,
            unique_wall=scenario.unique_wall,
            dim_minus=scenario.dim_minus,
            dim_plus=scenario.dim_plus,
            matched=scenario.matched_tilde and scenario.matched_bar,
        )

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.e, self.alpha, self.c2, self.n)


class SweepSummary(BaseModel):
    """Aggregate counts of a sweep."""

    total: int = Field(..., ge=0)
    ok: int = Field(..., ge=0)
    boundary: int = Field(..., ge=0)
    errors: int = Field(..., ge=0)
    non_unique: list[list[int]] = Field(
        default_factory=list, description="(e, α, c2, n) points with extra separating walls"
    )
    elapsed_seconds: float = Field(default=0.0, exclude=True)


class SweepResult(BaseModel):
    points: list[SweepPoint]
    summary: SweepSummary
