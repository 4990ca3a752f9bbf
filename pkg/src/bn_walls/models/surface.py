"""Surface and divisor class data models."""

import re
from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, StrictInt, model_serializer, model_validator

from bn_walls.constants import SURFACE_PATTERN
from bn_walls.exceptions import InvalidInputError


class SurfaceKind(str, Enum):
    """Supported rational surfaces."""

    HIRZEBRUCH = "hirzebruch"
    PROJECTIVE_PLANE = "projective_plane"


class Surface(BaseModel):
    """A rational surface with its Picard lattice.

    Attributes:
        kind: Hirzebruch surface F_e (basis C0, F) or the projective plane (basis H)
        e: Hirzebruch invariant, C0^2 = -e (always 0 for the plane)
        arithmetic_genus: P_a(X), zero for both kinds
    """

    kind: SurfaceKind = Field(..., description="Surface family")
    e: int = Field(default=0, ge=0, description="Hirzebruch invariant e, C0^2 = -e")
    arithmetic_genus: Literal[0] = Field(default=0, description="Arithmetic genus P_a(X)")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"examples": [{"kind": "hirzebruch", "e": 1, "arithmetic_genus": 0}]},
    )

    @model_validator(mode="after")
    def _plane_has_no_e(self) -> "Surface":
        if self.kind is SurfaceKind.PROJECTIVE_PLANE and self.e != 0:
            raise ValueError("the projective plane carries no Hirzebruch invariant")
        return self

    @classmethod
    def hirzebruch(cls, e: int) -> "Surface":
        """The Hirzebruch surface F_e."""
        return cls(kind=SurfaceKind.HIRZEBRUCH, e=e)

    @classmethod
    def projective_plane(cls) -> "Surface":
        """The projective plane P^2."""
        return cls(kind=SurfaceKind.PROJECTIVE_PLANE)

    @classmethod
    def parse(cls, text: str) -> "Surface":
        """Parse a surface label such as ``f0``, ``F3`` or ``p2``.

        Raises:
            InvalidInputError: If the label is not recognised
        """
        match = re.match(SURFACE_PATTERN, text.strip())
        if match is None:
            raise InvalidInputError(f"Unknown surface '{text}' (expected f<e> or p2)")
        if match.group(1) is None:
            return cls.projective_plane()
        return cls.hirzebruch(int(match.group(1)))

    @property
    def is_hirzebruch(self) -> bool:
        return self.kind is SurfaceKind.HIRZEBRUCH

    @property
    def picard_rank(self) -> int:
        """Rank of Pic(X): 2 for F_e, 1 for P^2."""
        return 2 if self.is_hirzebruch else 1

    @property
    def label(self) -> str:
        return f"F{self.e}" if self.is_hirzebruch else "P2"


class DivisorClass(BaseModel):
    """Integer coordinates of a divisor class.

    Coordinates are taken in the basis (C0, F) on F_e and (H) on P^2. The class
    serializes as a bare integer list, e.g. ``[1, -2]`` for C0 - 2F.
    """

    coords: tuple[StrictInt, ...] = Field(..., min_length=1, max_length=2)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"coords": tuple(data)}
        return data

    @model_serializer(mode="plain")
    def _as_list(self) -> list[int]:
        return list(self.coords)

    @classmethod
    def of(cls, *coords: int) -> "DivisorClass":
        """Build a class from its coordinates: ``DivisorClass.of(1, -2)``."""
        return cls(coords=tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "DivisorClass":
        return cls(coords=(0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def _check_rank(self, other: "DivisorClass") -> None:
        if self.rank != other.rank:
            raise InvalidInputError(
                f"Cannot combine classes of different Picard rank: {self.coords} and {other.coords}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(coords=tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_rank(other)
        return DivisorClass(coords=tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(coords=tuple(-x for x in self.coords))

    def __mul__(self, factor: int) -> "DivisorClass":
        return DivisorClass(coords=tuple(factor * x for x in self.coords))

    __rmul__ = __mul__

    def __lt__(self, other: "DivisorClass") -> bool:
        return self.coords < other.coords

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"
