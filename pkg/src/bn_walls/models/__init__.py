"""Data models for Brill-Noether and wall-crossing computations."""

from bn_walls.models.chern import (
    BNDefinedCheck,
    BNRecord,
    ChernData,
    CodimInterval,
    InstantonReport,
    InstantonRow,
    QuadricStratum,
)
from bn_walls.models.cohomology import CohomologyTriple, SectionOverride, ZModel
from bn_walls.models.config import AppConfig
from bn_walls.models.crossing import (
    BNIdentification,
    CrossingReport,
    ExtFamily,
    HirzebruchScenario,
    WallCrossingEntry,
)
from bn_walls.models.envelope import OutputEnvelope
from bn_walls.models.stability import (
    Destabilizer,
    ExtensionData,
    QuadricWitness,
    Route,
    SectionBound,
    StabilityVerdict,
)
from bn_walls.models.surface import DivisorClass, Surface, SurfaceKind
from bn_walls.models.sweep import SweepPoint, SweepResult, SweepStatus, SweepSummary
from bn_walls.models.walls import (
    ChamberComparison,
    ChamberRelation,
    WallCheck,
    WallClass,
    WallCondition,
)

__all__ = [
    "AppConfig",
    "BNDefinedCheck",
    "BNIdentification",
    "BNRecord",
    "ChamberComparison",
    "ChamberRelation",
    "ChernData",
    "CodimInterval",
    "CohomologyTriple",
    "CrossingReport",
    "Destabilizer",
    "DivisorClass",
    "ExtFamily",
    "ExtensionData",
    "HirzebruchScenario",
    "InstantonReport",
    "InstantonRow",
    "OutputEnvelope",
    "QuadricStratum",
    "QuadricWitness",
    "Route",
    "SectionBound",
    "SectionOverride",
    "StabilityVerdict",
    "Surface",
    "SurfaceKind",
    "SweepPoint",
    "SweepResult",
    "SweepStatus",
    "SweepSummary",
    "WallCheck",
    "WallClass",
    "WallCondition",
    "WallCrossingEntry",
    "ZModel",
]
