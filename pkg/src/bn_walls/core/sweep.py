"""
ScenarioSweep for running the Hirzebruch crossing over a parameter grid.

Uses ThreadPoolExecutor to evaluate grid points concurrently. Each point fails
independently; results are sorted by (e, α, c2, n) regardless of completion
order.
"""

import concurrent.futures
import time
from collections.abc import Callable, Iterable

from bn_walls.constants import MAX_THREAD_POOL_SIZE
from bn_walls.core.crossing import hirzebruch_scenario
from bn_walls.exceptions import BoundaryPolarizationError, InvalidInputError
from bn_walls.models.sweep import SweepPoint, SweepResult, SweepStatus, SweepSummary
from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)

GridPoint = tuple[int, int, int, int]


class ScenarioSweep:
    """
    Evaluates hirzebruch_scenario over a grid of (e, α, c2, n).

    Features:
    - ThreadPoolExecutor-based evaluation with configurable concurrency
    - Independent failure handling (one failing point doesn't affect others)
    - Boundary polarizations reported as their own status
    - Deterministic result order
    """

    def __init__(self, max_workers: int = 4) -> None:
        """
        Initialize ScenarioSweep.

        Args:
            max_workers: Maximum number of concurrent evaluations
        """
        if not 1 <= max_workers <= MAX_THREAD_POOL_SIZE:
            raise InvalidInputError(
                f"max_workers must be between 1 and {MAX_THREAD_POOL_SIZE}, got {max_workers}"
            )
        self.max_workers = max_workers

    @staticmethod
    def grid(es: Iterable[int], alphas: Iterable[int], c2_range: Iterable[int]) -> list[GridPoint]:
        """All (e, α, c2, n) with 1 <= n <= c2 - 1."""
        return [
            (e, alpha, c2, n)
            for e in es
            for alpha in alphas
            for c2 in c2_range
            for n in range(1, c2)
        ]

    def run(
        self,
        es: Iterable[int],
        alphas: Iterable[int],
        c2_range: Iterable[int],
        progress_callback: Callable[[SweepPoint], None] | None = None,
    ) -> SweepResult:
        """
        Run the scenario at every grid point.

        Args:
            es: Hirzebruch invariants
            alphas: Values of α (0 or 1)
            c2_range: Values of c2 (each >= 2)
            progress_callback: Optional callable invoked as each point completes

        Returns:
            SweepResult with per-point outcomes and summary counts
        """
        points = self.grid(es, alphas, c2_range)
        started = time.perf_counter()
        results: list[SweepPoint] = []

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_point = {
                executor.submit(self._evaluate, point): point for point in points
            }
            for future in concurrent.futures.as_completed(future_to_point):
                result = future.result()
                results.append(result)
                if progress_callback is not None:
                    try:
                        progress_callback(result)
                    except Exception as e:
                        logger.debug(f"Progress callback failed: {e}")

        results.sort(key=lambda p: p.key)
        summary = SweepSummary(
            total=len(results),
            ok=sum(1 for p in results if p.status is SweepStatus.OK),
            boundary=sum(1 for p in results if p.status is SweepStatus.BOUNDARY),
            errors=sum(1 for p in results if p.status is SweepStatus.ERROR),
            non_unique=[list(p.key) for p in results if p.unique_wall is False],
            elapsed_seconds=time.perf_counter() - started,
        )
        logger.info(
            f"Sweep finished: {summary.ok} ok, {summary.boundary} boundary, "
            f"{summary.errors} errors in {summary.elapsed_seconds:.2f}s"
        )
        return SweepResult(points=results, summary=summary)

    @staticmethod
    def _evaluate(point: GridPoint) -> SweepPoint:
        e, alpha, c2, n = point
        try:
            return SweepPoint.from_scenario(hirzebruch_scenario(e, alpha, c2, n))
        except BoundaryPolarizationError as e_boundary:
            return SweepPoint(
                e=e, alpha=alpha, c2=c2, n=n, status=SweepStatus.BOUNDARY, error=str(e_boundary)
            )
        except Exception as exc:
            logger.error(f"Scenario {point} failed: {exc}")
            return SweepPoint(e=e, alpha=alpha, c2=c2, n=n, status=SweepStatus.ERROR, error=str(exc))
