"""Unit tests for wall validation, enumeration and chamber queries."""

import random

import pytest

from bn_walls.core.crossing import hirzebruch_polarizations, hirzebruch_scenario
from bn_walls.core.picard import is_ample
from bn_walls.core.walls import (
    chamber_signature,
    compare_chambers,
    enumerate_walls,
    is_wall_class,
    primitive_direction,
    same_chamber,
    separating_walls,
    wall_hyperplanes,
    wall_length,
    wall_meets_ample_cone,
    wall_polarization,
    wall_ray,
)
from bn_walls.exceptions import InvalidInputError
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.models.walls import ChamberRelation, WallCheck, WallClass, WallCondition

pytestmark = pytest.mark.unit

ORACLE_C1 = [(0, 0), (1, 0), (0, 1), (1, 1), (1, -1), (-1, 2)]

# (e, alpha, c2, n) where (3, -4) separates L_n from L_{n+1} alongside ξ_n
SECOND_WALL_POINTS = {(0, 0, 6, 5), (0, 0, 7, 6), (0, 0, 8, 7), (1, 0, 8, 7)}


def brute_force_walls(e: int, c1: tuple[int, int], c2: int) -> list[tuple[int, int]]:
    """Scan |p|, |q| <= B with the wall conditions written out in integers.

    The ample-cone test uses the two ample classes (1, e + N) and (N, Ne + 1)
    with N > 2B, which take opposite signs on ξ exactly when ξ⊥ meets the cone.
    """
    a, b = c1
    c1_sq = -e * a * a + 2 * a * b
    bound = 4 * (4 * c2 + abs(c1_sq) + 4)
    big = 2 * bound + 1
    found: list[tuple[int, int]] = []
    for p in range(1, bound + 1):
        for q in range(-bound, bound + 1):
            xi_sq = -e * p * p + 2 * p * q
            if xi_sq >= 0:
                continue
            if (p + a) % 2 or (q + b) % 2:
                continue
            if (xi_sq - c1_sq) % 4 or c2 + (xi_sq - c1_sq) // 4 < 0:
                continue
            # ξ·(x, y) = -e·p·x + p·y + q·x
            first = -e * p + p * (e + big) + q
            second = -e * p * big + p * (big * e + 1) + q * big
            if first * second < 0:
                found.append((p, q))
    return sorted(found)


class TestWallMeetsAmpleCone:
    """Test the hyperplane test ξ⊥ ∩ ample cone ≠ ∅."""

    def test_hirzebruch_wall_classes(self, hirzebruch: Surface) -> None:
        for alpha in (0, 1):
            for c2 in range(2, 8):
                for n in range(1, c2):
                    xi_n = DivisorClass.of(1, -(2 * c2 - alpha - 2 * n))
                    assert wall_meets_ample_cone(hirzebruch, xi_n)

    def test_positive_class_misses(self, hirzebruch: Surface) -> None:
        assert not wall_meets_ample_cone(hirzebruch, DivisorClass.of(1, 1))

    def test_opposite_signs_meet(self, f0: Surface) -> None:
        assert wall_meets_ample_cone(f0, DivisorClass.of(-1, 2))

    def test_boundary_rays_do_not_count(self, hirzebruch: Surface) -> None:
        assert not wall_meets_ample_cone(hirzebruch, DivisorClass.of(1, 0))
        assert not wall_meets_ample_cone(hirzebruch, DivisorClass.of(0, -1))

    def test_zero_class_rejected(self, f0: Surface) -> None:
        with pytest.raises(InvalidInputError, match="zero class"):
            wall_meets_ample_cone(f0, DivisorClass.zero(2))

    def test_sampled_sign_change(self, hirzebruch: Surface) -> None:
        """Agrees with a sign change over sampled ample classes."""
        e = hirzebruch.e
        samples = [DivisorClass.of(x, x * e + y) for x in range(1, 30) for y in range(1, 30)]
        for p in range(-4, 5):
            for q in range(-4, 5):
                if p == 0 and q == 0:
                    continue
                xi = DivisorClass.of(p, q)
                signs = {-e * p * L[0] + p * L[1] + q * L[0] for L in samples}
                changes = min(signs) < 0 < max(signs)
                assert wall_meets_ample_cone(hirzebruch, xi) == changes


class TestIsWallClass:
    """Test wall certification and failure reporting."""

    def test_hirzebruch_family(self, hirzebruch: Surface) -> None:
        for alpha in (0, 1):
            c1 = DivisorClass.of(1, alpha)
            for c2 in range(2, 8):
                for n in range(1, c2):
                    check = is_wall_class(
                        hirzebruch, DivisorClass.of(1, -(2 * c2 - alpha - 2 * n)), c1, c2
                    )
                    assert check.certified
                    assert check.wall is not None
                    assert check.wall.length == n

    def test_non_negative_square(self, f0: Surface) -> None:
        check = is_wall_class(f0, DivisorClass.of(1, 1), DivisorClass.of(1, 1), 3)
        assert not check.certified
        assert check.failed is WallCondition.NEGATIVE_SQUARE

    def test_parity(self, f0: Surface) -> None:
        check = is_wall_class(f0, DivisorClass.of(1, -2), DivisorClass.of(1, 1), 3)
        assert check.failed is WallCondition.PARITY

    def test_negative_length(self, f0: Surface) -> None:
        check = is_wall_class(f0, DivisorClass.of(1, -5), DivisorClass.of(1, 1), 1)
        assert check.failed is WallCondition.LENGTH

    def test_zero_length_wall(self, f0: Surface) -> None:
        check = is_wall_class(f0, DivisorClass.of(1, -1), DivisorClass.of(1, 1), 1)
        assert check.wall == WallClass(xi=DivisorClass.of(1, -1), xi_sq=-2, length=0)

    def test_missing_ample_cone(self, f1: Surface) -> None:
        # ξ = (1, 0) on F1: ξ² = -1, parity and length hold, but ξ·L > 0 for every ample L
        check = is_wall_class(f1, DivisorClass.of(1, 0), DivisorClass.of(1, 0), 1)
        assert check.failed is WallCondition.AMPLE_CONE

    def test_sign_symmetry(self, hirzebruch: Surface) -> None:
        c1 = DivisorClass.of(1, 1)
        for p in range(-6, 7):
            for q in range(-12, 13):
                if p == 0 and q == 0:
                    continue
                xi = DivisorClass.of(p, q)
                forward = is_wall_class(hirzebruch, xi, c1, 5)
                backward = is_wall_class(hirzebruch, -xi, c1, 5)
                assert forward.certified == backward.certified

    def test_check_requires_exactly_one_outcome(self) -> None:
        with pytest.raises(ValueError):
            WallCheck(xi=DivisorClass.of(1, -1))

    def test_wall_length_formula(self, f0: Surface) -> None:
        assert wall_length(f0, DivisorClass.of(1, -2), DivisorClass.of(1, 0), 2) == 1


class TestEnumerateWalls:
    """Test exhaustive wall enumeration."""

    def test_single_wall(self, f0: Surface) -> None:
        walls = enumerate_walls(f0, DivisorClass.of(1, 1), 1)
        assert [w.xi for w in walls] == [DivisorClass.of(1, -1)]

    def test_quadric_crossing_type(self, f0: Surface) -> None:
        walls = enumerate_walls(f0, DivisorClass.of(1, 0), 2)
        assert [w.xi.coords for w in walls] == [(1, -4), (1, -2)]

    def test_contains_every_hirzebruch_wall(self, hirzebruch: Surface) -> None:
        for alpha in (0, 1):
            for c2 in range(2, 8):
                found = {w.xi for w in enumerate_walls(hirzebruch, DivisorClass.of(1, alpha), c2)}
                for n in range(1, c2):
                    assert DivisorClass.of(1, -(2 * c2 - alpha - 2 * n)) in found

    def test_no_walls_without_second_chern_class(self, hirzebruch: Surface) -> None:
        for c2 in range(-3, 1):
            assert enumerate_walls(hirzebruch, DivisorClass.zero(2), c2) == []

    def test_canonical_sign_and_order(self, hirzebruch: Surface) -> None:
        walls = enumerate_walls(hirzebruch, DivisorClass.of(1, 1), 7)
        assert all(w.is_canonical for w in walls)
        assert [w.xi.coords for w in walls] == sorted(w.xi.coords for w in walls)

    def test_plane_has_no_walls(self, p2: Surface) -> None:
        with pytest.raises(InvalidInputError):
            enumerate_walls(p2, DivisorClass.of(1), 3)

    @pytest.mark.slow
    @pytest.mark.parametrize("e", [0, 1, 2, 3])
    def test_matches_brute_force(self, e: int) -> None:
        s = Surface.hirzebruch(e)
        for c1 in ORACLE_C1:
            for c2 in range(0, 9):
                walls = enumerate_walls(s, DivisorClass.of(*c1), c2)
                assert [w.xi.coords for w in walls] == brute_force_walls(e, c1, c2)


class TestSeparatingWalls:
    """Test separation between two polarizations."""

    def test_quadric_crossing(self, f0: Surface) -> None:
        walls = separating_walls(f0, DivisorClass.of(1, 0), 2, DivisorClass.of(1, 3), DivisorClass.of(1, 1))
        assert [w.xi for w in walls] == [DivisorClass.of(1, -2)]

    def test_f1_crossing(self, f1: Surface) -> None:
        walls = separating_walls(f1, DivisorClass.of(1, 0), 3, DivisorClass.of(1, 6), DivisorClass.of(1, 4))
        assert [w.xi for w in walls] == [DivisorClass.of(1, -4)]

    def test_same_polarization(self, hirzebruch: Surface) -> None:
        pol = DivisorClass.of(1, hirzebruch.e + 3)
        assert separating_walls(hirzebruch, DivisorClass.of(1, 0), 6, pol, pol) == []

    def test_orientation(self, hirzebruch: Surface) -> None:
        e = hirzebruch.e
        l1, l2 = DivisorClass.of(1, e + 9), DivisorClass.of(3, 3 * e + 1)
        c1 = DivisorClass.of(1, 1)
        forward = separating_walls(hirzebruch, c1, 6, l1, l2)
        backward = separating_walls(hirzebruch, c1, 6, l2, l1)
        assert forward
        assert sorted(w.xi for w in forward) == sorted(-w.xi for w in backward)
        for wall in forward:
            p, q = wall.xi.coords
            assert -e * p * l1[0] + p * l1[1] + q * l1[0] > 0

    def test_non_ample_rejected(self, f1: Surface) -> None:
        with pytest.raises(InvalidInputError, match="L2"):
            separating_walls(f1, DivisorClass.of(1, 0), 3, DivisorClass.of(1, 6), DivisorClass.of(1, 1))

    @pytest.mark.slow
    @pytest.mark.parametrize("e", [0, 1, 2, 3])
    def test_hirzebruch_grid_against_brute_force(self, e: int) -> None:
        s = Surface.hirzebruch(e)
        second_wall: set[tuple[int, int, int, int]] = set()
        for alpha in (0, 1):
            c1 = DivisorClass.of(1, alpha)
            for c2 in range(2, 9):
                oracle = brute_force_walls(e, (1, alpha), c2)
                for n in range(1, c2):
                    if alpha == 1 and n == c2 - 1:
                        continue
                    l_n, l_next, xi_n = hirzebruch_polarizations(e, alpha, c2, n)
                    expected: list[tuple[int, int]] = []
                    for p, q in oracle:
                        d1 = -e * p * l_n[0] + p * l_n[1] + q * l_n[0]
                        d2 = -e * p * l_next[0] + p * l_next[1] + q * l_next[0]
                        if d1 > 0 > d2:
                            expected.append((p, q))
                        elif d1 < 0 < d2:
                            expected.append((-p, -q))
                    walls = separating_walls(s, c1, c2, l_n, l_next)
                    assert sorted(w.xi.coords for w in walls) == sorted(expected)
                    assert xi_n.coords in expected

                    extra = sorted(set(expected) - {xi_n.coords})
                    scenario = hirzebruch_scenario(e, alpha, c2, n)
                    assert scenario.unique_wall == (not extra)
                    assert sorted(w.xi.coords for w in scenario.extra_walls) == extra
                    assert scenario.unique_on_hyperplane
                    if extra:
                        assert extra == [(3, -4)]
                        second_wall.add((e, alpha, c2, n))
        assert second_wall == {p for p in SECOND_WALL_POINTS if p[0] == e}


class TestChambers:
    """Test chamber signatures and same-chamber queries."""

    def test_scaling(self, hirzebruch: Surface) -> None:
        pol = DivisorClass.of(2, 2 * hirzebruch.e + 3)
        relation = same_chamber(hirzebruch, DivisorClass.of(1, 0), 5, pol, 2 * pol)
        assert relation is ChamberRelation.SAME

    def test_hirzebruch_family_separated(self, hirzebruch: Surface) -> None:
        for c2 in range(2, 6):
            for n in range(1, c2):
                l_n, l_next, _ = hirzebruch_polarizations(hirzebruch.e, 0, c2, n)
                relation = same_chamber(hirzebruch, DivisorClass.of(1, 0), c2, l_n, l_next)
                assert relation is ChamberRelation.SEPARATED

    def test_single_wall_same_side(self, f0: Surface) -> None:
        relation = same_chamber(f0, DivisorClass.of(1, 1), 1, DivisorClass.of(1, 2), DivisorClass.of(2, 3))
        assert relation is ChamberRelation.SAME

    def test_on_wall(self, f0: Surface) -> None:
        comparison = compare_chambers(f0, DivisorClass.of(1, 1), 1, DivisorClass.of(1, 1), DivisorClass.of(1, 2))
        assert comparison.relation is ChamberRelation.ON_WALL
        assert comparison.signature_1 == [0]

    def test_equivalence_relation(self, hirzebruch: Surface) -> None:
        e = hirzebruch.e
        c1 = DivisorClass.of(1, 1)
        rng = random.Random(3)
        sample = []
        while len(sample) < 12:
            x = rng.randint(1, 5)
            pol = DivisorClass.of(x, x * e + rng.randint(1, 15))
            if 0 not in chamber_signature(hirzebruch, c1, 6, pol):
                sample.append(pol)

        def same(x: DivisorClass, y: DivisorClass) -> bool:
            return same_chamber(hirzebruch, c1, 6, x, y) is ChamberRelation.SAME

        for x in sample:
            assert same(x, x)
            for y in sample:
                assert same(x, y) == same(y, x)
                for z in sample[:4]:
                    if same(x, y) and same(y, z):
                        assert same(x, z)


class TestWallGeometry:
    """Test wall polarizations, rays and hyperplane grouping."""

    def test_wall_polarization_lies_on_wall(self, hirzebruch: Surface) -> None:
        e = hirzebruch.e
        for c2 in range(2, 6):
            for n in range(1, c2):
                l_n, l_next, xi_n = hirzebruch_polarizations(e, 0, c2, n)
                pol = wall_polarization(hirzebruch, xi_n, l_n, l_next)
                p, q = xi_n.coords
                assert -e * p * pol[0] + p * pol[1] + q * pol[0] == 0
                assert is_ample(hirzebruch, pol)

    def test_wall_polarization_primitive(self, f0: Surface) -> None:
        pol = wall_polarization(f0, DivisorClass.of(1, -2), DivisorClass.of(1, 3), DivisorClass.of(1, 1))
        assert pol == DivisorClass.of(1, 2)

    def test_wall_polarization_needs_separation(self, f0: Surface) -> None:
        with pytest.raises(InvalidInputError, match="does not separate"):
            wall_polarization(f0, DivisorClass.of(1, -2), DivisorClass.of(1, 3), DivisorClass.of(1, 4))

    def test_ray(self, f1: Surface) -> None:
        assert wall_ray(f1, DivisorClass.of(1, -4)) == DivisorClass.of(1, 5)
        assert wall_ray(f1, DivisorClass.of(-2, 8)) == DivisorClass.of(1, 5)

    def test_ray_requires_wall(self, f1: Surface) -> None:
        with pytest.raises(InvalidInputError):
            wall_ray(f1, DivisorClass.of(1, 4))

    def test_primitive_direction(self) -> None:
        assert primitive_direction(DivisorClass.of(-2, 4)) == DivisorClass.of(1, -2)
        assert primitive_direction(DivisorClass.of(0, -3)) == DivisorClass.of(0, 1)

    def test_hyperplane_grouping(self) -> None:
        walls = [
            WallClass(xi=DivisorClass.of(1, -2), xi_sq=-4, length=1),
            WallClass(xi=DivisorClass.of(2, -4), xi_sq=-16, length=0),
            WallClass(xi=DivisorClass.of(1, -4), xi_sq=-8, length=0),
        ]
        groups = wall_hyperplanes(walls)
        assert [len(g) for g in groups] == [1, 2]
