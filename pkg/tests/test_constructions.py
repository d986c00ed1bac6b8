import math

import numpy as np
import pytest
from scipy.optimize import fsolve

from gridpath import constructions as C
from gridpath import geom, oracle
from gridpath.grid import maabb, raabb
from gridpath.verify import verify

SQ3 = math.sqrt(3)


class TestMPaths:
    def test_m33(self):
        c = C.m_path(2)
        assert len(c.vertices) == 9 and c.h == 8
        assert c.vertices[-1] == pytest.approx((math.sqrt(2.5),) * 2)
        assert all(s.length == pytest.approx(math.sqrt(5), abs=1e-12) for s in c.edges)

    def test_m333(self):
        c = C.m_path(3)
        assert c.h == 26
        assert c.vertices[-1][2] == pytest.approx(0.5 * math.sqrt(5 / 3 * (4 + math.sqrt(10))))
        assert all(s.length == pytest.approx(math.sqrt(5), abs=1e-12) for s in c.edges)

    @pytest.mark.parametrize("k,grid", [(2, C.G33), (3, C.G333)])
    def test_self_intersecting_cover(self, k, grid):
        r = verify(C.m_path(k), grid, maabb(grid))
        assert r.covers_all and r.containment_ok and not r.uncrossing

    def test_bad_k(self):
        with pytest.raises(ValueError):
            C.m_path(4)


class TestS5:
    def test_interval(self):
        lo, hi = C.s5_interval()
        assert lo == pytest.approx(0.346647, abs=1e-6)
        assert hi == pytest.approx(0.918696, abs=1e-6)
        assert lo < 0.7 < hi

    def test_fig5_point(self):
        s = C.s5_solve(0.7)
        root = math.sqrt(2 * (2541 * SQ3 - 4247))
        assert s.y == pytest.approx((33 * SQ3 - 37 + root) / 20, abs=1e-12)
        assert s.z == pytest.approx((33 * SQ3 - 37 - root) / 20, abs=1e-12)
        assert s.branch == "principal"

    def test_left_endpoint_double_root(self):
        lo, _ = C.s5_interval()
        s = C.s5_solve(lo)
        assert s.y == pytest.approx(s.z, abs=1e-6)

    def test_against_independent_root_solve(self):
        s = C.s5_solve(0.5)
        y, z = fsolve(lambda v: oracle.sphere_residuals((0.5, v[0], v[1])), [1.8, 0.2], xtol=1e-14)
        assert (s.y, s.z) == pytest.approx((1.40499256172585, 0.15718526476522), abs=1e-10)
        assert (s.y, s.z) == pytest.approx((y, z), abs=1e-10)
        assert max(map(abs, oracle.sphere_residuals(s.point))) < 1e-9

    def test_swap_branch_at_y_equal_2(self):
        s = C.s5_solve(C.S5_SWAP_X)
        assert s.branch == "boundary_swap"
        assert s.z == pytest.approx(2, abs=1e-9)
        assert s.y == pytest.approx(C.S5_SWAP_LOW, abs=1e-9)
        assert max(map(abs, oracle.sphere_residuals(s.point))) < 1e-9

    @pytest.mark.parametrize("x", np.linspace(*C.s5_interval(), 100))
    def test_solution_invariants(self, x):
        s = C.s5_solve(float(x))
        assert max(map(abs, oracle.sphere_residuals(s.point))) <= 1e-9
        assert C.S5_Y_MIN - 1e-9 <= s.y <= C.S5_Y_MAX + 1e-9
        assert abs(s.y - 2) > 1e-9 and s.z <= 2 + 1e-9
        assert s.y >= s.z - 1e-9

    def test_outside_interval(self):
        with pytest.raises(ValueError):
            C.s5_solve(0.3)
        with pytest.raises(ValueError):
            C.s5_solve(0.95)

    def test_upper_endpoint_is_where_y_reaches_box_edge(self):
        # y(x) climbs to 4 - sqrt(3) at the right end of the interval
        _, hi = C.s5_interval()
        assert C.s5_solve(hi).y == pytest.approx(4 - SQ3, abs=1e-9)


class TestCollision:
    def test_radius(self):
        r = C.collision_radius()
        assert r == pytest.approx(1.9715304811, abs=1e-10)
        assert r < 2

    def test_circle(self):
        assert C.S5_CIRCLE_RADIUS == pytest.approx(1.4879857577, abs=1e-10)
        assert C.S5_CIRCLE_CENTER == pytest.approx(
            tuple((a + b) / 2 for a, b in zip(C.SPHERE_A, C.SPHERE_B)))

    def test_collision_point_is_on_both_spheres_of_radius_r(self):
        p = C.COLLISION_POINT
        r = C.collision_radius()
        assert geom.distance(p, C.SPHERE_A) == pytest.approx(r, abs=1e-12)
        assert geom.distance(p, C.SPHERE_B) == pytest.approx(r, abs=1e-12)
        assert p[0] / (2 - SQ3) == pytest.approx(2 - p[1], abs=1e-12)
        assert p[1] == p[2]

    def test_forbidden_witness_has_y_below_z(self):
        assert C.FORBIDDEN_Y < 1


class TestCheckPaths:
    def test_check33_vertices(self):
        c = C.check_path(2)
        want = [(0, 2), (0, 0), (2, 0), (2, 2), (1, 2 - SQ3), (1, 4 - SQ3)]
        assert c.vertices == pytest.approx(want)
        assert c.h == 5

    def test_check333(self):
        c = C.check_path(3)
        assert len(c.vertices) == 19 and c.h == 18
        r = verify(c, C.G333, geom.tight_aabb(c.vertices))
        assert r.uncrossing and r.covers_all
        assert r.length_classes == pytest.approx([2], abs=1e-9)

    def test_check333_box_orders_stretched_axes_first(self):
        b = geom.tight_aabb(C.check_path(3).vertices)
        assert b.lo == (0, 0, 0)
        assert b.hi == pytest.approx((4 - SQ3, 4 - SQ3, 2))

    def test_link12_clear_of_middle_layer_at_fig5_choice(self):
        v = C.check_path(3, 0.7).vertices
        link12 = (v[11], v[12])
        for i in range(13, 18):
            assert oracle.dense_min_distance(link12, (v[i], v[i + 1]), 1001) > 0.01

    def test_bad_k(self):
        with pytest.raises(ValueError):
            C.check_path(4)


class TestCircuits:
    def test_f222(self):
        c = C.circuit_f222("F")
        assert c.kind == "cycle" and c.h == 6
        assert c.vertices[0] == c.vertices[-1]
        assert all(s.length == pytest.approx(C.F_LENGTH, abs=1e-12) for s in c.edges)
        b = geom.tight_aabb(c.vertices)
        s13 = math.sqrt(13)
        assert b.lo == pytest.approx((-(1 + s13) / 4, -(1 + s13) / 6, 0))
        assert b.hi == pytest.approx(((5 + s13) / 4, (7 + s13) / 6, (3 + s13) / 4))

    def test_fprime_link_length(self):
        c = C.circuit_f222("F_prime")
        assert all(s.length == pytest.approx(4 - math.sqrt(2), abs=1e-12) for s in c.edges)

    def test_fprime_apex_misses_the_top_layer(self):
        # the reference apex height 2*sqrt3 - sqrt(3/2) leaves (1,1,1) off link 2;
        # passing through it would need height 3/2 + sqrt2/2
        v = C.FPRIME222_VERTICES
        miss = oracle.dense_point_distance((1, 1, 1), (v[1], v[2]))
        assert miss == pytest.approx(0.0073059, abs=1e-6)
        assert C.circuit_f222("F").kind == "cycle"

    @pytest.mark.parametrize("variant", ["F", "F_prime"])
    def test_smart_and_outside_raabb(self, variant):
        r = verify(C.circuit_f222(variant), C.G222, raabb(C.G222))
        assert r.cycle_class == "smart"
        assert r.link_length_h == 6
        assert not r.containment_ok

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            C.circuit_f222("G")


class TestGoldenFamily:
    def test_optimal_parameter(self):
        assert C.pbar_steiner_y(C.PBAR_OPT_X) == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-12)
        assert C.PBAR_OPT_X == pytest.approx((1 + C.PHI) / 2, abs=1e-15)

    @pytest.mark.parametrize("x", [1.05, 1.2, C.PBAR_OPT_X, 1.7, 3.0])
    def test_midpoint_constraint(self, x):
        assert (1 - x) * C.pbar_steiner_y(x) + x == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("x", [1.05, 1.2, C.PBAR_OPT_X, 1.7])
    def test_pbar_covers_for_x_above_one(self, x):
        assert verify(C.pbar_path(x), C.G222, raabb(C.G222)).covers_all

    def test_pbar_self_intersects_at_optimum(self):
        r = verify(C.pbar_path(C.PBAR_OPT_X), C.G222, raabb(C.G222))
        assert not r.uncrossing

    def test_pbar_domain(self):
        with pytest.raises(ValueError):
            C.pbar_path(0)
        with pytest.raises(ValueError):
            C.pbar_path(1)

    def test_minimize_volume(self):
        x = C.minimize_aabb_volume()
        assert x == pytest.approx((3 + math.sqrt(5)) / 4, abs=1e-12)
        assert abs(x ** 3 - 2 * x ** 2 + x - 0.125) <= 1e-12
        assert C.pbar_steiner_y(x) == pytest.approx(2.618034, abs=1e-6)

    def test_volume_is_stationary_at_optimum(self):
        # central finite difference of the box volume
        x, h = C.minimize_aabb_volume(), 1e-6
        slope = (C.pbar_volume(x + h) - C.pbar_volume(x - h)) / (2 * h)
        assert abs(slope) < 1e-6
        assert C.pbar_volume(x) < C.pbar_volume(x - 0.01)
        assert C.pbar_volume(x) < C.pbar_volume(x + 0.01)

    def test_volume_matches_tight_box(self):
        for x in (1.1, C.PBAR_OPT_X, 2.0):
            b = geom.tight_aabb(C.pbar_path(x).vertices)
            assert geom.box_volume(b) == pytest.approx(C.pbar_volume(x), rel=1e-12)

    @pytest.mark.parametrize("eps", [1e-3, 1e-5, 1e-7])
    def test_pbarbar_uncrossing_cover(self, eps):
        c = C.pbarbar_path(eps)
        r = verify(c, C.G222, geom.tight_aabb(c.vertices))
        assert r.uncrossing and r.covers_all

    def test_pbarbar_volume(self):
        b = geom.tight_aabb(C.pbarbar_path(1e-7).vertices)
        assert geom.box_volume(b) < 5.5451

    def test_pbarbar_limit(self):
        limit = np.array(C.pbar_path(C.PBAR_OPT_X).vertices)
        gaps = [np.abs(np.array(C.pbarbar_path(e).vertices) - limit).max() for e in (1e-3, 1e-5, 1e-7)]
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-5

    @pytest.mark.parametrize("eps", [1e-3, 1e-7])
    def test_distance_to_s4_prime(self, eps):
        s4 = C.pbarbar_path(eps).vertices[5]
        d = -4 * C.PHI * eps / (1 - C.PHI + 2 * eps)
        assert d >= 0
        assert geom.distance((1, 0, 0), s4) == pytest.approx(d, rel=1e-12)

    @pytest.mark.parametrize("eps", [0, C.EPS_MAX, -1e-3])
    def test_pbarbar_domain(self, eps):
        with pytest.raises(ValueError):
            C.pbarbar_path(eps)


class TestConclusionPath:
    def test_links(self):
        c = C.conclusion_path_222()
        assert c.h == 6
        assert all(s.length == pytest.approx(1 + math.sqrt(2), abs=1e-12) for s in c.edges)

    def test_box_and_crossing(self):
        c = C.conclusion_path_222()
        r = verify(c, C.G222, geom.tight_aabb(c.vertices))
        assert r.covers_all and not r.uncrossing
        b = geom.tight_aabb(c.vertices)
        s = 1 / math.sqrt(2)
        assert b.lo == pytest.approx((-s, 0, 0)) and b.hi == pytest.approx((1 + s,) * 3)
        assert geom.box_volume(b) < 7.035534


def test_fixed_lookup():
    assert C.fixed("m33").label == "m33"
    assert C.fixed("pbarbar222", eps=1e-4).vertices == C.pbarbar_path(1e-4).vertices
    with pytest.raises(ValueError):
        C.fixed("nope")
