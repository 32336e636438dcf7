import math

import numpy as np
import pytest

from conftest import GRAPH_A_EDGES, GRAPH_B_EDGES, random_unit_disk
from rydnash.errors import DegenerateLayout, InvalidInput, UndefinedRadius
from rydnash.geometry import (
    HardwareConstraints,
    ambiguity_warnings,
    blockade_radius,
    build_unit_disk_graph,
    validate_embedding,
)


class TestBuildUnitDiskGraph:
    def test_graph_a_edges(self, graph_a):
        assert set(graph_a.edges) == GRAPH_A_EDGES
        # every edge at 6 um, every non-edge at sqrt(108) um or farther
        for i in range(6):
            for j in range(i + 1, 6):
                d = graph_a.distance(i, j)
                if (i, j) in GRAPH_A_EDGES:
                    assert d == pytest.approx(6.0)
                else:
                    assert d >= math.sqrt(108) - 1e-9

    def test_graph_b_edges(self, graph_b):
        assert set(graph_b.edges) == GRAPH_B_EDGES
        for i, j in GRAPH_B_EDGES:
            assert graph_b.distance(i, j) == pytest.approx(6.0)

    def test_single_point(self):
        g = build_unit_disk_graph([(0.0, 0.0)], 1.0)
        assert g.n == 1
        assert g.edges == ()

    def test_duplicate_points_rejected(self):
        with pytest.raises(DegenerateLayout):
            build_unit_disk_graph([(1.0, 2.0), (1.0, 2.0)], 1.0)

    def test_signed_zero_counts_as_coincident(self):
        with pytest.raises(DegenerateLayout):
            build_unit_disk_graph([(0.0, 0.0), (-0.0, 0.0)], 1.0)

    def test_nonfinite_coordinate_rejected(self):
        with pytest.raises(InvalidInput):
            build_unit_disk_graph([(0.0, 0.0), (math.nan, 1.0)], 1.0)
        with pytest.raises(InvalidInput):
            build_unit_disk_graph([(0.0, 0.0), (math.inf, 1.0)], 1.0)

    def test_bad_radius_rejected(self):
        with pytest.raises(InvalidInput):
            build_unit_disk_graph([(0.0, 0.0)], 0.0)
        with pytest.raises(InvalidInput):
            build_unit_disk_graph([(0.0, 0.0)], -2.0)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            build_unit_disk_graph([], 1.0)

    def test_edge_rule_is_closed_disk(self):
        g = build_unit_disk_graph([(0.0, 0.0), (5.0, 0.0)], 5.0)
        assert g.edges == ((0, 1),)

    def test_adjacency_symmetric_irreflexive(self):
        rng = np.random.default_rng(101)
        for _ in range(20):
            g = random_unit_disk(rng)
            for i in range(g.n):
                assert not g.is_edge(i, i)
                for j in range(g.n):
                    assert g.is_edge(i, j) == g.is_edge(j, i)

    def test_radius_monotonicity(self):
        rng = np.random.default_rng(102)
        for _ in range(20):
            g = random_unit_disk(rng)
            bigger = build_unit_disk_graph(g.positions, g.radius * 1.5)
            assert set(g.edges) <= set(bigger.edges)


class TestBlockadeRadius:
    def test_delta_zero_closed_form(self):
        c6, omega = 123.4, 5.6
        assert blockade_radius(c6, omega, 0.0) == pytest.approx((c6 / omega) ** (1 / 6))

    def test_reference_value(self):
        # inverse check: r**6 * sqrt(omega**2 + delta**2) must recover c6
        r = blockade_radius(5.42e6, 7.27, 7.27)
        assert r == pytest.approx(8.987901680284356, rel=1e-12)
        assert r**6 * math.hypot(7.27, 7.27) == pytest.approx(5.42e6, rel=1e-12)

    def test_homogeneity_in_c6(self):
        r = blockade_radius(3.0e5, 1.2, 3.4)
        assert blockade_radius(64 * 3.0e5, 1.2, 3.4) == pytest.approx(2 * r, rel=1e-12)

    def test_strictly_decreasing_in_drive_scale(self):
        rng = np.random.default_rng(103)
        for _ in range(50):
            c6 = float(rng.uniform(1e3, 1e7))
            s1, s2 = sorted(rng.uniform(0.1, 50.0, size=2))
            if s1 == s2:
                continue
            assert blockade_radius(c6, s1, 0.0) > blockade_radius(c6, s2, 0.0)

    def test_undefined_at_zero_drive(self):
        with pytest.raises(UndefinedRadius):
            blockade_radius(1.0, 0.0, 0.0)

    def test_bad_c6(self):
        with pytest.raises(InvalidInput):
            blockade_radius(-1.0, 1.0, 0.0)


class TestValidateEmbedding:
    def test_graph_a_ok(self, graph_a):
        report = validate_embedding(graph_a)
        assert report.ok
        assert report.violations == ()

    def test_close_pair_reported(self):
        g = build_unit_disk_graph([(0.0, 0.0), (3.0, 0.0)], 4.0)
        report = validate_embedding(g)
        assert not report.ok
        assert len(report.violations) == 1
        v = report.violations[0]
        assert (v.kind, v.subject, v.value, v.limit) == ("pair_distance", (0, 1), 3.0, 4.0)

    def test_single_atom_ok(self):
        g = build_unit_disk_graph([(5.0, 5.0)], 2.0)
        assert validate_embedding(g).ok

    def test_exactly_at_floor_is_ok(self):
        g = build_unit_disk_graph([(0.0, 0.0), (4.0, 0.0)], 5.0)
        assert validate_embedding(g).ok

    def test_completeness_under_insertion(self):
        # adding a pair at half the floor distance, far from everything,
        # creates exactly one new violation
        rng = np.random.default_rng(104)
        hw = HardwareConstraints()
        for _ in range(10):
            g = random_unit_disk(rng, n_max=6)
            base = len(validate_embedding(g, hw).violations)
            far = 1000.0 + float(rng.uniform(0, 10))
            positions = g.positions + ((far, 0.0), (far + hw.min_pair_distance / 2, 0.0))
            g2 = build_unit_disk_graph(positions, g.radius)
            assert len(validate_embedding(g2, hw).violations) == base + 1

    def test_constraints_must_be_positive(self):
        with pytest.raises(InvalidInput):
            HardwareConstraints(min_pair_distance=0.0)
        with pytest.raises(InvalidInput):
            HardwareConstraints(max_evolution_time=-1.0)


class TestAmbiguityWarnings:
    def test_graph_b_nonedges_clear(self, graph_b):
        # closest non-edge is 6*sqrt(2) ~ 8.49 um > 1.15 * 7 = 8.05 um
        warnings = ambiguity_warnings(graph_b, margin=0.15)
        assert all(w.kind != "nonedge_near_radius" for w in warnings)

    def test_graph_a_no_warnings(self, graph_a):
        # edges at 6 < 0.85 * 8 = 6.8; non-edges at >= 10.39 > 1.15 * 8 = 9.2
        assert ambiguity_warnings(graph_a, margin=0.15) == ()

    def test_edge_exactly_at_radius_warns(self):
        g = build_unit_disk_graph([(0.0, 0.0), (7.0, 0.0)], 7.0)
        warnings = ambiguity_warnings(g, margin=0.15)
        assert len(warnings) == 1
        assert warnings[0].kind == "edge_near_radius"
        assert warnings[0].pair == (0, 1)

    def test_nonedge_near_radius_warns(self):
        g = build_unit_disk_graph([(0.0, 0.0), (7.5, 0.0)], 7.0)
        warnings = ambiguity_warnings(g, margin=0.15)
        assert [w.kind for w in warnings] == ["nonedge_near_radius"]

    def test_zero_margin_flags_only_boundary(self):
        g = build_unit_disk_graph([(0.0, 0.0), (7.0, 0.0), (0.0, 20.0)], 7.0)
        warnings = ambiguity_warnings(g, margin=0.0)
        assert [(w.kind, w.pair) for w in warnings] == [("edge_near_radius", (0, 1))]

    def test_negative_margin_rejected(self, graph_a):
        with pytest.raises(InvalidInput):
            ambiguity_warnings(graph_a, margin=-0.1)
