import math

import numpy as np
import pytest

from meander.field import ModelParams
from meander.equilibria import IllConditionedRootsError
from meander.patterns import (
    DegeneratePortraitError,
    PortraitOptions,
    boundary_c_threshold,
    build_portrait,
    classify_patterns,
    regime,
)
from meander.reports import analyze_params, ring_bound, scan_1d
from meander.asymptotics import spider_net_possible
from conftest import random_params


class TestBuildPortrait:
    def test_example1_inventory(self, ex1):
        pt = build_portrait(ex1)
        assert len(pt.equilibria) == 16
        assert len(pt.equilibria) % ex1.n == 1
        assert len(pt.saddles) == 10
        assert len(pt.separatrices) == 10
        assert {s.saddle_id for s in pt.separatrices} == {e.eq_id for e in pt.saddles}
        assert len(pt.equator_nodes) == 10
        assert not pt.degenerate

    def test_domain1_trivial_portrait(self, ex2_domain1):
        pt = build_portrait(ex2_domain1)
        assert len(pt.equilibria) == 1
        assert pt.peripheral == []
        assert pt.equator_nodes == []
        assert pt.separatrices == []
        assert all(o.termination.kind == "closed" for o in pt.orbits)

    def test_two_ring_inventory(self, two_ring_n6):
        pt = build_portrait(two_ring_n6)
        assert len(pt.peripheral) == 24
        kinds = [k for _, k in pt.radius_classes]
        assert kinds == ["saddle", "center", "saddle", "center"]

    def test_degenerate_at_ring_birth(self):
        astar = boundary_c_threshold(-4.0, 3.0)
        p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(astar,), b1=3.0)
        pt = build_portrait(p, PortraitOptions(sample_orbits=False, trace_saddles=False))
        assert pt.degenerate
        with pytest.raises(DegeneratePortraitError):
            classify_patterns(pt)

    def test_b_zero_hamiltonian_circles_flagged(self):
        p = ModelParams(n=9, eps2=8.0, a1=(0, 0, 0), a2=(-33.0, 23.765, -3.5), b1=0.0)
        pt = build_portrait(p, PortraitOptions(sample_orbits=False, trace_saddles=False))
        assert any("circles" in d for d in pt.degenerate)


class TestClassifyPatterns:
    def test_example1_report(self, ex1):
        rep = classify_patterns(build_portrait(ex1))
        assert rep.centroids["count"] == 6
        assert rep.centroids["radii"] == pytest.approx([0.0, 1.0])
        assert rep.flower_rings["count"] == 1
        assert rep.flower_rings["radii"] == pytest.approx([1.0])
        assert len(rep.n_cycles) == 2
        inner = min(rep.n_cycles, key=lambda c: c["radius"])
        assert inner["radius"] == pytest.approx(2 / 3)
        assert inner["shape"] == "star"
        assert rep.spider_net == {"present": True, "sectors": 5}
        assert rep.regime_label == "domain-1"
        assert rep.unresolved == []

    def test_domain1_report(self, ex2_domain1):
        rep = classify_patterns(build_portrait(ex2_domain1))
        assert rep.centroids["count"] == 1
        assert rep.flower_rings["count"] == 0
        assert rep.n_cycles == []
        assert rep.spider_net["present"] is False

    def test_two_ring_report(self, two_ring_n6):
        rep = classify_patterns(build_portrait(two_ring_n6))
        assert rep.flower_rings["count"] == 2
        assert rep.flower_rings["count"] <= ring_bound(6)
        assert rep.spider_net["present"] is False

    def test_spider_flag_matches_asymptotics(self, ex1, ex2_domain2):
        for p in (ex1, ex2_domain2):
            pt = build_portrait(p)
            rep = classify_patterns(pt)
            has_escape = any(br.connection.kind == "escapes"
                             for s in pt.separatrices for br in s.branches)
            if has_escape:
                assert rep.spider_net["present"] == spider_net_possible(p)

    def test_pattern_counts_invariant_under_b_phase(self, ex1):
        base = classify_patterns(build_portrait(ex1))
        for angle in (0.4, 1.9):
            p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,),
                            b1=3.0 * math.cos(angle), b2=3.0 * math.sin(angle))
            rep = classify_patterns(build_portrait(p))
            assert rep.centroids["count"] == base.centroids["count"]
            assert rep.flower_rings["count"] == base.flower_rings["count"]
            assert len(rep.n_cycles) == len(base.n_cycles)
            assert rep.spider_net == base.spider_net


class TestRegime:
    def test_example1_domain(self, ex1):
        assert regime(ex1) == "domain-1"
        assert 27 * (-4.0) * 9 + 4 * 7.0 ** 3 == 400.0

    def test_n4_domains(self, ex2_domain1, ex2_domain2, ex2_domain3):
        assert regime(ex2_domain1) == "domain-1"
        assert regime(ex2_domain2) == "domain-2"
        assert regime(ex2_domain3) == "domain-3"

    def test_boundary_exact(self):
        p = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(-1.0,), b1=1.0)
        assert regime(p) == "on-boundary"

    def test_no_map_for_other_n(self, two_ring_n6, dissipative_n5):
        assert regime(two_ring_n6) == "no-analytic-regime-map"
        assert regime(dissipative_n5) == "no-analytic-regime-map"

    def test_regime_change_coincides_with_root_count_change(self):
        # crossing the cubic boundary changes both the label and the counts
        p5 = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(0.0,), b1=3.0)
        res = scan_1d(p5, "a2_1", 5.0, 7.0, 20)
        for tr in res["transitions"]:
            assert "regime" in tr["changed"]
            assert "total_roots" in tr["changed"]


class TestTheoremBoundsSweep:
    def test_random_hamiltonian_sweep(self):
        rng = np.random.default_rng(31)
        done = 0
        while done < 250:
            n = int(rng.choice([4, 5, 6, 7, 8, 9, 10, 11]))
            p = random_params(rng, n, hamiltonian=True, b_range=(0.01, 3.0))
            try:
                doc = analyze_params(p)
            except IllConditionedRootsError:
                continue
            done += 1
            assert doc["theorem_checks"]["ring_bound"]["ok"]
            assert doc["theorem_checks"]["root_bound"]["ok"]
            parity = doc["theorem_checks"].get("even_parity")
            if parity is not None and not doc["degenerate"]:
                assert parity["ok"]
