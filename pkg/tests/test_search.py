import itertools
from fractions import Fraction

import pytest

from seghyp.audit import audit
from seghyp.geometry import QuadConfigError, quad_config
from seghyp.hypergraph import contains_triangle, is_intersecting, isolated_vertices, max_degree
from seghyp.search import (
    RatioTuple,
    allowed_ratios,
    canonical_form,
    enumerate_intersecting,
    enumerate_ratio_tuples,
    generate_intersecting,
    generate_random,
    quad_ratio_feasible,
    raw_ratio_tuples,
    segment_pool,
)
from seghyp.solvers import covering_number, matching_number

F = Fraction


class TestAllowedRatios:
    def test_r5_paper_set(self):
        assert allowed_ratios(5) == frozenset({F(1, 3), F(1, 2), F(1), F(2), F(3)})

    def test_r4(self):
        assert allowed_ratios(4) == frozenset({F(1, 2), F(1), F(2)})

    def test_r6(self):
        assert allowed_ratios(6) == frozenset(
            {F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1), F(3, 2), F(2), F(3), F(4)}
        )


class TestRatioTuples:
    def test_r5_exactly_paper_orbits(self):
        got = [t.as_tuple() for t in enumerate_ratio_tuples(5)]
        want = sorted(
            [
                (F(1), F(1), F(2), F(2)),
                (F(2), F(2), F(3), F(3)),
                (F(1, 2), F(1), F(1), F(3)),
                (F(1, 3), F(1, 2), F(1), F(2)),
            ]
        )
        assert got == want

    def test_r5_six_raw_tuples(self):
        assert len(raw_ratio_tuples(5)) == 6

    def test_pair_one_two_rejected(self):
        # (1,2) forces b4 = 4, impossible within a 5-point edge
        raw = {(t.b1, t.b2) for t in raw_ratio_tuples(5)}
        assert (F(1), F(2)) not in raw

    def test_swap_preserves_relations(self):
        for t in raw_ratio_tuples(5):
            s = t.swapped()  # constructor re-checks the relations
            assert s.swapped() == t

    def test_invalid_tuple_rejected(self):
        with pytest.raises(Exception):
            RatioTuple(F(1), F(1), F(1), F(1))


class TestGenerators:
    def test_random_deterministic(self):
        a = generate_random(3, 6, 5, seed=11)
        b = generate_random(3, 6, 5, seed=11)
        assert a == b

    def test_random_validates(self):
        for seed in range(20):
            H = generate_random(4, 5, 6, seed=seed)
            assert H.r == 4  # build() already validated

    def test_intersecting_deterministic(self):
        a = generate_intersecting(4, 5, 6, seed=3)
        b = generate_intersecting(4, 5, 6, seed=3)
        assert a == b

    def test_intersecting_is_intersecting(self):
        for seed in range(20):
            H = generate_intersecting(3, 5, 5, seed=seed)
            assert is_intersecting(H)
            assert matching_number(H)[0] == 1

    def test_intersecting_r3_has_isolated_vertex(self):
        for seed in range(20):
            H = generate_intersecting(3, 5, 5, seed=seed)
            assert isolated_vertices(H)

    def test_intersecting_r5_tau_at_most_three(self):
        for seed in range(20):
            H = generate_intersecting(5, 5, 6, seed=seed)
            assert covering_number(H)[0] <= 3


class TestQuadFeasibility:
    def test_lowerbound_quads_feasible(self):
        from seghyp.constructions import lowerbound_family

        for r in (5, 6):
            assert quad_ratio_feasible(lowerbound_family(r))

    def test_generated_quads_feasible(self):
        for seed in range(30):
            H = generate_intersecting(5, 5, 6, seed=seed)
            assert quad_ratio_feasible(H)

    def test_extracted_tuples_in_feasible_set(self):
        from seghyp.constructions import lowerbound_family

        H = lowerbound_family(5)
        feas = {t.as_tuple() for t in enumerate_ratio_tuples(5)}
        feas |= {t.swapped().as_tuple() for t in enumerate_ratio_tuples(5)}
        found = 0
        for quad in itertools.combinations(H.edges, 4):
            try:
                qc = quad_config(*quad)
            except QuadConfigError:
                continue
            found += 1
            assert qc.ratios in feas
        assert found == 5


class TestCanonicalForm:
    def test_translation_invariance(self):
        from seghyp.geometry import segment
        from seghyp.hypergraph import build

        H1 = build(3, [segment((0, 0), (1, 0), 3), segment((0, 0), (0, 1), 3)])
        H2 = build(3, [segment((7, -2), (1, 0), 3), segment((7, -2), (0, 1), 3)])
        assert canonical_form(H1)[0] == canonical_form(H2)[0]

    def test_rotation_invariance(self):
        from seghyp.geometry import segment
        from seghyp.hypergraph import build

        H1 = build(3, [segment((0, 0), (1, 2), 3), segment((0, 0), (1, 0), 3)])
        # rotate 90 degrees: (x,y) -> (-y,x)
        H2 = build(3, [segment((0, 0), (-2, 1), 3), segment((0, 0), (0, 1), 3)])
        assert canonical_form(H1)[0] == canonical_form(H2)[0]

    def test_canonical_is_idempotent(self):
        H = generate_random(3, 5, 4, seed=5)
        key1, canon = canonical_form(H)
        key2, canon2 = canonical_form(canon)
        assert key1 == key2 and canon == canon2


class TestEnumeration:
    def test_r3_small_box_all_tau_le_2(self):
        fams = list(enumerate_intersecting(3, 2))
        assert fams
        for H in fams:
            assert is_intersecting(H)
            assert covering_number(H)[0] <= 2
            assert isolated_vertices(H)

    def test_emitted_forms_pairwise_distinct(self):
        fams = list(enumerate_intersecting(3, 2))
        keys = [canonical_form(H)[0] for H in fams]
        assert len(keys) == len(set(keys))

    def test_deterministic_output(self):
        a = [canonical_form(H)[0] for H in enumerate_intersecting(3, 2)]
        b = [canonical_form(H)[0] for H in enumerate_intersecting(3, 2)]
        assert a == b

    def test_families_are_maximal(self):
        from seghyp.search import intersection_adjacency

        pool = segment_pool(3, 2)
        adj = intersection_adjacency(pool)
        fams = list(enumerate_intersecting(3, 2))
        # spot-check a few: no pool segment extends the family
        for H in fams[:10]:
            ids = [pool.index(s) for s in H.edges] if all(s in pool for s in H.edges) else None
            if ids is None:
                continue  # canonical translate may leave the box; skip
            common = set(range(len(pool)))
            for i in ids:
                common &= adj[i]
            assert not common


class TestAudit:
    def test_triangle_r_skips_ryser_conjecture(self):
        from seghyp.constructions import triangle_R

        rep = audit(triangle_R(), "triangle")
        names = {c.name for c in rep.checks}
        assert "ryser_type_conjecture" not in names  # r=2 excluded
        assert rep.ok

    def test_lowerbound_7_meets_conjecture_with_equality(self):
        from seghyp.constructions import lowerbound_family

        rep = audit(lowerbound_family(7), "lb7")
        assert rep.ok
        half = next(c for c in rep.checks if c.name == "intersecting_half_r_conjecture")
        assert half.conjecture and half.passed
        assert half.observed == "4"  # tau = ceil(7/2) = 4: equality

    def test_theorem_checks_never_fail_on_generated(self):
        for seed in range(25):
            H = generate_intersecting(4, 5, 6, seed=seed)
            rep = audit(H, f"gen{seed}")
            assert not rep.theorem_failures
            assert not rep.conjecture_failures
            assert rep.counterexample is None

    def test_generic_instance_gets_reduced_battery(self):
        from seghyp.constructions import nonfano_S

        rep = audit(nonfano_S(), "nonfano")
        names = {c.name for c in rep.checks}
        assert "lp_chain" in names and "trivial_bound" in names
        assert "chi_bound_r2" not in names and "ryser_type_conjecture" not in names
        assert rep.ok

    def test_failing_conjecture_carries_counterexample(self):
        # force a fake failure by auditing with a doctored check: simulate via report API
        from seghyp.audit import AuditCheck, AuditReport

        rep = AuditReport(
            "fake",
            (AuditCheck("ryser_type_conjecture", "tau <= 2", "3", False, conjecture=True),),
            counterexample={"format_version": "1"},
        )
        assert rep.conjecture_failures and rep.counterexample is not None
