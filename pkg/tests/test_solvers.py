import pytest
from hypothesis import given, settings, strategies as st

from seghyp.geometry import segment
from seghyp.hypergraph import GenericHypergraph, ValidationError, build
from seghyp.solvers import (
    NodeLimitExceeded,
    chromatic_number,
    covering_number,
    is_proper,
    k_colorable,
    matching_number,
)
from oracles import oracle_chi, oracle_nu, oracle_tau


def _gh(edges):
    verts = sorted({v for e in edges for v in e})
    return GenericHypergraph.make(verts, edges)


class TestCovering:
    def test_triangle_tau_two(self):
        from seghyp.constructions import triangle_R

        tau, w = covering_number(triangle_R())
        assert tau == 2 == w.size

    def test_single_edge(self):
        tau, w = covering_number(build(3, [segment((0, 0), (1, 0), 3)]))
        assert tau == 1

    def test_empty_edge_set(self):
        tau, w = covering_number(_gh([]))
        assert tau == 0 and w.vertices == frozenset()

    def test_lowerbound_r5(self):
        from seghyp.constructions import lowerbound_family

        tau, w = covering_number(lowerbound_family(5))
        assert tau == 3

    def test_witness_hits_all_edges(self, oracle_instances):
        for H in oracle_instances[:40]:
            _, w = covering_number(H)
            G = H.to_generic()
            assert all(e & w.vertices for e in G.edges)

    def test_node_limit_raises(self):
        from seghyp.constructions import cube_projected

        with pytest.raises(NodeLimitExceeded):
            covering_number(cube_projected(), node_limit=2)


class TestMatching:
    def test_nonfano_nu_one(self):
        from seghyp.constructions import nonfano_S

        nu, _ = matching_number(nonfano_S())
        assert nu == 1

    def test_disjoint_edges(self):
        H = _gh([[0, 1], [2, 3], [4, 5]])
        nu, w = matching_number(H)
        assert nu == 3 and w.size == 3

    def test_k4_perfect_matching(self):
        from seghyp.constructions import k4_example

        nu, w = matching_number(k4_example())
        assert nu == 2

    def test_witness_disjoint(self, oracle_instances):
        for H in oracle_instances[:40]:
            _, w = matching_number(H)
            G = H.to_generic()
            seen = set()
            for i in w.edges:
                assert not (G.edges[i] & seen)
                seen |= G.edges[i]


class TestColoring:
    def test_single_edge_two_colorable(self):
        H = build(3, [segment((0, 0), (1, 0), 3)])
        assert k_colorable(H, 2) is not None

    def test_zk_colorings(self):
        from seghyp.hypergraph import zk_hypergraph

        assert k_colorable(zk_hypergraph(3).to_generic(), 3) is not None
        assert k_colorable(zk_hypergraph(4).to_generic(), 2) is not None
        assert k_colorable(zk_hypergraph(2).to_generic(), 3) is None

    def test_k4_chromatic_four(self):
        from seghyp.constructions import k4_example

        chi, w = chromatic_number(k4_example())
        assert chi == 4

    def test_triangle_chi_three(self):
        from seghyp.constructions import triangle_R

        chi, _ = chromatic_number(triangle_R())
        assert chi == 3

    def test_edgeless_chi_one(self):
        chi, _ = chromatic_number(_gh([]))
        assert chi == 1

    def test_size_one_edge_rejected(self):
        with pytest.raises(ValidationError):
            chromatic_number(GenericHypergraph.make([0], [[0]]))

    def test_monotone_in_k(self, oracle_instances):
        for H in oracle_instances[:25]:
            chi, _ = chromatic_number(H)
            assert k_colorable(H, chi) is not None
            assert k_colorable(H, chi + 1) is not None
            if chi > 1:
                assert k_colorable(H, chi - 1) is None

    def test_witness_proper(self, oracle_instances):
        for H in oracle_instances[:40]:
            _, w = chromatic_number(H)
            assert is_proper(H, w)


class TestIsProper:
    def test_all_distinct_true(self):
        H = _gh([[0, 1, 2]])
        from seghyp.solvers import Coloring

        assert is_proper(H, Coloring({0: 0, 1: 1, 2: 2}, 3))

    def test_constant_false(self):
        H = _gh([[0, 1, 2]])
        from seghyp.solvers import Coloring

        assert not is_proper(H, Coloring({0: 0, 1: 0, 2: 0}, 1))

    def test_partial_assignment_errors(self):
        H = _gh([[0, 1, 2]])
        from seghyp.solvers import Coloring

        with pytest.raises(ValidationError, match="partial"):
            is_proper(H, Coloring({0: 0}, 1))

    def test_found_z4_coloring_verifies(self):
        from seghyp.hypergraph import zk_hypergraph

        G = zk_hypergraph(4).to_generic()
        c = k_colorable(G, 2)
        assert c is not None and is_proper(G, c)


class TestOracleEquivalence:
    def test_tau_nu_chi_match_bruteforce(self, oracle_instances):
        for H in oracle_instances:
            tau, _ = covering_number(H)
            nu, _ = matching_number(H)
            chi, _ = chromatic_number(H)
            assert tau == oracle_tau(H)
            assert nu == oracle_nu(H)
            assert chi == oracle_chi(H)

    def test_trivial_bound_chain(self, oracle_instances):
        for H in oracle_instances:
            if not H.edges:
                continue
            tau, _ = covering_number(H)
            nu, _ = matching_number(H)
            assert nu <= tau <= H.r * nu


class TestDeterminism:
    def test_witnesses_reproducible(self, oracle_instances):
        for H in oracle_instances[:20]:
            assert covering_number(H) == covering_number(H)
            assert matching_number(H) == matching_number(H)
            c1 = chromatic_number(H)
            c2 = chromatic_number(H)
            assert c1[0] == c2[0] and c1[1].assignment == c2[1].assignment
