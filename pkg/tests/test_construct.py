"""Clique-sum constructions, family formulas, and the size planner."""

from __future__ import annotations

import pytest

from maxnik.canon import are_isomorphic
from maxnik.catalog import named_graph
from maxnik.certify import (LEMMA_EDGE_SUM, LEMMA_EDGE_SUM_MAXNIK,
                            LEMMA_TRIANGLE_SUM, VERDICT_MAXNIK, VERDICT_NIK,
                            certify_maxnik, check_necessary,
                            validate_certificate)
from maxnik.construct import (GluingSpec, chain_graphs, clique_sum,
                              npp5_family, prime_family, size_construct,
                              subdivide_retriangulate)
from maxnik.errors import (PreconditionError, SizeOutOfRangeError,
                           UnrepresentableSizeError)
from maxnik.graphs import (clique_number, complete_graph,
                           complete_multipartite, is_k_connected,
                           non_triangular_edges)
from maxnik.planarity import is_maximal_2apex, is_maximal_planar


@pytest.fixture(scope="module")
def e9_pair(lib):
    g = named_graph("E9").graph
    return g, certify_maxnik(g, lib)


class TestCliqueSum:
    def test_two_e9_on_shared_edge(self, lib, e9_pair):
        e9, cert = e9_pair
        edge = non_triangular_edges(e9)[0]
        g, out = clique_sum(GluingSpec(LEMMA_EDGE_SUM_MAXNIK,
                                       e9, edge, cert, e9, edge, cert))
        assert (g.n, g.m) == (16, 41)
        assert out.verdict == VERDICT_MAXNIK
        assert validate_certificate(out, lib) == []

    def test_e9_triangle_sum_with_k4(self, lib, e9_pair):
        e9, cert = e9_pair
        tri = lib.triangle_disk_axioms[0].triangle_orbit[0]
        k4 = complete_graph(4)
        k4_cert = certify_maxnik(k4, lib)
        g, out = clique_sum(GluingSpec(LEMMA_TRIANGLE_SUM,
                                       e9, tri, cert, k4, (0, 1, 2), k4_cert))
        assert (g.n, g.m) == (10, 24)
        assert out.verdict == VERDICT_MAXNIK
        assert validate_certificate(out, lib) == []

    def test_size_formula_every_gluing(self, lib, e9_pair):
        e9, cert = e9_pair
        k3 = complete_graph(3)
        k3_cert = certify_maxnik(k3, lib)
        for t, lemma, lc, rc in [
                (1, "NPP7-v", (0,), (0,)),
                (2, LEMMA_EDGE_SUM, non_triangular_edges(e9)[0], (0, 1)),
        ]:
            g, _ = clique_sum(GluingSpec(lemma, e9, lc, cert, k3, rc, k3_cert))
            assert g.m == e9.m + k3.m - t * (t - 1) // 2

    def test_vertex_sum_gives_nik_only(self, lib, e9_pair):
        e9, cert = e9_pair
        g, out = clique_sum(GluingSpec("NPP7-v", e9, (0,), cert, e9, (0,), cert))
        assert out.verdict == VERDICT_NIK
        assert g.n == 17
        assert validate_certificate(out, lib) == []

    def test_triangular_edge_on_both_sides_rejected(self, lib):
        k4 = complete_graph(4)
        k4_cert = certify_maxnik(k4, lib)
        with pytest.raises(PreconditionError):
            clique_sum(GluingSpec(LEMMA_EDGE_SUM_MAXNIK,
                                  k4, (0, 1), k4_cert, k4, (0, 1), k4_cert))

    def test_unregistered_triangle_rejected(self, lib, e9_pair):
        e9, cert = e9_pair
        k4 = complete_graph(4)
        k4_cert = certify_maxnik(k4, lib)
        from maxnik.graphs import triangles
        designated = set(lib.triangle_disk_axioms[0].triangle_orbit)
        other = next(t for t in triangles(e9) if t not in designated)
        with pytest.raises(PreconditionError):
            clique_sum(GluingSpec(LEMMA_TRIANGLE_SUM,
                                  e9, other, cert, k4, (0, 1, 2), k4_cert))

    def test_non_clique_rejected(self, lib, e9_pair):
        e9, cert = e9_pair
        u, v = e9.non_edges()[0]
        with pytest.raises(PreconditionError):
            clique_sum(GluingSpec(LEMMA_EDGE_SUM_MAXNIK,
                                  e9, (u, v), cert, e9, (u, v), cert))

    def test_uncertified_operand_rejected(self, lib, e9_pair):
        e9, cert = e9_pair
        from maxnik.certify import certify_ik
        ik_cert = certify_ik(complete_graph(7), lib)
        with pytest.raises(PreconditionError):
            clique_sum(GluingSpec(LEMMA_EDGE_SUM_MAXNIK,
                                  e9, non_triangular_edges(e9)[0], cert,
                                  complete_graph(7), (0, 1), ik_cert))


class TestChain:
    @pytest.mark.parametrize("i,size", [(1, 21), (2, 41), (3, 61)])
    def test_sizes(self, i, size):
        g, cert = chain_graphs(i)
        assert g.m == size
        assert cert.verdict == VERDICT_MAXNIK

    def test_keeps_six_non_triangular_edges(self):
        for i in (1, 2, 3):
            g, _ = chain_graphs(i)
            assert len(non_triangular_edges(g)) >= 6


class TestNpp5:
    @pytest.mark.parametrize("k", [1, 2])
    def test_formulas(self, k):
        g, cert = npp5_family(k)
        assert (g.n, g.m) == (12 * k + 2, 30 * k + 1)
        assert 12 * g.m == 30 * (g.n - 2) + 12  # the printed identity, cleared
        assert cert.verdict == VERDICT_MAXNIK

    def test_degree_two_vertices_present(self):
        g, _ = npp5_family(1)
        assert min(g.degrees()) == 2

    def test_passes_necessary_conditions(self):
        g, _ = npp5_family(1)
        assert check_necessary(g).all_pass

    def test_order_cap(self):
        with pytest.raises(ValueError):
            npp5_family(6)


class TestSizeConstruct:
    def test_size20_is_k7_minus(self):
        plan, g, cert = size_construct(20)
        assert plan.special == "K7^-"
        assert are_isomorphic(g, named_graph("K7^-").graph)
        assert cert.verdict == VERDICT_MAXNIK

    def test_size24_is_the_ten_vertex_triangle_sum(self):
        plan, g, cert = size_construct(24)
        assert g.n == 10 and g.m == 24
        assert cert.verdict == VERDICT_MAXNIK

    def test_size22_unrepresentable(self):
        with pytest.raises(UnrepresentableSizeError):
            size_construct(22)

    def test_below_20_out_of_range(self):
        with pytest.raises(SizeOutOfRangeError):
            size_construct(19)

    def test_size37_plan(self):
        plan, g, cert = size_construct(37)
        assert plan.base_chain == 1
        assert plan.addends == (14, 2)
        assert g.m == 37

    def test_plan_arithmetic_and_certificates(self, lib):
        for n in (21, 23, 25, 30, 41, 42, 44, 61):
            plan, g, cert = size_construct(n)
            assert g.m == n
            assert cert.verdict == VERDICT_MAXNIK
            if plan.special is None:
                assert 21 + 20 * (plan.base_chain - 1) + sum(plan.addends) == n
                assert len(plan.addends) <= 6
            assert validate_certificate(cert, lib) == []

    def test_plan_json(self):
        plan, _, _ = size_construct(37)
        blob = plan.to_json()
        assert blob["addends"] == [14, 2]
        assert blob["base_chain"] == 1


class TestPrimeFamily:
    def test_order8_is_k8_minus_matching(self):
        g = prime_family(8)
        assert are_isomorphic(g, named_graph("K8-3K2").graph)

    def test_order9_size(self):
        g = prime_family(9)
        assert (g.n, g.m) == (9, 30)

    @pytest.mark.parametrize("order", [10, 12, 15, 25])
    def test_outputs_maximal_2apex(self, order):
        g = prime_family(order)
        assert g.m == 5 * order - 15
        assert is_maximal_2apex(g)

    def test_prime_outputs_are_prime(self):
        from maxnik.primality import is_prime
        for order in (8, 9, 11):
            assert is_prime(prime_family(order)).prime


class TestSubdivide:
    def test_octahedron_split(self):
        t = subdivide_retriangulate(complete_multipartite(2, 2, 2), (0, 2))
        assert (t.n, t.m) == (7, 15)
        assert is_maximal_planar(t)
        assert clique_number(t) == 3
        assert is_k_connected(t, 4)

    def test_edge_in_many_triangles_rejected(self):
        with pytest.raises(ValueError):
            subdivide_retriangulate(complete_graph(5).without_edge(0, 1), (2, 3))

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            subdivide_retriangulate(complete_multipartite(2, 2, 2), (0, 1))
