"""Prime/composite classification and clique-sum decomposition."""

from __future__ import annotations

import pytest

from maxnik.canon import are_isomorphic, canonical_form
from maxnik.catalog import named_graph
from maxnik.certify import certify_maxnik
from maxnik.construct import chain_graphs, npp5_family
from maxnik.graphs import (complete_graph, cycle_graph, path_graph,
                           vertex_connectivity)
from maxnik.primality import (check_lemma_complement_k2, check_lemma_two_cut,
                              clique_cutsets, decompose, is_prime)

PRIME_NAMES = ["K8-3K2", "Pentagon-bar", "E9", "G9,29"]
COMPOSITE_NAMES = ["K7^-", "K8-P3", "Big-Y", "Long-Y", "Hat", "House"]


class TestCutsets:
    def test_complete_graphs_have_none(self):
        for n in (2, 4, 6):
            assert clique_cutsets(complete_graph(n)) == []

    def test_k7_minus_has_a_5_clique_cutset(self):
        cuts = clique_cutsets(named_graph("K7^-").graph)
        assert cuts and all(len(c) == 5 for c in cuts)

    def test_e9_has_no_small_cutsets(self):
        e9 = named_graph("E9").graph
        assert clique_cutsets(e9) == []
        assert vertex_connectivity(e9) == 4  # cutsets would need 4+ mutual edges

    def test_cut_vertex_found(self):
        g = path_graph(4)
        cuts = clique_cutsets(g)
        assert ((1,) in cuts) and ((2,) in cuts)

    def test_minimality(self):
        # K4 glued to K4 along a triangle: the triangle is the unique minimal cutset
        from maxnik.graphs import identified_union
        g = identified_union(complete_graph(4), (0, 1, 2),
                             complete_graph(4), (0, 1, 2))
        cuts = clique_cutsets(g)
        assert cuts == [(0, 1, 2)]

    def test_disconnected_rejected(self):
        from maxnik.graphs import disjoint_union
        with pytest.raises(ValueError):
            clique_cutsets(disjoint_union(complete_graph(2), complete_graph(2)))


class TestPrimeComposite:
    def test_small_complete_graphs_prime(self):
        for n in (1, 2, 3, 4, 5, 6):
            assert is_prime(complete_graph(n)).prime

    @pytest.mark.parametrize("name", PRIME_NAMES)
    def test_primes(self, name):
        assert is_prime(named_graph(name).graph).prime

    @pytest.mark.parametrize("name", COMPOSITE_NAMES)
    def test_composites(self, name):
        verdict = is_prime(named_graph(name).graph)
        assert not verdict.prime
        assert verdict.witness is not None

    def test_composite_witness_disconnects(self):
        for name in COMPOSITE_NAMES:
            g = named_graph(name).graph
            cut = is_prime(g).witness
            assert len(g.delete_vertices(cut).components()) >= 2


def _split_parts(g, cut):
    kept = [v for v in range(g.n) if v not in cut]
    parts = []
    from maxnik.graphs import _bits
    for comp in g.delete_vertices(cut).components():
        verts = sorted([kept[i] for i in _bits(comp)] + list(cut))
        parts.append(g.subgraph(verts))
    return parts


def _has_recipe_split(g, left, right):
    """Some minimal clique cutset splits g into the two recipe factors."""
    for cut in clique_cutsets(g):
        parts = _split_parts(g, cut)
        if len(parts) != 2:
            continue
        a, b = parts
        if (are_isomorphic(a, left) and are_isomorphic(b, right)) or \
                (are_isomorphic(a, right) and are_isomorphic(b, left)):
            return True
    return False


class TestDecompositions:
    def test_k7_minus_is_two_k6_over_k5(self):
        d = decompose(named_graph("K7^-").graph)
        assert len(d.cutset) == 5
        leaves = d.leaves()
        assert len(leaves) == 2
        assert all(are_isomorphic(leaf, complete_graph(6)) for leaf in leaves)

    def test_recipe_splits(self):
        k6 = complete_graph(6)
        cases = [
            ("K7^-", k6, k6),
            ("K8-P3", named_graph("K7^-").graph, k6),
            ("Big-Y", named_graph("K8-P3").graph, k6),
            ("Long-Y", named_graph("K8-3K2").graph, k6),
            ("Hat", named_graph("K8-P3").graph, k6),
            ("House", named_graph("K8-P3").graph, k6),
        ]
        for name, left, right in cases:
            assert _has_recipe_split(named_graph(name).graph, left, right), name

    def test_reglue_identity_on_named_graphs(self):
        for name in PRIME_NAMES + COMPOSITE_NAMES + ["K5", "K6"]:
            g = named_graph(name).graph
            d = decompose(g)
            assert canonical_form(d.re_glue()) == canonical_form(g)

    def test_leaves_are_prime(self):
        for name in COMPOSITE_NAMES:
            d = decompose(named_graph(name).graph)
            for leaf in d.leaves():
                assert is_prime(leaf).prime

    def test_long_y_leaves(self):
        d = decompose(named_graph("Long-Y").graph)
        leaves = d.leaves()
        assert len(leaves) == 2
        matched = {
            "K6": sum(1 for g in leaves if are_isomorphic(g, complete_graph(6))),
            "K8-3K2": sum(1 for g in leaves
                          if are_isomorphic(g, named_graph("K8-3K2").graph)),
        }
        assert matched == {"K6": 1, "K8-3K2": 1}

    def test_json_shape(self):
        blob = decompose(named_graph("K7^-").graph).to_json()
        assert blob["prime"] is False
        assert len(blob["cutset"]) == 5
        assert all(part["prime"] for part in blob["parts"])

    def test_exactly_one_of_the_five_joins_is_prime(self):
        names = ("Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar")
        flags = {n: is_prime(named_graph(n).graph).prime for n in names}
        assert sum(flags.values()) == 1
        assert flags["Pentagon-bar"]


class TestLemmaChecks:
    def test_chain_two_cut(self, lib):
        g, cert = chain_graphs(2)
        report = check_lemma_two_cut(g, cert)
        assert not report.vacuous
        assert report.ok
        e9 = named_graph("E9").graph
        for check in report.checks:
            assert check.edge_present
            assert set(check.piece_verdicts) == {"MAXNIK"}
        # the designated cut splits into two copies of E9
        x, y = report.checks[0].cut
        parts = _split_parts(g, (x, y))
        assert any(are_isomorphic(p, e9) for p in parts)

    def test_npp5_cut_at_triangle_tip(self, lib):
        g, cert = npp5_family(1)
        report = check_lemma_two_cut(g, cert)
        assert report.ok and not report.vacuous
        sizes = sorted(len(c.piece_verdicts) for c in report.checks)
        assert sizes[0] >= 2
        tip_checks = [c for c in report.checks if "MAXNIK" in c.piece_verdicts]
        assert tip_checks

    def test_k7_minus_vacuous(self, lib):
        g = named_graph("K7^-").graph
        report = check_lemma_two_cut(g, certify_maxnik(g, lib))
        assert report.vacuous and report.ok

    def test_requires_maxnik_certificate(self, lib):
        from maxnik.certify import certify_nik
        g = complete_graph(6)
        with pytest.raises(ValueError):
            check_lemma_two_cut(g, certify_nik(g, lib))

    def test_complement_k2_lemma(self):
        assert check_lemma_complement_k2(named_graph("K8-3K2").graph).ok
        assert check_lemma_complement_k2(named_graph("G9,29").graph).ok
        k4_minus = complete_graph(4).without_edge(0, 1)
        report = check_lemma_complement_k2(k4_minus)
        assert report.ok and report.is_complete_minus_edge and not report.prime

    def test_complement_k2_precondition(self):
        with pytest.raises(ValueError):
            check_lemma_complement_k2(cycle_graph(5))
