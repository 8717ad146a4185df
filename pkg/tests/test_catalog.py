"""Named graphs, derived identifications, and the obstruction library."""

from __future__ import annotations

import random

import pytest

from maxnik.canon import are_isomorphic, orbits
from maxnik.catalog import (disk_axiom_covers, heawood_family, k3311_family,
                            k7_dy_family, named_graph)
from maxnik.graphs import (clique_number, complement, complete_graph,
                           complete_multipartite, cycle_graph, disjoint_union,
                           join, non_triangular_edges, triangles,
                           vertex_connectivity)
from maxnik.minors import has_minor
from maxnik.planarity import is_k_apex, is_maximal_2apex


class TestE9:
    def test_order_and_size(self, lib):
        e9 = named_graph("E9").graph
        assert (e9.n, e9.m) == (9, 21)

    def test_degrees_only_4_and_5(self):
        e9 = named_graph("E9").graph
        assert sorted(set(e9.degrees())) == [4, 5]
        assert min(e9.degrees()) == 4

    def test_six_non_triangular_edges_degree_4_to_5(self):
        e9 = named_graph("E9").graph
        nte = non_triangular_edges(e9)
        assert len(nte) == 6
        for u, v in nte:
            assert sorted((e9.degree(u), e9.degree(v))) == [4, 5]

    def test_four_connected(self):
        assert vertex_connectivity(named_graph("E9").graph) == 4

    def test_largest_clique_is_triangle(self):
        assert clique_number(named_graph("E9").graph) == 3

    def test_not_two_apex(self):
        assert not is_k_apex(named_graph("E9").graph, 2).found

    def test_two_non_edge_orbits(self):
        assert len(orbits(named_graph("E9").graph, "non-edge")) == 2

    def test_in_heawood_family_at_order_nine(self):
        e9 = named_graph("E9").graph
        nine = heawood_family().of_order(9)
        assert sum(1 for g in nine if are_isomorphic(g, e9)) == 1

    def test_non_triangular_edges_fill_whole_orbits(self):
        e9 = named_graph("E9").graph
        nte = set(non_triangular_edges(e9))
        for orbit in orbits(e9, "edge").orbits:
            hit = sum(1 for e in orbit if e in nte)
            assert hit in (0, len(orbit))
        assert len(nte) == 6


class TestF9:
    def test_f9_is_an_order9_family_member(self):
        f9 = named_graph("F9").graph
        assert (f9.n, f9.m) == (9, 21)
        nine = k7_dy_family().of_order(9)
        assert any(are_isomorphic(g, f9) for g in nine)

    def test_exactly_one_orbit_gains_f9(self):
        e9 = named_graph("E9").graph
        f9 = named_graph("F9").graph
        hits = []
        for orbit in orbits(e9, "non-edge").orbits:
            u, v = orbit[0]
            hits.append(has_minor(e9.with_edge(u, v), f9).found)
        assert sorted(hits) == [False, True]

    def test_e9_plus_e_pattern(self):
        p = named_graph("E9+e").graph
        assert (p.n, p.m) == (9, 22)


class TestNamedGraphs:
    @pytest.mark.parametrize("name,n,m", [
        ("K7^-", 7, 20),
        ("K8-3K2", 8, 25),
        ("K8-P3", 8, 25),
        ("G9,29", 9, 29),
        ("octahedron", 6, 12),
        ("K3,3,1,1", 8, 22),
        ("Big-Y", 9, 30),
        ("Long-Y", 9, 30),
        ("Hat", 9, 30),
        ("House", 9, 30),
        ("Pentagon-bar", 9, 30),
    ])
    def test_orders_and_sizes(self, name, n, m):
        ng = named_graph(name)
        assert (ng.graph.n, ng.graph.m) == (n, m)

    def test_aliases(self):
        assert named_graph("e9").graph == named_graph("E9").graph
        assert named_graph("g9_29").graph == named_graph("G9,29").graph
        assert named_graph("k7-").graph == named_graph("K7^-").graph

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            named_graph("no-such-graph")

    def test_g929_complement_structure(self):
        g = named_graph("G9,29").graph
        want = disjoint_union(disjoint_union(complete_graph(1), complete_graph(2)),
                              cycle_graph(6))
        assert complement(g) == want
        comps = sorted(c.bit_count() for c in complement(g).components())
        assert comps == [1, 2, 6]

    def test_k8_minus_matching_is_octahedron_join(self):
        got = named_graph("K8-3K2").graph
        assert are_isomorphic(got, join(complete_multipartite(2, 2, 2),
                                        complete_graph(2)))

    def test_order9_registry_is_the_five_joins(self):
        names = ("Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar")
        graphs = [named_graph(n).graph for n in names]
        for g in graphs:
            assert is_maximal_2apex(g)
        for i in range(5):
            for j in range(i + 1, 5):
                assert not are_isomorphic(graphs[i], graphs[j])

    def test_pentagon_bar_complement(self):
        pb = named_graph("Pentagon-bar").graph
        comps = sorted(c.bit_count() for c in complement(pb).components())
        assert comps == [1, 1, 2, 5]
        assert complement(pb).m == 1 + 5


class TestLibrary:
    def test_pattern_count(self, lib):
        assert len(lib.mmik_patterns) == 14 + 58 + 1

    def test_every_pattern_has_at_least_21_edges(self, lib):
        assert all(p.graph.m >= 21 for p in lib.mmik_patterns)

    def test_contains_seeds_and_derived(self, lib):
        names = {p.name for p in lib.mmik_patterns}
        assert {"K7", "K3,3,1,1", "F9", "E9+e"} <= names

    def test_axioms_disjoint_from_patterns(self, lib):
        from maxnik.canon import canonical_form
        pattern_keys = {canonical_form(p.graph).key for p in lib.mmik_patterns}
        for axiom in lib.nik_axioms:
            assert canonical_form(axiom.graph).key not in pattern_keys

    def test_no_pattern_is_a_minor_of_a_knotless_axiom(self, lib):
        for axiom in lib.nik_axioms:
            host = axiom.graph
            for p in lib.mmik_patterns:
                if p.graph.n <= host.n and p.graph.m <= host.m:
                    assert not has_minor(host, p.graph).found, (axiom.name, p.name)

    def test_patterns_sorted_cheapest_first(self, lib):
        sizes = [(p.graph.n, p.graph.m) for p in lib.mmik_patterns]
        assert sizes == sorted(sizes)

    def test_family_counts(self):
        assert len(k7_dy_family()) == 14
        assert len(heawood_family()) == 20
        assert len(k3311_family()) == 58

    def test_unavailable_flagged(self, lib):
        assert set(lib.unavailable) == {"G9,28", "G26", "G27"}

    def test_disk_axiom_matching(self, lib):
        e9 = named_graph("E9").graph
        designated = lib.triangle_disk_axioms[0].triangle_orbit
        assert designated is not None
        tri = designated[0]
        a, b, c = tri
        assert not e9.rows[a] & e9.rows[b] & e9.rows[c]  # no common neighbor
        assert disk_axiom_covers(lib, e9, tri)
        rng = random.Random(40)
        perm = list(range(9))
        rng.shuffle(perm)
        relabeled = e9.relabel(perm)
        image = tuple(sorted(perm[v] for v in tri))
        assert disk_axiom_covers(lib, relabeled, image)

    def test_disk_axiom_rejects_other_triangles(self, lib):
        e9 = named_graph("E9").graph
        designated = set(lib.triangle_disk_axioms[0].triangle_orbit)
        others = [t for t in triangles(e9) if t not in designated]
        assert others
        assert not disk_axiom_covers(lib, e9, others[0])

    def test_disk_axiom_k4_wildcard(self, lib):
        assert disk_axiom_covers(lib, complete_graph(4), (1, 2, 3))
        assert not disk_axiom_covers(lib, complete_graph(5), (0, 1, 2))

    def test_provenance_fields(self, lib):
        assert named_graph("E9").provenance == "closure-derived"
        assert named_graph("K7^-").provenance == "explicit-definition"
        assert named_graph("House").provenance == "decomposition-derived"

    def test_dump_shape(self, lib):
        from maxnik.catalog import library_dump
        from maxnik.graphs import graph6_decode
        dump = library_dump(lib)
        assert len(dump["patterns"]) == 73
        assert {a["name"] for a in dump["knotless_axioms"]} == {"E9", "G9,29"}
        for entry in dump["patterns"][:5]:
            g = graph6_decode(entry["graph6"])
            assert (g.n, g.m) == (entry["order"], entry["size"])
        assert set(dump["unavailable"]) == {"G9,28", "G26", "G27"}


class TestIdentificationErrors:
    def test_identify_e9_rejects_wrong_family(self):
        from maxnik.catalog import identify_E9
        from maxnik.errors import IdentificationAmbiguous
        with pytest.raises(IdentificationAmbiguous):
            identify_E9(k7_dy_family())  # its order-9 members have degree-3 vertices

    def test_identify_f9_needs_the_right_graph(self):
        from maxnik.catalog import identify_F9_and_E9_plus_e
        from maxnik.errors import IdentificationAmbiguous
        with pytest.raises(IdentificationAmbiguous):
            identify_F9_and_E9_plus_e(named_graph("G9,29").graph, k7_dy_family())
