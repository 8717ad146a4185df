"""Canonical labeling and orbits against brute-force permutation oracles."""

from __future__ import annotations

import random
from itertools import permutations

from maxnik.canon import (are_isomorphic, automorphism_generators,
                          brute_force_automorphisms, brute_force_isomorphic,
                          canonical_form, canonical_graph, dedup_by_canonical_form,
                          group_order, isomorphism, orbits)
from maxnik.graphs import (complement, complete_graph, complete_multipartite,
                           cycle_graph)
from maxnik.smallgraphs import enumerate_graphs

from conftest import all_labeled_graphs, random_graph


def test_c5_self_complementary():
    assert canonical_form(cycle_graph(5)) == canonical_form(complement(cycle_graph(5)))


def test_order8_triangulation_complements_differ():
    # the two order-8 maximal knotless graphs come from different triangulations
    from maxnik.catalog import named_graph
    g1 = named_graph("K8-3K2").graph
    g2 = named_graph("K8-P3").graph
    assert canonical_form(g1) != canonical_form(g2)
    assert not are_isomorphic(g1, g2)


def test_key_equality_matches_isomorphism_exhaustively():
    for n in range(1, 6):
        classes = {}
        for g in all_labeled_graphs(n):
            classes.setdefault(canonical_form(g).key, []).append(g)
        # canonical class counts for tiny orders are textbook values
        assert len(classes) == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}[n]
        for members in classes.values():
            rep = members[0]
            for other in members[1:3]:
                assert brute_force_isomorphic(rep, other)


def test_pairwise_agreement_with_permutation_oracle_order5():
    classes = enumerate_graphs(5)
    for g in classes:
        for h in classes:
            assert are_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_relabeling_invariance():
    rng = random.Random(13)
    for g in [cycle_graph(7), complete_multipartite(3, 3),
              random_graph(rng, 9, 0.4), random_graph(rng, 10, 0.6)]:
        want = canonical_form(g)
        for _ in range(60):
            p = list(range(g.n))
            rng.shuffle(p)
            assert canonical_form(g.relabel(p)) == want


def test_canonical_graph_is_fixed_point():
    rng = random.Random(14)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 9), 0.5)
        rep = canonical_graph(g)
        assert canonical_graph(rep) == rep
        assert are_isomorphic(g, rep)


def test_isomorphism_map_is_an_isomorphism():
    rng = random.Random(15)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        p = list(range(g.n))
        rng.shuffle(p)
        h = g.relabel(p)
        phi = isomorphism(g, h)
        assert phi is not None
        assert g.relabel(phi) == h


def test_automorphism_group_complete_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            gens = automorphism_generators(g)
            assert group_order(gens, n) == len(brute_force_automorphisms(g))


def test_automorphism_group_known_orders():
    assert group_order(automorphism_generators(complete_graph(6)), 6) == 720
    assert group_order(automorphism_generators(cycle_graph(8)), 8) == 16
    assert group_order(automorphism_generators(complete_multipartite(3, 3)), 6) == 72
    octa = complete_multipartite(2, 2, 2)
    assert group_order(automorphism_generators(octa), 6) == 48


def test_edge_orbits_of_complete_graph():
    assert len(orbits(complete_graph(6), "edge")) == 1


def test_orbit_counts_relabeling_invariant():
    rng = random.Random(16)
    for _ in range(15):
        g = random_graph(rng, rng.randint(3, 8), 0.5)
        base = {kind: len(orbits(g, kind)) for kind in
                ("vertex", "edge", "non-edge", "triangle")}
        p = list(range(g.n))
        rng.shuffle(p)
        h = g.relabel(p)
        for kind, count in base.items():
            assert len(orbits(h, kind)) == count


def test_orbits_partition_objects():
    g = complete_multipartite(2, 2, 2)
    part = orbits(g, "edge")
    seen = set()
    for orbit in part.orbits:
        for e in orbit:
            assert e not in seen
            seen.add(e)
    assert seen == set(g.edges())


def test_orbit_members_truly_equivalent():
    # spot check: every orbit member maps to the first under some automorphism
    g = cycle_graph(6)
    gens = automorphism_generators(g)
    group = set()
    frontier = [tuple(range(6))]
    group.add(tuple(range(6)))
    while frontier:
        e = frontier.pop()
        for a in gens:
            f = tuple(a[e[i]] for i in range(6))
            if f not in group:
                group.add(f)
                frontier.append(f)
    for orbit in orbits(g, "non-edge").orbits:
        first = orbit[0]
        for other in orbit:
            assert any(tuple(sorted((a[first[0]], a[first[1]]))) == other for a in group)


def test_dedup_by_canonical_form():
    graphs = [cycle_graph(5).relabel(p) for p in permutations(range(5))]
    graphs += [complete_graph(5)]
    reps = dedup_by_canonical_form(graphs)
    assert len(reps) == 2
