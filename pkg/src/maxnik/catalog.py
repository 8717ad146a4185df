"""Named graphs and the obstruction library backing certification.

E9 and F9 carry no explicit adjacency anywhere in scope, so they are
derived: E9 as the unique order-9, size-21, minimum-degree-4 member of the
family generated from K7 by both delta-wye moves, F9 by testing which
non-edge orbit of E9 gains a 21-edge family member as a spanning subgraph.
Every derived graph re-validates a list of mandatory fingerprints so a
wrong identification fails loudly instead of poisoning downstream
certificates.

The knotless axioms (E9, G9,29) and the disk-bounding triangle axioms are
trusted from published embeddings and are never re-verified here; they are
flagged as such so certificate consumers can audit the provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import minors
from .canon import canonical_key_graph, isomorphism, orbits
from .errors import IdentificationAmbiguous, ValidationError
from .graphs import (Graph, clique_number, complement, complete_graph,
                     complete_multipartite, cycle_graph, disjoint_union,
                     identified_union, is_k_connected, join,
                     non_triangular_edges)
from .minors import ClosureResult, closure, has_minor
from .planarity import is_k_apex
from .smallgraphs import enumerate_triangulations

PROV_EXPLICIT = "explicit-definition"
PROV_CLOSURE = "closure-derived"
PROV_DECOMPOSITION = "decomposition-derived"


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    provenance: str


@dataclass(frozen=True)
class TriangleDiskAxiom:
    """A (graph, triangle) pair trusted to bound a disk in some knotless embedding.

    ``triangle_orbit`` lists the qualifying triangles on the registry
    labeling of the graph; None means every triangle qualifies.
    """

    graph_name: str
    key: bytes
    triangle_orbit: tuple[tuple[int, int, int], ...] | None
    note: str


@dataclass(frozen=True)
class ObstructionLibrary:
    """Patterns certifying IK, axioms certifying nIK, and disk-triangle data."""

    mmik_patterns: tuple[NamedGraph, ...]
    nik_axioms: tuple[NamedGraph, ...]
    triangle_disk_axioms: tuple[TriangleDiskAxiom, ...]
    unavailable: dict[str, str]

    def pattern_by_name(self, name: str) -> NamedGraph:
        for p in self.mmik_patterns:
            if p.name == name:
                return p
        raise KeyError(name)

    def axiom_for(self, g: Graph) -> NamedGraph | None:
        key = canonical_key_graph(g)[0]
        for a in self.nik_axioms:
            if canonical_key_graph(a.graph)[0] == key:
                return a
        return None


# -- family closures ---------------------------------------------------------


@lru_cache(maxsize=None)
def k7_dy_family() -> ClosureResult:
    """The 14 graphs generated from K7 by repeated triangle-to-wye moves."""
    return closure([complete_graph(7)], {minors.DELTA_Y})


@lru_cache(maxsize=None)
def heawood_family() -> ClosureResult:
    """The 20 graphs generated from K7 by both delta-wye moves."""
    return closure([complete_graph(7)], {minors.DELTA_Y, minors.Y_DELTA})


@lru_cache(maxsize=None)
def k3311_family() -> ClosureResult:
    """The 58 graphs generated from K3,3,1,1 by both delta-wye moves."""
    return closure([complete_multipartite(3, 3, 1, 1)], {minors.DELTA_Y, minors.Y_DELTA})


# -- derived identifications -------------------------------------------------


def identify_E9(heawood: ClosureResult) -> NamedGraph:
    """The unique order-9, size-21, minimum-degree-4 family member.

    All fingerprints are mandatory: size 21; exactly six non-triangular
    edges, each joining a degree-4 to a degree-5 vertex; 4-connected;
    largest clique a triangle; not 2-apex; exactly two non-edge orbits.
    """
    cands = [g for g in heawood.members
             if g.n == 9 and g.m == 21 and min(g.degrees()) >= 4]
    if len(cands) != 1:
        raise IdentificationAmbiguous(
            f"{len(cands)} candidates for E9 in a family of {len(heawood)}")
    g = cands[0]
    problems = []
    if g.m != 21:
        problems.append("size is not 21")
    nte = non_triangular_edges(g)
    deg = g.degrees()
    if len(nte) != 6 or any(sorted((deg[u], deg[v])) != [4, 5] for u, v in nte):
        problems.append("non-triangular edges are not six degree-4-to-degree-5 edges")
    if not is_k_connected(g, 4):
        problems.append("not 4-connected")
    if clique_number(g) != 3:
        problems.append("largest clique is not a triangle")
    if is_k_apex(g, 2).found:
        problems.append("unexpectedly 2-apex")
    if len(orbits(g, "non-edge")) != 2:
        problems.append("non-edge orbit count is not 2")
    if problems:
        raise ValidationError("E9 fingerprints failed: " + "; ".join(problems))
    return NamedGraph("E9", g, PROV_CLOSURE)


def identify_F9_and_E9_plus_e(e9: Graph, k7_dy: ClosureResult) -> tuple[NamedGraph, NamedGraph]:
    """Split E9's two non-edge orbits into the F9 route and the new pattern.

    Adding an edge from one orbit yields a graph containing an order-9
    member of the triangle-to-wye family of K7 as a spanning subgraph (that
    member is F9); the other orbit's addition is itself registered as an
    IK pattern, named E9+e. Anything but a clean one-one split is an error.
    """
    order9 = [g for g in k7_dy.members if g.n == 9]
    reps = [orbit[0] for orbit in orbits(e9, "non-edge").orbits]
    if len(reps) != 2:
        raise IdentificationAmbiguous(f"E9 has {len(reps)} non-edge orbits, expected 2")
    matches: list[list[Graph]] = []
    for u, v in reps:
        added = e9.with_edge(u, v)
        # same order, so a minor is exactly a spanning subgraph
        matches.append([h for h in order9 if has_minor(added, h).found])
    hit = [i for i, ms in enumerate(matches) if ms]
    if len(hit) != 1:
        raise IdentificationAmbiguous(
            f"{len(hit)} of E9's non-edge orbits contain a family subgraph, expected 1")
    i = hit[0]
    if len(matches[i]) != 1:
        raise IdentificationAmbiguous(
            f"orbit contains {len(matches[i])} family subgraphs, expected exactly F9")
    f9 = NamedGraph("F9", matches[i][0], PROV_CLOSURE)
    u, v = reps[1 - i]
    pattern = canonical_key_graph(e9.with_edge(u, v))[1]
    if pattern.m != 22:
        raise ValidationError("E9+e does not have 22 edges")
    return f9, NamedGraph("E9+e", pattern, PROV_CLOSURE)


# -- named graph registry ----------------------------------------------------


def _k8_minus_p3() -> Graph:
    g = complete_graph(8)
    for u, v in ((0, 1), (1, 2), (2, 3)):  # path 0-1-2-3; terminals 0 and 3
        g = g.without_edge(u, v)
    return g


def _three_disjoint_edges_plus_2k1() -> Graph:
    rows = [0] * 8
    g = Graph(8, rows)
    for u, v in ((0, 1), (2, 3), (4, 5)):
        g = g.with_edge(u, v)
    return g


def _octahedron() -> Graph:
    return complete_multipartite(2, 2, 2)


def _glue_k6_over(g: Graph, five_clique: tuple[int, ...]) -> Graph:
    for i, u in enumerate(five_clique):
        for v in five_clique[i + 1:]:
            if not g.has_edge(u, v):
                raise ValidationError(f"{five_clique} is not a clique")
    return identified_union(g, five_clique, complete_graph(6), (0, 1, 2, 3, 4))


@lru_cache(maxsize=None)
def _order9_registry() -> dict[str, Graph]:
    """Name the five order-9 maximal 2-apex graphs via their gluing recipes.

    Big-Y, Long-Y, Hat, and House are built from their stated 5-clique
    sums; Pentagon-bar is the remaining join of a 7-vertex triangulation
    with K2, cross-checked by its complement splitting into a pentagon, a
    bar, and two isolated vertices.
    """
    k8p3 = _k8_minus_p3()
    k83k2 = complement(_three_disjoint_edges_plus_2k1())
    recipes = {
        # path 0-1-2-3: terminals 0, 3; interiors 1, 2; 4..7 untouched
        "Big-Y": _glue_k6_over(k8p3, (0, 3, 4, 5, 6)),
        "Hat": _glue_k6_over(k8p3, (0, 2, 4, 5, 6)),
        "House": _glue_k6_over(k8p3, (1, 4, 5, 6, 7)),
        "Long-Y": _glue_k6_over(k83k2, (0, 2, 4, 6, 7)),
    }
    joins = {}
    for t in enumerate_triangulations(7):
        g = join(t, complete_graph(2))
        joins[canonical_key_graph(g)[0]] = g
    if len(joins) != 5:
        raise ValidationError(f"expected 5 distinct order-9 joins, found {len(joins)}")
    named: dict[str, Graph] = {}
    taken: dict[bytes, str] = {}
    for name, g in recipes.items():
        key, rep = canonical_key_graph(g)
        if key not in joins:
            raise ValidationError(f"{name} recipe is not a triangulation join")
        if key in taken:
            raise ValidationError(f"{name} recipe collides with {taken[key]}")
        taken[key] = name
        named[name] = rep
    rest = [k for k in joins if k not in taken]
    if len(rest) != 1:
        raise ValidationError(f"expected a unique unnamed join, found {len(rest)}")
    pb = canonical_key_graph(joins[rest[0]])[1]
    comps = sorted(c.bit_count() for c in complement(pb).components())
    if comps != [1, 1, 2, 5]:
        raise ValidationError(f"Pentagon-bar complement components are {comps}")
    named["Pentagon-bar"] = pb
    return named


_ALIASES = {
    "k7-": "K7^-",
    "k7^-": "K7^-",
    "k8-3k2": "K8-3K2",
    "k8-3-disjoint-edges": "K8-3K2",
    "k8-p3": "K8-P3",
    "g9,29": "G9,29",
    "g9_29": "G9,29",
    "e9": "E9",
    "f9": "F9",
    "e9+e": "E9+e",
    "big-y": "Big-Y",
    "long-y": "Long-Y",
    "hat": "Hat",
    "house": "House",
    "pentagon-bar": "Pentagon-bar",
    "octahedron": "octahedron",
    "k3,3": "K3,3",
    "k3,3,1,1": "K3,3,1,1",
}

NAMED_GRAPH_NAMES = (
    tuple(f"K{i}" for i in range(1, 10))
    + ("K7^-", "K8-3K2", "K8-P3", "octahedron", "G9,29", "K3,3", "K3,3,1,1",
       "E9", "F9", "E9+e", "Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar")
)


def _validate(name: str, g: Graph, want_n: int, want_m: int) -> Graph:
    if g.n != want_n or g.m != want_m:
        raise ValidationError(
            f"{name}: got order {g.n} size {g.m}, want {want_n}/{want_m}")
    return g


@lru_cache(maxsize=None)
def named_graph(name: str) -> NamedGraph:
    """Look up a named graph, constructing and validating it on first use."""
    canonical_name = _ALIASES.get(name.lower(), name)
    if canonical_name.startswith("K") and canonical_name[1:].isdigit():
        k = int(canonical_name[1:])
        if not 1 <= k <= 64:
            raise KeyError(name)
        return NamedGraph(canonical_name, complete_graph(k), PROV_EXPLICIT)
    if canonical_name == "K3,3":
        return NamedGraph(canonical_name, complete_multipartite(3, 3), PROV_EXPLICIT)
    if canonical_name == "K3,3,1,1":
        return NamedGraph(canonical_name, complete_multipartite(3, 3, 1, 1), PROV_EXPLICIT)
    if canonical_name == "K7^-":
        g = _validate("K7^-", complete_graph(7).without_edge(0, 1), 7, 20)
        return NamedGraph(canonical_name, g, PROV_EXPLICIT)
    if canonical_name == "K8-3K2":
        g = _validate("K8-3K2", complement(_three_disjoint_edges_plus_2k1()), 8, 25)
        other = join(_octahedron(), complete_graph(2))
        if isomorphism(g, other) is None:
            raise ValidationError("K8-3K2 is not the octahedron joined with K2")
        return NamedGraph(canonical_name, g, PROV_EXPLICIT)
    if canonical_name == "K8-P3":
        g = _validate("K8-P3", _k8_minus_p3(), 8, 25)
        return NamedGraph(canonical_name, g, PROV_EXPLICIT)
    if canonical_name == "octahedron":
        return NamedGraph(canonical_name, _octahedron(), PROV_EXPLICIT)
    if canonical_name == "G9,29":
        g = complement(disjoint_union(disjoint_union(
            complete_graph(1), complete_graph(2)), cycle_graph(6)))
        return NamedGraph(canonical_name, _validate("G9,29", g, 9, 29), PROV_EXPLICIT)
    if canonical_name == "E9":
        return identify_E9(heawood_family())
    if canonical_name in ("F9", "E9+e"):
        f9, e9e = identify_F9_and_E9_plus_e(named_graph("E9").graph, k7_dy_family())
        return f9 if canonical_name == "F9" else e9e
    if canonical_name in ("Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar"):
        g = _order9_registry()[canonical_name]
        return NamedGraph(canonical_name, _validate(canonical_name, g, 9, 30),
                          PROV_DECOMPOSITION)
    raise KeyError(name)


# -- the obstruction library -------------------------------------------------


def _designated_e9_triangle_orbit(e9: Graph) -> tuple[tuple[int, int, int], ...]:
    """Least automorphism orbit of triangles with no common neighbor."""
    qualifying = []
    for orbit in orbits(e9, "triangle").orbits:
        a, b, c = orbit[0]
        if not e9.rows[a] & e9.rows[b] & e9.rows[c]:
            qualifying.append(orbit)
    if not qualifying:
        raise ValidationError("E9 has no common-neighbor-free triangle")
    return tuple(sorted(qualifying)[0])


@lru_cache(maxsize=None)
def mmik_library() -> ObstructionLibrary:
    """Build the pattern set, the knotless axioms, and the disk axioms."""
    e9 = named_graph("E9")
    g929 = named_graph("G9,29")
    e9_plus_e = named_graph("E9+e")
    patterns: dict[bytes, NamedGraph] = {}
    for idx, g in enumerate(k7_dy_family().members):
        key = canonical_key_graph(g)[0]
        patterns[key] = NamedGraph(f"K7-family-{idx}", g, PROV_CLOSURE)
    for idx, g in enumerate(k3311_family().members):
        key = canonical_key_graph(g)[0]
        patterns.setdefault(key, NamedGraph(f"K3,3,1,1-family-{idx}", g, PROV_CLOSURE))
    # give the seeds and derived members their customary names
    for name in ("K7", "K3,3,1,1", "F9"):
        key = canonical_key_graph(named_graph(name).graph)[0]
        patterns[key] = NamedGraph(name, patterns[key].graph, patterns[key].provenance)
    patterns[canonical_key_graph(e9_plus_e.graph)[0]] = e9_plus_e
    for ng in patterns.values():
        if ng.graph.m < 21:
            raise ValidationError(f"pattern {ng.name} has under 21 edges")
    for ax in (e9, g929):
        if canonical_key_graph(ax.graph)[0] in patterns:
            raise ValidationError(f"knotless axiom {ax.name} collides with a pattern")
    ordered = tuple(sorted(patterns.values(), key=lambda p: (p.graph.n, p.graph.m, canonical_key_graph(p.graph)[0])))
    tri_axioms = (
        TriangleDiskAxiom(
            "E9", canonical_key_graph(e9.graph)[0],
            _designated_e9_triangle_orbit(e9.graph),
            "orbit choice among common-neighbor-free triangles is a recorded assumption"),
        TriangleDiskAxiom(
            "K4", canonical_key_graph(complete_graph(4))[0], None,
            "any triangle of K4 bounds a face of the planar embedding"),
    )
    return ObstructionLibrary(
        mmik_patterns=ordered,
        nik_axioms=(e9, g929),
        triangle_disk_axioms=tri_axioms,
        unavailable={
            "G9,28": "order-9 pattern named in the source classification; adjacency not published there",
            "G26": "order-9 obstruction with 26 edges; adjacency not published there",
            "G27": "order-9 obstruction with 27 edges; adjacency not published there",
        },
    )


def library_dump(lib: ObstructionLibrary | None = None) -> dict:
    """The full library as graph6 strings plus JSON metadata."""
    from .graphs import graph6_encode

    lib = lib or mmik_library()
    return {
        "patterns": [{
            "name": p.name,
            "graph6": graph6_encode(p.graph),
            "order": p.graph.n,
            "size": p.graph.m,
            "provenance": p.provenance,
        } for p in lib.mmik_patterns],
        "knotless_axioms": [{
            "name": a.name,
            "graph6": graph6_encode(a.graph),
            "trust": "published knotless embedding; not re-verified here",
        } for a in lib.nik_axioms],
        "triangle_disk_axioms": [{
            "graph": ax.graph_name,
            "triangles": None if ax.triangle_orbit is None
            else [list(t) for t in ax.triangle_orbit],
            "note": ax.note,
        } for ax in lib.triangle_disk_axioms],
        "unavailable": dict(lib.unavailable),
    }


def disk_axiom_covers(lib: ObstructionLibrary, g: Graph, triangle: tuple[int, int, int]) -> bool:
    """Is (g, triangle) matched by a registered disk-bounding triangle axiom?"""
    a, b, c = triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        return False
    key = canonical_key_graph(g)[0]
    for ax in lib.triangle_disk_axioms:
        if ax.key != key:
            continue
        if ax.triangle_orbit is None:
            return True
        ref = named_graph(ax.graph_name).graph
        phi = isomorphism(g, ref)
        if phi is None:
            continue
        image = tuple(sorted((phi[a], phi[b], phi[c])))
        if image in ax.triangle_orbit:
            return True
    return False
