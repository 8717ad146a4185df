"""Clique cutsets, prime/composite classification, and decomposition.

A graph is composite when it is the clique sum of two smaller graphs;
with clique edges always retained (the convention every construction in
scope uses), that is exactly the existence of a clique whose removal
disconnects the graph. Cliques are enumerated exhaustively (the clique
number stays tiny here), cutsets are kept inclusion-minimal, and
decomposition recurses on the first cutset in (size, lex) order so runs
are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph, _bits, identified_union


def _all_cliques_by_size(g: Graph) -> list[list[tuple[int, ...]]]:
    """Nonempty cliques grouped by size; each listed once, vertices ascending."""
    by_size: dict[int, list[tuple[int, ...]]] = {}
    rows = g.rows
    full = (1 << g.n) - 1

    def grow(verts: list[int], allowed: int) -> None:
        by_size.setdefault(len(verts), []).append(tuple(verts))
        a = allowed
        while a:
            b = a & -a
            a ^= b
            v = b.bit_length() - 1
            grow(verts + [v], allowed & rows[v] & ~((b << 1) - 1))

    for v in range(g.n):
        grow([v], rows[v] & (full << (v + 1)))
    out = []
    for size in sorted(by_size):
        out.append(sorted(by_size[size]))
    return out


def clique_cutsets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal cliques whose removal disconnects g."""
    if not g.is_connected():
        raise ValueError("clique cutset search expects a connected graph")
    found: list[tuple[int, ...]] = []
    found_masks: list[int] = []
    for size_group in _all_cliques_by_size(g):
        for clique in size_group:
            if len(clique) >= g.n:
                continue
            cmask = 0
            for v in clique:
                cmask |= 1 << v
            if any(fm & cmask == fm for fm in found_masks):
                continue  # a smaller cutset inside this clique already found
            if len(g.delete_vertices(clique).components()) >= 2:
                found.append(clique)
                found_masks.append(cmask)
    return found


class PrimeResult(NamedTuple):
    prime: bool
    witness: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.prime


def is_prime(g: Graph) -> PrimeResult:
    """Prime iff no clique cutset exists; witness is the first cutset otherwise."""
    cuts = clique_cutsets(g)
    if cuts:
        return PrimeResult(False, cuts[0])
    return PrimeResult(True, None)


@dataclass(frozen=True)
class Decomposition:
    """Recursive clique-sum decomposition; leaves are prime.

    ``cutset`` and ``part_vertices`` name vertices of this node's graph;
    ``parts[i].graph`` is the induced subgraph on ``part_vertices[i]`` with
    its vertices relabelled in sorted order.
    """

    graph: Graph
    cutset: tuple[int, ...] | None
    parts: tuple["Decomposition", ...]
    part_vertices: tuple[tuple[int, ...], ...]

    @property
    def is_leaf(self) -> bool:
        return self.cutset is None

    def leaves(self) -> list[Graph]:
        if self.is_leaf:
            return [self.graph]
        out: list[Graph] = []
        for p in self.parts:
            out.extend(p.leaves())
        return out

    def re_glue(self) -> Graph:
        """Rebuild from the leaves along the recorded cliques."""
        return self._re_glue_mapped()[0]

    def _re_glue_mapped(self) -> tuple[Graph, list[int]]:
        """Rebuild bottom-up; also return the vertex map of this node's graph
        into the rebuilt graph, so parents can keep gluing at the right spots."""
        if self.is_leaf:
            return self.graph, list(range(self.graph.n))
        acc, map0 = self.parts[0]._re_glue_mapped()
        gmap: dict[int, int] = {}
        for pos, v in enumerate(self.part_vertices[0]):
            gmap[v] = map0[pos]
        for idx in range(1, len(self.parts)):
            rebuilt, pmap = self.parts[idx]._re_glue_mapped()
            verts = list(self.part_vertices[idx])
            acc_cut = [gmap[c] for c in self.cutset]
            part_cut = [pmap[verts.index(c)] for c in self.cutset]
            before = acc.n
            acc = identified_union(acc, acc_cut, rebuilt, part_cut)
            appended = sorted(set(range(rebuilt.n)) - set(part_cut))
            where = {h: before + rank for rank, h in enumerate(appended)}
            for pos, v in enumerate(verts):
                if v not in self.cutset:
                    gmap[v] = where[pmap[pos]]
        return acc, [gmap[v] for v in range(self.graph.n)]

    def to_json(self) -> dict:
        from .graphs import graph6_encode

        if self.is_leaf:
            return {"graph6": graph6_encode(self.graph), "prime": True}
        return {
            "graph6": graph6_encode(self.graph),
            "prime": False,
            "cutset": list(self.cutset),
            "parts": [p.to_json() for p in self.parts],
        }


def decompose(g: Graph) -> Decomposition:
    """Split recursively on the first minimal clique cutset; leaves prime."""
    cuts = clique_cutsets(g)
    if not cuts:
        return Decomposition(g, None, (), ())
    cut = cuts[0]
    cmask = 0
    for v in cut:
        cmask |= 1 << v
    kept = [v for v in range(g.n) if not cmask >> v & 1]
    parts = []
    vert_lists = []
    for comp in g.delete_vertices(cut).components():
        verts = tuple(sorted([kept[i] for i in _bits(comp)] + list(cut)))
        vert_lists.append(verts)
        parts.append(decompose(g.subgraph(verts)))
    d = Decomposition(g, cut, tuple(parts), tuple(vert_lists))
    rebuilt, gmap = d._re_glue_mapped()
    if g.relabel(gmap) != rebuilt:
        raise AssertionError("decomposition does not re-glue to its input")
    return d


# -- lemma verification reports ----------------------------------------------


@dataclass(frozen=True)
class TwoCutCheck:
    cut: tuple[int, int]
    edge_present: bool
    piece_verdicts: tuple[str, ...]
    ok: bool


@dataclass(frozen=True)
class TwoCutReport:
    """Conclusions forced at every 2-vertex cut of an edge-maximal graph."""

    checks: tuple[TwoCutCheck, ...]
    vacuous: bool
    ok: bool


def check_lemma_two_cut(g: Graph, certificate) -> TwoCutReport:
    """At each 2-cut {x,y}: xy must be an edge and each side-plus-cut maximal.

    Any failure invalidates the supplied MAXNIK certificate for g.
    """
    from .certify import VERDICT_MAXNIK, certify_maxnik

    if certificate.verdict != VERDICT_MAXNIK:
        raise ValueError("expected a MAXNIK certificate for the input graph")
    checks = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.n - 2 < 1:
                continue
            rest = g.delete_vertices((x, y))
            comps = rest.components()
            if len(comps) < 2:
                continue
            edge_present = g.has_edge(x, y)
            verdicts = []
            ok = edge_present
            kept = [v for v in range(g.n) if v not in (x, y)]
            for comp in comps:
                verts = sorted([kept[i] for i in _bits(comp)] + [x, y])
                piece = g.subgraph(verts)
                verdict = certify_maxnik(piece).verdict
                verdicts.append(verdict)
                ok = ok and verdict == VERDICT_MAXNIK
            checks.append(TwoCutCheck((x, y), edge_present, tuple(verdicts), ok))
    return TwoCutReport(tuple(checks), vacuous=not checks,
                        ok=all(c.ok for c in checks))


@dataclass(frozen=True)
class ComplementK2Report:
    prime: bool
    is_complete_minus_edge: bool
    ok: bool


def check_lemma_complement_k2(g: Graph) -> ComplementK2Report:
    """Complement has a K2 component: then prime, or K_n minus one edge."""
    from .graphs import complement

    comp_sizes = [c.bit_count() for c in complement(g).components()]
    if 2 not in comp_sizes:
        raise ValueError("complement has no K2 component")
    prime = is_prime(g).prime
    minus_edge = g.m == g.n * (g.n - 1) // 2 - 1
    return ComplementK2Report(prime, minus_edge, prime or minus_edge)
