"""Exact minor containment, delta-wye moves, and family closures.

``has_minor`` searches for branch sets directly: pattern vertices are
placed in descending-degree order, each branch set is grown from a root
as a connected subset of unused host vertices, and placements are pruned
on remaining-size and remaining-contact feasibility. Dense patterns
(complete and complete multipartite graphs and their delta-wye relatives)
make the adjacency constraints bite early, which keeps the search exact
and fast at the orders in scope.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .canon import canonical_key_graph
from .graphs import Graph, _bits, triangles


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets, indexed by pattern vertex, as sorted host-vertex tuples."""

    branch_sets: tuple[tuple[int, ...], ...]

    def validate(self, host: Graph, pattern: Graph) -> bool:
        """Re-check disjointness, connectivity, and edge realization."""
        if len(self.branch_sets) != pattern.n:
            return False
        masks = []
        seen = 0
        for bs in self.branch_sets:
            if not bs:
                return False
            m = 0
            for v in bs:
                if not 0 <= v < host.n:
                    return False
                m |= 1 << v
            if m & seen:
                return False
            seen |= m
            if len(host.subgraph(bs).components()) != 1:
                return False
            masks.append(m)
        for a, b in pattern.edges():
            na = 0
            for v in _bits(masks[a]):
                na |= host.rows[v]
            if not na & masks[b]:
                return False
        return True


@dataclass(frozen=True)
class MinorSearch:
    found: bool
    witness: MinorWitness | None

    def __bool__(self) -> bool:
        return self.found


def has_minor(host: Graph, pattern: Graph) -> MinorSearch:
    """Decide whether ``pattern`` is a minor of ``host``, with witness."""
    nh, np_ = host.n, pattern.n
    if np_ > nh or pattern.m > host.m:
        return MinorSearch(False, None)
    order = sorted(range(np_), key=lambda v: (-pattern.degree(v), v))
    # earlier placements each branch set must touch, and how many pattern
    # neighbors of each placement are still unplaced (for contact pruning)
    earlier = [[j for j in range(i) if pattern.has_edge(order[i], order[j])]
               for i in range(np_)]
    pending0 = [sum(1 for j in range(i + 1, np_) if pattern.has_edge(order[i], order[j]))
                for i in range(np_)]
    hrows = host.rows
    full = (1 << nh) - 1
    sets = [0] * np_
    nbrs = [0] * np_
    pending = list(pending0)

    def attempt(i: int, s_mask: int, nbr_mask: int, used: int) -> bool:
        for j in earlier[i]:
            if not nbr_mask & sets[j]:
                return False
        used2 = used | s_mask
        free_after = full & ~used2
        if pending[i] and (nbr_mask & free_after).bit_count() < pending[i]:
            return False
        for j in earlier[i]:
            pending[j] -= 1
        ok = all(not pending[j] or (nbrs[j] & free_after).bit_count() >= pending[j]
                 for j in range(i))
        if ok:
            sets[i] = s_mask
            nbrs[i] = nbr_mask
            if place(i + 1, used2):
                return True
        for j in earlier[i]:
            pending[j] += 1
        return False

    def expand(i: int, s_mask: int, nbr_mask: int, avail: int, used: int, budget: int) -> bool:
        if attempt(i, s_mask, nbr_mask, used):
            return True
        if s_mask.bit_count() == budget:
            return False
        cand = nbr_mask & avail
        banned = 0
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            s2 = s_mask | b
            if expand(i, s2, (nbr_mask | hrows[v]) & ~s2, avail & ~banned & ~b, used, budget):
                return True
            banned |= b
        return False

    def place(i: int, used: int) -> bool:
        if i == np_:
            return True
        budget = nh - used.bit_count() - (np_ - i - 1)
        free = full & ~used
        rem = free
        while rem:
            rb = rem & -rem
            rem ^= rb
            v = rb.bit_length() - 1
            allowed = free & ~(rb - 1) & ~rb  # root is the least vertex of its set
            if expand(i, rb, hrows[v] & ~rb, allowed, used, budget):
                return True
        return False

    if not place(0, 0):
        return MinorSearch(False, None)
    branch_sets: list[tuple[int, ...]] = [()] * np_
    for i, pv in enumerate(order):
        branch_sets[pv] = tuple(_bits(sets[i]))
    return MinorSearch(True, MinorWitness(tuple(branch_sets)))


# -- delta-wye machinery -----------------------------------------------------


def delta_y(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners."""
    a, b, c = triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise ValueError(f"{triangle} is not a triangle")
    rows = list(g.rows) + [0]
    for u, v in ((a, b), (a, c), (b, c)):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    w = g.n
    for u in (a, b, c):
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(g.n + 1, rows)


def y_delta(g: Graph, center: int) -> Graph:
    """Delete a degree-3 vertex and pairwise join its neighbors."""
    if g.degree(center) != 3:
        raise ValueError(f"vertex {center} has degree {g.degree(center)}, need 3")
    x, y, z = g.neighbors(center)
    rows = list(g.rows)
    for u, v in ((x, y), (x, z), (y, z)):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, rows).delete_vertices([center])


@dataclass(frozen=True)
class ClosureResult:
    """Deduplicated family closed under the requested moves.

    ``members`` are canonical representatives in key order; ``genealogy``
    maps each member key to (move, parent key), or None for a seed.
    """

    members: tuple[Graph, ...]
    keys: tuple[bytes, ...]
    genealogy: dict[bytes, tuple[str, bytes] | None]

    def __len__(self) -> int:
        return len(self.members)

    def of_order(self, n: int) -> tuple[Graph, ...]:
        return tuple(g for g in self.members if g.n == n)


DELTA_Y = "dy"
Y_DELTA = "yd"


def closure(seeds: list[Graph], moves) -> ClosureResult:
    """Least move-closed family containing the seeds, deduplicated.

    The worklist is processed in canonical-key order so runs are
    reproducible; termination follows because both moves keep the edge
    count bounded and positive-degree vertices number at most twice that.
    """
    moves = frozenset(moves)
    if not moves or not moves <= {DELTA_Y, Y_DELTA}:
        raise ValueError(f"moves must be a nonempty subset of {{{DELTA_Y!r}, {Y_DELTA!r}}}")
    if not seeds:
        raise ValueError("need at least one seed")
    members: dict[bytes, Graph] = {}
    genealogy: dict[bytes, tuple[str, bytes] | None] = {}
    heap: list[bytes] = []
    for s in seeds:
        key, rep = canonical_key_graph(s)
        if key not in members:
            members[key] = rep
            genealogy[key] = None
            heapq.heappush(heap, key)
    while heap:
        key = heapq.heappop(heap)
        g = members[key]
        children: list[tuple[str, Graph]] = []
        if DELTA_Y in moves:
            children.extend((DELTA_Y, delta_y(g, t)) for t in triangles(g))
        if Y_DELTA in moves:
            children.extend((Y_DELTA, y_delta(g, v))
                            for v in range(g.n) if g.degree(v) == 3)
        for move, child in children:
            ck, rep = canonical_key_graph(child)
            if ck not in members:
                members[ck] = rep
                genealogy[ck] = (move, key)
                heapq.heappush(heap, ck)
    keys = tuple(sorted(members))
    return ClosureResult(tuple(members[k] for k in keys), keys, genealogy)
