"""Small simple undirected graphs on at most 64 vertices.

Adjacency is stored as one int bitmask per vertex, so neighborhood
intersection (the inner loop of triangle and minor tests) is a single
``&``. Vertices are always 0..n-1; deletion and contraction relabel
densely. Graphs are immutable and hashable.

Also holds the graph6 codec (byte = 63 + value, upper-triangle
column-major bit order, zero padding) and the elementary operations:
complement, join, edge contraction, degree statistics, exact vertex
connectivity, and non-triangular edge detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import OrderOverflowError, ParseError

MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple graph: vertex count ``n`` plus bit-rows ``rows``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_ORDER:
            raise OrderOverflowError(f"order {n} outside 1..{MAX_ORDER}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match order")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if r >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, r in enumerate(rows):
            for u in _bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((n, rows)))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={graph6_encode(self)!r})"

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            hi = self.rows[v] >> (v + 1) << (v + 1)
            for u in _bits(hi):
                out.append((v, u))
        return tuple(out)

    def non_edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            for u in range(v + 1, self.n):
                if not self.rows[v] >> u & 1:
                    out.append((v, u))
        return tuple(out)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        n = self.n
        rows = [0] * n
        for v in range(n):
            r = 0
            for u in _bits(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(n, rows)

    def delete_vertices(self, doomed: Iterable[int]) -> "Graph":
        """Delete vertices and relabel the rest densely, preserving order."""
        gone = 0
        for v in doomed:
            gone |= 1 << v
        keep = [v for v in range(self.n) if not gone >> v & 1]
        if not keep:
            raise ValueError("cannot delete every vertex")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in _bits(self.rows[v] & ~gone):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(keep), rows)

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled densely in sorted order."""
        keepset = set(keep)
        return self.delete_vertices(v for v in range(self.n) if v not in keepset)

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, sorted by lowest vertex."""
        seen = 0
        comps = []
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.rows[v]
                frontier = grow & ~comp
                comp |= grow
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


# -- constructors ------------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph; parts laid out consecutively."""
    n = sum(sizes)
    bounds = []
    at = 0
    for s in sizes:
        bounds.append((at, at + s))
        at += s
    edges = []
    for (a0, a1), (b0, b1) in combinations(bounds, 2):
        edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return from_edges(n, edges)


def identified_union(g: Graph, g_sites: Sequence[int], h: Graph, h_sites: Sequence[int]) -> Graph:
    """Union of g and h with h_sites[i] identified onto g_sites[i].

    g keeps its labels; the remaining h vertices are appended in increasing
    order. All edges of both operands are retained.
    """
    if len(g_sites) != len(h_sites):
        raise ValueError("site lists differ in length")
    if len(set(g_sites)) != len(g_sites) or len(set(h_sites)) != len(h_sites):
        raise ValueError("site lists must not repeat vertices")
    n = g.n + h.n - len(g_sites)
    if n > MAX_ORDER:
        raise OrderOverflowError(f"identified union order {n} exceeds {MAX_ORDER}")
    hmap = dict(zip(h_sites, g_sites))
    nxt = g.n
    for v in range(h.n):
        if v not in hmap:
            hmap[v] = nxt
            nxt += 1
    edges = list(g.edges())
    edges.extend((hmap[u], hmap[v]) for u, v in h.edges())
    return from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderOverflowError(f"union order {n} exceeds {MAX_ORDER}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(n, rows)


# -- spec operations ---------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus all cross edges."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderOverflowError(f"join order {n} exceeds {MAX_ORDER}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows]
    rows += [(r << g.n) | gmask for r in h.rows]
    return Graph(n, rows)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv: neighborhoods unioned, loops/parallels dropped."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    lo, hi = min(u, v), max(u, v)
    rows = list(g.rows)
    merged = (rows[lo] | rows[hi]) & ~(1 << lo) & ~(1 << hi)
    rows[lo] = merged
    for w in _bits(merged):
        rows[w] |= 1 << lo
        rows[w] &= ~(1 << hi)
    rows[hi] = 0
    return Graph(g.n, rows).delete_vertices([hi])


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    degree_sequence: tuple[int, ...]


def degree_stats(g: Graph) -> DegreeStats:
    seq = tuple(sorted(g.degrees()))
    return DegreeStats(seq[0], seq[-1], seq)


def non_triangular_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Edges whose endpoints have no common neighbor."""
    return tuple((u, v) for u, v in g.edges() if not g.rows[u] & g.rows[v])


def triangles(g: Graph) -> tuple[tuple[int, int, int], ...]:
    out = []
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v]
        for w in _bits(common >> (v + 1) << (v + 1)):
            out.append((u, v, w))
    return tuple(out)


def _local_connectivity(g: Graph, s: int, t: int, stop_at: int | None = None) -> int:
    """Max number of internally vertex-disjoint s-t paths for non-adjacent s,t.

    Unit-capacity max flow on the split digraph; each vertex other than s,t
    becomes an arc of capacity one. ``stop_at`` truncates the count early,
    which keeps k-connectivity checks cheap on large triangulations.
    """
    n = g.n
    # node 2v = "in", 2v+1 = "out"; arcs stored as adjacency with residuals
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, n)
        add(2 * v + 1, 2 * u, n)
    out: dict[int, list[int]] = {}
    for a, b in cap:
        out.setdefault(a, []).append(b)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while stop_at is None or flow < stop_at:
        # BFS augmenting path
        prev = {src: -1}
        queue = [src]
        while queue and snk not in prev:
            nxt = []
            for a in queue:
                for b in out.get(a, ()):
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if snk not in prev:
            break
        b = snk
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs."""
    if g.n < 2:
        raise ValueError("connectivity needs at least 2 vertices")
    if g.is_complete():
        return g.n - 1
    best = g.n - 1
    for s, t in g.non_edges():
        best = min(best, _local_connectivity(g, s, t, stop_at=best))
        if best == 0:
            return 0
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    if g.is_complete():
        return True
    return all(_local_connectivity(g, s, t, stop_at=k) >= k for s, t in g.non_edges())


def clique_number(g: Graph) -> int:
    """Size of a largest clique, by branch and bound over bitmasks."""
    best = 0
    rows = g.rows

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            expand(size + 1, cand & rows[v])

    expand(0, (1 << g.n) - 1)
    return best


# -- graph6 ------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    bits = []
    for v in range(1, n):
        col = g.rows[v]
        bits.extend((col >> u) & 1 for u in range(v))
    out = []
    for at in range(0, len(bits), 6):
        chunk = bits[at:at + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(63 + val))
    return head + "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"byte {ord(ch)} out of graph6 range")
        vals.append(v)
    if vals[0] == 63:  # long form
        if len(vals) >= 4 and vals[1] == 63:
            raise ParseError("order above 64 not supported")
        if len(vals) < 4:
            raise ParseError("truncated long-form order")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_ORDER:
        raise ParseError(f"order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(body) != want:
        raise ParseError(f"expected {want} data bytes, found {len(body)}")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits")
    rows = [0] * n
    at = 0
    for v in range(1, n):
        for u in range(v):
            if bits[at]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            at += 1
    return Graph(n, rows)
