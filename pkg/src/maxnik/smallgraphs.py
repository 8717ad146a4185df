"""Exhaustive isomorphism-class enumeration for small orders.

Classes of order n come from extending every class of order n-1 by one
vertex with every possible neighborhood, deduplicated by canonical form.
This covers disconnected graphs too (every graph arises by deleting its
last vertex). Results are cached per order; the order-8 level is the large
one (12346 classes from 1044 x 128 candidates).
"""

from __future__ import annotations

from .canon import canonical_key_graph
from .graphs import Graph, _bits
from .planarity import is_planar

_CLASS_CACHE: dict[int, tuple[Graph, ...]] = {}

# number of graphs on n unlabeled vertices, used as a generation self-check
KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes of order n, as canonical representatives."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n == 1:
        out: tuple[Graph, ...] = (Graph(1, [0]),)
    else:
        reps: dict[bytes, Graph] = {}
        new = n - 1
        for g in enumerate_graphs(n - 1):
            base = list(g.rows) + [0]
            for nb in range(1 << new):
                rows = base.copy()
                rows[new] = nb
                for v in _bits(nb):
                    rows[v] |= 1 << new
                key, rep = canonical_key_graph(Graph(n, rows))
                if key not in reps:
                    reps[key] = rep
        out = tuple(reps[k] for k in sorted(reps))
    if n in KNOWN_CLASS_COUNTS and len(out) != KNOWN_CLASS_COUNTS[n]:
        raise AssertionError(
            f"generated {len(out)} classes at order {n}, expected {KNOWN_CLASS_COUNTS[n]}")
    _CLASS_CACHE[n] = out
    return out


def enumerate_triangulations(n: int) -> tuple[Graph, ...]:
    """Maximal planar graphs on n vertices up to isomorphism, 3 <= n <= 8."""
    if not 3 <= n <= 8:
        raise ValueError("triangulation enumeration covers orders 3..8")
    want = 3 * n - 6
    return tuple(g for g in enumerate_graphs(n) if g.m == want and is_planar(g))
