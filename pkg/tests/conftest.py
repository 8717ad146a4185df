from __future__ import annotations

import random
from itertools import combinations

import pytest

from maxnik.canon import canonical_form
from maxnik.catalog import mmik_library
from maxnik.graphs import Graph, contract_edge, from_edges


@pytest.fixture(scope="session")
def lib():
    return mmik_library()


_minor_memo: dict[tuple[bytes, bytes], bool] = {}


def brute_force_minor(host: Graph, pattern: Graph) -> bool:
    """Oracle: explore all single-step reductions (delete/contract), memoized."""
    hkey = canonical_form(host).key
    pkey = canonical_form(pattern).key
    if (hkey, pkey) in _minor_memo:
        return _minor_memo[(hkey, pkey)]
    result = False
    if pattern.n <= host.n and pattern.m <= host.m:
        if hkey == pkey:
            result = True
        else:
            for v in range(host.n):
                if host.n > 1 and host.degree(v) == 0:
                    if brute_force_minor(host.delete_vertices([v]), pattern):
                        result = True
                        break
            if not result:
                for u, v in host.edges():
                    if brute_force_minor(host.without_edge(u, v), pattern) or \
                            brute_force_minor(contract_edge(host, u, v), pattern):
                        result = True
                        break
    _minor_memo[(hkey, pkey)] = result
    return result


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edges(n, edges)


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices; exponential, keep n tiny."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
