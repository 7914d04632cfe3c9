"""Shared fixtures and independent brute-force oracles."""

from itertools import combinations

import networkx as nx
import pytest

from kdistance.graph import new_graph


def all_pairs_distances(n, edges):
    """Floyd-Warshall; None marks unreachable pairs."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for w in range(n):
        dw = d[w]
        for i in range(n):
            di = d[i]
            if di[w] == inf:
                continue
            for j in range(n):
                if di[w] + dw[j] < di[j]:
                    di[j] = di[w] + dw[j]
    return d


def brute_k_degrees(n, edges, k):
    d = all_pairs_distances(n, edges)
    return [sum(1 for u in range(n) if d[v][u] == k) for v in range(n)]


def non_adjacent_pairs(n, edges):
    es = {frozenset(e) for e in edges}
    return [(u, v) for u, v in combinations(range(n), 2) if frozenset((u, v)) not in es]


def atlas_graphs(max_n=7):
    """Every graph on at most ``max_n`` vertices, up to isomorphism (networkx atlas)."""
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= max_n:
            yield G.number_of_nodes(), sorted(tuple(sorted(e)) for e in G.edges())


@pytest.fixture
def c6():
    return new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])


@pytest.fixture
def p4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star():
    return new_graph(4, [(0, 1), (0, 2), (0, 3)])
