# -*- coding: utf-8 -*-

"""Enumeração de todos os grafos rotulados em ordem de máscara de arestas."""

from typing import Iterator

from .graph import Graph, edge_pairs


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """O bit t da máscara liga o t-ésimo par de `edge_pairs(n)`."""
    rows = [0] * n
    for t, (u, v) in enumerate(edge_pairs(n)):
        if (mask >> t) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """
    Todos os 2^C(n,2) grafos rotulados em n vértices, cada um uma única vez,
    em ordem crescente de máscara. Sem limite de tamanho: os chamadores
    públicos aplicam os seus.
    """
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        t = 0
        m = mask
        while m:
            if m & 1:
                u, v = pairs[t]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            t += 1
        yield Graph(n, tuple(rows))
