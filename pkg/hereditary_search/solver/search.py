# -*- coding: utf-8 -*-

"""
Busca exaustiva de k-subconjuntos que induzem um membro de Π.

Os subconjuntos são visitados em ordem lexicográfica dos índices
ordenados, de modo que a primeira testemunha encontrada é sempre a mesma,
com ou sem paralelismo.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from ..exceptions import InvalidArgument
from ..graphs.bits import mask_of
from ..graphs.graph import Graph, VertexSet, edgeless_graph, induced_subgraph
from ..properties.descriptors import PropertyDescriptor
from .pool import SearchPool

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsetSearch:
    witness: Optional[VertexSet]
    membership_tests: int


def subset_pages(n: int, k: int) -> List[int]:
    """
    Páginas da enumeração: uma por menor vértice possível do subconjunto.

    Examples:
        >>> subset_pages(5, 3)
        [0, 1, 2]
    """
    if k <= 0 or k > n:
        return []
    return list(range(n - k + 1))


def search_page(g: Graph, pi: PropertyDescriptor, k: int, first: int) -> Tuple[Optional[int], int]:
    """Testa os k-subconjuntos cujo menor vértice é `first`, parando no primeiro aceito."""
    tests = 0
    for rest in combinations(range(first + 1, g.n), k - 1):
        members = (first,) + rest
        tests += 1
        if pi.accepts(induced_subgraph(g, members)):
            return mask_of(members), tests
    return None, tests


def run_subset_search(g: Graph, pi: PropertyDescriptor, k: int,
                      pool: Optional[SearchPool] = None) -> SubsetSearch:
    """
    Busca a testemunha lexicograficamente menor e conta os testes de pertinência.

    A contagem é a mesma do caminho sequencial: páginas depois da página
    vencedora são descartadas, as anteriores foram testadas por inteiro.
    """
    if k < 0:
        raise InvalidArgument(f"k deve ser não negativo (recebido {k})")
    if k == 0:
        accepted = pi.accepts(edgeless_graph(0))
        return SubsetSearch(VertexSet(0) if accepted else None, 1)
    if k > g.n:
        return SubsetSearch(None, 0)

    pages = subset_pages(g.n, k)
    if pool is not None and pool.should_fan_out(comb(g.n, k)):
        results = pool.map_pages(search_page, pages, g, pi, k)
    else:
        results = (search_page(g, pi, k, first) for first in pages)

    tests = 0
    for found, page_tests in results:
        tests += page_tests
        if found is not None:
            logger.debug("[busca] testemunha %s após %d testes", bin(found), tests)
            return SubsetSearch(VertexSet(found), tests)
    return SubsetSearch(None, tests)


def brute_force_search(g: Graph, pi: PropertyDescriptor, k: int,
                       pool: Optional[SearchPool] = None) -> Optional[VertexSet]:
    """
    Primeiro k-subconjunto S (ordem lexicográfica) com G[S] em Π, ou None.

    Examples:
        >>> brute_force_search(cycle_graph(5), get_descriptor('bipartite'), 4).to_list()
        [0, 1, 2, 3]
    """
    return run_subset_search(g, pi, k, pool).witness
