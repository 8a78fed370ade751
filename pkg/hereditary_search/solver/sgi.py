# -*- coding: utf-8 -*-

"""
Rota alternativa por isomorfismo de subgrafo induzido.

Enumera todos os grafos de k vértices, guarda os aceitos por Π (um
representante por classe de isomorfismo) e procura cada um como subgrafo
induzido de G com o VF2 do networkx. Nas células AS x SA o
corte é o mesmo de `solve`; nas demais a rota responde por busca de
embeddings, com ramo GenericSearch.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from ..exceptions import InvalidArgument, TooLarge
from ..graphs.enumerate import all_labeled_graphs
from ..graphs.graph import Graph, VertexSet
from ..properties.descriptors import PropertyDescriptor
from .dispatch import Branch, ProblemInstance, SolveOutcome, no_outcome, preflight, yes_outcome
from .table import Rule, classify_pair

logger = logging.getLogger(__name__)

SGI_MAX_K = 7


def enumerate_k_vertex_graphs(k: int) -> Iterator[Graph]:
    """
    Todos os grafos rotulados com k vértices, em ordem crescente de máscara.

    Raises:
        TooLarge: k > 7.

    Examples:
        >>> sum(1 for _ in enumerate_k_vertex_graphs(3))
        8
    """
    if k < 0:
        raise InvalidArgument(f"k deve ser não negativo (recebido {k})")
    if k > SGI_MAX_K:
        raise TooLarge(f"enumeração limitada a k <= {SGI_MAX_K} (k={k})")
    return all_labeled_graphs(k)


def induced_subgraph_isomorphism(pattern: Graph, host: Graph) -> Optional[Dict[int, int]]:
    """
    Mapa injetivo padrão -> hospedeiro que preserva adjacência e não adjacência.

    Usa o VF2 do networkx: `subgraph_isomorphisms_iter` casa subgrafos
    induzidos do hospedeiro. O primeiro casamento encontrado é determinístico,
    pois os vértices entram nos grafos do networkx em ordem crescente.

    Examples:
        >>> induced_subgraph_isomorphism(complete_graph(3), cycle_graph(5)) is None
        True
    """
    if pattern.n > host.n:
        return None
    matcher = isomorphism.GraphMatcher(_to_networkx(host), _to_networkx(pattern))
    for host_to_pattern in matcher.subgraph_isomorphisms_iter():
        return dict(sorted((p, h) for h, p in host_to_pattern.items()))
    return None


def _to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices())
    nx_graph.add_edges_from(g.edges())
    return nx_graph


@lru_cache(maxsize=64)
def accepted_patterns(pi: PropertyDescriptor, k: int) -> Tuple[Graph, ...]:
    """
    Um representante por classe de isomorfismo dos k-grafos aceitos por Π.

    Agrupa por hash de Weisfeiler-Lehman e confirma com isomorfismo exato;
    o representante é o primeiro na ordem de máscara.
    """
    buckets: Dict[str, List[nx.Graph]] = {}
    patterns: List[Graph] = []
    tested = 0
    for g in enumerate_k_vertex_graphs(k):
        tested += 1
        if not pi.accepts(g):
            continue
        nx_graph = _to_networkx(g)
        key = nx.weisfeiler_lehman_graph_hash(nx_graph)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nx_graph, seen) for seen in bucket):
            continue
        bucket.append(nx_graph)
        patterns.append(g)
    logger.info("[sgi] %s, k=%d: %d padrões distintos entre %d grafos", pi.name, k, len(patterns), tested)
    return tuple(patterns)


def solve_via_sgi(instance: ProblemInstance, check_input_class: bool = True) -> SolveOutcome:
    """
    Decide P(G, Π_G, Π, k) pela rota de isomorfismo de subgrafo induzido.

    O contador de testes conta as tentativas de embedding, uma por padrão.

    Raises:
        TooLarge: k > 7.
    """
    if instance.k > SGI_MAX_K:
        raise TooLarge(f"solve_via_sgi limitado a k <= {SGI_MAX_K} (k={instance.k})")
    cell = classify_pair(instance.pi_g, instance.pi)
    early = preflight(instance, check_input_class)
    if early is not None:
        return early

    if cell.rule is Rule.THM_AS_SA:
        if instance.k >= cell.threshold:
            return no_outcome(Branch.THM_AS_SA_CUTOFF)
        branch = Branch.THM_AS_SA_SEARCH
    else:
        branch = Branch.GENERIC_SEARCH

    attempts = 0
    for pattern in accepted_patterns(instance.pi, instance.k):
        attempts += 1
        mapping = induced_subgraph_isomorphism(pattern, instance.g)
        if mapping is not None:
            return yes_outcome(VertexSet.of(mapping.values()), branch, attempts)
    return no_outcome(branch, attempts)
