# -*- coding: utf-8 -*-

"""
Reconhecedores de propriedades hereditárias.

Predicados puros Graph -> bool, um por propriedade embutida. Todos aceitam
o grafo vazio (n = 0), exigência do fechamento hereditário.
"""

from typing import List

import networkx as nx

from ..graphs.bits import iter_bits
from ..graphs.cliques import find_independent_set
from ..graphs.graph import Graph, complement


def _components(rows, mask: int, co: bool = False) -> List[int]:
    """Componentes de G[mask] (ou do complemento, se co=True) como máscaras."""
    comps = []
    remaining = mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            nb = ~rows[v] & ~low if co else rows[v]
            new = nb & remaining & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_independent_set(g: Graph) -> bool:
    """
    Verifica se o grafo é um conjunto independente (nenhuma aresta).

    Examples:
        >>> is_independent_set(edgeless_graph(5))
        True
        >>> is_independent_set(complete_graph(2))
        False
    """
    return g.edge_count == 0


def is_clique(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_bipartite(g: Graph) -> bool:
    """
    Verifica 2-colorabilidade por camadas de busca em largura.

    Cada componente é explorado camada a camada; uma aresta entre vértices
    de mesma paridade de camada denuncia ciclo ímpar.
    """
    rows = g.rows
    remaining = g.vertex_mask()
    while remaining:
        start = remaining & -remaining
        side = [start, 0]
        seen = start
        frontier = start
        parity = 0
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= rows[v]
            if nb & side[parity]:
                return False
            new = nb & ~seen
            parity ^= 1
            side[parity] |= new
            seen |= new
            frontier = new
        remaining &= ~seen
    return True


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    for u in range(g.n):
        for v in iter_bits(rows[u] >> (u + 1)):
            if rows[u] & rows[u + 1 + v]:
                return False
    return True


def is_forest(g: Graph) -> bool:
    """Acíclico se e somente se m = n - (número de componentes)."""
    return g.edge_count == g.n - len(_components(g.rows, g.vertex_mask()))


def is_planar(g: Graph) -> bool:
    """
    Teste de planaridade (algoritmo left-right do networkx).

    Rejeição rápida por Euler antes: m > 3n - 6 com n >= 3 é não planar.
    """
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return False
    if g.n < 5:
        return True
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(nx_graph)
    return planar


def is_co_bipartite(g: Graph) -> bool:
    return is_bipartite(complement(g))


def is_c4_free(g: Graph) -> bool:
    """
    Sem C4 induzido.

    Um C4 induzido é um par não adjacente u, v com dois vizinhos comuns
    também não adjacentes entre si.
    """
    rows = g.rows
    for u in range(g.n):
        non_nb = ~rows[u] & g.vertex_mask() & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non_nb):
            common = rows[u] & rows[v]
            if common.bit_count() < 2:
                continue
            for a in iter_bits(common):
                if common & ~rows[a] & ~(1 << a):
                    return False
    return True


def is_k14_free(g: Graph) -> bool:
    """Sem K_{1,4} induzido: nenhuma vizinhança contém 4 vértices independentes."""
    for v in range(g.n):
        nb = g.rows[v]
        if nb.bit_count() < 4:
            continue
        found, _ = find_independent_set(g, 4, nb)
        if found is not None:
            return False
    return True


def is_cograph(g: Graph) -> bool:
    """
    Sem P4 induzido, pela decomposição de cografos: todo subgrafo induzido
    conexo com 2 ou mais vértices tem complemento desconexo.
    """
    rows = g.rows
    stack = [g.vertex_mask()]
    while stack:
        mask = stack.pop()
        if mask.bit_count() <= 1:
            continue
        comps = _components(rows, mask)
        if len(comps) > 1:
            stack.extend(comps)
            continue
        co_comps = _components(rows, mask, co=True)
        if len(co_comps) == 1:
            return False
        stack.extend(co_comps)
    return True


def is_bipartite_co_bipartite(g: Graph) -> bool:
    return is_bipartite(g) and is_co_bipartite(g)
