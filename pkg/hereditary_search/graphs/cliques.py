# -*- coding: utf-8 -*-

"""
Busca limitada por cliques e conjuntos independentes de tamanho fixo.

Usada para extrair testemunhas garantidas por Ramsey e dentro dos
reconhecedores. A busca percorre os vértices em ordem crescente, portanto
o primeiro conjunto encontrado é o lexicograficamente menor.
"""

from typing import Optional, Tuple

from .graph import Graph, VertexSet


def _first_set(g: Graph, k: int, candidates: int, independent: bool) -> Tuple[Optional[int], int]:
    rows = g.rows
    visited = 0

    def extend(chosen: int, size: int, cand: int) -> Optional[int]:
        nonlocal visited
        if size == k:
            return chosen
        need = k - size
        while cand:
            if cand.bit_count() < need:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            visited += 1
            nxt = (cand & ~rows[v]) if independent else (cand & rows[v])
            found = extend(chosen | low, size + 1, nxt)
            if found is not None:
                return found
        return None

    return extend(0, 0, candidates), visited


def find_clique(g: Graph, k: int, candidates: Optional[int] = None) -> Tuple[Optional[VertexSet], int]:
    """
    Primeiro k-clique (ordem lexicográfica) dentro de `candidates`.

    Returns:
        (clique ou None, número de nós expandidos na busca)
    """
    cand = g.vertex_mask() if candidates is None else candidates
    mask, visited = _first_set(g, k, cand, independent=False)
    return (VertexSet(mask) if mask is not None else None), visited


def find_independent_set(g: Graph, k: int, candidates: Optional[int] = None) -> Tuple[Optional[VertexSet], int]:
    """Primeiro conjunto independente de tamanho k dentro de `candidates`."""
    cand = g.vertex_mask() if candidates is None else candidates
    mask, visited = _first_set(g, k, cand, independent=True)
    return (VertexSet(mask) if mask is not None else None), visited


def is_independent_in(g: Graph, s: VertexSet) -> bool:
    return all(not (g.rows[v] & s.mask) for v in s)


def is_clique_in(g: Graph, s: VertexSet) -> bool:
    return all((g.rows[v] | (1 << v)) & s.mask == s.mask for v in s)
