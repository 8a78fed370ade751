# -*- coding: utf-8 -*-

"""
Oráculos exatos: α, ω, χ e resolução exaustiva de P(G, Π, k).

Servem de verdade de referência para testes e para os comandos de
verificação; o solver nunca os usa na decisão. A enumeração de
subconjuntos de `exhaustive_solve` é escrita de forma independente da
busca do solver (Gosper sobre máscaras, em vez de combinações por página).
"""

import logging
from dataclasses import dataclass
from math import ceil, comb
from typing import Iterator, List, Optional, Tuple

from ..exceptions import InternalError, TooLarge
from ..graphs.bits import iter_bits, popcount
from ..graphs.cliques import is_clique_in, is_independent_in
from ..graphs.enumerate import all_labeled_graphs
from ..graphs.graph import Graph, VertexSet, complement, edgeless_graph, induced_subgraph
from ..properties.descriptors import PropertyDescriptor

logger = logging.getLogger(__name__)

MIS_MAX_VERTICES = 24
CHROMATIC_MAX_VERTICES = 20
EXHAUSTIVE_MAX_SUBSETS = 10 ** 7
ENUMERATE_MAX_VERTICES = 6


@dataclass(frozen=True)
class OracleReport:
    alpha: int
    alpha_witness: VertexSet
    omega: int
    omega_witness: VertexSet
    chi: int
    coloring: Tuple[int, ...]

    def color_classes(self) -> List[VertexSet]:
        classes = [0] * self.chi
        for v, c in enumerate(self.coloring):
            classes[c] |= 1 << v
        return [VertexSet(m) for m in classes]

    def to_record(self) -> dict:
        return {
            'alpha': self.alpha,
            'alpha_witness': self.alpha_witness.to_list(),
            'omega': self.omega,
            'omega_witness': self.omega_witness.to_list(),
            'chi': self.chi,
            'coloring': list(self.coloring),
        }


def _max_independent_mask(rows: Tuple[int, ...], cand: int) -> int:
    best_mask = 0
    best_size = 0

    def search(chosen: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        if size + popcount(cand) <= best_size:
            return
        if not cand:
            best_mask, best_size = chosen, size
            return
        # vértices isolados em G[cand] entram sempre
        isolated = 0
        for v in iter_bits(cand):
            if not rows[v] & cand:
                isolated |= 1 << v
        if isolated:
            search(chosen | isolated, size + popcount(isolated), cand & ~isolated)
            return
        v = max(iter_bits(cand), key=lambda u: popcount(rows[u] & cand))
        bit = 1 << v
        search(chosen | bit, size + 1, cand & ~rows[v] & ~bit)
        search(chosen, size, cand & ~bit)

    search(0, 0, cand)
    return best_mask


def max_independent_set(g: Graph) -> Tuple[int, VertexSet]:
    """
    α(G) exato com testemunha, por branch-and-bound nas linhas de bits.

    Ramifica no vértice de maior grau do subproblema; poda quando o
    tamanho atual mais os candidatos restantes não supera o melhor.

    Raises:
        TooLarge: n > 24.

    Examples:
        >>> max_independent_set(cycle_graph(5))[0]
        2
        >>> max_independent_set(petersen_graph())[0]
        4
    """
    if g.n > MIS_MAX_VERTICES:
        raise TooLarge(f"max_independent_set limitado a n <= {MIS_MAX_VERTICES} (n={g.n})")
    mask = _max_independent_mask(g.rows, g.vertex_mask())
    return popcount(mask), VertexSet(mask)


def max_clique(g: Graph) -> Tuple[int, VertexSet]:
    return max_independent_set(complement(g))


def _color_with(g: Graph, k: int) -> Optional[List[int]]:
    """Coloração própria com no máximo k cores, em ordem DSATUR, ou None."""
    n = g.n
    rows = g.rows
    colors = [-1] * n
    # máscara de cores já usadas na vizinhança de cada vértice
    saturation = [0] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (popcount(saturation[v]), popcount(rows[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int) -> List[int]:
        touched = []
        for u in iter_bits(rows[v]):
            if not (saturation[u] >> c) & 1:
                saturation[u] |= 1 << c
                touched.append(u)
        colors[v] = c
        return touched

    def search(done: int, top: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(k, top + 2)):
            if (saturation[v] >> c) & 1:
                continue
            touched = assign(v, c)
            if search(done + 1, max(top, c)):
                return True
            colors[v] = -1
            for u in touched:
                saturation[u] &= ~(1 << c)
        return False

    return colors if search(0, -1) else None


def chromatic_number(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    """
    χ(G) exato e uma coloração própria que o atinge.

    Aprofundamento iterativo no número de cores, partindo de ω(G).

    Raises:
        TooLarge: n > 20.
    """
    if g.n > CHROMATIC_MAX_VERTICES:
        raise TooLarge(f"chromatic_number limitado a n <= {CHROMATIC_MAX_VERTICES} (n={g.n})")
    if g.n == 0:
        return 0, ()
    k, _ = max_clique(g)
    while k <= g.n:
        coloring = _color_with(g, k)
        if coloring is not None:
            return k, tuple(coloring)
        k += 1
    raise InternalError(f"nenhuma coloração com {g.n} cores para n={g.n}")


def oracle_report(g: Graph) -> OracleReport:
    """α, ω e χ com testemunhas, verificadas contra o grafo."""
    alpha, alpha_witness = max_independent_set(g)
    omega, omega_witness = max_clique(g)
    chi, coloring = chromatic_number(g)
    if not is_independent_in(g, alpha_witness) or not is_clique_in(g, omega_witness):
        raise InternalError("testemunha de α/ω inválida")
    if any(coloring[u] == coloring[v] for u, v in g.edges()):
        raise InternalError("coloração imprópria")
    if g.n and chi < max(omega, ceil(g.n / alpha)):
        raise InternalError(f"χ={chi} abaixo das cotas inferiores (ω={omega}, α={alpha})")
    return OracleReport(alpha, alpha_witness, omega, omega_witness, chi, coloring)


def _masks_of_size(n: int, k: int) -> Iterator[int]:
    """Máscaras de n bits com exatamente k bits ligados (hack de Gosper)."""
    if k == 0:
        yield 0
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def exhaustive_solve(g: Graph, pi: PropertyDescriptor, k: int) -> bool:
    """
    True (Sim) se algum k-subconjunto induz um membro de Π.

    Raises:
        TooLarge: C(n, k) > 10^7.

    Examples:
        >>> exhaustive_solve(cycle_graph(5), get_descriptor('bipartite'), 5)
        False
    """
    if k < 0 or k > g.n:
        return False
    if k == 0:
        return pi.accepts(edgeless_graph(0))
    total = comb(g.n, k)
    if total > EXHAUSTIVE_MAX_SUBSETS:
        raise TooLarge(f"C({g.n},{k}) = {total} subconjuntos excede {EXHAUSTIVE_MAX_SUBSETS}")
    for mask in _masks_of_size(g.n, k):
        if pi.accepts(induced_subgraph(g, VertexSet(mask))):
            return True
    return False


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """
    Corpus de teste: todos os grafos rotulados com n vértices.

    Raises:
        TooLarge: n > 6.
    """
    if n > ENUMERATE_MAX_VERTICES:
        raise TooLarge(f"enumerate_all_graphs limitado a n <= {ENUMERATE_MAX_VERTICES} (n={n})")
    return all_labeled_graphs(n)
