# -*- coding: utf-8 -*-

"""
Oráculo de planaridade por Kuratowski, para validar `is_planar`.

G é não planar se e somente se contém uma subdivisão de K5 ou de K_{3,3}.
O oráculo escolhe os vértices de ramificação exaustivamente e tenta ligar
cada par exigido por caminhos internamente disjuntos que passam apenas por
vértices fora do conjunto de ramificação.
"""

from itertools import combinations, product
from typing import List, Sequence, Tuple

from ..exceptions import TooLarge
from ..graphs.bits import iter_bits, mask_of, popcount
from ..graphs.graph import Graph

PLANARITY_ORACLE_MAX_VERTICES = 8

Pair = Tuple[int, int]


def _internal_sets(rows: Tuple[int, ...], a: int, b: int, allowed: int) -> List[int]:
    """Conjuntos de vértices internos de caminhos simples a-b dentro de `allowed`."""
    found = set()

    def walk(v: int, internal: int) -> None:
        if (rows[v] >> b) & 1:
            found.add(internal)
        for w in iter_bits(rows[v] & allowed & ~internal):
            walk(w, internal | (1 << w))

    walk(a, 0)
    return sorted(found, key=lambda m: (popcount(m), m))


def _route(rows: Tuple[int, ...], pairs: Sequence[Pair], spare: int) -> bool:
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    for internal in _internal_sets(rows, a, b, spare):
        if _route(rows, rest, spare & ~internal):
            return True
    return False


def _has_k5_subdivision(g: Graph) -> bool:
    rows = g.rows
    hubs = [v for v in range(g.n) if popcount(rows[v]) >= 4]
    for branch in combinations(hubs, 5):
        spare = g.vertex_mask() & ~mask_of(branch)
        if _route(rows, list(combinations(branch, 2)), spare):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    rows = g.rows
    hubs = [v for v in range(g.n) if popcount(rows[v]) >= 3]
    for six in combinations(hubs, 6):
        # o primeiro vértice fica sempre à esquerda: cada bipartição aparece uma vez
        for pair in combinations(six[1:], 2):
            left = (six[0],) + pair
            right = tuple(v for v in six if v not in left)
            spare = g.vertex_mask() & ~mask_of(six)
            if _route(rows, list(product(left, right)), spare):
                return True
    return False


def planarity_oracle(g: Graph) -> bool:
    """
    True se G não contém subdivisão de K5 nem de K_{3,3}.

    Raises:
        TooLarge: n > 8.

    Examples:
        >>> planarity_oracle(complete_graph(5))
        False
        >>> planarity_oracle(complete_bipartite_graph(3, 3))
        False
    """
    if g.n > PLANARITY_ORACLE_MAX_VERTICES:
        raise TooLarge(
            f"planarity_oracle limitado a n <= {PLANARITY_ORACLE_MAX_VERTICES} (n={g.n})"
        )
    return not (_has_k5_subdivision(g) or _has_k33_subdivision(g))
