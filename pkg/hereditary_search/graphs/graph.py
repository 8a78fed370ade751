# -*- coding: utf-8 -*-

"""
Grafos simples finitos e imutáveis.

Cada vértice v em 0..n-1 guarda sua vizinhança como uma linha de bits
(inteiro Python): o bit u de `rows[v]` vale 1 se e somente se uv é aresta.
Todas as operações do módulo devolvem grafos novos; nenhuma instância é
alterada depois de construída, o que permite compartilhá-las entre
processos de busca.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..exceptions import IndexOutOfRange, InvalidArgument, InvalidEdge
from .bits import full_mask, iter_bits, mask_of

MAX_VERTICES = 1 << 16


@dataclass(frozen=True)
class Graph:
    """Grafo simples não direcionado em linhas de bits."""

    n: int
    rows: Tuple[int, ...] = field(repr=False)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> int:
        """Vizinhança aberta de v como máscara de bits."""
        return self.rows[v]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Arestas (u, v) com u < v, em ordem lexicográfica."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v


@dataclass(frozen=True)
class VertexSet:
    """Subconjunto de vértices de um grafo hospedeiro, como linha de bits."""

    mask: int = 0

    @classmethod
    def of(cls, indices: Iterable[int]) -> "VertexSet":
        indices = list(indices)
        if any(i < 0 for i in indices):
            raise IndexOutOfRange(f"índice negativo em {indices}")
        return cls(mask_of(indices))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool((self.mask >> v) & 1)

    def to_list(self) -> List[int]:
        return list(iter_bits(self.mask))

    def check_host(self, g: Graph) -> None:
        if self.mask >> g.n:
            raise IndexOutOfRange(
                f"vértice {self.mask.bit_length() - 1} fora do grafo com n={g.n}"
            )


VertexLike = Union[VertexSet, Iterable[int]]


def as_vertex_set(s: VertexLike) -> VertexSet:
    return s if isinstance(s, VertexSet) else VertexSet.of(s)


def _check_order(n: int) -> None:
    if n < 0 or n >= MAX_VERTICES:
        raise InvalidArgument(f"número de vértices fora do intervalo suportado: {n}")


def from_rows(rows: Sequence[int]) -> Graph:
    """Constrói um grafo a partir de linhas de bits, validando simetria e laços."""
    n = len(rows)
    _check_order(n)
    rows = tuple(rows)
    for v, row in enumerate(rows):
        if row >> n:
            raise IndexOutOfRange(f"linha {v} referencia vértice >= {n}")
        if (row >> v) & 1:
            raise InvalidEdge(f"laço no vértice {v}")
        for u in iter_bits(row):
            if not (rows[u] >> v) & 1:
                raise InvalidEdge(f"adjacência assimétrica entre {v} e {u}")
    return Graph(n, rows)


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Constrói um grafo a partir de uma lista de arestas.

    Pares duplicados são aceitos e colapsados (grafo simples).

    Examples:
        >>> from_edge_list(3, [(0, 1), (1, 2)]).edge_count
        2
        >>> from_edge_list(4, [(0, 1), (0, 1)]).edge_count
        1
    """
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"laço ({u},{v}) não é permitido em grafo simples")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"aresta ({u},{v}) fora do intervalo para n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def check_invariants(g: Graph) -> bool:
    """True se as linhas são simétricas, sem laços e limitadas a n."""
    try:
        from_rows(g.rows)
    except (InvalidEdge, IndexOutOfRange):
        return False
    return len(g.rows) == g.n


def induced_subgraph_map(g: Graph, s: VertexLike) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Subgrafo induzido G[S] junto com o mapa de índices.

    Os vértices de S são renumerados 0..|S|-1 em ordem crescente do índice
    original; `mapping[i]` é o vértice de G correspondente a i.
    """
    vs = as_vertex_set(s)
    vs.check_host(g)
    members = tuple(iter_bits(vs.mask))
    rows = []
    for u in members:
        nb = g.rows[u]
        row = 0
        for j, w in enumerate(members):
            if (nb >> w) & 1:
                row |= 1 << j
        rows.append(row)
    return Graph(len(members), tuple(rows)), members


def induced_subgraph(g: Graph, s: VertexLike) -> Graph:
    return induced_subgraph_map(g, s)[0]


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph(g.n, tuple((~row & full) & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vértices de h deslocados por n(g), sem arestas entre as partes."""
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(row << shift for row in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """União disjunta mais todas as n(g)·n(h) arestas cruzadas."""
    shift = g.n
    h_block = full_mask(h.n) << shift
    g_block = full_mask(g.n)
    rows = tuple(row | h_block for row in g.rows)
    rows += tuple((row << shift) | g_block for row in h.rows)
    return Graph(g.n + h.n, rows)


def strong_product(g: Graph, h: Graph) -> Graph:
    """
    Produto forte G ⊠ H.

    O par (u, v) recebe o índice u·n(h) + v, de modo que as cópias de u
    formam um bloco contíguo. (u, v) ~ (u', v') quando u e u' são iguais ou
    adjacentes e v e v' são iguais ou adjacentes, excluindo o próprio par.
    """
    nh = h.n
    rows = []
    for u in range(g.n):
        closed_u = g.rows[u] | (1 << u)
        for v in range(nh):
            closed_v = h.rows[v] | (1 << v)
            row = 0
            for u2 in iter_bits(closed_u):
                row |= closed_v << (u2 * nh)
            rows.append(row & ~(1 << (u * nh + v)))
    return Graph(g.n * nh, tuple(rows))


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = full_mask(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def edgeless_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def disjoint_cliques(t: int, c: int) -> Graph:
    """t·K_c: t cópias disjuntas de K_c (t·c vértices, t·C(c,2) arestas)."""
    if t < 0 or c < 0:
        raise InvalidArgument(f"t e c devem ser não negativos (t={t}, c={c})")
    _check_order(t * c)
    block = full_mask(c)
    rows = []
    for b in range(t):
        base = block << (b * c)
        rows.extend(base & ~(1 << (b * c + j)) for j in range(c))
    return Graph(t * c, tuple(rows))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"ciclo exige n >= 3 (n={n})")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} com centro no vértice 0."""
    return from_edge_list(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return from_edge_list(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    """Ciclo externo 0..4, estrela interna 5..9, raios i ~ i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


def edge_pairs(n: int) -> List[Tuple[int, int]]:
    """Ordem canônica dos pares usada pelas máscaras de arestas."""
    return list(combinations(range(n), 2))
