# -*- coding: utf-8 -*-

"""
Reduções de P(G, Π_G, IS, k) para P(G', Π_G, Π, k').

Duas construções:

- produto forte: G' = G ⊠ K_χ, k' = k·χ, com χ = χ(Π);
- junção: G' = G + r·K_c, com r = C(χ+k-1, χ) (cota de R(χ+1, k)),
  c = χ - 1 e k' = k + r·c.

Cada instância guarda de onde veio cada vértice de G', o que permite
traduzir testemunhas nos dois sentidos.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from ..exceptions import DescriptorUnsupported, InternalError, InvalidArgument, InvalidWitness
from ..graphs.cliques import find_independent_set, is_independent_in
from ..graphs.graph import (
    Graph,
    VertexLike,
    VertexSet,
    as_vertex_set,
    complete_graph,
    disjoint_cliques,
    induced_subgraph,
    induced_subgraph_map,
    join,
    strong_product,
)
from ..oracles.exact import chromatic_number
from ..properties.descriptors import PropertyDescriptor
from ..ramsey import ramsey_upper_bound

logger = logging.getLogger(__name__)


class ReductionKind(str, Enum):
    STRONG_PRODUCT = 'strong'
    JOIN = 'join'


@dataclass(frozen=True)
class ReductionInstance:
    """
    Instância transformada.

    `origin[v]` é o vértice de G que originou v em G' (None para vértices
    dos cliques anexados); `clique_blocks` lista os r blocos da junção.
    """

    kind: ReductionKind
    source: Graph
    pi: PropertyDescriptor
    k: int
    g_prime: Graph
    k_prime: int
    chi: int
    origin: Tuple[Optional[int], ...]
    r: Optional[int] = None
    c: Optional[int] = None
    clique_blocks: Tuple[Tuple[int, ...], ...] = ()

    @property
    def attached_mask(self) -> int:
        mask = 0
        for block in self.clique_blocks:
            for v in block:
                mask |= 1 << v
        return mask

    def to_sidecar(self) -> Dict[str, object]:
        """Sidecar JSON do comando `reduce`."""
        return {
            'kind': self.kind.value,
            'pi': self.pi.name,
            'chi': self.chi,
            'r': self.r,
            'c': self.c,
            'k': self.k,
            'k_prime': self.k_prime,
            'n': self.source.n,
            'n_prime': self.g_prime.n,
            'map': {
                'origin': list(self.origin),
                'clique_blocks': [list(block) for block in self.clique_blocks],
            },
        }


def _check_k(k: int, minimum: int = 0) -> None:
    if not isinstance(k, int) or k < minimum:
        raise InvalidArgument(f"k deve ser inteiro >= {minimum} (recebido {k!r})")


def strong_product_reduction(g: Graph, pi: PropertyDescriptor, k: int) -> ReductionInstance:
    """
    G' = G ⊠ K_χ(Π), k' = k·χ(Π).

    O vértice u·χ + j de G' é a j-ésima cópia de u. Usa χ(Π), não χ(G):
    k' depende só de k e k·K_χ(Π) pertence a Π pela hipótese.

    Raises:
        DescriptorUnsupported: Π sem chi_pi ou sem a flag
            contains_all_disjoint_unions_of_K_chi.

    Examples:
        >>> red = strong_product_reduction(cycle_graph(5), get_descriptor('bipartite'), 2)
        >>> red.g_prime.n, red.k_prime
        (10, 4)
    """
    _check_k(k)
    if pi.chi_pi is None or not pi.contains_all_disjoint_unions_of_K_chi:
        raise DescriptorUnsupported(
            f"'{pi.name}' não admite a redução por produto forte "
            f"(exige chi_pi e contains_all_disjoint_unions_of_K_chi)"
        )
    chi = pi.chi_pi
    g_prime = strong_product(g, complete_graph(chi))
    origin = tuple(u for u in range(g.n) for _ in range(chi))
    logger.debug("[reducao] produto forte: n=%d -> %d, k=%d -> %d", g.n, g_prime.n, k, k * chi)
    return ReductionInstance(
        kind=ReductionKind.STRONG_PRODUCT, source=g, pi=pi, k=k,
        g_prime=g_prime, k_prime=k * chi, chi=chi, origin=origin,
    )


def join_reduction(g: Graph, pi: PropertyDescriptor, k: int) -> ReductionInstance:
    """
    G' = G + r·K_c com r = R(χ+1, k) (cota binomial), c = χ - 1, k' = k + r·c.

    Os vértices anexados vêm depois dos de G, bloco a bloco.

    Raises:
        DescriptorUnsupported: chi_pi ausente ou < 2, ou Π sem a flag
            contains_IS_join_cliques.
        InvalidArgument: k < 1.

    Examples:
        >>> red = join_reduction(cycle_graph(5), get_descriptor('bipartite'), 3)
        >>> red.r, red.c, red.g_prime.n, red.k_prime
        (6, 1, 11, 9)
    """
    if pi.chi_pi is None or pi.chi_pi < 2 or not pi.contains_IS_join_cliques:
        raise DescriptorUnsupported(
            f"'{pi.name}' não admite a redução por junção "
            f"(exige chi_pi >= 2 e contains_IS_join_cliques)"
        )
    _check_k(k, minimum=1)
    chi = pi.chi_pi
    r = ramsey_upper_bound(chi + 1, k)
    c = chi - 1
    g_prime = join(g, disjoint_cliques(r, c))
    blocks = tuple(tuple(range(g.n + b * c, g.n + (b + 1) * c)) for b in range(r))
    origin = tuple(range(g.n)) + (None,) * (r * c)
    logger.debug("[reducao] junção: r=%d c=%d, n=%d -> %d, k=%d -> %d",
                 r, c, g.n, g_prime.n, k, k + r * c)
    return ReductionInstance(
        kind=ReductionKind.JOIN, source=g, pi=pi, k=k,
        g_prime=g_prime, k_prime=k + r * c, chi=chi, origin=origin,
        r=r, c=c, clique_blocks=blocks,
    )


def build_reduction(kind: ReductionKind, g: Graph, pi: PropertyDescriptor, k: int) -> ReductionInstance:
    if ReductionKind(kind) is ReductionKind.STRONG_PRODUCT:
        return strong_product_reduction(g, pi, k)
    return join_reduction(g, pi, k)


def forward_witness(reduction: ReductionInstance, independent_set: VertexLike) -> VertexSet:
    """
    Leva um conjunto independente de tamanho k em G a uma testemunha de
    tamanho k' em G'.

    Raises:
        InvalidWitness: conjunto fora de G, de tamanho errado ou não independente.
        InternalError: G'[resultado] fora de Π (violação da construção).
    """
    s = as_vertex_set(independent_set)
    g = reduction.source
    try:
        s.check_host(g)
    except IndexError as exc:
        raise InvalidWitness(str(exc))
    if len(s) != reduction.k:
        raise InvalidWitness(f"conjunto independente deve ter {reduction.k} vértices (tem {len(s)})")
    if not is_independent_in(g, s):
        raise InvalidWitness(f"{s.to_list()} não é independente em G")

    if reduction.kind is ReductionKind.STRONG_PRODUCT:
        chi = reduction.chi
        image = VertexSet.of(u * chi + j for u in s for j in range(chi))
    else:
        image = VertexSet(s.mask | reduction.attached_mask)

    if not reduction.pi.accepts(induced_subgraph(reduction.g_prime, image)):
        raise InternalError(f"G'[{image.to_list()}] deveria pertencer a '{reduction.pi.name}'")
    return image


def backward_extract(reduction: ReductionInstance, h_vertices: VertexLike) -> VertexSet:
    """
    Recupera um conjunto independente de tamanho >= k em G a partir de uma
    solução de tamanho k' em G'.

    Produto forte: a maior classe de uma coloração ótima de G'[H] tem ao
    menos k'/χ(H) >= k vértices e projeta injetivamente em G. Junção: o
    argumento de Ramsey garante k independentes dentro da parte de G.

    Raises:
        InvalidWitness: H com tamanho errado ou fora de Π.
        InternalError: a extração garantida falhou (bug de corretude).
    """
    h = as_vertex_set(h_vertices)
    try:
        h.check_host(reduction.g_prime)
    except IndexError as exc:
        raise InvalidWitness(str(exc))
    if len(h) != reduction.k_prime:
        raise InvalidWitness(f"H deve ter {reduction.k_prime} vértices (tem {len(h)})")
    if not reduction.pi.accepts(induced_subgraph(reduction.g_prime, h)):
        raise InvalidWitness(f"G'[H] não pertence a '{reduction.pi.name}'")

    g, k = reduction.source, reduction.k
    if reduction.kind is ReductionKind.STRONG_PRODUCT:
        sub, members = induced_subgraph_map(reduction.g_prime, h)
        chi_h, coloring = chromatic_number(sub)
        sizes = [0] * chi_h
        for color in coloring:
            sizes[color] += 1
        largest = max(range(chi_h), key=lambda c: (sizes[c], -c)) if chi_h else 0
        projected: Dict[int, int] = {}
        for i, color in enumerate(coloring):
            if color == largest:
                projected.setdefault(reduction.origin[members[i]], members[i])
        result = VertexSet.of(projected)
    else:
        part = h.mask & ~reduction.attached_mask
        s1 = VertexSet(part)
        if is_independent_in(g, s1) and len(s1) >= k:
            result = VertexSet.of(s1.to_list()[:k])
        else:
            result, _ = find_independent_set(g, k, part)

    if result is None or len(result) < k or not is_independent_in(g, result):
        raise InternalError(
            f"extração falhou: {reduction.kind.value}, k={k}, H={h.to_list()}",
            kind=reduction.kind.value,
        )
    return result
