# -*- coding: utf-8 -*-

"""
Geradores semeados das classes de entrada.

Cada gerador é função pura de (spec, semente): a mesma semente produz o
mesmo grafo em qualquer plataforma, pois toda a aleatoriedade vem de
`XorShift64Star`. As classes c4-free e k14-free são obtidas por rejeição
sobre o gerador aleatório; triangle-free usa rejeição até n = 10 e, acima
disso, a subclasse bipartida (correta, mas não uniforme sobre a classe).
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, Optional, Tuple

import numpy as np
from scipy.spatial import Delaunay

from ..exceptions import GenerationFailed, InvalidArgument
from ..graphs.graph import MAX_VERTICES, Graph, complement, edge_pairs, from_edge_list
from ..properties import recognizers
from .rng import XorShift64Star

logger = logging.getLogger(__name__)

GENERATOR_CLASSES = (
    'random', 'bipartite', 'co-bipartite', 'triangle-free',
    'planar', 'unit-disk', 'c4-free', 'k14-free',
)

# pontos em grade inteira 2^20 x 2^20 sobre o quadrado unitário
GRID_BITS = 20
GRID_SIZE = 1 << GRID_BITS

DEFAULT_DENSITY = 0.5
DEFAULT_REJECTION_BUDGET = 10 ** 5
TRIANGLE_FREE_REJECTION_MAX_N = 10
REJECTION_MAX_N = 12

Point = Tuple[int, int]


@dataclass(frozen=True)
class GeneratorSpec:
    class_name: str
    n: int
    seed: int = 0
    density: Optional[float] = None
    radius: Optional[float] = None

    @property
    def effective_density(self) -> float:
        return DEFAULT_DENSITY if self.density is None else self.density

    def validate(self) -> None:
        """
        Raises:
            InvalidArgument: classe desconhecida, n fora do intervalo,
                densidade fora de [0, 1], raio ausente ou negativo.
        """
        if self.class_name not in GENERATOR_CLASSES:
            raise InvalidArgument(
                f"classe de gerador desconhecida: {self.class_name!r} "
                f"(disponíveis: {', '.join(GENERATOR_CLASSES)})"
            )
        if not 0 <= self.n < MAX_VERTICES:
            raise InvalidArgument(f"n fora do intervalo suportado: {self.n}")
        if not 0 <= self.seed < 1 << 64:
            raise InvalidArgument(f"semente deve caber em 64 bits sem sinal: {self.seed}")
        if self.class_name == 'unit-disk':
            if self.radius is None or not math.isfinite(self.radius) or self.radius < 0:
                raise InvalidArgument(f"unit-disk exige --radius >= 0 (recebido {self.radius})")
            if self.density is not None:
                raise InvalidArgument("unit-disk não aceita --density")
        else:
            if self.radius is not None:
                raise InvalidArgument(f"--radius só se aplica a unit-disk (classe {self.class_name})")
            if not 0.0 <= self.effective_density <= 1.0:
                raise InvalidArgument(f"densidade deve estar em [0, 1] (recebido {self.density})")
        if self.class_name in ('c4-free', 'k14-free') and self.n > REJECTION_MAX_N:
            raise InvalidArgument(
                f"{self.class_name} é gerado por rejeição e limitado a n <= {REJECTION_MAX_N}"
            )

    def to_record(self) -> Dict[str, object]:
        return {
            'class': self.class_name,
            'n': self.n,
            'seed': self.seed,
            'density': None if self.class_name == 'unit-disk' else self.effective_density,
            'radius': self.radius,
        }


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    points: Optional[Tuple[Point, ...]] = None


def _random_graph(rng: XorShift64Star, n: int, density: float) -> Graph:
    edges = [pair for pair in edge_pairs(n) if rng.bernoulli(density)]
    return from_edge_list(n, edges)


def _bipartite_graph(rng: XorShift64Star, n: int, density: float) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    left = set(order[: n // 2])
    edges = [
        (u, v) for u, v in edge_pairs(n)
        if (u in left) != (v in left) and rng.bernoulli(density)
    ]
    return from_edge_list(n, edges)


def _grid_points(rng: XorShift64Star, n: int) -> Tuple[Point, ...]:
    coords = rng.sample_bits(2 * n, GRID_BITS)
    return tuple((coords[2 * i], coords[2 * i + 1]) for i in range(n))


def _by_rejection(rng: XorShift64Star, spec: GeneratorSpec, accept: Callable[[Graph], bool],
                  budget: int) -> Graph:
    for attempt in range(1, budget + 1):
        g = _random_graph(rng, spec.n, spec.effective_density)
        if accept(g):
            logger.debug("[gen] %s aceito na tentativa %d", spec.class_name, attempt)
            return g
    raise GenerationFailed(
        f"{spec.class_name}: nenhum grafo aceito em {budget} tentativas "
        f"(n={spec.n}, densidade={spec.effective_density})"
    )


def _planar_graph(rng: XorShift64Star, n: int, density: float) -> Graph:
    """Subgrafo aleatório da triangulação de Delaunay de pontos semeados."""
    points = _grid_points(rng, n)
    if n < 3:
        candidates = edge_pairs(n)
    else:
        # QJ: pontos colineares ou repetidos ainda produzem triangulação
        tri = Delaunay(np.array(points, dtype=float) / GRID_SIZE, qhull_options='QJ')
        found = set()
        for simplex in tri.simplices:
            a, b, c = sorted(int(v) for v in simplex)
            found.update(((a, b), (a, c), (b, c)))
        candidates = sorted(found)
    edges = [pair for pair in candidates if rng.bernoulli(density)]
    return from_edge_list(n, edges)


def unit_disk_edges(points: Tuple[Point, ...], radius: float) -> Iterator[Tuple[int, int]]:
    """
    Pares (u, v) com distância <= raio, comparando distâncias ao quadrado
    de forma exata na grade.
    """
    limit = Fraction(radius) ** 2 * (GRID_SIZE ** 2)
    for u, v in edge_pairs(len(points)):
        dx = points[u][0] - points[v][0]
        dy = points[u][1] - points[v][1]
        if dx * dx + dy * dy <= limit:
            yield u, v


def generate(spec: GeneratorSpec, rejection_budget: Optional[int] = None) -> GeneratedGraph:
    """
    Gera um grafo da classe pedida, determinístico para a semente dada.

    Args:
        spec: classe, n, densidade ou raio e semente
        rejection_budget: tentativas máximas dos geradores por rejeição

    Returns:
        GeneratedGraph; `points` só vem preenchido para unit-disk

    Raises:
        InvalidArgument: spec inválida
        GenerationFailed: orçamento de rejeição esgotado

    Examples:
        >>> generate(GeneratorSpec('unit-disk', 5, seed=1, radius=0.0)).graph.edge_count
        0
    """
    spec.validate()
    budget = DEFAULT_REJECTION_BUDGET if rejection_budget is None else rejection_budget
    rng = XorShift64Star(spec.seed)
    density = spec.effective_density
    name = spec.class_name

    if name == 'unit-disk':
        points = _grid_points(rng, spec.n)
        g = from_edge_list(spec.n, unit_disk_edges(points, spec.radius))
        return GeneratedGraph(g, points)
    if name == 'random':
        g = _random_graph(rng, spec.n, density)
    elif name == 'bipartite':
        g = _bipartite_graph(rng, spec.n, density)
    elif name == 'co-bipartite':
        g = complement(_bipartite_graph(rng, spec.n, density))
    elif name == 'triangle-free':
        if spec.n <= TRIANGLE_FREE_REJECTION_MAX_N:
            g = _by_rejection(rng, spec, recognizers.is_triangle_free, budget)
        else:
            g = _bipartite_graph(rng, spec.n, density)
    elif name == 'planar':
        g = _planar_graph(rng, spec.n, density)
    elif name == 'c4-free':
        g = _by_rejection(rng, spec, recognizers.is_c4_free, budget)
    else:
        g = _by_rejection(rng, spec, recognizers.is_k14_free, budget)
    logger.debug("[gen] %s n=%d semente=%d: %d arestas", name, spec.n, spec.seed, g.edge_count)
    return GeneratedGraph(g)


# reconhecedor de cada classe gerada, quando existe
CLASS_RECOGNIZERS: Dict[str, Callable[[Graph], bool]] = {
    'bipartite': recognizers.is_bipartite,
    'co-bipartite': recognizers.is_co_bipartite,
    'triangle-free': recognizers.is_triangle_free,
    'planar': recognizers.is_planar,
    'c4-free': recognizers.is_c4_free,
    'k14-free': recognizers.is_k14_free,
}
