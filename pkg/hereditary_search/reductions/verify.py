# -*- coding: utf-8 -*-

"""Verificação de equivalência das reduções com os oráculos exatos."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional

from ..exceptions import InternalError, InvalidWitness, TooLarge
from ..graphs.cliques import find_independent_set, is_independent_in
from ..graphs.formats import encode_graph6
from ..graphs.graph import Graph
from ..oracles.exact import exhaustive_solve, max_independent_set
from ..properties.descriptors import PropertyDescriptor
from .transform import ReductionInstance, ReductionKind, backward_extract, build_reduction, forward_witness

logger = logging.getLogger(__name__)

VERIFY_MAX_VERTICES = 16


@dataclass(frozen=True)
class VerificationRecord:
    graph6: str
    k: int
    alpha: int
    target_answer: bool
    equivalent: bool
    roundtrip_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return self.equivalent and self.roundtrip_ok is not False

    def to_row(self) -> Dict[str, object]:
        return {
            'graph6': self.graph6,
            'k': self.k,
            'alpha': self.alpha,
            'target_answer': 'Yes' if self.target_answer else 'No',
            'equivalent': self.equivalent,
            'roundtrip_ok': self.roundtrip_ok,
        }


def _reduce_checked(g: Graph, pi: PropertyDescriptor, k: int, kind: ReductionKind) -> ReductionInstance:
    reduction = build_reduction(kind, g, pi, k)
    if reduction.g_prime.n > VERIFY_MAX_VERTICES:
        raise TooLarge(
            f"G' com {reduction.g_prime.n} vértices excede o limite de verificação "
            f"({VERIFY_MAX_VERTICES})"
        )
    return reduction


def verify_reduction_equivalence(g: Graph, pi: PropertyDescriptor, k: int, kind: ReductionKind) -> bool:
    """
    True se [α(G) >= k] coincide com a resposta exaustiva em (G', Π, k').

    Raises:
        TooLarge: n(G') > 16 ou C(n', k') acima do limite do oráculo.
    """
    reduction = _reduce_checked(g, pi, k, kind)
    alpha, _ = max_independent_set(g)
    return (alpha >= k) == exhaustive_solve(reduction.g_prime, pi, reduction.k_prime)


def roundtrip_holds(reduction: ReductionInstance) -> bool:
    """Ida e volta da testemunha a partir do primeiro conjunto independente de tamanho k."""
    g, k = reduction.source, reduction.k
    independent, _ = find_independent_set(g, k)
    if independent is None:
        return True
    try:
        image = forward_witness(reduction, independent)
        recovered = backward_extract(reduction, image)
    except (InternalError, InvalidWitness) as exc:
        logger.warning("[verify] ida e volta falhou para k=%d: %s", k, exc)
        return False
    return len(recovered) >= k and is_independent_in(g, recovered)


def verify_reduction_batch(graphs: Iterable[Graph], pi: PropertyDescriptor, ks: Iterable[int],
                           kind: ReductionKind, roundtrip: bool = True) -> Iterator[VerificationRecord]:
    """
    Um registro por (grafo, k): veredito de equivalência e, quando α >= k,
    o da ida e volta das testemunhas.
    """
    ks = list(ks)
    checked = 0
    failures = 0
    for g in graphs:
        alpha, _ = max_independent_set(g)
        graph6 = encode_graph6(g)
        for k in ks:
            reduction = _reduce_checked(g, pi, k, kind)
            target = exhaustive_solve(reduction.g_prime, pi, reduction.k_prime)
            roundtrip_ok = roundtrip_holds(reduction) if roundtrip and alpha >= k else None
            record = VerificationRecord(graph6, k, alpha, target, (alpha >= k) == target, roundtrip_ok)
            checked += 1
            if not record.passed:
                failures += 1
                logger.error("[verify] divergência em %s k=%d: %s", graph6, k, record.to_row())
            yield record
    logger.info("[verify] %d instâncias verificadas, %d divergências", checked, failures)
