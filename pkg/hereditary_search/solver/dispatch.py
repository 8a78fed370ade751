# -*- coding: utf-8 -*-

"""
Procedimento de decisão para P(G, Π_G, Π, k).

Ordem do despacho (a primeira regra que casa decide):

    (0) checagem da classe de entrada, k > n, k = 0
    (1) Π em AA          corte n >= R(k, k), senão busca
    (2) Π em SS          corte k >= R(c_Π, i_Π), senão busca
    (3) Π_G em SS        busca (entradas limitadas por R(c_Π_G, i_Π_G))
    (4) AS x SA e SA x AS  corte k >= R(c, i), senão busca
    (5) AS x AS e SA x SA  corte n >= C(k + i - 2, k - 1), senão busca
    (6) Π_G em AA        busca genérica

Os ramos de corte que respondem Sim extraem a testemunha garantida por
Ramsey com a busca limitada de cliques/conjuntos independentes; o contador
de testes reflete só essa extração. Os que respondem Não não testam nada.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from ..exceptions import (
    DescriptorUnsupported,
    InputNotInClass,
    InternalError,
    InvalidArgument,
    InvalidWitness,
)
from ..graphs.cliques import find_clique, find_independent_set
from ..graphs.graph import Graph, VertexSet, edgeless_graph, induced_subgraph
from ..properties.descriptors import PropertyDescriptor
from ..ramsey import fpt_size_cutoff, ramsey_upper_bound
from .pool import SearchPool
from .search import run_subset_search
from .table import PairClassification, Rule, classify_pair

logger = logging.getLogger(__name__)


class Answer(str, Enum):
    YES = 'Yes'
    NO = 'No'


class Branch(str, Enum):
    THM_AS_SA_CUTOFF = 'ThmAS_SA_cutoff'
    THM_AS_SA_SEARCH = 'ThmAS_SA_search'
    THM_BOTH_CUTOFF = 'ThmBoth_cutoff'
    THM_BOTH_SEARCH = 'ThmBoth_search'
    THM_SS_SEARCH = 'ThmSS_search'
    PI_AA_CUTOFF = 'PiAA_cutoff'
    PI_AA_SEARCH = 'PiAA_search'
    PI_SS_CUTOFF = 'PiSS_cutoff'
    PI_SS_SEARCH = 'PiSS_search'
    GENERIC_SEARCH = 'GenericSearch'

    @property
    def is_cutoff(self) -> bool:
        return self.value.endswith('_cutoff')


_SEARCH_BRANCH = {
    Rule.PI_AA: Branch.PI_AA_SEARCH,
    Rule.PI_SS: Branch.PI_SS_SEARCH,
    Rule.THM_SS: Branch.THM_SS_SEARCH,
    Rule.THM_AS_SA: Branch.THM_AS_SA_SEARCH,
    Rule.THM_BOTH: Branch.THM_BOTH_SEARCH,
    Rule.GENERIC: Branch.GENERIC_SEARCH,
}


@dataclass(frozen=True)
class ProblemInstance:
    g: Graph
    pi_g: PropertyDescriptor
    pi: PropertyDescriptor
    k: int


@dataclass(frozen=True)
class SolveOutcome:
    answer: Answer
    witness: Optional[VertexSet]
    branch: Branch
    membership_tests_performed: int = 0

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    def to_payload(self) -> Dict[str, object]:
        """Objeto JSON do comando `solve`."""
        return {
            'answer': self.answer.value,
            'witness': self.witness.to_list() if self.witness is not None else None,
            'branch': self.branch.value,
            'membership_tests': self.membership_tests_performed,
        }


def yes_outcome(witness: VertexSet, branch: Branch, tests: int) -> SolveOutcome:
    return SolveOutcome(Answer.YES, witness, branch, tests)


def no_outcome(branch: Branch, tests: int = 0) -> SolveOutcome:
    return SolveOutcome(Answer.NO, None, branch, tests)


def preflight(instance: ProblemInstance, check_input_class: bool) -> Optional[SolveOutcome]:
    """
    Passo (0) do despacho, comum a `solve` e `solve_via_sgi`.

    Returns:
        O resultado quando o passo já decide (k > n ou k = 0), senão None.

    Raises:
        DescriptorUnsupported: Π sem reconhecedor
        InputNotInClass: G rejeitado por Π_G com a checagem ligada
    """
    g, pi_g, pi, k = instance.g, instance.pi_g, instance.pi, instance.k
    if k < 0:
        raise InvalidArgument(f"k deve ser não negativo (recebido {k})")
    if not pi.has_recognizer:
        raise DescriptorUnsupported(f"'{pi.name}' não pode ser usado como Π (sem reconhecedor)")
    # classes apenas geradas valem por construção
    if check_input_class and pi_g.has_recognizer and not pi_g.generator_only:
        if not pi_g.accepts(g):
            raise InputNotInClass(f"o grafo de entrada não pertence a '{pi_g.name}'", pi_g=pi_g.name)
    if k > g.n:
        return no_outcome(Branch.GENERIC_SEARCH)
    if k == 0:
        if pi.accepts(edgeless_graph(0)):
            return yes_outcome(VertexSet(0), Branch.GENERIC_SEARCH, 1)
        return no_outcome(Branch.GENERIC_SEARCH, 1)
    return None


def _extract_clique_or_independent(g: Graph, k: int, rule_cell: PairClassification,
                                   branch: Branch) -> SolveOutcome:
    """Extrai a testemunha garantida por Ramsey; falhar aqui é bug de corretude."""
    if rule_cell.rule is Rule.PI_AA:
        clique, clique_nodes = find_clique(g, k)
        independent, independent_nodes = find_independent_set(g, k)
        tests = clique_nodes + independent_nodes
        found = [s for s in (clique, independent) if s is not None]
        witness = min(found, key=VertexSet.to_list) if found else None
    elif rule_cell.clique_witness:
        witness, tests = find_clique(g, k)
    else:
        witness, tests = find_independent_set(g, k)
    if witness is None:
        raise InternalError(
            f"corte {rule_cell.cutoff} garantia testemunha de tamanho {k} e a extração falhou",
            n=g.n, k=k,
        )
    return yes_outcome(witness, branch, tests)


def solve(instance: ProblemInstance, check_input_class: bool = True,
          pool: Optional[SearchPool] = None) -> SolveOutcome:
    """
    Decide P(G, Π_G, Π, k).

    Args:
        instance: grafo, Π_G, Π e k
        check_input_class: testar G contra Π_G antes de decidir
        pool: pool de busca paralela (opcional)

    Returns:
        SolveOutcome com resposta, testemunha, ramo e contador de testes

    Raises:
        InvalidDescriptor: descritor com tag incoerente
        InputNotInClass: G fora de Π_G com a checagem ligada
        DescriptorUnsupported: Π sem reconhecedor

    Examples:
        >>> inst = ProblemInstance(complete_graph(6), get_descriptor('co-bipartite'),
        ...                        get_descriptor('bipartite'), 6)
        >>> solve(inst).branch.value
        'ThmAS_SA_cutoff'
    """
    cell = classify_pair(instance.pi_g, instance.pi)
    early = preflight(instance, check_input_class)
    if early is not None:
        return early

    g, pi_g, pi, k = instance.g, instance.pi_g, instance.pi, instance.k
    n = g.n

    if cell.rule is Rule.PI_AA:
        if n >= ramsey_upper_bound(k, k):
            return _extract_clique_or_independent(g, k, cell, Branch.PI_AA_CUTOFF)

    elif cell.rule is Rule.PI_SS:
        if k >= cell.threshold:
            return no_outcome(Branch.PI_SS_CUTOFF)

    elif cell.rule is Rule.THM_AS_SA:
        if k >= cell.threshold:
            return no_outcome(Branch.THM_AS_SA_CUTOFF)

    elif cell.rule is Rule.THM_BOTH:
        bound = pi_g.i_pi if cell.clique_witness else pi_g.c_pi
        if n >= fpt_size_cutoff(k, bound):
            return _extract_clique_or_independent(g, k, cell, Branch.THM_BOTH_CUTOFF)

    branch = _SEARCH_BRANCH[cell.rule]
    logger.debug("[solve] %s: busca exaustiva n=%d k=%d (Π_G=%s, Π=%s)",
                 branch.value, n, k, pi_g.name, pi.name)
    result = run_subset_search(g, pi, k, pool)
    if result.witness is None:
        return no_outcome(branch, result.membership_tests)
    return yes_outcome(result.witness, branch, result.membership_tests)


def check_outcome(instance: ProblemInstance, outcome: SolveOutcome) -> None:
    """
    Revalida uma resposta Sim testando Π em G[testemunha].

    Raises:
        InvalidWitness: testemunha ausente, de tamanho errado ou rejeitada por Π.
    """
    if not outcome.is_yes:
        if outcome.witness is not None:
            raise InvalidWitness("resposta Não não pode carregar testemunha")
        return
    witness = outcome.witness
    if witness is None or len(witness) != instance.k:
        raise InvalidWitness(f"testemunha deve ter exatamente {instance.k} vértices")
    witness.check_host(instance.g)
    if not instance.pi.accepts(induced_subgraph(instance.g, witness)):
        raise InvalidWitness(f"G[testemunha] não pertence a '{instance.pi.name}'")
