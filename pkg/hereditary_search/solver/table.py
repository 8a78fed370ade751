# -*- coding: utf-8 -*-

"""
Tabela de decisão: em qual célula cai o par (Π_G, Π).

A ordem das regras segue a prioridade do despacho; a primeira que casa
vence. Cada célula informa o regime de complexidade e a expressão do corte
com os parâmetros já resolvidos a partir dos descritores.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..properties.descriptors import PropertyClass, PropertyDescriptor, validate_descriptor
from ..ramsey import ramsey_upper_bound


class Rule(str, Enum):
    PI_AA = 'PiAA'
    PI_SS = 'PiSS'
    THM_SS = 'ThmSS'
    THM_AS_SA = 'ThmAS_SA'
    THM_BOTH = 'ThmBoth'
    GENERIC = 'GenericSearch'


class Regime(str, Enum):
    FPT = 'fpt'
    POLYNOMIAL = 'polynomial'
    FINITE = 'finite'
    OPEN = 'open'


@dataclass(frozen=True)
class PairClassification:
    """
    Célula da tabela para (Π_G, Π).

    `cutoff_params` traz os valores de i/c usados no corte e, quando o corte
    não depende de k, o próprio limiar em `threshold`.
    """

    rule: Rule
    regime: Regime
    cutoff: Optional[str] = None
    cutoff_params: Dict[str, int] = field(default_factory=dict)
    threshold: Optional[int] = None
    clique_witness: bool = True
    pi_g_class: PropertyClass = PropertyClass.AA
    pi_class: PropertyClass = PropertyClass.AA

    def to_record(self) -> Dict[str, object]:
        return {
            'rule': self.rule.value,
            'regime': self.regime.value,
            'cutoff': self.cutoff,
            'cutoff_params': dict(self.cutoff_params),
            'threshold': self.threshold,
            'pi_g_class': self.pi_g_class.value,
            'pi_class': self.pi_class.value,
        }


def classify_pair(pi_g: PropertyDescriptor, pi: PropertyDescriptor) -> PairClassification:
    """
    Classifica o par (Π_G, Π) na tabela de decisão.

    Raises:
        InvalidDescriptor: descritor com tag incoerente.

    Examples:
        >>> cell = classify_pair(get_descriptor('co-bipartite'), get_descriptor('bipartite'))
        >>> cell.rule.value, cell.threshold
        ('ThmAS_SA', 6)
    """
    validate_descriptor(pi_g)
    validate_descriptor(pi)
    tags = {'pi_g_class': pi_g.class_tag, 'pi_class': pi.class_tag}
    g_tag, p_tag = pi_g.class_tag, pi.class_tag

    if p_tag is PropertyClass.AA:
        return PairClassification(Rule.PI_AA, Regime.FPT, 'n >= R(k, k)', **tags)

    if p_tag is PropertyClass.SS:
        params = {'c_pi': pi.c_pi, 'i_pi': pi.i_pi}
        return PairClassification(
            Rule.PI_SS, Regime.POLYNOMIAL, 'k >= R(c_pi, i_pi)', params,
            threshold=ramsey_upper_bound(pi.c_pi, pi.i_pi), **tags,
        )

    if g_tag is PropertyClass.SS:
        params = {'c_pi_g': pi_g.c_pi, 'i_pi_g': pi_g.i_pi}
        # limite de tamanho das entradas, não um corte do despacho
        return PairClassification(
            Rule.THM_SS, Regime.FINITE, 'n < R(c_pi_g, i_pi_g)', params,
            threshold=ramsey_upper_bound(pi_g.c_pi, pi_g.i_pi), **tags,
        )

    if g_tag is PropertyClass.AS and p_tag is PropertyClass.SA:
        params = {'c_pi': pi.c_pi, 'i_pi_g': pi_g.i_pi}
        return PairClassification(
            Rule.THM_AS_SA, Regime.POLYNOMIAL, 'k >= R(c_pi, i_pi_g)', params,
            threshold=ramsey_upper_bound(pi.c_pi, pi_g.i_pi), **tags,
        )
    if g_tag is PropertyClass.SA and p_tag is PropertyClass.AS:
        params = {'c_pi_g': pi_g.c_pi, 'i_pi': pi.i_pi}
        return PairClassification(
            Rule.THM_AS_SA, Regime.POLYNOMIAL, 'k >= R(c_pi_g, i_pi)', params,
            threshold=ramsey_upper_bound(pi_g.c_pi, pi.i_pi), **tags,
        )

    if g_tag is PropertyClass.AS and p_tag is PropertyClass.AS:
        return PairClassification(
            Rule.THM_BOTH, Regime.FPT, 'n >= C(k + i_pi_g - 2, k - 1)',
            {'i_pi_g': pi_g.i_pi}, clique_witness=True, **tags,
        )
    if g_tag is PropertyClass.SA and p_tag is PropertyClass.SA:
        return PairClassification(
            Rule.THM_BOTH, Regime.FPT, 'n >= C(k + c_pi_g - 2, k - 1)',
            {'c_pi_g': pi_g.c_pi}, clique_witness=False, **tags,
        )

    # Π_G em AA e Π em AS ou SA: nenhum corte se aplica
    return PairClassification(Rule.GENERIC, Regime.OPEN, **tags)
