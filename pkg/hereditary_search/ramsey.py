# -*- coding: utf-8 -*-

"""
Cotas superiores de Ramsey e os cortes derivados usados pelo solver.

O solver usa apenas a cota binomial R(r, s) <= C(r+s-2, r-1), nunca
números de Ramsey exatos. Superestimar o corte é seguro nos dois usos:
nos ramos que respondem Não sem busca, uma cota maior só empurra
instâncias para a busca exaustiva, que continua correta; nos ramos que
respondem Sim, a própria cota garante a existência da testemunha.
Inteiros Python têm precisão arbitrária, então não há overflow.
"""

from dataclasses import dataclass
from math import comb
from typing import Optional

from .exceptions import InvalidArgument, TooLarge
from .graphs.cliques import find_clique, find_independent_set
from .graphs.enumerate import all_labeled_graphs
from .graphs.graph import Graph

RAMSEY_VERIFY_MAX_VERTICES = 6


@dataclass(frozen=True)
class RamseyBound:
    r: int
    s: int
    value: int


@dataclass(frozen=True)
class RamseyVerdict:
    """AllForced quando `counterexample` é None."""

    r: int
    s: int
    n: int
    graphs_checked: int
    counterexample: Optional[Graph] = None

    @property
    def all_forced(self) -> bool:
        return self.counterexample is None


def _check_positive(**values: int) -> None:
    for label, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise InvalidArgument(f"{label} deve ser um inteiro positivo (recebido {value!r})")


def ramsey_upper_bound(r: int, s: int) -> int:
    """
    Cota binomial C(r+s-2, r-1) para R(r, s).

    Examples:
        >>> ramsey_upper_bound(3, 3)
        6
        >>> ramsey_upper_bound(3, 4)
        10
    """
    _check_positive(r=r, s=s)
    return comb(r + s - 2, r - 1)


def ramsey_bound(r: int, s: int) -> RamseyBound:
    return RamseyBound(r, s, ramsey_upper_bound(r, s))


def fpt_size_cutoff(k: int, i_or_c: int) -> int:
    """
    Limiar de n a partir do qual os ramos de ambas-AS / ambas-SA respondem Sim.

    Examples:
        >>> fpt_size_cutoff(4, 3)
        10
    """
    _check_positive(k=k, i_or_c=i_or_c)
    return comb(k + i_or_c - 2, k - 1)


def verify_ramsey_exhaustive(r: int, s: int, n: int) -> RamseyVerdict:
    """
    Verifica exaustivamente que todo grafo rotulado com n vértices tem
    clique de tamanho r ou conjunto independente de tamanho s.

    Oráculo de teste, nunca usado pelo solver.

    Raises:
        TooLarge: n > 6 (2^C(n,2) grafos deixa de ser viável).
    """
    _check_positive(r=r, s=s)
    if n < 0:
        raise InvalidArgument(f"n deve ser não negativo (recebido {n})")
    if n > RAMSEY_VERIFY_MAX_VERTICES:
        raise TooLarge(f"verificação exaustiva limitada a n <= {RAMSEY_VERIFY_MAX_VERTICES} (n={n})")
    checked = 0
    for g in all_labeled_graphs(n):
        checked += 1
        clique, _ = find_clique(g, r)
        if clique is not None:
            continue
        independent, _ = find_independent_set(g, s)
        if independent is None:
            return RamseyVerdict(r, s, n, checked, counterexample=g)
    return RamseyVerdict(r, s, n, checked)
