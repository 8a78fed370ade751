# -*- coding: utf-8 -*-

"""
Descritores de propriedades hereditárias.

Um descritor empacota o teste de pertinência com as constantes que o
solver e as reduções consomem: a classe (AA, AS, SA, SS), i_Π (menor
conjunto independente fora de Π), c_Π (menor clique fora de Π), χ(Π)
(número cromático máximo em Π) e as flags de fechamento.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional

from ..exceptions import DescriptorUnsupported, InvalidDescriptor, UnknownProperty
from ..graphs.graph import Graph, complete_graph, edgeless_graph
from . import recognizers


class PropertyClass(str, Enum):
    """Primeira letra: cliques (All/Some); segunda: conjuntos independentes."""

    AA = 'AA'
    AS = 'AS'
    SA = 'SA'
    SS = 'SS'


@dataclass(frozen=True)
class PropertyDescriptor:
    name: str
    membership: Optional[Callable[[Graph], bool]]
    class_tag: PropertyClass
    i_pi: Optional[int] = None
    c_pi: Optional[int] = None
    chi_pi: Optional[int] = None
    closed_under_strong_clique_product: bool = False
    closed_under_join_with_cliques: bool = False
    contains_all_disjoint_unions_of_K_chi: bool = False
    contains_IS_join_cliques: bool = False
    generator_only: bool = False
    description: str = ''

    @property
    def has_recognizer(self) -> bool:
        return self.membership is not None

    def accepts(self, g: Graph) -> bool:
        if self.membership is None:
            raise DescriptorUnsupported(
                f"a propriedade '{self.name}' não possui reconhecedor (apenas gerador)"
            )
        return self.membership(g)

    def to_record(self) -> Dict[str, object]:
        """Registro serializável usado por `classify`."""
        return {
            'name': self.name,
            'class': self.class_tag.value,
            'i_pi': self.i_pi,
            'c_pi': self.c_pi,
            'chi_pi': self.chi_pi,
            'closed_under_strong_clique_product': self.closed_under_strong_clique_product,
            'closed_under_join_with_cliques': self.closed_under_join_with_cliques,
            'contains_all_disjoint_unions_of_K_chi': self.contains_all_disjoint_unions_of_K_chi,
            'contains_IS_join_cliques': self.contains_IS_join_cliques,
            'has_recognizer': self.has_recognizer,
            'generator_only': self.generator_only,
            'description': self.description,
        }


def _expected_tag(i_pi: Optional[int], c_pi: Optional[int]) -> PropertyClass:
    if i_pi is None and c_pi is None:
        return PropertyClass.AA
    if c_pi is None:
        return PropertyClass.AS
    if i_pi is None:
        return PropertyClass.SA
    return PropertyClass.SS


def validate_descriptor(d: PropertyDescriptor) -> None:
    """
    Verifica a consistência entre class_tag e a presença de i_Π / c_Π.

    Raises:
        InvalidDescriptor: tag incoerente ou constante não positiva.
    """
    for label, value in (('i_pi', d.i_pi), ('c_pi', d.c_pi), ('chi_pi', d.chi_pi)):
        if value is not None and value < 1:
            raise InvalidDescriptor(f"{d.name}: {label} deve ser positivo (recebido {value})")
    expected = _expected_tag(d.i_pi, d.c_pi)
    if d.class_tag != expected:
        raise InvalidDescriptor(
            f"{d.name}: class_tag {d.class_tag.value} incoerente com "
            f"i_pi={d.i_pi}, c_pi={d.c_pi} (esperado {expected.value})"
        )


def audit_descriptor(d: PropertyDescriptor) -> List[str]:
    """
    Lista as invariantes do descritor que falham.

    Além da tag, confere as fronteiras: IS_{i_Π} rejeitado e IS_{i_Π - 1}
    aceito; K_{c_Π} rejeitado e K_{c_Π - 1} aceito. Descritores sem
    reconhecedor só têm a tag verificada.
    """
    problems: List[str] = []
    try:
        validate_descriptor(d)
    except InvalidDescriptor as exc:
        problems.append(str(exc))
    if not d.has_recognizer:
        return problems
    if d.i_pi is not None:
        if d.accepts(edgeless_graph(d.i_pi)):
            problems.append(f"{d.name}: IS_{d.i_pi} deveria ser rejeitado")
        if not d.accepts(edgeless_graph(d.i_pi - 1)):
            problems.append(f"{d.name}: IS_{d.i_pi - 1} deveria ser aceito")
    if d.c_pi is not None:
        if d.accepts(complete_graph(d.c_pi)):
            problems.append(f"{d.name}: K_{d.c_pi} deveria ser rejeitado")
        if not d.accepts(complete_graph(d.c_pi - 1)):
            problems.append(f"{d.name}: K_{d.c_pi - 1} deveria ser aceito")
    if not d.accepts(edgeless_graph(0)):
        problems.append(f"{d.name}: o grafo vazio deveria ser aceito")
    return problems


_BUILTINS = (
    PropertyDescriptor(
        name='is',
        membership=recognizers.is_independent_set,
        class_tag=PropertyClass.SA,
        c_pi=2,
        chi_pi=1,
        contains_all_disjoint_unions_of_K_chi=True,
        description='conjunto independente (sem arestas)',
    ),
    PropertyDescriptor(
        name='clique',
        membership=recognizers.is_clique,
        class_tag=PropertyClass.AS,
        i_pi=2,
        closed_under_strong_clique_product=True,
        description='grafo completo',
    ),
    PropertyDescriptor(
        name='bipartite',
        membership=recognizers.is_bipartite,
        class_tag=PropertyClass.SA,
        c_pi=3,
        chi_pi=2,
        contains_all_disjoint_unions_of_K_chi=True,
        contains_IS_join_cliques=True,
        description='2-colorível',
    ),
    PropertyDescriptor(
        name='triangle-free',
        membership=recognizers.is_triangle_free,
        class_tag=PropertyClass.SA,
        c_pi=3,
        description='sem K3',
    ),
    PropertyDescriptor(
        name='forest',
        membership=recognizers.is_forest,
        class_tag=PropertyClass.SA,
        c_pi=3,
        chi_pi=2,
        contains_all_disjoint_unions_of_K_chi=True,
        description='acíclico',
    ),
    PropertyDescriptor(
        name='planar',
        membership=recognizers.is_planar,
        class_tag=PropertyClass.SA,
        c_pi=5,
        chi_pi=4,
        contains_all_disjoint_unions_of_K_chi=True,
        description='admite desenho plano',
    ),
    PropertyDescriptor(
        name='co-bipartite',
        membership=recognizers.is_co_bipartite,
        class_tag=PropertyClass.AS,
        i_pi=3,
        closed_under_strong_clique_product=True,
        description='complemento bipartido',
    ),
    PropertyDescriptor(
        name='c4-free',
        membership=recognizers.is_c4_free,
        class_tag=PropertyClass.AA,
        closed_under_strong_clique_product=True,
        description='sem C4 induzido',
    ),
    PropertyDescriptor(
        name='k14-free',
        membership=recognizers.is_k14_free,
        class_tag=PropertyClass.AA,
        closed_under_strong_clique_product=True,
        description='sem K_{1,4} induzido',
    ),
    PropertyDescriptor(
        name='cograph',
        membership=recognizers.is_cograph,
        class_tag=PropertyClass.AA,
        closed_under_strong_clique_product=True,
        closed_under_join_with_cliques=True,
        description='sem P4 induzido',
    ),
    PropertyDescriptor(
        name='bipartite-co-bipartite',
        membership=recognizers.is_bipartite_co_bipartite,
        class_tag=PropertyClass.SS,
        i_pi=3,
        c_pi=3,
        chi_pi=2,
        description='bipartido e co-bipartido (classe finita)',
    ),
    PropertyDescriptor(
        name='unit-disk',
        membership=None,
        class_tag=PropertyClass.AA,
        closed_under_strong_clique_product=True,
        generator_only=True,
        description='grafo de disco unitário (somente gerador)',
    ),
)

_REGISTRY = {d.name: d for d in _BUILTINS}


def builtin_descriptors() -> List[PropertyDescriptor]:
    return list(_BUILTINS)


def property_names() -> List[str]:
    return [d.name for d in _BUILTINS]


def get_descriptor(name: str) -> PropertyDescriptor:
    """
    Resolve um nome estável (minúsculo) para o descritor embutido.

    Raises:
        UnknownProperty: nome não registrado.
    """
    try:
        return _REGISTRY[name.strip().lower()]
    except KeyError:
        raise UnknownProperty(
            f"propriedade desconhecida: {name!r} (disponíveis: {', '.join(property_names())})"
        )
