# -*- coding: utf-8 -*-

"""
Exceções do hereditary_search.

Cada classe carrega um `kind` estável, usado pela CLI como identificador
do erro no payload JSON.
"""


class HereditarySearchError(Exception):
    """Erro base do projeto."""

    kind = 'Error'

    def __init__(self, message: str = '', **details):
        super().__init__(message)
        self.message = message
        self.details = details


class InvalidEdge(HereditarySearchError, ValueError):
    kind = 'InvalidEdge'


class IndexOutOfRange(HereditarySearchError, IndexError):
    kind = 'IndexOutOfRange'


class FormatError(HereditarySearchError, ValueError):
    kind = 'FormatError'


class InvalidArgument(HereditarySearchError, ValueError):
    kind = 'InvalidArgument'


class TooLarge(HereditarySearchError):
    """Instância acima do limite de enumeração exata do módulo."""

    kind = 'TooLarge'


class InvalidDescriptor(HereditarySearchError, ValueError):
    kind = 'InvalidDescriptor'


class UnknownProperty(HereditarySearchError, KeyError):
    kind = 'UnknownProperty'

    def __str__(self) -> str:
        return self.message


class InputNotInClass(HereditarySearchError):
    kind = 'InputNotInClass'


class DescriptorUnsupported(HereditarySearchError):
    kind = 'DescriptorUnsupported'


class InvalidWitness(HereditarySearchError, ValueError):
    kind = 'InvalidWitness'


class InternalError(HereditarySearchError):
    """Violação de uma garantia teórica: indica bug de corretude."""

    kind = 'InternalError'


class GenerationFailed(HereditarySearchError):
    kind = 'GenerationFailed'


class UsageError(HereditarySearchError):
    kind = 'UsageError'
