# -*- coding: utf-8 -*-

import pytest

from hereditary_search.config import get_settings
from hereditary_search.graphs.graph import (
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    petersen_graph,
)
from hereditary_search.properties.descriptors import builtin_descriptors, get_descriptor


@pytest.fixture
def settings():
    return get_settings()


@pytest.fixture
def descriptor():
    """Atalho: descriptor('bipartite')."""
    return get_descriptor


@pytest.fixture
def recognized_descriptors():
    return [d for d in builtin_descriptors() if d.has_recognizer]


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def small_graphs():
    """Amostra variada usada por vários módulos de teste."""
    return [
        edgeless_graph(0),
        edgeless_graph(4),
        complete_graph(4),
        path_graph(5),
        cycle_graph(5),
        cycle_graph(6),
        petersen_graph(),
    ]


@pytest.fixture
def write_graph(tmp_path):
    """Grava um arquivo de grafo em tmp_path e devolve o caminho."""
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
