# -*- coding: utf-8 -*-

import io

import networkx as nx
import pytest

from hereditary_search.exceptions import FormatError, InvalidArgument
from hereditary_search.graphs.formats import (
    encode_edge_list,
    encode_graph6,
    encode_points,
    parse_edge_list,
    parse_graph6,
    parse_graph_collection,
    parse_graph_text,
    read_graph,
    read_graphs,
    sniff_format,
)
from hereditary_search.graphs.graph import complete_graph, cycle_graph, edgeless_graph, petersen_graph
from hereditary_search.oracles.generators import GeneratorSpec, generate


def _networkx_graph6(g):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nx_graph, header=False).decode('ascii').strip()


def test_graph6_known_strings():
    assert encode_graph6(edgeless_graph(0)) == '?'
    assert encode_graph6(complete_graph(3)) == 'Bw'
    assert encode_graph6(cycle_graph(5)) == 'Dhc'


@pytest.mark.parametrize('n,seed', [(1, 1), (5, 2), (12, 3), (62, 4), (63, 5), (70, 6)])
def test_graph6_matches_networkx_encoder(n, seed):
    g = generate(GeneratorSpec('random', n, seed=seed, density=0.4)).graph
    text = encode_graph6(g)
    assert text == _networkx_graph6(g)
    assert parse_graph6(text) == g


def test_graph6_accepts_optional_header():
    assert parse_graph6('>>graph6<<Bw') == complete_graph(3)


@pytest.mark.parametrize('text', ['Bw!', 'B', 'Bww', '~??'])
def test_graph6_rejects_malformed_input(text):
    with pytest.raises(FormatError):
        parse_graph6(text)


def test_edge_list_roundtrip_and_comments():
    g = petersen_graph()
    assert parse_edge_list(encode_edge_list(g)) == g
    text = "# triângulo\n3 3\n0 1\n1 2  # fecha\n0 2\n"
    assert parse_edge_list(text) == complete_graph(3)


def test_edge_list_count_mismatch():
    with pytest.raises(FormatError):
        parse_edge_list("3 2\n0 1\n")


def test_sniffing_between_formats():
    assert sniff_format("5 0\n") == 'edgelist'
    assert sniff_format("Dhc\n") == 'graph6'
    assert parse_graph_text("Dhc\n") == cycle_graph(5)
    assert parse_graph_text("2 1\n0 1\n") == complete_graph(2)
    with pytest.raises(FormatError):
        sniff_format("\n\n")


def test_graph_collection_reads_one_graph6_per_line():
    graphs = parse_graph_collection("Bw\nDhc\n\n@\n")
    assert graphs == [complete_graph(3), cycle_graph(5), edgeless_graph(1)]


def test_read_graph_from_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / 'c5.g6'
    path.write_text('Dhc\n', encoding='utf-8')
    assert read_graph(str(path)) == cycle_graph(5)
    assert read_graphs(str(path)) == [cycle_graph(5)]
    monkeypatch.setattr('sys.stdin', io.StringIO('Bw\n'))
    assert read_graph('-') == complete_graph(3)
    with pytest.raises(InvalidArgument):
        read_graph(str(tmp_path / 'ausente.g6'))


def test_points_sidecar_lines():
    assert encode_points([(1, 2), (30, 40)]) == "1 2\n30 40\n"


def test_non_utf8_input_is_format_error(tmp_path):
    path = tmp_path / 'latin1.txt'
    path.write_bytes('2 1\n0 1 # aresta ç\n'.encode('latin-1'))
    with pytest.raises(FormatError):
        read_graph(str(path))
    with pytest.raises(FormatError):
        read_graphs(str(path))
