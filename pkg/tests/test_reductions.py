# -*- coding: utf-8 -*-

import pytest

from hereditary_search.exceptions import DescriptorUnsupported, InvalidArgument, InvalidWitness, TooLarge
from hereditary_search.graphs.cliques import is_independent_in
from hereditary_search.graphs.graph import (
    VertexSet,
    complete_graph,
    cycle_graph,
    disjoint_cliques,
    edgeless_graph,
    join,
    path_graph,
    strong_product,
)
from hereditary_search.oracles.exact import enumerate_all_graphs, max_clique, max_independent_set
from hereditary_search.oracles.generators import GeneratorSpec, generate
from hereditary_search.properties import recognizers
from hereditary_search.reductions.transform import (
    ReductionKind,
    backward_extract,
    build_reduction,
    forward_witness,
    join_reduction,
    strong_product_reduction,
)
from hereditary_search.reductions.verify import (
    roundtrip_holds,
    verify_reduction_batch,
    verify_reduction_equivalence,
)

KINDS = [ReductionKind.STRONG_PRODUCT, ReductionKind.JOIN]


# construção

def test_strong_product_reduction_sizes(c5, descriptor):
    red = strong_product_reduction(c5, descriptor('bipartite'), 2)
    assert (red.g_prime.n, red.k_prime, red.chi) == (10, 4, 2)
    assert red.origin[:4] == (0, 0, 1, 1)

    red = strong_product_reduction(edgeless_graph(3), descriptor('bipartite'), 3)
    assert red.g_prime == disjoint_cliques(3, 2)
    assert red.k_prime == 6

    red = strong_product_reduction(edgeless_graph(1), descriptor('planar'), 1)
    assert red.g_prime == complete_graph(4)
    assert red.k_prime == 4


def test_join_reduction_sizes(c5, descriptor):
    red = join_reduction(c5, descriptor('bipartite'), 3)
    assert (red.r, red.c, red.g_prime.n, red.k_prime) == (6, 1, 11, 9)
    assert red.clique_blocks == tuple((v,) for v in range(5, 11))
    assert red.origin[5:] == (None,) * 6
    # ω(G + t·K_c) = ω(G) + c
    assert max_clique(red.g_prime)[0] == 3

    red = join_reduction(edgeless_graph(1), descriptor('bipartite'), 1)
    assert (red.r, red.c, red.k_prime) == (1, 1, 2)


def test_reductions_reject_unsupported_descriptors(c5, descriptor):
    with pytest.raises(DescriptorUnsupported):
        strong_product_reduction(c5, descriptor('triangle-free'), 2)
    with pytest.raises(DescriptorUnsupported):
        join_reduction(c5, descriptor('is'), 2)
    with pytest.raises(DescriptorUnsupported):
        join_reduction(c5, descriptor('forest'), 2)
    with pytest.raises(InvalidArgument):
        join_reduction(c5, descriptor('bipartite'), 0)
    with pytest.raises(InvalidArgument):
        strong_product_reduction(c5, descriptor('bipartite'), -1)


def test_sidecar_describes_the_map(c5, descriptor):
    sidecar = join_reduction(c5, descriptor('bipartite'), 2).to_sidecar()
    assert sidecar['kind'] == 'join'
    assert sidecar['n'] == 5 and sidecar['n_prime'] == 5 + sidecar['r'] * sidecar['c']
    assert sidecar['map']['origin'][:5] == [0, 1, 2, 3, 4]
    assert len(sidecar['map']['clique_blocks']) == sidecar['r']


# testemunhas

def test_forward_and_backward_strong_product(c5, descriptor):
    red = strong_product_reduction(c5, descriptor('bipartite'), 2)
    image = forward_witness(red, [0, 2])
    assert image.to_list() == [0, 1, 4, 5]
    assert backward_extract(red, image).to_list() == [0, 2]


def test_forward_witness_rejects_non_independent_input(c5, descriptor):
    red = join_reduction(c5, descriptor('bipartite'), 3)
    with pytest.raises(InvalidWitness):
        forward_witness(red, [0, 2, 4])
    with pytest.raises(InvalidWitness):
        forward_witness(red, [0, 2])
    with pytest.raises(InvalidWitness):
        forward_witness(red, [0, 2, 9])


def test_join_forward_includes_every_attached_vertex(c5, descriptor):
    red = join_reduction(c5, descriptor('bipartite'), 2)
    image = forward_witness(red, [0, 2])
    assert image.mask == VertexSet.of([0, 2]).mask | red.attached_mask
    assert len(image) == red.k_prime


def test_join_backward_with_edge_inside_the_graph_part(descriptor):
    # H sem vértices anexados: G[S1] = P5 tem arestas, mas contém 2 independentes
    red = join_reduction(path_graph(5), descriptor('bipartite'), 2)
    assert red.k_prime == 5
    result = backward_extract(red, range(5))
    assert result.to_list() == [0, 2]
    assert is_independent_in(red.source, result)


def test_backward_extract_rejects_invalid_solutions(c5, descriptor):
    red = strong_product_reduction(c5, descriptor('bipartite'), 2)
    with pytest.raises(InvalidWitness):
        backward_extract(red, [0, 1, 2])
    # cópias de 0 e de 1 formam um K4
    with pytest.raises(InvalidWitness):
        backward_extract(red, [0, 1, 2, 3])


@pytest.mark.parametrize('kind', KINDS)
def test_roundtrip_on_small_graphs(descriptor, kind):
    pi = descriptor('bipartite')
    for n in range(1, 5):
        for g in enumerate_all_graphs(n):
            alpha, _ = max_independent_set(g)
            for k in range(1, alpha + 1):
                assert roundtrip_holds(build_reduction(kind, g, pi, k))


# equivalência

@pytest.mark.parametrize('kind', KINDS)
def test_equivalence_on_all_four_vertex_graphs(descriptor, kind):
    pi = descriptor('bipartite')
    for g in enumerate_all_graphs(4):
        for k in range(1, 5):
            assert verify_reduction_equivalence(g, pi, k, kind)


def test_equivalence_for_planar_strong_product(descriptor):
    pi = descriptor('planar')
    for n in range(1, 4):
        for g in enumerate_all_graphs(n):
            for k in (1, 2):
                assert verify_reduction_equivalence(g, pi, k, ReductionKind.STRONG_PRODUCT)


def test_verification_size_limit(descriptor):
    with pytest.raises(TooLarge):
        verify_reduction_equivalence(edgeless_graph(5), descriptor('bipartite'), 5, ReductionKind.JOIN)


def test_verify_batch_records(c5, descriptor):
    records = list(verify_reduction_batch([c5, complete_graph(3)], descriptor('bipartite'), [1, 2, 3],
                                          ReductionKind.STRONG_PRODUCT))
    assert len(records) == 6
    assert all(r.passed for r in records)
    c5_k3 = records[2]
    assert (c5_k3.alpha, c5_k3.target_answer, c5_k3.roundtrip_ok) == (2, False, None)
    assert records[0].to_row()['graph6'] == 'Dhc'
    assert records[0].to_row()['target_answer'] == 'Yes'


# propriedades estruturais

def test_join_with_cliques_adds_c_to_clique_number():
    for seed in range(6):
        g = generate(GeneratorSpec('random', 6, seed=seed)).graph
        omega, _ = max_clique(g)
        for t in (1, 2):
            for c in (1, 2):
                assert max_clique(join(g, disjoint_cliques(t, c)))[0] == omega + c


def test_join_with_cliques_adds_c_on_all_small_graphs():
    for n in range(6):
        for g in enumerate_all_graphs(n):
            omega, _ = max_clique(g)
            for t in (1, 2):
                for c in (1, 2):
                    assert max_clique(join(g, disjoint_cliques(t, c)))[0] == omega + c, (g, t, c)


def test_strong_clique_product_preserves_flagged_classes():
    for seed in range(4):
        for name, accepts in (('c4-free', recognizers.is_c4_free), ('k14-free', recognizers.is_k14_free)):
            g = generate(GeneratorSpec(name, 7, seed=seed, density=0.3)).graph
            assert accepts(strong_product(g, complete_graph(2))), (name, seed)
            assert accepts(strong_product(g, complete_graph(3))), (name, seed)


def test_join_with_cliques_preserves_cographs():
    g = join(disjoint_cliques(2, 2), edgeless_graph(2))
    assert recognizers.is_cograph(g)
    assert recognizers.is_cograph(join(g, disjoint_cliques(3, 1)))
    assert recognizers.is_cograph(join(g, disjoint_cliques(2, 2)))
