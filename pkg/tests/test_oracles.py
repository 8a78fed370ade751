# -*- coding: utf-8 -*-

from dataclasses import replace
from functools import lru_cache
from math import ceil

import pytest

from hereditary_search.exceptions import TooLarge
from hereditary_search.graphs.cliques import is_clique_in, is_independent_in
from hereditary_search.graphs.graph import (
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    induced_subgraph,
    petersen_graph,
)
from hereditary_search.oracles.exact import (
    chromatic_number,
    enumerate_all_graphs,
    exhaustive_solve,
    max_clique,
    max_independent_set,
    oracle_report,
)
from hereditary_search.oracles.generators import GeneratorSpec, generate
from hereditary_search.oracles.planarity import planarity_oracle
from hereditary_search.solver.search import brute_force_search


@pytest.mark.parametrize('g,alpha,omega,chi', [
    (edgeless_graph(0), 0, 0, 0),
    (edgeless_graph(4), 4, 1, 1),
    (complete_graph(4), 1, 4, 4),
    (cycle_graph(5), 2, 2, 3),
    (cycle_graph(6), 3, 2, 2),
    (petersen_graph(), 4, 2, 3),
    (complete_bipartite_graph(3, 4), 4, 2, 2),
])
def test_oracle_report_values(g, alpha, omega, chi):
    report = oracle_report(g)
    assert (report.alpha, report.omega, report.chi) == (alpha, omega, chi)
    assert is_independent_in(g, report.alpha_witness)
    assert is_clique_in(g, report.omega_witness)
    classes = report.color_classes()
    assert sum(len(c) for c in classes) == g.n
    assert all(is_independent_in(g, c) for c in classes)


def test_complement_swaps_alpha_and_omega():
    for seed in range(5):
        g = generate(GeneratorSpec('random', 12, seed=seed)).graph
        alpha, _ = max_independent_set(g)
        omega, _ = max_clique(g)
        assert max_clique(complement(g))[0] == alpha
        assert max_independent_set(complement(g))[0] == omega


def test_chromatic_number_respects_lower_bounds():
    for seed in range(5):
        g = generate(GeneratorSpec('random', 10, seed=seed, density=0.4)).graph
        report = oracle_report(g)
        assert report.chi >= max(report.omega, ceil(g.n / report.alpha))
        assert report.chi <= max(g.degree(v) for v in g.vertices()) + 1


def test_bipartite_graphs_are_two_colorable():
    g = generate(GeneratorSpec('bipartite', 14, seed=3, density=0.6)).graph
    chi, coloring = chromatic_number(g)
    assert chi <= 2
    assert all(coloring[u] != coloring[v] for u, v in g.edges())


def test_oracle_limits():
    with pytest.raises(TooLarge):
        max_independent_set(edgeless_graph(25))
    with pytest.raises(TooLarge):
        chromatic_number(edgeless_graph(21))
    with pytest.raises(TooLarge):
        list(enumerate_all_graphs(7))
    with pytest.raises(TooLarge):
        planarity_oracle(edgeless_graph(9))


def test_exhaustive_solve_small_cases(c5, descriptor):
    bipartite = descriptor('bipartite')
    assert exhaustive_solve(c5, bipartite, 4)
    assert not exhaustive_solve(c5, bipartite, 5)
    assert exhaustive_solve(c5, bipartite, 0)
    assert not exhaustive_solve(c5, bipartite, 6)
    assert exhaustive_solve(petersen_graph(), descriptor('is'), 4)
    assert not exhaustive_solve(petersen_graph(), descriptor('is'), 5)


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_all_graphs(n)) for n in range(5)] == [1, 1, 2, 8, 64]


# identidades em todos os grafos pequenos

SMALL_ORDERS = [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)]


@pytest.mark.parametrize('n', SMALL_ORDERS)
def test_alpha_omega_chi_identities_on_all_small_graphs(n):
    for g in enumerate_all_graphs(n):
        alpha, _ = max_independent_set(g)
        omega, _ = max_clique(g)
        chi, coloring = chromatic_number(g)
        assert max_clique(complement(g))[0] == alpha, g
        assert chi >= omega, g
        assert chi >= ceil(n / alpha), g
        assert all(coloring[u] != coloring[v] for u, v in g.edges()), g


@pytest.mark.parametrize('n', SMALL_ORDERS)
def test_largest_color_class_has_at_least_n_over_chi_vertices(n):
    for g in enumerate_all_graphs(n):
        chi, coloring = chromatic_number(g)
        largest = max(coloring.count(color) for color in set(coloring))
        assert largest >= ceil(n / chi), g


@pytest.mark.parametrize('n', [0, 1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_exhaustive_solve_agrees_with_brute_force_search(recognized_descriptors, n):
    descriptors = [replace(d, membership=lru_cache(maxsize=None)(d.membership))
                   for d in recognized_descriptors]
    for g in enumerate_all_graphs(n):
        for d in descriptors:
            for k in range(n + 1):
                witness = brute_force_search(g, d, k)
                assert (witness is not None) == exhaustive_solve(g, d, k), (d.name, g, k)
                if witness is not None:
                    assert len(witness) == k
                    assert d.accepts(induced_subgraph(g, witness))
