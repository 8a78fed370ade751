# -*- coding: utf-8 -*-

from math import comb

import pytest
from scrapy.exceptions import NotConfigured

from hereditary_search.config import get_settings
from hereditary_search.exceptions import (
    DescriptorUnsupported,
    InputNotInClass,
    InvalidArgument,
    InvalidDescriptor,
    InvalidWitness,
)
from hereditary_search.graphs.cliques import is_clique_in, is_independent_in
from hereditary_search.graphs.graph import (
    VertexSet,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    petersen_graph,
)
from hereditary_search.oracles.exact import enumerate_all_graphs, exhaustive_solve
from hereditary_search.oracles.generators import GeneratorSpec, generate
from hereditary_search.properties import recognizers
from hereditary_search.properties.descriptors import PropertyClass, PropertyDescriptor
from hereditary_search.solver.dispatch import (
    Answer,
    Branch,
    ProblemInstance,
    SolveOutcome,
    check_outcome,
    solve,
)
from hereditary_search.solver.pool import SearchPool
from hereditary_search.solver.search import brute_force_search, run_subset_search, subset_pages
from hereditary_search.solver.table import Regime, Rule, classify_pair


def _instance(descriptor, g, pig, pi, k):
    return ProblemInstance(g, descriptor(pig), descriptor(pi), k)


# busca exaustiva

def test_brute_force_search_examples(c5, descriptor):
    assert brute_force_search(c5, descriptor('bipartite'), 4).to_list() == [0, 1, 2, 3]
    assert brute_force_search(complete_graph(3), descriptor('is'), 2) is None
    assert brute_force_search(c5, descriptor('clique'), 0) == VertexSet(0)


def test_subset_search_counts_tests(c5, descriptor):
    assert run_subset_search(c5, descriptor('bipartite'), 4).membership_tests == 1
    full = run_subset_search(c5, descriptor('bipartite'), 5)
    assert full.witness is None and full.membership_tests == 1
    none_found = run_subset_search(complete_graph(5), descriptor('is'), 2)
    assert none_found.membership_tests == comb(5, 2)
    assert run_subset_search(c5, descriptor('is'), 6).membership_tests == 0
    with pytest.raises(InvalidArgument):
        run_subset_search(c5, descriptor('is'), -1)


def test_subset_pages():
    assert subset_pages(5, 3) == [0, 1, 2]
    assert subset_pages(3, 4) == []
    assert subset_pages(4, 0) == []


# tabela de decisão

@pytest.mark.parametrize('pig,pi,rule,regime,threshold', [
    ('bipartite', 'cograph', Rule.PI_AA, Regime.FPT, None),
    ('clique', 'bipartite-co-bipartite', Rule.PI_SS, Regime.POLYNOMIAL, 6),
    ('bipartite-co-bipartite', 'bipartite', Rule.THM_SS, Regime.FINITE, 6),
    ('co-bipartite', 'bipartite', Rule.THM_AS_SA, Regime.POLYNOMIAL, 6),
    ('co-bipartite', 'planar', Rule.THM_AS_SA, Regime.POLYNOMIAL, 15),
    ('bipartite', 'co-bipartite', Rule.THM_AS_SA, Regime.POLYNOMIAL, 6),
    ('clique', 'co-bipartite', Rule.THM_BOTH, Regime.FPT, None),
    ('triangle-free', 'bipartite', Rule.THM_BOTH, Regime.FPT, None),
    ('c4-free', 'bipartite', Rule.GENERIC, Regime.OPEN, None),
])
def test_classify_pair(descriptor, pig, pi, rule, regime, threshold):
    cell = classify_pair(descriptor(pig), descriptor(pi))
    assert (cell.rule, cell.regime, cell.threshold) == (rule, regime, threshold)


def test_classify_pair_record(descriptor):
    record = classify_pair(descriptor('triangle-free'), descriptor('bipartite')).to_record()
    assert record['cutoff'] == 'n >= C(k + c_pi_g - 2, k - 1)'
    assert record['cutoff_params'] == {'c_pi_g': 3}
    assert record['pi_g_class'] == 'SA'


# despacho

def test_ramsey_cutoff_answers_no_without_testing(descriptor):
    outcome = solve(_instance(descriptor, complete_graph(6), 'co-bipartite', 'bipartite', 6))
    assert outcome.answer is Answer.NO
    assert outcome.branch is Branch.THM_AS_SA_CUTOFF
    assert outcome.membership_tests_performed == 0
    assert outcome.witness is None


def test_planar_inside_co_bipartite_host(descriptor):
    yes = solve(_instance(descriptor, complete_graph(5), 'co-bipartite', 'planar', 4))
    assert yes.is_yes and yes.witness.to_list() == [0, 1, 2, 3]
    assert yes.branch is Branch.THM_AS_SA_SEARCH
    no = solve(_instance(descriptor, complete_graph(5), 'co-bipartite', 'planar', 5))
    assert no.answer is Answer.NO and no.branch is Branch.THM_AS_SA_SEARCH
    assert no.membership_tests_performed == 1


def test_both_sa_cutoff_extracts_independent_set(descriptor):
    g = petersen_graph()
    instance = _instance(descriptor, g, 'triangle-free', 'bipartite', 4)
    outcome = solve(instance)
    assert outcome.branch is Branch.THM_BOTH_CUTOFF
    assert outcome.is_yes
    assert is_independent_in(g, outcome.witness)
    check_outcome(instance, outcome)


def test_both_sa_below_cutoff_searches(descriptor):
    instance = _instance(descriptor, cycle_graph(9), 'triangle-free', 'bipartite', 4)
    outcome = solve(instance)
    assert outcome.branch is Branch.THM_BOTH_SEARCH
    assert outcome.witness.to_list() == [0, 1, 2, 3]


def test_pi_aa_cutoff_and_search(descriptor):
    g = cycle_graph(6)
    cutoff = solve(_instance(descriptor, g, 'bipartite', 'cograph', 3))
    assert cutoff.branch is Branch.PI_AA_CUTOFF
    assert cutoff.witness.to_list() == [0, 2, 4]
    search = solve(_instance(descriptor, g, 'bipartite', 'cograph', 4))
    assert search.branch is Branch.PI_AA_SEARCH
    assert search.is_yes


def test_pi_ss_cutoff(descriptor):
    outcome = solve(_instance(descriptor, complete_graph(7), 'clique', 'bipartite-co-bipartite', 6))
    assert outcome.branch is Branch.PI_SS_CUTOFF and outcome.answer is Answer.NO
    search = solve(_instance(descriptor, complete_graph(7), 'clique', 'bipartite-co-bipartite', 2))
    assert search.branch is Branch.PI_SS_SEARCH and search.is_yes


def test_finite_input_class_searches(descriptor):
    outcome = solve(_instance(descriptor, cycle_graph(4), 'bipartite-co-bipartite', 'forest', 3))
    assert outcome.branch is Branch.THM_SS_SEARCH
    assert outcome.witness.to_list() == [0, 1, 2]


def test_open_case_falls_back_to_generic_search(descriptor):
    outcome = solve(_instance(descriptor, cycle_graph(5), 'c4-free', 'bipartite', 4))
    assert outcome.branch is Branch.GENERIC_SEARCH and outcome.is_yes


def test_trivial_parameters(descriptor, c5):
    too_big = solve(_instance(descriptor, c5, 'triangle-free', 'bipartite', 6))
    assert too_big.answer is Answer.NO
    assert too_big.branch is Branch.GENERIC_SEARCH and too_big.membership_tests_performed == 0
    empty = solve(_instance(descriptor, c5, 'triangle-free', 'bipartite', 0))
    assert empty.is_yes and empty.witness == VertexSet(0)
    assert empty.membership_tests_performed == 1
    with pytest.raises(InvalidArgument):
        solve(_instance(descriptor, c5, 'triangle-free', 'bipartite', -1))


def test_input_class_check(descriptor, c5):
    with pytest.raises(InputNotInClass):
        solve(_instance(descriptor, c5, 'bipartite', 'clique', 2))
    outcome = solve(_instance(descriptor, c5, 'bipartite', 'clique', 2), check_input_class=False)
    assert outcome.is_yes


def test_generator_only_descriptors(descriptor, c5):
    # unit-disk como classe de entrada não é verificado
    outcome = solve(_instance(descriptor, c5, 'unit-disk', 'bipartite', 4))
    assert outcome.branch is Branch.GENERIC_SEARCH
    with pytest.raises(DescriptorUnsupported):
        solve(_instance(descriptor, c5, 'triangle-free', 'unit-disk', 2))


def test_incoherent_descriptor_is_rejected(descriptor, c5):
    broken = PropertyDescriptor(name='quebrado', membership=recognizers.is_bipartite,
                                class_tag=PropertyClass.AA, c_pi=3)
    with pytest.raises(InvalidDescriptor):
        solve(ProblemInstance(c5, descriptor('triangle-free'), broken, 2))


def test_check_outcome_rejects_bad_witnesses(descriptor, c5):
    instance = _instance(descriptor, c5, 'triangle-free', 'bipartite', 3)
    check_outcome(instance, solve(instance))
    with pytest.raises(InvalidWitness):
        check_outcome(instance, SolveOutcome(Answer.YES, VertexSet.of([0, 1]), Branch.GENERIC_SEARCH))
    with pytest.raises(InvalidWitness):
        check_outcome(instance, SolveOutcome(Answer.NO, VertexSet.of([0, 1, 2]), Branch.GENERIC_SEARCH))
    clique_instance = _instance(descriptor, c5, 'triangle-free', 'clique', 2)
    with pytest.raises(InvalidWitness):
        check_outcome(clique_instance, SolveOutcome(Answer.YES, VertexSet.of([0, 2]), Branch.GENERIC_SEARCH))


def test_payload_shape(descriptor):
    outcome = solve(_instance(descriptor, complete_graph(5), 'co-bipartite', 'planar', 4))
    assert outcome.to_payload() == {
        'answer': 'Yes',
        'witness': [0, 1, 2, 3],
        'branch': 'ThmAS_SA_search',
        'membership_tests': 1,
    }


# equivalência com o oráculo

@pytest.mark.parametrize('n', [0, 1, 2, 3, 4])
def test_solve_matches_exhaustive_oracle(recognized_descriptors, n):
    graphs = list(enumerate_all_graphs(n))
    for pig in recognized_descriptors:
        accepted = [g for g in graphs if pig.accepts(g)]
        for pi in recognized_descriptors:
            if pi is pig:
                continue
            for g in accepted:
                previous_yes = True
                for k in range(n + 1):
                    instance = ProblemInstance(g, pig, pi, k)
                    outcome = solve(instance)
                    assert outcome.is_yes == exhaustive_solve(g, pi, k), (pig.name, pi.name, g, k)
                    check_outcome(instance, outcome)
                    # monotonicidade hereditária
                    if outcome.is_yes:
                        assert previous_yes
                    previous_yes = outcome.is_yes
                    if outcome.branch.is_cutoff and outcome.is_yes:
                        assert is_clique_in(g, outcome.witness) or is_independent_in(g, outcome.witness)
                    elif outcome.branch.is_cutoff:
                        assert outcome.membership_tests_performed == 0


def test_cutoff_cost_is_independent_of_subset_count(descriptor):
    g = generate(GeneratorSpec('triangle-free', 40, seed=11, density=0.2)).graph
    outcome = solve(ProblemInstance(g, descriptor('triangle-free'), descriptor('bipartite'), 5))
    assert outcome.branch is Branch.THM_BOTH_CUTOFF
    assert outcome.membership_tests_performed < comb(40, 5)


# paralelismo

def test_pool_is_not_configured_by_default(settings):
    with pytest.raises(NotConfigured):
        SearchPool.from_settings(settings)


def test_parallel_search_matches_sequential(descriptor):
    settings = get_settings({'SEARCH_WORKERS': 2, 'SEARCH_PARALLEL_MIN_SUBSETS': 0})
    g = generate(GeneratorSpec('random', 11, seed=5, density=0.5)).graph
    instances = [
        ProblemInstance(g, descriptor('c4-free'), descriptor('bipartite'), k)
        for k in range(1, 8)
    ]
    sequential = [solve(i, check_input_class=False) for i in instances]
    with SearchPool.from_settings(settings) as pool:
        parallel = [solve(i, check_input_class=False, pool=pool) for i in instances]
        assert pool.stats['fan_outs'] > 0
    assert parallel == sequential


def test_pool_threshold():
    pool = SearchPool(get_settings({'SEARCH_PARALLEL_MIN_SUBSETS': 100}))
    assert not pool.should_fan_out(99)
    assert pool.should_fan_out(100)
    pool.close()


def test_mirrored_cutoff_on_edgeless_graph(descriptor):
    # R(c_pi_g, i_pi) = R(3, 2) = 3
    cutoff = solve(_instance(descriptor, edgeless_graph(5), 'bipartite', 'clique', 3))
    assert cutoff.answer is Answer.NO
    assert cutoff.branch is Branch.THM_AS_SA_CUTOFF
    search = solve(_instance(descriptor, edgeless_graph(5), 'bipartite', 'clique', 2))
    assert search.branch is Branch.THM_AS_SA_SEARCH
    assert search.membership_tests_performed == comb(5, 2)
