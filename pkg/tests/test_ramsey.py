# -*- coding: utf-8 -*-

import pytest

from hereditary_search.exceptions import InvalidArgument, TooLarge
from hereditary_search.graphs.cliques import find_clique, find_independent_set
from hereditary_search.ramsey import (
    fpt_size_cutoff,
    ramsey_bound,
    ramsey_upper_bound,
    verify_ramsey_exhaustive,
)


@pytest.mark.parametrize('r,s,expected', [
    (1, 5, 1),
    (2, 2, 2),
    (2, 7, 7),
    (3, 3, 6),
    (3, 4, 10),
    (4, 4, 20),
    (5, 5, 70),
])
def test_binomial_upper_bound(r, s, expected):
    assert ramsey_upper_bound(r, s) == expected
    assert ramsey_upper_bound(s, r) == expected


def test_bound_record_and_fpt_cutoff():
    bound = ramsey_bound(3, 4)
    assert (bound.r, bound.s, bound.value) == (3, 4, 10)
    assert fpt_size_cutoff(4, 3) == 10
    assert fpt_size_cutoff(1, 9) == 1


def test_large_parameters_do_not_overflow():
    assert ramsey_upper_bound(40, 40) > 2 ** 64


@pytest.mark.parametrize('r,s', [(0, 3), (3, 0), (-1, 2)])
def test_non_positive_parameters_are_rejected(r, s):
    with pytest.raises(InvalidArgument):
        ramsey_upper_bound(r, s)


def test_r33_is_forced_at_six_vertices():
    verdict = verify_ramsey_exhaustive(3, 3, 6)
    assert verdict.all_forced
    assert verdict.graphs_checked == 2 ** 15


def test_c5_is_the_counterexample_shape_at_five_vertices():
    verdict = verify_ramsey_exhaustive(3, 3, 5)
    assert not verdict.all_forced
    g = verdict.counterexample
    assert find_clique(g, 3)[0] is None
    assert find_independent_set(g, 3)[0] is None
    # o único grafo com 5 vértices sem K3 nem IS3 é o C5
    assert g.edge_count == 5
    assert all(g.degree(v) == 2 for v in g.vertices())


def test_exhaustive_verification_limit():
    with pytest.raises(TooLarge):
        verify_ramsey_exhaustive(3, 3, 7)
