#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.height` module.
"""

import math

import numpy as np
import pytest

from knotforge.errors import BudgetExhausted, DegenerateNode, HeightTie
from knotforge.height import SCREEN, SignAssignment, height_differences, kronecker_search, \
    lipschitz_bound, realized_signs, verify_signs
from knotforge.lissajous import FrequencySet
from knotforge.pipeline import deformed_nodes


@pytest.fixture(scope="module")
def nodes_3_5_8():
    freq, nodes = deformed_nodes(FrequencySet(3, 5, n3=8))
    return nodes


def test_sign_assignment_parse():
    signs = SignAssignment.from_string(u"+- +\n−")
    assert signs.signs == (1, -1, 1, -1)
    assert len(signs) == 4
    assert signs.to_string() == "+-+-"
    assert repr(signs) == "SignAssignment('+-+-')"


def test_sign_assignment_flip():
    signs = SignAssignment([1, 1, -1])
    assert signs.flipped() == SignAssignment([-1, -1, 1])
    assert signs.flip(0) == SignAssignment([-1, 1, -1])
    assert signs.flip(0) != signs
    assert hash(signs) == hash(SignAssignment.from_string("++-"))


def test_height_difference_identity():
    rng = np.random.default_rng(7)
    t, s = rng.uniform(size=50), rng.uniform(size=50)
    diff = height_differences(t, s, 5, 0.03)
    closed = -2 * np.sin(np.pi * 5 * (t + s + 0.06)) * np.sin(np.pi * 5 * (t - s))
    assert np.allclose(diff, closed, atol=1e-12)


def test_single_node_positive():
    solution = kronecker_search(([0.16], [0.49]), SignAssignment([1]), 5)
    assert solution.n4 == 1
    assert solution.tau == 0
    assert solution.iterations == 1
    assert solution.margin == pytest.approx(math.cos(0.32 * math.pi) - math.cos(0.98 * math.pi))


def test_single_node_negative():
    solution = kronecker_search(([0.16], [0.49]), SignAssignment([-1]), 5)
    assert solution.n4 == 1
    assert solution.tau == pytest.approx(12 / 64.0)
    assert solution.iterations == 13


def test_no_nodes():
    solution = kronecker_search(([], []), SignAssignment([]), 3)
    assert solution.n4 == 1


def test_induced_signs_found(nodes_3_5_8):
    target = realized_signs(nodes_3_5_8, 7, 3 / (64.0 * 7))
    solution = kronecker_search(nodes_3_5_8, target, 3)
    assert solution.n4 <= 7
    freq = FrequencySet(3, 5, n3=8).with_height(solution.n4, solution.tau)
    result = verify_signs(freq, nodes_3_5_8, target)
    assert result.ok
    assert result.margin >= 1e-6


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_random_signs_on_subset(nodes_3_5_8, seed):
    t, s = nodes_3_5_8
    subset = (t[:8], s[:8])
    target = SignAssignment.random(8, np.random.default_rng(seed))
    solution = kronecker_search(subset, target, 3)
    assert realized_signs(subset, solution.n4, solution.tau) == target
    assert solution.margin >= 1e-6
    assert math.gcd(solution.n4, 3) == 1


def test_workers_do_not_change_answer(nodes_3_5_8):
    t, s = nodes_3_5_8
    subset = (t[:8], s[:8])
    target = SignAssignment.random(8, np.random.default_rng(11))
    single = kronecker_search(subset, target, 3, chunk=16, workers=1)
    multi = kronecker_search(subset, target, 3, chunk=16, workers=4)
    assert single == multi


def test_screen_strategy():
    solution = kronecker_search(([0.16], [0.49]), SignAssignment([1]), 5, strategy=SCREEN)
    assert realized_signs(([0.16], [0.49]), solution.n4, solution.tau) == SignAssignment([1])
    assert abs(math.cos(2 * math.pi * solution.n4 * 0.16) - 1) <= 0.2


def test_budget_exhausted():
    with pytest.raises(BudgetExhausted) as ex:
        kronecker_search(([0.16, 0.16], [0.49, 0.49]), SignAssignment([1, -1]), 5, n_max=50)
    assert str(ex.value) == "no height function realizes the signs within n_max=50"
    assert ex.value.best == 1
    assert ex.value.tested == 50 * 64


@pytest.mark.parametrize("workers", [1, 3, 8])
def test_budget_exhausted_best_shared_by_workers(workers):
    nodes = ([0.16, 0.16, 0.11], [0.49, 0.49, 0.37])
    with pytest.raises(BudgetExhausted) as ex:
        kronecker_search(nodes, SignAssignment([1, -1, 1]), 5, n_max=50, chunk=7, workers=workers)
    assert ex.value.best == 2
    assert ex.value.tested == 50 * 64


@pytest.mark.parametrize("test_input", [(0.3, 0.3), (0.2, 1.2)])
def test_degenerate_node(test_input):
    t, s = test_input
    with pytest.raises(DegenerateNode) as ex:
        kronecker_search(([t], [s]), SignAssignment([1]), 3)
    assert str(ex.value).startswith("node 0: t=")


def test_height_tie():
    with pytest.raises(HeightTie) as ex:
        realized_signs(([0.25], [0.75]), 1, 0.0)
    assert str(ex.value) == "node 0: heights tie for n4=1, tau=0.0"


def test_verify_signs_reports_mismatch():
    freq = FrequencySet(5, 3).with_height(1, 0.0)
    result = verify_signs(freq, ([0.16, 0.16], [0.49, 0.49]), SignAssignment([1, -1]))
    assert not result.ok
    assert result.mismatches == [1]
    assert result.margin == pytest.approx(math.cos(0.32 * math.pi) - math.cos(0.98 * math.pi))


def test_lipschitz_bound():
    assert lipschitz_bound(3, 0.01) == pytest.approx(4 * math.pi * 0.03)
    rng = np.random.default_rng(3)
    t, s = rng.uniform(size=100), rng.uniform(size=100)
    change = np.abs(height_differences(t, s, 3, 0.21) - height_differences(t, s, 3, 0.2))
    assert change.max() <= lipschitz_bound(3, 0.01)
