# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import logging
from itertools import combinations, product
from math import comb

import numpy as np

import knotforge.constants as constants
from knotforge.errors import SearchSpaceTooLarge

logger = logging.getLogger(__name__)


def search_space(n, max_coeff, width):
    return sum(comb(n, w) * (2 * max_coeff) ** w for w in range(1, width + 1))


def _coefficients(w, bound):
    # first entry positive, at least one entry of magnitude bound
    signed = [v for v in range(-bound, bound + 1) if v != 0]
    grid = np.array(list(product(range(1, bound + 1), *([signed] * (w - 1)))), dtype=np.int64)
    return grid[np.abs(grid).max(axis=1) == bound]


def rational_relation_search(values, max_coeff, tol=1e-9, width=None, budget=None):
    """
    Look for integers ``lambda_1..lambda_n, lambda_0`` with
    ``|sum lambda_i v_i + lambda_0| < tol`` and every ``|lambda| <= max_coeff``.

    Candidates are tried by increasing number of non-zero ``lambda_i``, then by
    increasing largest coefficient; ``lambda_0`` is the rounded remainder. The
    first non-zero coefficient of a reported relation is positive.

    :param values: the reals ``v_1..v_n``.
    :param max_coeff: coefficient bound, at least 1.
    :param tol: residual tolerance.
    :param width: (optional) most non-zero ``lambda_i`` to try, defaults to ``n``.
    :param budget: (optional) largest admissible search space.
    :returns: the tuple ``(lambda_1, ..., lambda_n, lambda_0)`` or ``None``.
    :raises SearchSpaceTooLarge: if the search space exceeds the budget.
    """
    assert max_coeff >= 1
    values = np.asarray(values, dtype=float)
    assert np.all(np.isfinite(values))
    n = len(values)
    width = n if width is None else min(width, n)
    budget = budget or constants.SEARCH_BUDGET

    size = search_space(n, max_coeff, width)
    if size > budget:
        raise SearchSpaceTooLarge("search space of {0} candidates exceeds the budget of {1}".format(size, budget))

    tested = 0
    for w in range(1, width + 1):
        for bound in range(1, max_coeff + 1):
            grid = _coefficients(w, bound)
            for support in combinations(range(n), w):
                total = grid.dot(values[list(support)])
                constant = -np.round(total)
                residual = np.abs(total + constant)
                hits = np.nonzero((residual < tol) & (np.abs(constant) <= max_coeff))[0]
                tested += len(grid)
                if len(hits):
                    relation = [0] * (n + 1)
                    for i, coefficient in zip(support, grid[hits[0]]):
                        relation[i] = int(coefficient)
                    relation[n] = int(constant[hits[0]])
                    logger.debug("relation %s after %d candidates", relation, tested)
                    return tuple(relation)

    logger.debug("no relation among %d values after %d candidates", n, tested)
    return None


def shifted_independence(values, shift, max_coeff, tol=1e-9, width=None, budget=None):
    """
    Relation search on the translated values ``v_i + shift``.
    """
    values = np.asarray(values, dtype=float) + shift
    return rational_relation_search(values, max_coeff, tol=tol, width=width, budget=budget)
