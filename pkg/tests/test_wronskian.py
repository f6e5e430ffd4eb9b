#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.wronskian` module.
"""

import math

import mpmath
import pytest

try:
    from unittest.mock import patch
except ImportError:
    from mock import patch

from knotforge.deformation import InverseSpec
from knotforge.errors import CongruenceViolation, PhaseOutOfRange, PrecisionLoss
from knotforge.lissajous import admissible_frequencies, couple_nodes
from knotforge.wronskian import EXPECTED_ACTIONS, alpha_beta_table, alphas_distinct, \
    c_coefficients, certify, check_congruences, d0_product, difference_product, full_wronskian, \
    reduced_matrix, symmetry_actions


@pytest.fixture(scope="module")
def table_3_7_44():
    return alpha_beta_table(3, 7, 44)


def test_c_coefficients():
    c = c_coefficients(4)
    assert [float(x) for x in c] == pytest.approx([1, 2, 1, 16], rel=1e-12)


def test_c_coefficients_positive():
    assert all(x > 0 for x in c_coefficients(64))


@pytest.mark.parametrize("test_input,expected", [
    ((3, 7, 43), "n3=43 violates n3 = 0 (mod 2)"),
    ((3, 7, 46), "n3=46 violates n3 = 2 (mod 3)"),
    ((3, 5, 32), "n2=5 violates n2 = 1 (mod 3)"),
    ((9, 19, 44), "n1=9 is not an odd prime"),
    ((3, 7, 2 + 3 * 8), "n3=26 violates n3 = 2 (mod 7)"),
])
def test_congruences(test_input, expected):
    with pytest.raises(CongruenceViolation) as ex:
        check_congruences(*test_input)
    assert str(ex.value) == expected


def test_congruences_hold():
    check_congruences(3, 7, 44)
    check_congruences(3, 13, 80)


def test_table(table_3_7_44):
    assert len(table_3_7_44) == 32
    assert all(a != 0 for a in table_3_7_44.alpha)
    assert all(b != 0 for b in table_3_7_44.beta)
    d = table_3_7_44.to_dict()
    assert len(d["nodes"]) == 32


def test_table_needs_generic_phase():
    with pytest.raises(PhaseOutOfRange):
        alpha_beta_table(3, 7, 44, phi=0)


def test_symmetry_actions(table_3_7_44):
    pairing = couple_nodes(table_3_7_44.table)
    actions = symmetry_actions(table_3_7_44, pairing)
    assert actions
    for kind, observed in actions.items():
        assert observed == set([EXPECTED_ACTIONS[kind]])


def test_representative_alphas_distinct(table_3_7_44):
    pairing = couple_nodes(table_3_7_44.table)
    squares = [table_3_7_44.lookup(p.representative.k, p.representative.l)[0] ** 2 for p in pairing]
    assert alphas_distinct(squares)
    assert not alphas_distinct(squares + squares[:1])


def test_product_formula_matches_determinant(table_3_7_44):
    pairing = couple_nodes(table_3_7_44.table)
    c = c_coefficients(32)
    d0, d1, d0_direct, d1_direct = d0_product(table_3_7_44, pairing, c)
    assert d0 > 0 and d1 > 0
    assert abs(abs(d1_direct) - d1) <= d1 * mpmath.mpf(10) ** -9
    assert abs(abs(d0_direct) - d0) <= d0 * mpmath.mpf(10) ** -9


def test_pair_reduction_factor(table_3_7_44):
    table = table_3_7_44
    pairing = couple_nodes(table.table)
    index = dict(((node.k, node.l), i) for i, node in enumerate(table.table))
    p = len(pairing)
    tol = mpmath.mpf(10) ** -25
    with mpmath.workprec(256):
        matrix = reduced_matrix(table.alpha, table.beta, p)
        det = mpmath.det(matrix)
        for pair in pairing:
            i = index[pair.representative.k, pair.representative.l]
            j = index[pair.partner.k, pair.partner.l]
            for col in range(p):
                assert abs(matrix[i, col] - matrix[j, col]) <= tol * abs(matrix[i, col])
                assert abs(matrix[i, p + col] + matrix[j, p + col]) <= tol * abs(matrix[i, p + col])

            beta = table.beta[i]
            reduced = matrix.copy()
            for col in range(2 * p):
                reduced[i, col] = (matrix[i, col] + matrix[j, col]) / 2
                reduced[j, col] = (matrix[i, col] - matrix[j, col]) / (2 * beta)
            assert abs(reduced[j, p] - 1) <= tol
            ratio = det / (2 * beta * mpmath.det(reduced))
            assert abs(ratio + 1) <= mpmath.mpf(10) ** -9


@pytest.mark.parametrize("n1,n2,n3", [
    (n1, n2, n3) for n1 in (3, 5) for n2, n3 in admissible_frequencies(n1, 2) if n2 <= 13
])
def test_difference_product_nonzero(n1, n2, n3):
    table = alpha_beta_table(n1, n2, n3)
    squares = [table.lookup(p.representative.k, p.representative.l)[0] ** 2
               for p in couple_nodes(table.table)]
    assert alphas_distinct(squares)
    assert difference_product(squares) != 0


def test_two_node_wronskian():
    r, shift = 1.5, 0.7
    specs = [InverseSpec(0.8, r, shift, None), InverseSpec(1.3, r, shift, None)]
    D, noise, bits = full_wronskian(specs, m=2)
    s, c = math.sin(shift), math.cos(shift)
    expected = 2 * r * s * s * c * 0.8 * 1.3 * (1.3 - 0.8)
    assert float(D) == pytest.approx(expected, rel=1e-12)
    assert abs(D) > noise


def test_repeated_node_wronskian_vanishes():
    spec = InverseSpec(0.8, 1.5, 0.7, None)
    D, noise, bits = full_wronskian([spec, spec], m=2)
    assert D == 0


def test_precision_loss():
    spec = InverseSpec(0.8, 1.5, 0.7, None)
    with pytest.raises(PrecisionLoss) as ex:
        full_wronskian([spec, spec._replace(a=1.3)], m=2, prec=128, max_prec=64)
    assert str(ex.value) == "Wronskian of order 2 did not settle below 64 bits"


def floor_falls_with_precision(rows, prec):
    return mpmath.mpf(1), mpmath.mpf(2) ** (300 - prec)


def test_wronskian_raises_precision_above_noise_floor():
    specs = [InverseSpec(0.8, 1.5, 0.7, None), InverseSpec(1.3, 1.5, 0.7, None)]
    with patch("knotforge.wronskian._scaled_det", side_effect=floor_falls_with_precision):
        D, noise, bits = full_wronskian(specs, m=2, prec=128)
    assert D == 1
    assert bits == 320
    assert noise < 1


def test_wronskian_under_noise_floor_is_returned():
    specs = [InverseSpec(0.8, 1.5, 0.7, None), InverseSpec(1.3, 1.5, 0.7, None)]
    with patch("knotforge.wronskian._scaled_det", side_effect=floor_falls_with_precision):
        D, noise, bits = full_wronskian(specs, m=2, prec=128, max_prec=128)
    assert D == 1
    assert bits == 192
    assert noise == mpmath.mpf(2) ** 108


def test_certify_3_7_44():
    report = certify(3, 7, 44)
    assert abs(report.D) > report.noise_floor
    assert report.precision > 128
    assert report.m == 32
    assert report.verdicts.c_positive
    assert report.verdicts.alphas_nonzero and report.verdicts.betas_nonzero
    assert report.verdicts.alphas_distinct
    assert report.verdicts.D0_nonzero
    assert report.verdicts.D_nonzero
    assert report.certified
    assert report.to_dict()["certified"] is True
