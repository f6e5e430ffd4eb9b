#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.powerseries` module.
"""

import math

import mpmath
import pytest

import knotforge.powerseries as ps
from knotforge.powerseries import PowerSeries


def approx_list(series, expected, rel=1e-12):
    assert len(series) == len(expected)
    for got, want in zip(series, expected):
        assert float(got) == pytest.approx(want, rel=rel, abs=1e-15)


def test_constructor():
    assert PowerSeries([1, 2, 3]).order == 2
    assert list(PowerSeries([1, 2, 3], order=1)) == [1, 2]
    assert list(PowerSeries([1], order=3)) == [1, 0, 0, 0]

    with pytest.raises(ValueError) as ex:
        PowerSeries()
    assert str(ex.value) == "need coefficients or an order"

    with pytest.raises(ValueError) as ex:
        PowerSeries([1], order=-1)
    assert str(ex.value) == "order cannot be negative: order = -1"


def test_arithmetic():
    x = PowerSeries.variable(4)
    approx_list((1 + x) ** 3, [1, 3, 3, 1, 0])
    approx_list((x + 2) * (x - 2), [-4, 0, 1, 0, 0])
    approx_list(3 - x, [3, -1, 0, 0, 0])
    approx_list(-x * 0.5, [0, -0.5, 0, 0, 0])


def test_order_is_the_smaller_one():
    a = PowerSeries([1, 1, 1, 1])
    b = PowerSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_division():
    x = PowerSeries.variable(4)
    approx_list(1 / (1 - x), [1, 1, 1, 1, 1])
    approx_list((x * x + x) / x, [1, 1, 0, 0])

    with pytest.raises(ZeroDivisionError):
        (1 + x) / x


def test_sin_and_cos():
    x = PowerSeries.variable(5)
    approx_list(ps.sin(x), [0, 1, 0, -1 / 6.0, 0, 1 / 120.0])
    approx_list(ps.cos(x), [1, 0, -0.5, 0, 1 / 24.0, 0])

    shifted = ps.sin(x + 0.3)
    approx_list(shifted, [math.sin(0.3) / math.factorial(n) * [1, 1, -1, -1][n % 4] if n % 2 == 0
                          else math.cos(0.3) / math.factorial(n) * [1, 1, -1, -1][n % 4]
                          for n in range(6)])


def test_x_over_sin():
    approx_list(ps.x_over_sin(4), [1, 0, 1 / 6.0, 0, 7 / 360.0])


def test_mpmath_coefficients():
    with mpmath.workprec(200):
        one = mpmath.mpf(1)
        w = ps.x_over_sin(6, one)
        assert all(isinstance(c, mpmath.mpf) for c in w)
        assert abs(w[6] - mpmath.mpf(31) / 15120) < mpmath.mpf(10) ** -50


def test_call_and_derivatives():
    series = PowerSeries([1, 2, 3])
    assert series(2) == 1 + 4 + 12
    assert series.derivatives() == [1, 2, 6]
    assert list(series.deriv()) == [2, 6]
    assert list(series.truncate(1)) == [1, 2]
