#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.deformation` module.
"""

import math

import mpmath
import numpy as np
import pytest

from knotforge.deformation import InverseSpec, eps0, f_eval, inverse_spec, lagrange_coefficients, \
    lowest_order_in_r, nodal_curve, radius, solve_node, spec_eps0
from knotforge.errors import NearPole, RadiusExceeded
from knotforge.lissajous import FrequencySet, enumerate_nodes, evaluate_shadow
from knotforge.wronskian import c_coefficients


def random_specs(count, seed=1234):
    rng = np.random.default_rng(seed)
    specs = []
    for _ in range(count):
        a = rng.uniform(0.5, 2.0) * rng.choice([-1, 1])
        r = rng.uniform(0.5, 8.0)
        shift = rng.uniform(0.3, 2.8) * rng.choice([-1, 1])
        specs.append(InverseSpec(float(a), float(r), float(shift), None))
    return specs


@pytest.mark.parametrize("spec", random_specs(20))
def test_low_order_closed_forms(spec):
    d = lagrange_coefficients(spec, 3).derivatives()
    a, r = spec.a, spec.r
    s, c = math.sin(spec.shift), math.cos(spec.shift)

    assert float(d[0]) == 0
    assert float(d[1]) == pytest.approx(a * s, rel=1e-10)
    assert float(d[2]) == pytest.approx(2 * a * a * r * s * c, rel=1e-10)
    assert float(d[3]) == pytest.approx(a ** 3 * s * (6 * r * r + (1 - 9 * r * r) * s * s), rel=1e-10)


@pytest.mark.parametrize("spec", random_specs(5, seed=99))
def test_series_matches_newton_solution(spec):
    series = lagrange_coefficients(spec, 14)
    eps = 0.01 * spec_eps0(spec)
    for e in (eps, -eps):
        u = solve_node(spec, e)
        assert float(series(e)) == pytest.approx(u, rel=1e-8)


def root_taylor(spec, order):
    # inverse by root finding, differentiated numerically
    with mpmath.workdps(40):
        a, r, shift = mpmath.mpf(spec.a), mpmath.mpf(spec.r), mpmath.mpf(spec.shift)

        def inverse(eps):
            return mpmath.findroot(lambda v: mpmath.sin(v) - eps * a * mpmath.sin(r * v + shift),
                                   eps * a * mpmath.sin(shift))

        return mpmath.taylor(inverse, 0, order)


@pytest.mark.parametrize("spec", random_specs(4, seed=2024))
def test_series_matches_root_finder_to_order_8(spec):
    series = lagrange_coefficients(spec, 8)
    expected = root_taylor(spec, 8)
    for n in range(1, 9):
        assert float(series[n]) == pytest.approx(float(expected[n]), rel=1e-6)


def test_nodal_curve_at_zero_amplitude():
    freq = FrequencySet(3, 5, n3=8)
    table = enumerate_nodes(freq)
    curve = nodal_curve(freq, [0.0], order=2)
    assert len(curve) == 22
    for entry, node in zip(curve, table):
        assert entry.base == node.t
        assert entry.samples == [(0.0, node.t)]


def test_solve_node():
    spec = random_specs(1)[0]
    assert solve_node(spec, 0) == 0.0
    eps = 0.5 * spec_eps0(spec)
    u = solve_node(spec, eps)
    assert abs(f_eval(spec, u) - eps) < 1e-12
    rho_minus, rho_plus = radius(spec)
    assert -rho_minus < u < rho_plus


def test_inverse_spec_near_pole():
    freq = FrequencySet(3, 5, n3=6)
    node = enumerate_nodes(freq).lookup(1, 2)
    with pytest.raises(NearPole) as ex:
        inverse_spec(freq, node)
    assert str(ex.value) == "node (1,2): amplitude is degenerate"


def test_deformed_nodes_stay_double_points():
    freq = FrequencySet(3, 7, n3=44)
    eps = 0.5 * eps0(freq)
    curve = nodal_curve(freq.with_eps(eps), [eps], order=4)
    assert len(curve) == 32

    t, s = curve.parameters(eps)
    xt, yt = evaluate_shadow(freq.with_eps(eps), t)
    xs, ys = evaluate_shadow(freq.with_eps(eps), s)
    assert np.max(np.hypot(xt - xs, yt - ys)) < 1e-9

    base_t, _ = enumerate_nodes(freq).parameters()
    assert np.max(np.abs(t - base_t)) > 0


def test_nodal_curve_refuses_large_amplitude():
    freq = FrequencySet(3, 5, n3=8)
    eps = 10 * eps0(freq)
    with pytest.raises(RadiusExceeded) as ex:
        nodal_curve(freq, [eps], order=2)
    assert str(ex.value).startswith("eps={0} is beyond the validated radius".format(eps))


def test_nodal_curve_dict():
    freq = FrequencySet(3, 5, n3=8)
    eps = 0.25 * eps0(freq)
    d = nodal_curve(freq, [eps], order=3).to_dict()
    assert len(d["nodes"]) == 22
    assert len(d["nodes"][0]["series"]) == 4
    assert d["nodes"][0]["samples"][0][0] == eps


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_lowest_order_in_r_reproduces_c(n):
    c = c_coefficients(6)
    spec = random_specs(1, seed=7)[0]
    assert float(lowest_order_in_r(spec, n)) == pytest.approx(float(c[n - 1]), rel=1e-9)
