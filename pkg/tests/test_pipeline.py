#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.pipeline` module.
"""
try:
    from unittest.mock import Mock, patch
except ImportError:
    from mock import Mock, patch

import pytest

from knotforge.curve import torus_knot_112
from knotforge.deformation import eps0
from knotforge.diagram import extract_diagram
from knotforge.errors import RadiusExceeded, SignMismatch
from knotforge.height import SignAssignment, realized_signs, verify_signs
from knotforge.invariants import alexander_determinant, jones_polynomial
from knotforge.lissajous import FrequencySet, base_parameters, enumerate_nodes
from knotforge.pipeline import build_knot, deformed_nodes

FREQ = FrequencySet(3, 7, n3=44)


@pytest.fixture(scope="module")
def nodes():
    return deformed_nodes(FREQ)


@pytest.fixture(scope="module")
def transplant(nodes):
    freq, params = nodes
    target = realized_signs(params, 5, 3 / (64 * 5.0))
    return target, build_knot(FREQ, target)


def test_deformed_nodes(nodes):
    freq, (t, s) = nodes
    assert len(t) == len(s) == 32
    assert freq.eps == pytest.approx(0.5 * eps0(FREQ))
    assert freq.n3 == 44


def test_deformed_nodes_explicit_eps():
    freq, (t, s) = deformed_nodes(FREQ, eps=1e-4)
    assert freq.eps == 1e-4


def test_deformed_nodes_needs_n3():
    with pytest.raises(ValueError) as ex:
        deformed_nodes(FrequencySet(3, 7))
    assert str(ex.value) == "n3 is required to deform the shadow"


def test_deformed_nodes_beyond_radius():
    with pytest.raises(RadiusExceeded) as ex:
        deformed_nodes(FREQ, eps=2 * eps0(FREQ))
    assert "is beyond the validated radius" in str(ex.value)

    with pytest.raises(RadiusExceeded):
        deformed_nodes(FREQ.with_eps(2 * eps0(FREQ)))


def test_transplanted_signs(transplant):
    target, knot = transplant
    assert knot.freq.n4 <= 5
    assert knot.kind == (1, 2, 1)
    assert len(knot.hints) == 32
    code = extract_diagram(knot)
    assert code.crossing_count == 32
    assert code.height_signs() == target


def test_flipped_signs_give_mirror(transplant):
    target, knot = transplant
    mirror = build_knot(FREQ, target.flipped())
    code = extract_diagram(knot)
    mirror_code = extract_diagram(mirror)
    assert mirror_code.height_signs() == target.flipped()
    assert mirror_code == code.mirror()
    assert alexander_determinant(mirror_code) == alexander_determinant(code)


def test_all_positive_signs():
    freq = FrequencySet(3, 5, n3=8)
    target = SignAssignment([1] * 22)
    knot = build_knot(freq, target, workers=4)
    _, params = deformed_nodes(freq)
    assert verify_signs(knot.freq, params, target).ok
    assert extract_diagram(knot).height_signs() == target


def test_trefoil_signs_round_trip():
    torus = torus_knot_112(2, 3)
    at_torus = FrequencySet(2, 3, phi=1 / 24.0)
    pairs = [base_parameters(at_torus, node.k, node.l) for node in enumerate_nodes(FrequencySet(2, 3))]
    target = SignAssignment([1 if torus.height(t) > torus.height(s) else -1 for t, s in pairs])

    knot = build_knot(FrequencySet(2, 3, n3=5), target)
    code = extract_diagram(knot)
    assert code.height_signs() == target
    assert alexander_determinant(code) == 3
    assert jones_polynomial(code) == jones_polynomial(extract_diagram(torus))


def test_wrong_sign_count():
    with pytest.raises(SignMismatch) as ex:
        build_knot(FREQ, SignAssignment([1, -1]))
    assert str(ex.value) == "expected 32 signs, got 2"


def test_height_mismatch(transplant):
    target, _ = transplant
    with patch("knotforge.pipeline.verify_signs", return_value=Mock(ok=False, mismatches=[3])):
        with pytest.raises(SignMismatch) as ex:
            build_knot(FREQ, target)
    assert str(ex.value) == "height mismatch at nodes [3]"


def test_diagram_mismatch(transplant):
    target, _ = transplant
    code = Mock()
    code.height_signs.return_value = target.flipped()
    with patch("knotforge.pipeline.extract_diagram", return_value=code):
        with pytest.raises(SignMismatch) as ex:
            build_knot(FREQ, target)
    assert str(ex.value).startswith("diagram signs ")


def test_failed_certificate_warns(nodes, transplant):
    target, _ = transplant
    report = Mock(certified=False, verdicts="D_nonzero=False")
    with patch("knotforge.pipeline.certify", return_value=report) as certify:
        with patch("knotforge.config.warn") as warn:
            build_knot(FREQ, target, certified=True)
    certify.assert_called_once_with(3, 7, 44, phi=FREQ.phi, psi=FREQ.psi)
    assert warn.call_count == 1
    assert warn.call_args[0][0].startswith("skewness certificate failed for (3,7,44)")
