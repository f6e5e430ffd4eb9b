#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.emit` module.
"""

from fractions import Fraction

import mpmath
import numpy as np
import pytest

from knotforge import emit
from knotforge.height import HeightSolution


@pytest.mark.parametrize("test_input,expected", [
    (0.1, "0.10000000000000001"),
    (1.0, "1.0"),
    (-2, "-2.0"),
    (1.5, "1.5"),
    (1e-20, "9.9999999999999995e-21"),
    (float("nan"), "null"),
    (float("inf"), "null"),
])
def test_format_float(test_input, expected):
    assert emit.format_float(test_input) == expected


def test_dumps_sorted_keys():
    assert emit.dumps({"b": 1, "a": [1.5, 2]}) == '{\n  "a": [1.5, 2],\n  "b": 1\n}'


def test_dumps_nested():
    assert emit.dumps({"x": [{"a": None}]}) == '{\n  "x": [\n    {\n      "a": null\n    }\n  ]\n}'


def test_dumps_converts_numbers():
    assert emit.dumps(np.array([1.0, 2.0])) == "[1.0, 2.0]"
    assert emit.dumps(Fraction(1, 4)) == "0.25"
    assert emit.dumps(mpmath.mpf(3)) == "3.0"
    assert emit.dumps(np.int64(7)) == "7"
    assert emit.dumps(np.bool_(True)) == "true"
    assert emit.dumps([]) == "[]"
    assert emit.dumps({}) == "{}"


def test_dumps_namedtuple():
    text = emit.dumps(HeightSolution(3, 0.25, 0.5, 10))
    assert text == '{\n  "iterations": 10,\n  "margin": 0.5,\n  "n4": 3,\n  "tau": 0.25\n}'


def test_dumps_rejects_unknown():
    with pytest.raises(TypeError):
        emit.dumps(object())


def test_write_json_file(fs):
    emit.write_json({"a": 0.1}, "/out.json")
    with open("/out.json") as fp:
        assert fp.read() == '{\n  "a": 0.10000000000000001\n}\n'


def test_write_json_deterministic(fs):
    value = {"z": np.linspace(0, 1, 7), "a": {"k": [1, 2, 3]}}
    emit.write_json(value, "/one.json")
    emit.write_json(value, "/two.json")
    with open("/one.json") as one, open("/two.json") as two:
        assert one.read() == two.read()


def test_write_json_stdout(capsys):
    emit.write_json({"a": 1})
    assert capsys.readouterr().out == '{\n  "a": 1\n}\n'


def test_write_csv(fs):
    emit.write_csv(["t", "x"], [[0.5, 1], [0.25, np.float64(2.0)]], "/out.csv")
    with open("/out.csv") as fp:
        assert fp.read() == "t,x\n0.5,1\n0.25,2.0\n"


def test_write_text(fs):
    emit.write_text("<svg />", "/out.svg")
    with open("/out.svg") as fp:
        assert fp.read() == "<svg />\n"


def test_input_descriptor(fs):
    fs.create_file("/signs.txt", contents="+-+")
    with emit.input_descriptor("/signs.txt") as fp:
        assert fp.read() == "+-+"
