#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.rst for details.

"""
Tests for the :py:mod:`knotforge.cli` module.
"""

import json

import pytest

from knotforge import cli, config
from knotforge.height import realized_signs
from knotforge.lissajous import FrequencySet
from knotforge.pipeline import deformed_nodes


def setup_function(function):
    config.reset()


def teardown_function(function):
    config.reset()


def test_nodes_json(capsys):
    assert cli.main(["nodes", "--n1", "3", "--n2", "5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["nodes"]) == 22
    assert data["n1"] == 3
    assert data["phi"] == pytest.approx(1 / 120.0)


def test_nodes_csv(capsys):
    assert cli.main(["nodes", "--n1", "3", "--n2", "5", "--csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,l,type,t,s,x,y"
    assert len(lines) == 23


def test_domain_error(capsys):
    assert cli.main(["nodes", "--n1", "4", "--n2", "6"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert json.loads(captured.err) == {"error": "NonCoprime", "message": "n1=4 and n2=6 are not coprime"}


@pytest.mark.parametrize("test_input", [
    ["nodes", "--n1", "1", "--n2", "5"],
    ["nodes", "--n1", "3"],
    ["nodes", "--n1", "3", "--n2", "5", "--phi", "nan"],
    ["--precision", "20", "nodes", "--n1", "3", "--n2", "5"],
    ["frobnicate"],
])
def test_usage_error(test_input):
    with pytest.raises(SystemExit) as ex:
        cli.main(test_input)
    assert ex.value.code == 2


def test_frequencies(capsys):
    assert cli.main(["frequencies", "--n1", "3", "--count", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"n1": 3, "frequencies": [{"n2": 7, "n3": 44}, {"n2": 13, "n3": 80}]}


def test_pairs(capsys):
    assert cli.main(["pairs", "--n1", "3", "--n2", "5"]) == 0
    assert json.loads(capsys.readouterr().out)


def test_invariants_from_gauss_file(fs, capsys):
    fs.create_file("/trefoil.txt", contents="O1+ U1+ O2+ U3+ O4+ U2+ O3+ U4+\n")
    assert cli.main(["invariants", "--gauss", "/trefoil.txt", "--reduce"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["crossings"] == 3
    assert data["determinant"] == 3


def test_invariants_from_pd_file(fs, capsys):
    fs.create_file("/trefoil.pd", contents="PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]")
    assert cli.main(["invariants", "--pd", "/trefoil.pd", "-o", "/out.json"]) == 0
    with open("/out.json") as fp:
        data = json.load(fp)
    assert data["writhe"] == -3
    assert data["determinant"] == 3


def test_invariants_torus(capsys):
    assert cli.main(["invariants", "--torus", "2", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["determinant"] == 3


def test_sample(capsys):
    assert cli.main(["sample", "--torus", "2", "3", "--count", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,x,y,z"
    assert len(lines) == 9
    assert lines[1].startswith("0.0,1.0,")


def test_plot(fs):
    assert cli.main(["plot", "--torus", "2", "3", "--size", "300", "-o", "/knot.svg"]) == 0
    with open("/knot.svg") as fp:
        assert fp.read().startswith('<svg xmlns="http://www.w3.org/2000/svg" width="300"')


def test_height_wrong_sign_count():
    with pytest.raises(SystemExit) as ex:
        cli.main(["height", "--n1", "3", "--n2", "7", "--n3", "44", "--signs", "+-"])
    assert ex.value.code == 2


def test_build_from_signs_file(fs, capsys):
    freq, nodes = deformed_nodes(FrequencySet(3, 7, n3=44))
    signs = realized_signs(nodes, 5, 0.0).to_string()
    fs.create_file("/signs.txt", contents=signs + "\n")

    assert cli.main(["build", "--n1", "3", "--n2", "7", "--n3", "44",
                     "--signs", "@/signs.txt", "-o", "/knot.json"]) == 0
    with open("/knot.json") as fp:
        data = json.load(fp)
    assert data["signs"] == signs
    assert data["diagram"]["crossings"] == 32
    assert data["knot"]["freq"]["n4"] == data["n4"]

    assert cli.main(["sample", "--knot", "/knot.json", "--json", "--count", "4"]) == 0
    samples = json.loads(capsys.readouterr().out)["samples"]
    assert len(samples) == 4
    assert samples[0][0] == 0.0
