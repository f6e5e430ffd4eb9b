# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Deterministic writers: identical inputs give byte-identical JSON and CSV.
Floats are printed with 17 significant digits.
"""

import csv
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

import mpmath
import numpy as np

import knotforge.constants as constants


@contextmanager
def output_descriptor(path=None, mode="w"):
    """
    An open text stream for ``path``, standard output for ``None`` or ``-``.
    """
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, mode) as fp:
            yield fp


@contextmanager
def input_descriptor(path):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r") as fp:
            yield fp


def format_float(value):
    value = float(value)
    if value != value or value in (float("inf"), float("-inf")):
        return "null"
    text = "{0:.{1}g}".format(value, constants.SIGNIFICANT_DIGITS)
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def _plain(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, Fraction)) or isinstance(value, mpmath.mpf):
        return float(value)
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if hasattr(value, "to_dict"):
        return _plain(value.to_dict())
    if hasattr(value, "_asdict"):
        return _plain(value._asdict())
    if isinstance(value, dict):
        return dict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _encode(value, indent, level):
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value)

    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ["{0}: {1}".format(json.dumps(k), _encode(value[k], indent, level + 1)) for k in sorted(value)]
        return "{" + pad + ("," + pad).join(items) + close + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in value):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in value) + "]"
        items = [_encode(v, indent, level + 1) for v in value]
        return "[" + pad + ("," + pad).join(items) + close + "]"
    raise TypeError("cannot serialise {0!r}".format(value))


def dumps(value, indent=2):
    """
    JSON text with sorted keys and 17 significant digit floats.
    """
    return _encode(_plain(value), indent, 0)


def write_json(value, path=None):
    with output_descriptor(path) as fp:
        fp.write(dumps(value))
        fp.write("\n")


def write_csv(header, rows, path=None):
    with output_descriptor(path) as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) if isinstance(v, (float, np.floating)) else v for v in row])


def write_text(text, path=None):
    with output_descriptor(path) as fp:
        fp.write(text)
        if not text.endswith("\n"):
            fp.write("\n")
