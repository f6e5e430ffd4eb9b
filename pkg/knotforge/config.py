# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import os
import warnings

import knotforge.constants as constants

_ENV_PRECISION = "KNOTFORGE_PRECISION"

_warnings = True
_precision = None


def _from_environment():
    value = os.environ.get(_ENV_PRECISION)
    if value is None:
        return constants.DEFAULT_PRECISION
    try:
        bits = int(value)
    except ValueError:
        bits = 0
    if bits < 53:
        warn("Ignoring {0}={1!r}, expected an integer >= 53".format(_ENV_PRECISION, value))
        return constants.DEFAULT_PRECISION
    return bits


def getprecision():
    """
    Working precision used by the certification code.

    :returns: the number of mantissa bits; seeded from the ``KNOTFORGE_PRECISION``
        environment variable, else 128.
    """
    global _precision
    if _precision is None:
        _precision = _from_environment()
    return _precision


def setprecision(bits):
    """
    :param bits: mantissa bits for extended precision arithmetic, at least 53.
    """
    assert int(bits) >= 53
    global _precision
    _precision = int(bits)


def setwarnings(enabled):
    global _warnings
    _warnings = enabled


def warn(message):
    if _warnings:
        warnings.warn(message, stacklevel=3)


def reset():
    global _precision
    _precision = None
    setwarnings(True)
