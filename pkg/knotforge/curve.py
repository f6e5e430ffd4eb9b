# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Space curves whose coordinates are finite sums of cosines,
``sum amp * cos(2 pi (freq * t + phase))`` with phases in cycles.
"""

import math
from collections import namedtuple
from math import gcd

import numpy as np

from knotforge.errors import NonCoprime
from knotforge.lissajous import FrequencySet

Term = namedtuple("Term", ["amp", "freq", "phase"])


def _terms(terms):
    return tuple(Term(float(a), int(f), float(p)) for a, f, p in terms)


def _coordinate(terms, t):
    value = np.zeros_like(t)
    for term in terms:
        value = value + term.amp * np.cos(2 * np.pi * (term.freq * t + term.phase))
    return value


def _derivative(terms, t):
    value = np.zeros_like(t)
    for term in terms:
        value = value - 2 * np.pi * term.freq * term.amp * np.sin(2 * np.pi * (term.freq * t + term.phase))
    return value


class FourierKnot(object):
    """
    A closed curve ``t -> (x(t), y(t), z(t))``, ``t`` in ``[0, 1)``.

    :param x_terms: ``(amp, freq, phase)`` triples of the x coordinate.
    :param y_terms: triples of the y coordinate.
    :param z_terms: triples of the height.
    :param hints: (optional) known node parameter pairs ``(t, s)`` of the shadow.
    """

    def __init__(self, x_terms, y_terms, z_terms, hints=None):
        self.x_terms = _terms(x_terms)
        self.y_terms = _terms(y_terms)
        self.z_terms = _terms(z_terms)
        self.hints = None if hints is None else tuple((float(t), float(s)) for t, s in hints)

    @property
    def kind(self):
        return tuple(len(terms) for terms in (self.x_terms, self.y_terms, self.z_terms))

    def total_frequency(self):
        return sum(max(abs(term.freq) for term in terms) if terms else 0
                   for terms in (self.x_terms, self.y_terms, self.z_terms))

    def shadow(self, t):
        t = np.asarray(t, dtype=float)
        return _coordinate(self.x_terms, t), _coordinate(self.y_terms, t)

    def tangent(self, t):
        t = np.asarray(t, dtype=float)
        return _derivative(self.x_terms, t), _derivative(self.y_terms, t)

    def height(self, t):
        return _coordinate(self.z_terms, np.asarray(t, dtype=float))

    def __call__(self, t):
        x, y = self.shadow(t)
        return x, y, self.height(t)

    def reparametrized(self, c):
        """
        The same curve started at ``t = c``.
        """
        def shift(terms):
            return [(a, f, p + f * c) for a, f, p in terms]

        hints = None
        if self.hints is not None:
            hints = [((t - c) % 1.0, (s - c) % 1.0) for t, s in self.hints]
        return FourierKnot(shift(self.x_terms), shift(self.y_terms), shift(self.z_terms), hints)

    def to_dict(self):
        d = {
            "x": [list(term) for term in self.x_terms],
            "y": [list(term) for term in self.y_terms],
            "z": [list(term) for term in self.z_terms]
        }
        if self.hints is not None:
            d["hints"] = [list(pair) for pair in self.hints]
        return d

    @classmethod
    def from_dict(cls, data):
        return cls(data["x"], data["y"], data["z"], hints=data.get("hints"))


class FourierKnot112(FourierKnot):
    """
    A Fourier knot of type (1,1,2). Built from a
    :py:class:`knotforge.lissajous.FrequencySet` it is
    ``(cos 2 pi n1 t, cos 2 pi n2 (t + phi) + eps cos 2 pi n3 (t + phi + psi), cos 2 pi n4 (t + tau))``.
    """

    def __init__(self, x_terms, y_terms, z_terms, freq=None, hints=None):
        super(FourierKnot112, self).__init__(x_terms, y_terms, z_terms, hints)
        self.freq = freq

    @classmethod
    def from_frequencies(cls, freq, hints=None):
        assert freq.n4 is not None
        y_terms = [(1.0, freq.n2, freq.n2 * freq.phi)]
        if freq.n3 is not None and freq.eps:
            y_terms.append((freq.eps, freq.n3, freq.n3 * (freq.phi + freq.psi)))
        return cls([(1.0, freq.n1, 0.0)], y_terms, [(1.0, freq.n4, freq.n4 * freq.tau)],
                   freq=freq, hints=hints)

    def to_dict(self):
        d = super(FourierKnot112, self).to_dict()
        if self.freq is not None:
            d["freq"] = self.freq.to_dict()
        return d

    @classmethod
    def from_dict(cls, data):
        if "freq" in data:
            f = data["freq"]
            freq = FrequencySet(f["n1"], f["n2"], f.get("n3"), f.get("n4"), f["phi"],
                                f.get("psi"), f.get("tau", 0.0), f.get("eps", 0.0))
            return cls(data["x"], data["y"], data["z"], freq=freq, hints=data.get("hints"))
        return cls(data["x"], data["y"], data["z"], hints=data.get("hints"))


def torus_knot_112(p, q):
    """
    The torus knot ``T(p, q)`` as a Fourier knot of type (1,1,2):
    ``(cos 2 pi p t, cos 2 pi (q t + 1/(4p)), cos 2 pi (p t + 1/4) + cos 2 pi ((q - p) t + 1/(4p)))``.

    The y phase sits outside the factor ``q``: ``cos 2 pi q (t + 1/(4p))`` puts both
    strands of ``T(2, 3)`` at the same point of space at ``t = 1/8, s = 5/8``.

    :raises NonCoprime: if ``gcd(p, q) != 1``.
    """
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    if gcd(p, q) != 1:
        raise NonCoprime("p={0} and q={1} are not coprime".format(p, q))
    return FourierKnot112([(1.0, p, 0.0)],
                          [(1.0, q, 1 / (4.0 * p))],
                          [(1.0, p, 0.25), (1.0, q - p, 1 / (4.0 * p))])


def lissajous_knot(nx, ny, nz, phase_x, phase_y, phase_z=0.0):
    """
    The Lissajous knot ``(cos(2 pi nx t + phase_x), cos(2 pi ny t + phase_y), cos(2 pi nz t + phase_z))``,
    phases in radians.
    """
    cycles = 1 / (2 * math.pi)
    return FourierKnot([(1.0, nx, phase_x * cycles)],
                       [(1.0, ny, phase_y * cycles)],
                       [(1.0, nz, phase_z * cycles)])


def fourier_knot(x_terms, y_terms, z_terms):
    return FourierKnot(x_terms, y_terms, z_terms)


def sample_curve(knot, count):
    """
    :returns: an array of ``count`` rows ``(t, x, y, z)`` at ``t = i / count``.
    """
    t = np.arange(count) / float(count)
    x, y, z = knot(t)
    return np.column_stack([t, x, y, z])
