# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Closed-form nodes of planar Lissajous curves.

The shadow ``L(n1, n2, phi)`` is the curve
``t -> (cos 2 pi n1 t, cos 2 pi n2 (t + phi))``; its deformation adds
``eps * cos 2 pi n3 (t + phi + psi)`` to the second coordinate. Every double
point of the undeformed curve is labelled by an integer point ``(k, l)`` of
the open triangle ``k > 0, l > 0, n2 k + n1 l < 2 n1 n2``.
"""

import logging
from collections import namedtuple
from math import gcd

import numpy as np
from sympy import isprime
from sympy.ntheory.modular import crt

import knotforge.constants as constants
from knotforge.constants import TYPE_I, TYPE_II
from knotforge.constants import SIGMA_H_I, SIGMA_H_II, TAU_I, TAU_II
from knotforge.errors import NonCoprime, PhaseOutOfRange, EvenFrequency, NotOddPrime

logger = logging.getLogger(__name__)

_FIELDS = ["n1", "n2", "n3", "n4", "phi", "psi", "tau", "eps"]


class FrequencySet(namedtuple("FrequencySet", _FIELDS)):
    """
    Frequencies and phases of a (1,1,2) Fourier curve. Phases are in cycles.

    :param n1: x frequency.
    :param n2: y frequency.
    :param n3: (optional) deformation frequency.
    :param n4: (optional) height frequency.
    :param phi: phase of the y coordinate, defaults to ``1/(8 n1 n2)``.
    :param psi: phase of the deformation term, defaults to ``1/(8 n3)`` when
        ``n3`` is given (``2 pi n3 psi = pi/4``) and 0 otherwise.
    :param tau: phase of the height function.
    :param eps: deformation amplitude, finite and zero unless ``n3`` is given.
        Whether it lies inside the validated radius is checked when the
        nodes are deformed, see :py:func:`knotforge.pipeline.deformed_nodes`.
    """
    __slots__ = ()

    def __new__(cls, n1, n2, n3=None, n4=None, phi=None, psi=None, tau=0.0, eps=0.0):
        if phi is None:
            phi = default_phi(n1, n2)
        if psi is None:
            psi = 1.0 / (8 * n3) if n3 else 0.0
        _check_eps(n3, eps)
        return super(FrequencySet, cls).__new__(
            cls, int(n1), int(n2),
            None if n3 is None else int(n3),
            None if n4 is None else int(n4),
            float(phi), float(psi), float(tau), float(eps))

    def with_height(self, n4, tau):
        return self._replace(n4=int(n4), tau=float(tau))

    def with_eps(self, eps):
        _check_eps(self.n3, eps)
        return self._replace(eps=float(eps))

    def to_dict(self):
        return dict((name, getattr(self, name)) for name in _FIELDS)


def _check_eps(n3, eps):
    if not np.isfinite(eps):
        raise ValueError("eps must be finite, got {0}".format(eps))
    if eps and n3 is None:
        raise ValueError("eps={0} needs a deformation frequency n3".format(eps))


Node = namedtuple("Node", ["k", "l", "node_type", "t", "s", "x", "y"])


class NodeTable(object):
    """
    The nodes of a Lissajous shadow in lexicographic ``(k, l)`` order.
    """

    def __init__(self, freq, nodes):
        self._freq = freq
        self._nodes = tuple(sorted(nodes, key=lambda n: (n.k, n.l)))
        self._index = dict(((n.k, n.l), i) for i, n in enumerate(self._nodes))

    @property
    def freq(self):
        return self._freq

    @property
    def nodes(self):
        return self._nodes

    def __len__(self):
        return len(self._nodes)

    def __iter__(self):
        return iter(self._nodes)

    def __getitem__(self, i):
        return self._nodes[i]

    def __contains__(self, kl):
        return tuple(kl) in self._index

    def lookup(self, k, l):
        return self._nodes[self._index[(k, l)]]

    def position(self, k, l):
        return self._index[(k, l)]

    def parameters(self):
        """
        :returns: the arrays ``(t, s)`` of parameter pairs, in node order.
        """
        t = np.array([n.t for n in self._nodes], dtype=float)
        s = np.array([n.s for n in self._nodes], dtype=float)
        return t, s

    def count(self, node_type):
        return sum(1 for n in self._nodes if n.node_type == node_type)

    def to_dict(self):
        return {
            "n1": self._freq.n1,
            "n2": self._freq.n2,
            "phi": self._freq.phi,
            "nodes": [{"k": n.k, "l": n.l, "type": n.node_type,
                       "t": n.t, "s": n.s, "x": n.x, "y": n.y}
                      for n in self._nodes]
        }

    @classmethod
    def from_dict(cls, data):
        freq = FrequencySet(data["n1"], data["n2"], phi=data["phi"])
        nodes = [Node(int(n["k"]), int(n["l"]), n["type"], float(n["t"]),
                      float(n["s"]), float(n.get("x", 0.0)), float(n.get("y", 0.0)))
                 for n in data["nodes"]]
        return cls(freq, nodes)


Pair = namedtuple("Pair", ["representative", "partner", "kind"])


class NodePairing(object):
    """
    A perfect matching of the nodes, each pair generated by one of the
    symmetries ``sigma_h_I``, ``sigma_h_II`` or translations ``tau_I``,
    ``tau_II``.
    """

    def __init__(self, table, pairs):
        self._table = table
        self._pairs = tuple(sorted(pairs, key=lambda p: (p.representative.k, p.representative.l)))

    @property
    def table(self):
        return self._table

    @property
    def pairs(self):
        return self._pairs

    def __len__(self):
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    def representatives(self):
        return [p.representative for p in self._pairs]

    def to_dict(self):
        return {
            "n1": self._table.freq.n1,
            "n2": self._table.freq.n2,
            "pairs": [{"kind": p.kind,
                       "representative": [p.representative.k, p.representative.l],
                       "partner": [p.partner.k, p.partner.l]}
                      for p in self._pairs]
        }


def default_phi(n1, n2):
    return 1.0 / (8 * n1 * n2)


def _check_coprime(n1, n2):
    if gcd(n1, n2) != 1:
        raise NonCoprime("n1={0} and n2={1} are not coprime".format(n1, n2))


def _check_phase(freq):
    bound = 1.0 / (4 * freq.n1 * freq.n2)
    if not 0 < freq.phi < bound:
        raise PhaseOutOfRange("phi={0} is outside the admissible interval (0, {1})".format(freq.phi, bound))


def check_frequencies(freq):
    """
    Validate the shadow part of a frequency set.

    :raises NonCoprime: when ``n1, n2`` (or ``n3`` against either) share a factor.
    :raises PhaseOutOfRange: unless ``0 < phi < 1/(4 n1 n2)``.
    """
    if freq.n1 < 2 or freq.n2 < 2:
        raise ValueError("n1 and n2 must be at least 2")
    _check_coprime(freq.n1, freq.n2)
    if freq.n3 is not None:
        for n in (freq.n1, freq.n2):
            if gcd(freq.n3, n) != 1:
                raise NonCoprime("n3={0} and {1} are not coprime".format(freq.n3, n))
    _check_phase(freq)


def _unit(value):
    value = value % 1.0
    return 0.0 if value >= 1.0 else value


def node_counts(n1, n2):
    """
    :returns: ``(type_I, type_II, total, chebyshev)`` node counts of ``L(n1, n2)``.
    """
    return (n1 * n2 - n2, n1 * n2 - n1, 2 * n1 * n2 - n1 - n2,
            constants.chebyshev_nodes(n1, n2))


def lattice_points(n1, n2):
    for k in range(1, 2 * n1):
        for l in range(1, 2 * n2):
            if n2 * k + n1 * l < 2 * n1 * n2:
                yield k, l


def node_type(n1, n2, k, l):
    return TYPE_I if n1 * l > n2 * k else TYPE_II


def base_parameters(freq, k, l):
    """
    Parameters ``(t, s)`` of node ``(k, l)`` before reduction modulo 1.
    """
    n1, n2 = freq.n1, freq.n2
    if node_type(n1, n2, k, l) == TYPE_I:
        t = -freq.phi + 0.5 * (-float(k) / n1 + float(l) / n2)
        return t, t + float(k) / n1
    t = 0.5 * (float(k) / n1 - float(l) / n2)
    return t, -t + float(k) / n1


def evaluate_shadow(freq, t):
    """
    Evaluate the (possibly deformed) shadow.

    :param freq: a :py:class:`FrequencySet`; the deformation term is only
        present when ``n3`` is set.
    :param t: a parameter or an array of parameters.
    :returns: the pair ``(x, y)``.
    """
    t = np.asarray(t, dtype=float)
    x = np.cos(2 * np.pi * freq.n1 * t)
    y = np.cos(2 * np.pi * freq.n2 * (t + freq.phi))
    if freq.n3 is not None and freq.eps:
        y = y + freq.eps * np.cos(2 * np.pi * freq.n3 * (t + freq.phi + freq.psi))
    if x.ndim == 0:
        return float(x), float(y)
    return x, y


def enumerate_nodes(freq):
    """
    All double points of the Lissajous shadow ``L(n1, n2, phi)``.

    :param freq: the :py:class:`FrequencySet`; only ``n1``, ``n2`` and ``phi``
        are used.
    :returns: a :py:class:`NodeTable` of ``2 n1 n2 - n1 - n2`` nodes.
    :raises NonCoprime: if ``gcd(n1, n2) != 1``.
    :raises PhaseOutOfRange: if ``phi`` is not in ``(0, 1/(4 n1 n2))``.
    """
    if freq.n1 < 2 or freq.n2 < 2:
        raise ValueError("n1 and n2 must be at least 2")
    _check_coprime(freq.n1, freq.n2)
    _check_phase(freq)
    shadow = freq._replace(eps=0.0)

    nodes = []
    for k, l in lattice_points(freq.n1, freq.n2):
        t, s = base_parameters(freq, k, l)
        t, s = _unit(t), _unit(s)
        x, y = evaluate_shadow(shadow, t)
        nodes.append(Node(k, l, node_type(freq.n1, freq.n2, k, l), t, s, x, y))

    logger.debug("L(%d,%d,%g): %d nodes", freq.n1, freq.n2, freq.phi, len(nodes))
    return NodeTable(freq, nodes)


def _sigma_h_I(n1, n2, k, l):
    return n1 - k, l


def _sigma_h_II(n1, n2, k, l):
    return k, n2 - l


def in_parallelogram(node_type, n1, n2, k, l):
    """
    Membership of ``(k, l)`` in the parallelogram that indexes the pairs of
    the given node type.
    """
    if node_type == TYPE_I:
        return 0 < 2 * k < n1 and n2 * k < n1 * l < n1 * n2 + n2 * k
    return 0 < 2 * l < n2 and n1 * l < n2 * k < n1 * n2 + n1 * l


_mirror = {
    TYPE_I: (_sigma_h_I, SIGMA_H_I),
    TYPE_II: (_sigma_h_II, SIGMA_H_II)
}


def _translates(node_type, n1, n2, k, l):
    if node_type == TYPE_I:
        return (k, l + n2), (k, l - n2), TAU_I
    return (k + n1, l), (k - n1, l), TAU_II


def _is_lower(node_type, n1, n2, node):
    if node_type == TYPE_I:
        return 2 * node.k < n1
    return 2 * node.l < n2


def couple_nodes(table):
    """
    Pair every node with a node of the same type: first by the reflection
    ``sigma_h`` of its triangle, then the remaining nodes by the translation
    ``tau``.

    :param table: a :py:class:`NodeTable` with ``n1`` and ``n2`` odd.
    :returns: a :py:class:`NodePairing` of ``n1 n2 - (n1 + n2)/2`` pairs whose
        representatives lie in the two parallelograms.
    :raises EvenFrequency: if ``n1`` or ``n2`` is even.
    """
    n1, n2 = table.freq.n1, table.freq.n2
    if n1 % 2 == 0 or n2 % 2 == 0:
        raise EvenFrequency("n1={0}, n2={1}: node coupling needs both frequencies odd".format(n1, n2))

    def same_type(kl, kind):
        return kl in table and table.lookup(*kl).node_type == kind

    pairs = []
    seen = set()
    for node in table:
        if (node.k, node.l) in seen:
            continue
        reflect, kind = _mirror[node.node_type]
        image = reflect(n1, n2, node.k, node.l)
        if image != (node.k, node.l) and same_type(image, node.node_type):
            partner = table.lookup(*image)
            if _is_lower(node.node_type, n1, n2, node):
                pair = Pair(node, partner, kind)
            else:
                pair = Pair(partner, node, kind)
        else:
            up, down, kind = _translates(node.node_type, n1, n2, node.k, node.l)
            if same_type(up, node.node_type):
                pair = Pair(node, table.lookup(*up), kind)
            else:
                assert same_type(down, node.node_type)
                pair = Pair(table.lookup(*down), node, kind)

        for member in (pair.representative, pair.partner):
            assert (member.k, member.l) not in seen
            seen.add((member.k, member.l))
        pairs.append(pair)

    assert len(seen) == len(table)
    logger.debug("L(%d,%d): %d pairs", n1, n2, len(pairs))
    return NodePairing(table, pairs)


def admissible_frequencies(n1, count):
    """
    Frequencies ``(n2, n3)`` for which the certification applies: ``n2`` is
    a prime of the form ``2 n1 p + 1`` and ``n3`` is the smallest even
    number above 2 with ``n3 = 2 (mod n1 n2)``.

    :param n1: an odd prime.
    :param count: how many pairs to return.
    :raises NotOddPrime: if ``n1`` is not an odd prime.
    """
    if n1 % 2 == 0 or not isprime(n1):
        raise NotOddPrime("n1={0} is not an odd prime".format(n1))

    result = []
    p = 0
    while len(result) < count:
        p += 1
        n2 = 2 * n1 * p + 1
        if not isprime(n2):
            continue
        residue, modulus = crt([2, n1, n2], [0, 2, 2])
        n3 = int(residue)
        if n3 <= 2:
            n3 += int(modulus)
        assert gcd(n3, n1 * n2) == 1
        result.append((n2, n3))
    return result
