# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Height functions ``z(t) = cos 2 pi n4 (t + tau)`` realizing prescribed
crossing signs on a shadow.

At a node with parameters ``(t, s)`` the strand through ``t`` is over when
``z(t) - z(s) = -2 sin(pi n4 (t + s + 2 tau)) sin(pi n4 (t - s))`` is
positive. The search scans ``n4 = 1, 2, ...`` (coprime to ``n1``) against a
grid of phases ``tau = j / (64 n4)``, ``tau = 0`` first.
"""

import logging
import math
import threading
from collections import namedtuple

import numpy as np

import knotforge.constants as constants
from knotforge.errors import BudgetExhausted, DegenerateNode, HeightTie
from knotforge.scan import scan

logger = logging.getLogger(__name__)

DIRECT = "direct"
SCREEN = "screen"

HeightSolution = namedtuple("HeightSolution", ["n4", "tau", "margin", "iterations"])

NodeCheck = namedtuple("NodeCheck", ["index", "expected", "realized", "difference"])


class VerifyResult(namedtuple("VerifyResult", ["ok", "margin", "per_node"])):

    @property
    def mismatches(self):
        return [check.index for check in self.per_node if check.expected != check.realized]


class SignAssignment(object):
    """
    One crossing sign per node, ``+1`` when the strand through ``t`` passes
    over the strand through ``s``.
    """

    def __init__(self, signs):
        self._signs = tuple(int(x) for x in signs)
        assert all(x in (1, -1) for x in self._signs)

    @classmethod
    def from_string(cls, text):
        """
        :param text: ``+`` and ``-`` characters, anything else is ignored.
        """
        text = text.replace(u"−", "-")
        return cls(1 if ch == "+" else -1 for ch in text if ch in "+-")

    @classmethod
    def random(cls, count, rng):
        return cls(rng.choice([-1, 1], size=count))

    @property
    def signs(self):
        return self._signs

    def __len__(self):
        return len(self._signs)

    def __iter__(self):
        return iter(self._signs)

    def __getitem__(self, i):
        return self._signs[i]

    def __eq__(self, other):
        return isinstance(other, SignAssignment) and self._signs == other._signs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._signs)

    def __repr__(self):
        return "SignAssignment({0!r})".format(self.to_string())

    def flipped(self):
        return SignAssignment(-x for x in self._signs)

    def flip(self, i):
        signs = list(self._signs)
        signs[i] = -signs[i]
        return SignAssignment(signs)

    def to_string(self):
        return "".join("+" if x > 0 else "-" for x in self._signs)


def node_parameters(nodes):
    """
    :param nodes: a :py:class:`knotforge.lissajous.NodeTable` or a pair of
        sequences ``(t, s)``.
    :returns: the arrays ``(t, s)``.
    """
    if hasattr(nodes, "parameters"):
        t, s = nodes.parameters()
    else:
        t, s = nodes
    t = np.asarray(t, dtype=float)
    s = np.asarray(s, dtype=float)
    assert t.shape == s.shape
    return t, s


def height_differences(t, s, n4, tau):
    return np.cos(2 * np.pi * n4 * (t + tau)) - np.cos(2 * np.pi * n4 * (s + tau))


def _check_degenerate(t, s, margin_min):
    gap = np.abs(((t - s + 0.5) % 1.0) - 0.5)
    bad = np.nonzero(gap < margin_min)[0]
    if len(bad):
        raise DegenerateNode("node {0}: t={1} and s={2} coincide modulo 1".format(bad[0], t[bad[0]], s[bad[0]]))


class _Search(object):

    def __init__(self, t, s, alpha, n1, margin_min, strategy, eps_k, tau_grid):
        self.t, self.s, self.alpha = t, s, alpha
        self.n1 = n1
        self.margin_min = margin_min
        self.strategy = strategy
        self.eps_k = eps_k
        self.tau_grid = tau_grid
        theta = 2 * np.pi * np.arange(tau_grid) / tau_grid
        self.cos_theta = np.cos(theta)[None, :, None]
        self.sin_theta = np.sin(theta)[None, :, None]
        self.best = 0
        self._lock = threading.Lock()

    def __call__(self, lo, hi):
        n = np.arange(lo, hi)
        n = n[np.gcd(n, self.n1) == 1]
        if len(n) == 0:
            return None
        nn = n[:, None].astype(float)
        a = np.pi * nn * (self.t + self.s)
        b = np.sin(np.pi * nn * (self.t - self.s))
        diff = -2 * (np.sin(a)[:, None, :] * self.cos_theta +
                     np.cos(a)[:, None, :] * self.sin_theta) * b[:, None, :]

        agree = np.sign(diff) == self.alpha
        chunk_best = int(agree.sum(axis=2).max())
        with self._lock:
            self.best = max(self.best, chunk_best)
        ok = np.all(agree & (np.abs(diff) >= self.margin_min), axis=2)

        if self.strategy == SCREEN:
            near = np.all(np.abs(np.cos(2 * np.pi * nn * self.t) - self.alpha) <= self.eps_k, axis=1)
            if near.any() and not (ok & near[:, None]).any():
                self.eps_k = max(constants.EPS_K_FLOOR, self.eps_k / 2)
            ok &= near[:, None]

        hits = np.argwhere(ok)
        if len(hits) == 0:
            return None
        row, col = hits[0]
        n4 = int(n[row])
        margin = float(np.abs(diff[row, col]).min())
        return n4, col, margin


def kronecker_search(nodes, assignment, n1, n_max=None, margin_min=None, strategy=DIRECT,
                     eps_k=None, tau_grid=None, chunk=None, workers=1):
    """
    Find the smallest ``n4 <= n_max`` with ``gcd(n4, n1) = 1`` and a grid
    phase ``tau`` whose height function realizes ``assignment``.

    :param nodes: a :py:class:`knotforge.lissajous.NodeTable` or ``(t, s)``.
    :param assignment: a :py:class:`SignAssignment` in node order.
    :param n1: the x frequency of the shadow.
    :param strategy: ``"direct"`` verifies every candidate; ``"screen"`` first
        requires ``|cos(2 pi n4 t_i) - sign_i| <= eps_k`` at every node.
    :param workers: chunks scanned concurrently; the answer does not depend
        on it.
    :returns: a :py:class:`HeightSolution`.
    :raises DegenerateNode: if some node has ``t = s`` modulo 1.
    :raises BudgetExhausted: if no candidate up to ``n_max`` qualifies.
    """
    assert strategy in [DIRECT, SCREEN]
    t, s = node_parameters(nodes)
    assert len(assignment) == len(t)
    n_max = n_max or constants.N_MAX
    margin_min = constants.MARGIN_MIN if margin_min is None else margin_min
    tau_grid = tau_grid or constants.TAU_GRID

    if len(t) == 0:
        return HeightSolution(1, 0.0, float("inf"), 0)
    _check_degenerate(t, s, margin_min)

    alpha = np.array(assignment.signs, dtype=float)
    search = _Search(t, s, alpha, n1, margin_min, strategy, eps_k or constants.EPS_K, tau_grid)
    if strategy == SCREEN:
        workers = 1

    hit, scanned = scan(search, 1, n_max + 1, chunk or constants.CHUNK, workers)
    if hit is None:
        raise BudgetExhausted("no height function realizes the signs within n_max={0}".format(n_max),
                              best=search.best, tested=scanned * tau_grid)

    n4, j, margin = hit
    coprime_below = int(np.sum(np.gcd(np.arange(1, n4), n1) == 1))
    iterations = coprime_below * tau_grid + int(j) + 1
    tau = float(j) / (tau_grid * n4)
    logger.info("n4=%d tau=%g margin=%g after %d candidates", n4, tau, margin, iterations)
    return HeightSolution(n4, tau, margin, iterations)


def verify_signs(freq, nodes, assignment):
    """
    Recompute the crossing signs of the height ``cos 2 pi n4 (t + tau)``.

    :param freq: frequency set with ``n4`` and ``tau``.
    :returns: a :py:class:`VerifyResult` with the smallest ``|z(t) - z(s)|``.
    """
    assert freq.n4 is not None
    t, s = node_parameters(nodes)
    assert len(assignment) == len(t)
    diff = height_differences(t, s, freq.n4, freq.tau)
    per_node = [NodeCheck(i, assignment[i], 1 if d > 0 else -1, float(d)) for i, d in enumerate(diff)]
    margin = float(np.abs(diff).min()) if len(diff) else float("inf")
    ok = all(check.expected == check.realized for check in per_node) and margin > 0
    return VerifyResult(ok, margin, per_node)


def realized_signs(nodes, n4, tau):
    """
    The signs a given height function induces.

    :raises HeightTie: if some node has ``|z(t) - z(s)|`` below the tie tolerance.
    """
    t, s = node_parameters(nodes)
    diff = height_differences(t, s, n4, tau)
    ties = np.nonzero(np.abs(diff) < constants.HEIGHT_TIE)[0]
    if len(ties):
        raise HeightTie("node {0}: heights tie for n4={1}, tau={2}".format(ties[0], n4, tau))
    return SignAssignment(np.where(diff > 0, 1, -1))


def lipschitz_bound(n4, delta_tau):
    """
    Upper bound on the change of any height difference under ``tau -> tau + delta_tau``.
    """
    return 4 * math.pi * n4 * abs(delta_tau)
