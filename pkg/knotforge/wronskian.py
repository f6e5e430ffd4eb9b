# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Skewness certificate for the nodal curve of a Lissajous deformation.

The Wronskian ``D`` of the derivatives ``u_kl^(n)(0)``, ``n = 1..m``, is a
polynomial in ``r = n3/n2``. Its lowest coefficient factors as
``D0 = +-(prod c_n)(prod alpha) D1`` where
``D1 = +-2^p (prod beta) zeta(alpha^2)^2`` over the pair representatives.
"""

import logging
import math
from collections import namedtuple
from itertools import combinations

import mpmath
from sympy import isprime

import knotforge.constants as constants
from knotforge import config
from knotforge.deformation import inverse_spec, lagrange_coefficients
from knotforge.errors import CongruenceViolation, DegenerateTable, PrecisionLoss
from knotforge.lissajous import FrequencySet, enumerate_nodes, couple_nodes
from knotforge.lissajous import SIGMA_H_I, SIGMA_H_II, TAU_I, TAU_II
from knotforge.powerseries import PowerSeries, x_over_sin

logger = logging.getLogger(__name__)

# expected (alpha, beta) sign changes from representative to partner
EXPECTED_ACTIONS = {
    SIGMA_H_I: (-1, -1),
    TAU_I: (-1, -1),
    SIGMA_H_II: (1, -1),
    TAU_II: (-1, -1),
}

Verdicts = namedtuple("Verdicts", ["c_positive", "alphas_nonzero", "betas_nonzero",
                                   "alphas_distinct", "D0_nonzero", "D_nonzero"])


class AlphaBetaTable(object):
    """
    ``alpha = a sin(shift)`` and ``beta = a cos(shift)`` per node, in node
    table order.
    """

    def __init__(self, table, specs, alpha, beta):
        self.table = table
        self.specs = tuple(specs)
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)

    @property
    def freq(self):
        return self.table.freq

    def __len__(self):
        return len(self.alpha)

    def lookup(self, k, l):
        i = self.table.position(k, l)
        return self.alpha[i], self.beta[i]

    def to_dict(self):
        return {
            "freq": self.freq.to_dict(),
            "nodes": [{"k": n.k, "l": n.l, "type": n.node_type,
                       "alpha": float(a), "beta": float(b)}
                      for n, a, b in zip(self.table, self.alpha, self.beta)]
        }


class WronskianReport(namedtuple("WronskianReport", ["m", "D", "D0", "D1", "D0_direct", "D1_direct",
                                                     "noise_floor", "precision", "c", "verdicts"])):

    @property
    def certified(self):
        return all(self.verdicts)

    def to_dict(self):
        return {
            "m": self.m,
            "D": mpmath.nstr(self.D, constants.SIGNIFICANT_DIGITS),
            "D0": mpmath.nstr(self.D0, constants.SIGNIFICANT_DIGITS),
            "D1": mpmath.nstr(self.D1, constants.SIGNIFICANT_DIGITS),
            "D0_direct": mpmath.nstr(self.D0_direct, constants.SIGNIFICANT_DIGITS),
            "D1_direct": mpmath.nstr(self.D1_direct, constants.SIGNIFICANT_DIGITS),
            "noise_floor": mpmath.nstr(self.noise_floor, 5),
            "precision": self.precision,
            "c": [mpmath.nstr(c, constants.SIGNIFICANT_DIGITS) for c in self.c],
            "verdicts": dict(self.verdicts._asdict()),
            "certified": self.certified
        }


def check_congruences(n1, n2, n3):
    """
    :raises CongruenceViolation: naming the first congruence that fails.
    """
    checks = [
        (n1 % 2 == 1 and isprime(n1), "n1={0} is not an odd prime".format(n1)),
        (n2 % 2 == 1 and isprime(n2), "n2={0} is not an odd prime".format(n2)),
        (n3 % 2 == 0, "n3={0} violates n3 = 0 (mod 2)".format(n3)),
        (n2 % n1 == 1, "n2={0} violates n2 = 1 (mod {1})".format(n2, n1)),
        (n3 % n1 == 2 % n1, "n3={0} violates n3 = 2 (mod {1})".format(n3, n1)),
        (n3 % n2 == 2 % n2, "n3={0} violates n3 = 2 (mod {1})".format(n3, n2)),
    ]
    for ok, message in checks:
        if not ok:
            raise CongruenceViolation(message)


def alpha_beta_table(n1, n2, n3, phi=None, psi=None, prec=None):
    """
    Tabulate ``alpha`` and ``beta`` for every node of the shadow.

    :param phi: phase of the shadow, defaults to ``1/(8 n1 n2)``; must be
        admissible (``phi = 0`` is the degenerate curve).
    :param psi: phase of the deformation, defaults to ``1/(8 n3)``.
    :raises CongruenceViolation: unless ``n1, n2`` are odd primes, ``n3`` is
        even and ``n2 = 1 (mod n1)``, ``n3 = 2 (mod n1 n2)``.
    """
    check_congruences(n1, n2, n3)
    freq = FrequencySet(n1, n2, n3, phi=phi, psi=psi)
    table = enumerate_nodes(freq)
    prec = prec or config.getprecision()
    specs = [inverse_spec(freq, node, prec=prec) for node in table]

    with mpmath.workprec(prec):
        alpha = [s.a * mpmath.sin(s.shift) for s in specs]
        beta = [s.a * mpmath.cos(s.shift) for s in specs]
    return AlphaBetaTable(table, specs, alpha, beta)


def symmetry_actions(table, pairing):
    """
    Observed sign changes of ``(alpha, beta)`` from representative to
    partner, grouped by pair kind.

    :returns: dict of kind to the set of ``(sign alpha, sign beta)`` ratios.
    """
    actions = {}
    for pair in pairing:
        a0, b0 = table.lookup(pair.representative.k, pair.representative.l)
        a1, b1 = table.lookup(pair.partner.k, pair.partner.l)
        action = (int(mpmath.sign(a1 / a0)), int(mpmath.sign(b1 / b0)))
        actions.setdefault(pair.kind, set()).add(action)
    return actions


def c_coefficients(m, prec=None):
    """
    Constants of the lowest order terms: ``c_n = ((y/sin y)^n)^(n-1)(0)``
    for odd ``n`` and ``n (n-1) ((y/sin y)^n)^(n-2)(0)`` for even ``n``.

    :returns: ``[c_1, ..., c_m]`` as :py:mod:`mpmath` numbers.
    """
    assert m >= 1
    with mpmath.workprec(prec or config.getprecision()):
        one = mpmath.mpf(1)
        w = x_over_sin(m, one)
        power = PowerSeries([one], order=m)
        result = []
        for n in range(1, m + 1):
            power = power * w
            if n % 2 == 1:
                result.append(power[n - 1] * math.factorial(n - 1))
            else:
                result.append(power[n - 2] * math.factorial(n))
        return result


def lowest_order_matrix(alpha, beta, c):
    """
    Lowest-order coefficient matrix: ``c_n alpha^n`` in odd columns and
    ``c_n beta alpha^(n-1)`` in even columns.
    """
    m = len(c)
    rows = []
    for a, b in zip(alpha, beta):
        rows.append([c[n - 1] * a ** n if n % 2 == 1 else c[n - 1] * b * a ** (n - 1)
                     for n in range(1, m + 1)])
    return mpmath.matrix(rows)


def reduced_matrix(alpha, beta, p):
    rows = []
    for a, b in zip(alpha, beta):
        powers = [a ** (2 * i) for i in range(p)]
        rows.append(powers + [b * x for x in powers])
    return mpmath.matrix(rows)


def difference_product(values):
    result = mpmath.mpf(1)
    for x, y in combinations(values, 2):
        result *= (y - x)
    return result


def d0_product(table, pairing, c, prec=None):
    """
    Lowest-order coefficient by the product formula, with the direct
    determinants for comparison.

    :returns: ``(D0, D1, D0_direct, D1_direct)``; the product values are
        magnitudes since the overall signs are not tracked.
    :raises DegenerateTable: if some ``alpha`` or ``beta`` vanishes.
    """
    m = len(table)
    assert m % 2 == 0 and len(c) >= m
    with mpmath.workprec(prec or config.getprecision()):
        for node, a, b in zip(table.table, table.alpha, table.beta):
            if a == 0 or b == 0:
                raise DegenerateTable("node ({0},{1}): alpha={2}, beta={3}".format(
                    node.k, node.l, mpmath.nstr(a, 5), mpmath.nstr(b, 5)))

        p = m // 2
        reps = [table.lookup(pair.representative.k, pair.representative.l) for pair in pairing]
        assert len(reps) == p

        zeta = difference_product([a * a for a, _ in reps])
        d1 = mpmath.mpf(2) ** p * abs(mpmath.fprod([b for _, b in reps])) * zeta ** 2
        d0 = abs(mpmath.fprod(c[:m])) * abs(mpmath.fprod(table.alpha)) * d1

        with mpmath.workprec(2 * mpmath.mp.prec):
            d1_direct = mpmath.det(reduced_matrix(table.alpha, table.beta, p))
            d0_direct = mpmath.det(lowest_order_matrix(table.alpha, table.beta, c[:m]))
        logger.debug("D0=%s direct=%s", mpmath.nstr(d0, 10), mpmath.nstr(d0_direct, 10))
        return d0, d1, mpmath.mpf(d0_direct), mpmath.mpf(d1_direct)


def derivative_matrix(specs, m, prec):
    rows = []
    for spec in specs:
        derivs = lagrange_coefficients(spec, m, prec=prec).derivatives()
        rows.append(derivs[1:m + 1])
    return rows


def _scaled_det(rows, prec):
    # column scaling keeps the LU pivots in range; the scales come back out
    with mpmath.workprec(prec):
        m = len(rows)
        scales = []
        for j in range(m):
            scale = max(abs(row[j]) for row in rows)
            scales.append(scale if scale != 0 else mpmath.mpf(1))
        matrix = mpmath.matrix([[row[j] / scales[j] for j in range(m)] for row in rows])
        det = mpmath.mpf(mpmath.det(matrix))
        hadamard = mpmath.fprod([mpmath.sqrt(sum(matrix[i, j] ** 2 for j in range(m)))
                                 for i in range(m)])
        scale = mpmath.fprod(scales)
        noise = hadamard * m * mpmath.mpf(2) ** (-prec) * scale
        return det * scale, noise


def _spec_source(source):
    # a frequency set is re-expanded at every precision, explicit specs are used as given
    if hasattr(source, "specs") and hasattr(source, "freq"):
        source = source.freq
    if isinstance(source, FrequencySet):
        nodes = list(enumerate_nodes(source))
        return len(nodes), lambda bits: [inverse_spec(source, node, prec=bits) for node in nodes]
    specs = list(source)
    return len(specs), lambda bits: specs


def full_wronskian(source, m=None, prec=None, max_prec=None):
    """
    Determinant of the ``m x m`` matrix of derivatives ``u_j^(n)(0)``.

    The determinant is evaluated at two working precisions 64 bits apart.
    The precision doubles until both agree to one part in ``10^6`` and the
    value clears the noise floor of the higher one. A value that settles
    but stays under the floor up to ``max_prec`` is returned as it is.

    :param source: a :py:class:`knotforge.lissajous.FrequencySet` (or a
        :py:class:`knotforge.deformation.NodalCurve`) whose node specs are
        recomputed at each precision, or a list of
        :py:class:`knotforge.deformation.InverseSpec`.
    :returns: ``(D, noise_floor, bits)``.
    :raises PrecisionLoss: when no precision up to ``max_prec`` agrees.
    """
    count, specs_at = _spec_source(source)
    m = m or count
    assert m <= count
    prec = prec or config.getprecision()
    max_prec = max_prec or 8 * prec

    settled = None
    while prec <= max_prec:
        lo, _ = _scaled_det(derivative_matrix(specs_at(prec)[:m], m, prec), prec)
        hi, noise = _scaled_det(derivative_matrix(specs_at(prec + 64)[:m], m, prec + 64), prec + 64)
        with mpmath.workprec(prec + 64):
            if hi == lo or abs(hi - lo) <= abs(hi) * mpmath.mpf(10) ** -6:
                settled = (hi, noise, prec + 64)
                if abs(hi) > noise:
                    logger.info("Wronskian of order %d settled at %d bits", m, prec + 64)
                    return settled
                logger.debug("Wronskian below its noise floor at %d bits, retrying", prec + 64)
            else:
                logger.debug("Wronskian unstable at %d bits, retrying", prec)
        prec *= 2
    if settled is not None:
        logger.warning("Wronskian of order %d stays under its noise floor at %d bits", m, settled[2])
        return settled
    raise PrecisionLoss("Wronskian of order {0} did not settle below {1} bits".format(m, max_prec))


def alphas_distinct(alpha_squares):
    values = sorted(abs(x) for x in alpha_squares)
    for x, y in zip(values, values[1:]):
        if y - x <= constants.ALPHA_GAP * max(abs(y), 1e-300):
            return False
    return True


def certify(n1, n2, n3, phi=None, psi=None, order=None, prec=None):
    """
    Run every check of the skewness certificate for ``L(n1, n2)`` deformed
    with frequency ``n3``.

    :returns: a :py:class:`WronskianReport`.
    """
    prec = prec or config.getprecision()
    table = alpha_beta_table(n1, n2, n3, phi=phi, psi=psi, prec=prec)
    pairing = couple_nodes(table.table)
    m = len(table)
    order = order or m
    c = c_coefficients(max(order, m), prec=prec)

    with mpmath.workprec(prec):
        d0, d1, d0_direct, d1_direct = d0_product(table, pairing, c, prec=prec)
        reps = [table.lookup(p.representative.k, p.representative.l)[0] for p in pairing]
        D, noise, bits = full_wronskian(table.freq, m=min(order, m), prec=prec)

        verdicts = Verdicts(
            c_positive=all(x > 0 for x in c),
            alphas_nonzero=all(a != 0 for a in table.alpha),
            betas_nonzero=all(b != 0 for b in table.beta),
            alphas_distinct=alphas_distinct([a * a for a in reps]),
            D0_nonzero=d0 > 0 and abs(abs(d0_direct) - d0) <= d0 * mpmath.mpf(10) ** -9,
            D_nonzero=D != 0 and abs(D) > noise)

    logger.info("certificate for (%d,%d,%d): %s", n1, n2, n3, verdicts)
    return WronskianReport(m, D, d0, d1, d0_direct, d1_direct, noise, bits, c[:m], verdicts)
