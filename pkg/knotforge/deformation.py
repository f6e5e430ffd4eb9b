# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Nodes of the deformed shadow
``t -> (cos 2 pi n1 t, cos 2 pi n2 (t + phi) + eps cos 2 pi n3 (t + phi + psi))``.

Near ``eps = 0`` each node ``(k, l)`` moves along ``t = t_kl + v / (2 pi n2)``
where ``v`` inverts the normal form ``f(v) = sin v / (a sin(r v + shift))``
with ``r = n3 / n2``.
"""

import logging
import math
from collections import namedtuple

import mpmath
import numpy as np

import knotforge.constants as constants
from knotforge import config
from knotforge.errors import KnotforgeError, NearPole, NoConvergence, RadiusExceeded, at_node
from knotforge.lissajous import TYPE_I, enumerate_nodes, check_frequencies
from knotforge.powerseries import PowerSeries, x_over_sin
import knotforge.powerseries as ps

logger = logging.getLogger(__name__)

InverseSpec = namedtuple("InverseSpec", ["a", "r", "shift", "node"])

NodalEntry = namedtuple("NodalEntry", ["node", "spec", "base", "series", "samples"])


def inverse_spec(freq, node, prec=None):
    """
    Normal form of the coincidence equation at ``node``.

    :param freq: frequency set with ``n3`` and ``psi``.
    :param node: a :py:class:`knotforge.lissajous.Node`.
    :param prec: (optional) evaluate in :py:mod:`mpmath` at this many bits
        instead of double precision.
    :returns: the :py:class:`InverseSpec` with amplitude ``a``, ratio
        ``r = n3/n2`` and angle ``shift`` (radians).
    :raises NearPole: if ``sin(shift)`` vanishes or ``a`` is undefined.
    """
    if prec is not None:
        with mpmath.workprec(prec):
            return _inverse_spec(freq, node, mpmath.sin, mpmath.pi, mpmath.mpf)
    return _inverse_spec(freq, node, math.sin, math.pi, float)


def _inverse_spec(freq, node, sin, pi, num_type):
    n1, n2, n3 = freq.n1, freq.n2, freq.n3
    k, l = node.k, node.l
    sign = -1 if l % 2 == 0 else 1
    phi, psi = num_type(freq.phi), num_type(freq.psi)

    if node.node_type == TYPE_I:
        num = sin(pi * n3 * k / n1)
        den = sin(pi * n2 * k / n1)
        shift = 2 * pi * n3 * (num_type(l) / (2 * n2) + psi)
    else:
        num = sin(2 * pi * n3 * (num_type(k) / (2 * n1) + phi + psi))
        den = sin(2 * pi * n2 * (num_type(k) / (2 * n1) + phi))
        shift = -pi * n3 * l / num_type(n2)

    if abs(den) < constants.POLE_TOL or abs(num) < constants.POLE_TOL:
        raise NearPole("node ({0},{1}): amplitude is degenerate".format(k, l))
    spec = InverseSpec(sign * num / den, num_type(n3) / n2, shift, node)
    if abs(math.sin(shift)) < constants.POLE_TOL:
        raise NearPole("node ({0},{1}): shift {2} is a multiple of pi".format(k, l, shift))
    return spec


def f_eval(spec, u):
    """
    :returns: ``sin u / (a sin(r u + shift))``.
    :raises NearPole: if the denominator is below the pole tolerance.
    """
    den = math.sin(spec.r * u + spec.shift)
    if abs(den) < constants.POLE_TOL:
        raise NearPole("denominator vanishes at u={0}".format(u))
    return math.sin(u) / (spec.a * den)


def f_prime(spec, u):
    arg = spec.r * u + spec.shift
    s = math.sin(arg)
    if abs(s) < constants.POLE_TOL:
        raise NearPole("denominator vanishes at u={0}".format(u))
    return (math.cos(u) * s - spec.r * math.sin(u) * math.cos(arg)) / (spec.a * s * s)


def lagrange_coefficients(spec, order, prec=None):
    """
    Taylor series of the inverse function ``u(eps)`` of ``f`` by Lagrange
    inversion: ``[eps^n] u = (1/n) [t^(n-1)] g(t)^n`` with
    ``g(t) = t / f(t) = a (t / sin t) sin(r t + shift)``.

    :param spec: the :py:class:`InverseSpec`.
    :param order: highest power ``N >= 1``.
    :param prec: (optional) mantissa bits, defaults to
        :py:func:`knotforge.config.getprecision`.
    :returns: a :py:class:`knotforge.powerseries.PowerSeries` of
        :py:mod:`mpmath` numbers; ``derivatives()`` gives ``u^(n)(0)``.
    """
    assert order >= 1
    if abs(math.sin(spec.shift)) < constants.POLE_TOL:
        raise NearPole("shift {0} is a multiple of pi".format(spec.shift))

    with mpmath.workprec(prec or config.getprecision()):
        one = mpmath.mpf(1)
        a, r, shift = mpmath.mpf(spec.a), mpmath.mpf(spec.r), mpmath.mpf(spec.shift)
        x = PowerSeries.variable(order, zero=one * 0, one=one)
        g = x_over_sin(order, one) * ps.sin(x * r + shift) * a

        coefficients = [one * 0]
        power = PowerSeries([one], order=order)
        for n in range(1, order + 1):
            power = power * g
            coefficients.append(power[n - 1] / n)
        return PowerSeries(coefficients)


def cubic_seed(spec, eps):
    """
    Degree-3 Lagrange polynomial in double precision.
    """
    s, c = math.sin(spec.shift), math.cos(spec.shift)
    a, r = spec.a, spec.r
    u1 = a * s
    u2 = 2 * a * a * r * s * c
    u3 = a ** 3 * s * (6 * r * r + (1 - 9 * r * r) * s * s)
    return u1 * eps + u2 * eps ** 2 / 2 + u3 * eps ** 3 / 6


def _pole_distance(spec, direction):
    # nearest u with r u + shift = j pi on the given side of 0
    if spec.r == 0:
        return float("inf")
    best = float("inf")
    j0 = math.floor(spec.shift / math.pi)
    for j in range(j0 - 2, j0 + 4):
        u = (j * math.pi - spec.shift) / spec.r
        if u * direction > 0:
            best = min(best, abs(u))
    return best


def _critical_distance(spec, direction, limit):
    def numerator(u):
        arg = spec.r * u + spec.shift
        return math.cos(u) * math.sin(arg) - spec.r * math.sin(u) * math.cos(arg)

    steps = 256
    h = limit / steps
    previous = numerator(0.0)
    for i in range(1, steps):
        u = direction * i * h
        value = numerator(u)
        if value == 0.0:
            return abs(u)
        if (value > 0) != (previous > 0):
            lo, hi = direction * (i - 1) * h, u
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if (numerator(mid) > 0) == (previous > 0):
                    lo = mid
                else:
                    hi = mid
            return abs(0.5 * (lo + hi))
        previous = value
    return limit


def radius(spec):
    """
    Distance from ``u = 0`` to the nearest pole or critical point of ``f``,
    in each direction.

    :returns: the pair ``(rho_minus, rho_plus)``.
    """
    result = []
    for direction in (-1, 1):
        limit = min(_pole_distance(spec, direction), math.pi)
        result.append(_critical_distance(spec, direction, limit))
    return tuple(result)


def spec_eps0(spec):
    rho = min(radius(spec))
    return min(abs(f_eval(spec, -0.5 * rho)), abs(f_eval(spec, 0.5 * rho)))


def eps0(freq):
    """
    Validated deformation radius: the smallest ``|f(+-rho/2)|`` over all
    nodes, ``rho`` being the distance to the nearest pole or critical point.
    """
    specs = [inverse_spec(freq, node) for node in enumerate_nodes(freq)]
    value = min(spec_eps0(spec) for spec in specs)
    logger.debug("eps0 for %s = %g", freq, value)
    return value


def _bisect(spec, eps, lo, hi):
    g_lo = f_eval(spec, lo) - eps
    g_hi = f_eval(spec, hi) - eps
    if g_lo == 0.0:
        return lo
    if (g_lo > 0) == (g_hi > 0):
        raise RadiusExceeded("eps={0} is not bracketed by the monotone branch".format(eps))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g_mid = f_eval(spec, mid) - eps
        if abs(g_mid) < constants.RESIDUAL_TOL or abs(hi - lo) < constants.NEWTON_TOL:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    raise NoConvergence("bisection did not converge for eps={0}".format(eps))


def solve_node(spec, eps):
    """
    Solve ``f(u) = eps`` on the branch through ``u(0) = 0``.

    Newton iteration with the analytic derivative, seeded by the cubic
    Lagrange polynomial, with bisection on the monotone branch as fallback.

    :raises RadiusExceeded: if the iteration crosses a fold of ``f``.
    :raises NoConvergence: if neither method reaches the residual tolerance.
    """
    if eps == 0:
        return 0.0

    slope0 = f_prime(spec, 0.0)
    rho_minus, rho_plus = radius(spec)
    u = cubic_seed(spec, eps)

    for _ in range(constants.NEWTON_MAX_ITER):
        if not -rho_minus < u < rho_plus:
            break
        slope = f_prime(spec, u)
        if slope * slope0 <= 0:
            raise RadiusExceeded("fold of f reached at u={0} for eps={1}".format(u, eps))
        step = (f_eval(spec, u) - eps) / slope
        u -= step
        if abs(step) < constants.NEWTON_TOL * max(1.0, abs(u)):
            if -rho_minus < u < rho_plus and abs(f_eval(spec, u) - eps) < constants.RESIDUAL_TOL:
                return u
            break

    logger.debug("newton failed for eps=%g, falling back to bisection", eps)
    direction = 1.0 if eps * slope0 > 0 else -1.0
    bound = rho_plus if direction > 0 else rho_minus
    u = _bisect(spec, eps, 0.0, direction * bound * (1 - 1e-12))
    if abs(f_eval(spec, u) - eps) >= constants.RESIDUAL_TOL:
        raise NoConvergence("residual {0} above tolerance for eps={1}".format(abs(f_eval(spec, u) - eps), eps))
    return u


def _unit(value):
    value = value % 1.0
    return 0.0 if value >= 1.0 else value


class NodalCurve(object):
    """
    The node parameters ``t_kl(eps)`` of a deformed shadow, lexicographic
    in ``(k, l)``.
    """

    def __init__(self, freq, entries):
        self._freq = freq
        self._entries = tuple(entries)

    @property
    def freq(self):
        return self._freq

    @property
    def entries(self):
        return self._entries

    @property
    def specs(self):
        return [entry.spec for entry in self._entries]

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def parameters(self, eps):
        """
        :returns: the arrays ``(t, s)`` of the deformed nodes at ``eps``.
        """
        t, s = [], []
        for entry in self._entries:
            ti, si = node_parameters(self._freq, entry.node, solve_node(entry.spec, eps))
            t.append(ti)
            s.append(si)
        return np.array(t), np.array(s)

    def to_dict(self):
        return {
            "freq": self._freq.to_dict(),
            "nodes": [{"k": e.node.k, "l": e.node.l, "type": e.node.node_type,
                       "base": e.base,
                       "series": [float(c) for c in e.series],
                       "samples": [[eps, t] for eps, t in e.samples]}
                      for e in self._entries]
        }


def node_parameters(freq, node, v):
    """
    Both parameters of a deformed node whose normal-form coordinate is ``v``.
    """
    t = node.t + v / (2 * math.pi * freq.n2)
    if node.node_type == TYPE_I:
        s = t + float(node.k) / freq.n1
    else:
        s = -t + float(node.k) / freq.n1
    return _unit(t), _unit(s)


def nodal_curve(freq, eps_grid, order=None, check_radius=True):
    """
    Build the nodal curve of the deformation.

    :param freq: frequency set with ``n3`` (and ``psi``) populated.
    :param eps_grid: deformation amplitudes to solve for.
    :param order: series order, defaults to the node count.
    :param check_radius: refuse amplitudes beyond :py:func:`eps0`.
    :returns: a :py:class:`NodalCurve`.
    """
    assert freq.n3 is not None
    check_frequencies(freq)
    table = enumerate_nodes(freq)
    order = order or len(table)

    specs = [inverse_spec(freq, node) for node in table]

    if check_radius and eps_grid:
        limit = min(spec_eps0(spec) for spec in specs)
        worst = max(abs(eps) for eps in eps_grid)
        if worst > limit:
            raise RadiusExceeded("eps={0} is beyond the validated radius {1}".format(worst, limit))

    entries = []
    for node, spec in zip(table, specs):
        try:
            series = lagrange_coefficients(spec, order)
            samples = [(float(eps), node_parameters(freq, node, solve_node(spec, eps))[0])
                       for eps in eps_grid]
        except KnotforgeError as ex:
            raise at_node(node, ex)
        entries.append(NodalEntry(node, spec, node.t, series, samples))
        logger.debug("node (%d,%d): a=%g shift=%g", node.k, node.l, spec.a, spec.shift)

    logger.info("nodal curve of %d nodes, order %d, %d samples", len(entries), order, len(eps_grid))
    return NodalCurve(freq, entries)


def lowest_order_in_r(spec, n, r=None, prec=None):
    """
    Lowest-order coefficient in ``r`` of ``u^(n)(0)``, divided by
    ``a^n sin^n(shift)`` for odd ``n`` and by ``a^n cos(shift) sin^(n-1)(shift)``
    for even ``n``. Obtained by Richardson extrapolation between ``r`` and
    ``2 r``; the result reproduces the constants ``c_n``.
    """
    with mpmath.workprec(prec or config.getprecision()):
        r = mpmath.mpf(r or mpmath.mpf(2) ** -40)
        values = []
        for ri in (r, 2 * r):
            probe = spec._replace(r=ri)
            values.append(_derivative(probe, n))
        a = mpmath.mpf(spec.a)
        s, c = mpmath.sin(spec.shift), mpmath.cos(spec.shift)
        if n % 2 == 1:
            return (2 * values[0] - values[1]) / (a ** n * s ** n)
        slope = (4 * values[0] - values[1]) / (2 * r)
        return slope / (a ** n * c * s ** (n - 1))


def _derivative(spec, n):
    # lagrange_coefficients with mpmath r, kept inside the caller's precision
    one = mpmath.mpf(1)
    x = PowerSeries.variable(n, zero=one * 0, one=one)
    g = x_over_sin(n, one) * ps.sin(x * spec.r + mpmath.mpf(spec.shift)) * mpmath.mpf(spec.a)
    power = g ** n
    return power[n - 1] * math.factorial(n - 1)
