# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Knot invariants of a :py:class:`knotforge.diagram.DiagramCode`.

The Kauffman bracket is evaluated by a state sum that merges the smoothed
arcs crossing by crossing, keeping one partial sum per pattern of open
ends. With ``d = -A^2 - A^-2``::

    <X(a,b,c,d)> = A <(a,b)(c,d)> + A^-1 <(a,d)(b,c)>
    V(t) = (-A^3)^-w <D>,  A = t^(-1/4)

The knot determinant comes from the Alexander matrix at ``t = -1``.
"""

import logging
from fractions import Fraction

import sympy

import knotforge.constants as constants
from knotforge.curve import lissajous_knot
from knotforge.diagram import extract_diagram
from knotforge.errors import HeightTie, NonGenericShadow, TooManyCrossings

logger = logging.getLogger(__name__)

t = sympy.Symbol("t")


class LaurentPoly(object):
    """
    Integer Laurent polynomial in one variable; exponents may be fractions.
    """

    def __init__(self, terms=None):
        self._terms = {}
        for exponent, coefficient in (terms or {}).items():
            if coefficient:
                exponent = Fraction(exponent)
                self._terms[exponent] = self._terms.get(exponent, 0) + int(coefficient)
        self._terms = dict((e, c) for e, c in self._terms.items() if c)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @property
    def terms(self):
        return dict(self._terms)

    def degrees(self):
        if not self._terms:
            return None
        return min(self._terms), max(self._terms)

    def __getitem__(self, exponent):
        return self._terms.get(Fraction(exponent), 0)

    def __add__(self, other):
        result = dict(self._terms)
        for e, c in _poly(other)._terms.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(dict((e, -c) for e, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-_poly(other))

    def __mul__(self, other):
        other = _poly(other)
        result = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        result = LaurentPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self._terms == _poly(other)._terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def substitute(self, scale):
        """
        The polynomial in ``y`` with ``x = y^scale``.
        """
        return LaurentPoly(dict((e * Fraction(scale), c) for e, c in self._terms.items()))

    def __call__(self, value):
        return sum(c * value ** float(e) for e, c in self._terms.items())

    def as_expr(self, symbol=t):
        return sympy.Add(*[c * symbol ** sympy.Rational(e.numerator, e.denominator)
                           for e, c in sorted(self._terms.items())])

    def __str__(self):
        return str(self.as_expr())

    def __repr__(self):
        return "LaurentPoly({0})".format(dict((str(e), c) for e, c in sorted(self._terms.items())))

    def to_dict(self):
        return dict((str(e), c) for e, c in sorted(self._terms.items()))


def _poly(value):
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly({0: int(value)})


LOOP = LaurentPoly({2: -1, -2: -1})


def _join(open_ends, x, y):
    """
    Add the arc ``x -- y`` to a pattern of open ends.

    :returns: the new pattern and the number of loops closed.
    """
    ends = dict(open_ends)
    if x == y:
        return open_ends, 1
    if ends.get(x) == y:
        del ends[x], ends[y]
        return frozenset(ends.items()), 1
    far_x = ends.pop(x) if x in ends else x
    if far_x != x:
        del ends[far_x]
    far_y = ends.pop(y) if y in ends else y
    if far_y != y:
        del ends[far_y]
    ends[far_x] = far_y
    ends[far_y] = far_x
    return frozenset(ends.items()), 0


def kauffman_bracket(code):
    """
    The Kauffman bracket ``<D>`` in ``A``, normalised to ``<O> = 1``.

    :raises TooManyCrossings: above 24 crossings.
    """
    if code.crossing_count > constants.BRACKET_CUTOFF:
        raise TooManyCrossings("{0} crossings exceed the bracket cutoff of {1}".format(
            code.crossing_count, constants.BRACKET_CUTOFF))
    if code.crossing_count == 0:
        return LaurentPoly({0: 1})

    # state key: (open ends, any loop closed yet)
    states = {(frozenset(), False): LaurentPoly({0: 1})}
    for a, b, c, d in code.pd:
        following = {}
        for (ends, closed), weight in states.items():
            for factor, arcs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                new_ends, loops = ends, 0
                for x, y in arcs:
                    new_ends, count = _join(new_ends, x, y)
                    loops += count
                extra = loops if closed else max(loops - 1, 0)
                term = weight * LaurentPoly({factor: 1}) * LOOP ** extra
                key = (new_ends, closed or loops > 0)
                following[key] = following.get(key, LaurentPoly()) + term
        states = following
        logger.debug("bracket: %d partial states", len(states))

    assert list(states) == [(frozenset(), True)]
    return states[(frozenset(), True)]


def jones_polynomial(code):
    """
    Jones polynomial as a :py:class:`LaurentPoly` in ``t``; use
    :py:meth:`LaurentPoly.as_expr` for a :py:mod:`sympy` expression.
    """
    w = code.writhe
    normaliser = LaurentPoly({-3 * w: (-1) ** (w % 2)})
    return (normaliser * kauffman_bracket(code)).substitute(Fraction(-1, 4))


def _arcs(code):
    # arc j starts at the j-th under passage
    gauss = code.gauss
    size = code.crossing_count
    unders = 0
    rows = []
    for entry in gauss:
        if not entry.over:
            rows.append((entry.crossing, (unders - 1) % size, unders, entry.sign))
            unders += 1
    over_arc = {}
    unders = 0
    for entry in gauss:
        if entry.over:
            over_arc[entry.crossing] = (unders - 1) % size
        else:
            unders += 1
    return [(incoming, outgoing, over_arc[crossing], sign) for crossing, incoming, outgoing, sign in rows]


def alexander_matrix(code, value=t):
    """
    The ``c x c`` Alexander matrix: per crossing ``1 - t`` on the over arc and
    ``t``, ``-1`` on the incoming and outgoing under arcs (swapped for a
    negative crossing).
    """
    size = code.crossing_count
    matrix = sympy.zeros(size, size)
    for row, (incoming, outgoing, over, sign) in enumerate(_arcs(code)):
        if sign > 0:
            matrix[row, incoming] += value
            matrix[row, outgoing] += -1
        else:
            matrix[row, incoming] += -1
            matrix[row, outgoing] += value
        matrix[row, over] += 1 - value
    return matrix


def alexander_polynomial(code):
    """
    :returns: a :py:mod:`sympy` polynomial in ``t``, normalised to a
        positive constant term.
    """
    if code.crossing_count <= 1:
        return sympy.Integer(1)
    matrix = alexander_matrix(code)[:-1, :-1]
    poly = sympy.Poly(sympy.expand(matrix.det(method="berkowitz")), t)
    coefficients = poly.all_coeffs()[::-1]
    low = next(i for i, c in enumerate(coefficients) if c != 0)
    coefficients = coefficients[low:]
    if coefficients[0] < 0:
        coefficients = [-c for c in coefficients]
    return sympy.expand(sum(c * t ** i for i, c in enumerate(coefficients)))


def alexander_determinant(code):
    """
    The knot determinant ``|Delta(-1)|``, by exact integer elimination.
    """
    if code.crossing_count <= 1:
        return 1
    matrix = alexander_matrix(code, value=-1)[:-1, :-1]
    return abs(int(matrix.det(method="bareiss")))


def invariants(code):
    """
    Determinant, Alexander polynomial and (up to the bracket cutoff) the
    Jones polynomial of a diagram.
    """
    result = {
        "crossings": code.crossing_count,
        "writhe": code.writhe,
        "determinant": alexander_determinant(code),
        "alexander": str(alexander_polynomial(code)),
        "jones": None
    }
    if code.crossing_count <= constants.BRACKET_CUTOFF:
        result["jones"] = str(jones_polynomial(code))
    return result


def phase_scan(nx, ny, nz, centre, step, size):
    """
    Determinants of the Lissajous knots ``(nx, ny, nz)`` over a ``size x size``
    grid of phases (radians) centred on ``centre``.

    :returns: a list of ``((phase_x, phase_y), determinant)``; non generic
        members have determinant ``None``.
    """
    half = (size - 1) / 2.0
    result = []
    for i in range(size):
        for j in range(size):
            phases = (centre[0] + (i - half) * step, centre[1] + (j - half) * step)
            try:
                code = extract_diagram(lissajous_knot(nx, ny, nz, phases[0], phases[1]))
                det = alexander_determinant(code)
            except (NonGenericShadow, HeightTie) as ex:
                logger.debug("phases %s skipped: %s", phases, ex)
                det = None
            result.append((phases, det))
    logger.info("phase scan of (%d,%d,%d): determinants %s", nx, ny, nz,
                sorted(set(d for _, d in result if d is not None)))
    return result


def is_mirror_pair(first, second):
    """
    Whether two Jones polynomials are related by ``t -> 1/t``.
    """
    return first.substitute(-1) == second
