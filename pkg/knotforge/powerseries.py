# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Truncated power series.

``PowerSeries([c0, c1, c2, ...])`` stands for ``c0 + c1*x + c2*x**2 + ...``
truncated at its ``order``; terms beyond the order are unknown rather than
zero. Coefficients may be floats or :py:mod:`mpmath` numbers; arithmetic
keeps whichever type it is given.
"""

import math

import mpmath
import numpy as np


def _is_mp(value):
    return isinstance(value, (mpmath.mpf, mpmath.mpc))


def _sin(value):
    return mpmath.sin(value) if _is_mp(value) else math.sin(value)


def _cos(value):
    return mpmath.cos(value) if _is_mp(value) else math.cos(value)


class PowerSeries(object):
    """
    Power series with Taylor coefficients ``c[0..order]``.

    :param c: coefficients, lowest order first.
    :param order: (optional) highest retained power; ``c`` is padded with
        zeros or truncated to fit.
    """

    def __init__(self, c=None, order=None):
        if isinstance(c, PowerSeries):
            c = c.c
        if order is None:
            if c is None or len(c) == 0:
                raise ValueError("need coefficients or an order")
            order = len(c) - 1
        if order < 0:
            raise ValueError("order cannot be negative: order = {0}".format(order))

        coefficients = np.zeros(order + 1, dtype=object)
        coefficients[:] = 0
        if c is not None:
            n = min(len(c), order + 1)
            coefficients[:n] = list(c)[:n]
        self.c = coefficients

    @classmethod
    def variable(cls, order, zero=0.0, one=1.0):
        """
        The series of ``x`` itself.
        """
        return cls([zero, one], order=order)

    @property
    def order(self):
        return len(self.c) - 1

    def __getitem__(self, i):
        return self.c[i]

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __add__(self, x):
        if isinstance(x, PowerSeries):
            order = min(self.order, x.order)
            return PowerSeries(self.c[:order + 1] + x.c[:order + 1])
        ans = self.c.copy()
        ans[0] = ans[0] + x
        return PowerSeries(ans)

    def __radd__(self, x):
        return self + x

    def __neg__(self):
        return PowerSeries(-self.c)

    def __sub__(self, x):
        return self + (-x)

    def __rsub__(self, x):
        return -self + x

    def __mul__(self, x):
        if isinstance(x, PowerSeries):
            order = min(self.order, x.order)
            return PowerSeries(np.convolve(self.c, x.c)[:order + 1])
        return PowerSeries(self.c * x)

    def __rmul__(self, x):
        return self * x

    def __truediv__(self, x):
        if not isinstance(x, PowerSeries):
            return PowerSeries(self.c * (1 / x))

        if x.c[0] == 0:
            # strip a common factor of the variable from both sides
            if self.c[0] == 0 and self.order > 0 and x.order > 0:
                return self.divx() / x.divx()
            raise ZeroDivisionError("leading coefficient of the divisor is zero")

        order = min(self.order, x.order)
        ans = self.c[:order + 1].copy()
        for n in range(order + 1):
            total = self.c[n]
            for i in range(n):
                total = total - ans[i] * x.c[n - i]
            ans[n] = total / x.c[0]
        return PowerSeries(ans)

    def __rtruediv__(self, x):
        num = self.c * 0
        num[0] = x
        return PowerSeries(num) / self

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        ans = PowerSeries([self.c[0] * 0 + 1], order=self.order)
        base = self
        while n > 0:
            if n % 2 == 1:
                ans = ans * base
            base = base * base
            n //= 2
        return ans

    def __call__(self, x):
        ans = self.c[-1]
        for ci in self.c[-2::-1]:
            ans = ans * x + ci
        return ans

    def __repr__(self):
        return "PowerSeries({0!r})".format(list(self.c))

    def divx(self):
        """
        Divide by the variable; requires a zero constant term.
        """
        assert self.c[0] == 0
        return PowerSeries(self.c[1:])

    def truncate(self, order):
        return PowerSeries(self.c, order=min(order, self.order))

    def derivatives(self):
        """
        :returns: the derivatives at 0, ``n! * c[n]`` for ``n = 0..order``.
        """
        return [ci * math.factorial(n) for n, ci in enumerate(self.c)]

    def deriv(self):
        if self.order == 0:
            return PowerSeries([self.c[0] * 0])
        return PowerSeries([ci * n for n, ci in enumerate(self.c) if n > 0])


def sin(series):
    """
    Composition ``sin(series)`` by Taylor expansion about ``series[0]``.
    """
    c0 = series.c[0]
    sc, cc = _sin(c0), _cos(c0)
    derivs = [sc, cc, -sc, -cc]
    x = series - c0
    ans = PowerSeries([sc], order=series.order)
    xj = x
    for j in range(1, series.order + 1):
        ans = ans + xj * (derivs[j % 4] / math.factorial(j))
        xj = xj * x
    return ans


def cos(series):
    c0 = series.c[0]
    sc, cc = _sin(c0), _cos(c0)
    derivs = [cc, -sc, -cc, sc]
    x = series - c0
    ans = PowerSeries([cc], order=series.order)
    xj = x
    for j in range(1, series.order + 1):
        ans = ans + xj * (derivs[j % 4] / math.factorial(j))
        xj = xj * x
    return ans


def x_over_sin(order, one=1.0):
    """
    Series of ``x / sin(x)`` about 0, an even function with value 1 at 0.
    """
    x = PowerSeries.variable(order + 1, zero=one * 0, one=one)
    return (x / sin(x)).truncate(order)
