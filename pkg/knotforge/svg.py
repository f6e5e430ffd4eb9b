# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import numpy as np

import knotforge.constants as constants

ns_svg = "http://www.w3.org/2000/svg"


def _points(x, y):
    return " ".join("{0:.3f},{1:.3f}".format(a, b) for a, b in zip(x, y))


def render_svg(knot, code=None, size=400, samples=None, gap=6.0, stroke=2.0):
    """
    Static SVG of the shadow of ``knot``; with a diagram the under strand is
    broken ``gap`` pixels either side of each crossing.

    :param knot: a :py:class:`knotforge.curve.FourierKnot`.
    :param code: (optional) :py:class:`knotforge.diagram.DiagramCode` with
        crossing geometry.
    :returns: the SVG document as a string.
    """
    count = samples or max(constants.SAMPLES_PER_FREQUENCY * knot.total_frequency(), constants.MIN_SAMPLES)
    t = np.arange(count + 1) / float(count)
    x, y = knot.shadow(t)

    margin = 10.0
    lo = min(x.min(), y.min())
    hi = max(x.max(), y.max())
    scale = (size - 2 * margin) / max(hi - lo, 1e-12)

    def to_screen(px, py):
        return margin + (px - lo) * scale, size - margin - (py - lo) * scale

    keep = np.ones(len(t), dtype=bool)
    if code is not None:
        for crossing in code.crossings:
            dx, dy = knot.tangent(crossing.under)
            speed = float(np.hypot(dx, dy)) * scale
            if speed == 0:
                continue
            width = gap / speed
            distance = np.abs(((t - crossing.under) + 0.5) % 1.0 - 0.5)
            keep &= distance > width

    runs = []
    start = None
    for i, flag in enumerate(keep):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            runs.append((start, i))
            start = None
    if start is not None:
        runs.append((start, len(t)))

    sx, sy = to_screen(x, y)
    lines = [
        '<svg xmlns="{0}" width="{1}" height="{1}" viewBox="0 0 {1} {1}">'.format(ns_svg, size),
        '<rect width="{0}" height="{0}" fill="white" />'.format(size)
    ]
    for a, b in runs:
        if b - a >= 2:
            lines.append('<polyline fill="none" stroke="black" stroke-width="{0}" points="{1}" />'.format(
                stroke, _points(sx[a:b], sy[a:b])))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
