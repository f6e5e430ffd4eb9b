# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Planar diagrams of cosine-sum knots.

Crossings are found from node hints (analytic node tables or deformed node
parameters) or, failing those, by a sweep over a sampled polyline of the
shadow. Each crossing is polished to a double point of the shadow, the
strand with the larger height is over, and the crossing sign is the sign of
``T_over x T_under`` (positive when the frame turns counterclockwise).

Text encodings::

    O1+ U2+ O3+ U1+ O2+ U3+
    PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]

PD labels number the edges ``1..2c`` along the orientation; ``X(a,b,c,d)``
lists the four edges counterclockwise from the incoming under edge ``a``.
"""

import logging
import re
from collections import namedtuple

import numpy as np

import knotforge.constants as constants
from knotforge.errors import HeightTie, NonGenericShadow
from knotforge.height import SignAssignment

logger = logging.getLogger(__name__)

GaussEntry = namedtuple("GaussEntry", ["crossing", "over", "sign"])

Crossing = namedtuple("Crossing", ["id", "t", "s", "over", "under", "sign", "height", "x", "y"])

_GAUSS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")
_PD_TOKEN = re.compile(r"X\((\d+),(\d+),(\d+),(\d+)\)")


class DiagramCode(object):
    """
    An oriented knot diagram.

    :param gauss: the :py:class:`GaussEntry` sequence met along the
        orientation; crossing ids run ``1..c`` in order of first appearance.
    :param crossings: (optional) geometry of the crossings, in node order.
    :raises ValueError: if a crossing is not met exactly once over and once
        under with a single sign.
    """

    def __init__(self, gauss, crossings=()):
        self._gauss = tuple(GaussEntry(int(c), bool(o), int(s)) for c, o, s in gauss)
        self._crossings = tuple(crossings)
        self._signs = _validate(self._gauss)

    @property
    def gauss(self):
        return self._gauss

    @property
    def crossings(self):
        return self._crossings

    @property
    def crossing_count(self):
        return len(self._signs)

    def __len__(self):
        return len(self._signs)

    def sign(self, crossing):
        return self._signs[crossing]

    @property
    def writhe(self):
        return sum(self._signs.values())

    @property
    def pd(self):
        """
        PD code, one ``(a, b, c, d)`` per crossing in crossing id order.
        """
        size = len(self._gauss)
        under, over = {}, {}
        for position, entry in enumerate(self._gauss):
            (over if entry.over else under)[entry.crossing] = position

        def incoming(position):
            return (position - 1) % size + 1

        def outgoing(position):
            return position + 1

        result = []
        for crossing in sorted(self._signs):
            u, o = under[crossing], over[crossing]
            if self._signs[crossing] > 0:
                result.append((incoming(u), outgoing(o), outgoing(u), incoming(o)))
            else:
                result.append((incoming(u), incoming(o), outgoing(u), outgoing(o)))
        return result

    def height_signs(self):
        """
        Over/under signs of the crossings in node order: ``+1`` when the
        strand through ``t`` is over.
        """
        return SignAssignment(1 if c.height > 0 else -1 for c in self._crossings)

    def mirror(self):
        return DiagramCode([(e.crossing, not e.over, -e.sign) for e in self._gauss])

    def reversed(self):
        return _renumber(list(reversed(self._gauss)))

    def to_dict(self):
        return {
            "crossings": self.crossing_count,
            "writhe": self.writhe,
            "gauss": gauss_text(self),
            "pd": pd_text(self),
            "nodes": [{"t": c.t, "s": c.s, "sign": c.sign, "height": c.height,
                       "x": c.x, "y": c.y}
                      for c in self._crossings]
        }

    def __eq__(self, other):
        return isinstance(other, DiagramCode) and self._gauss == other._gauss

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._gauss)

    def __repr__(self):
        return "DiagramCode({0!r})".format(gauss_text(self))


def _validate(gauss):
    seen = {}
    for entry in gauss:
        assert entry.sign in (1, -1)
        seen.setdefault(entry.crossing, []).append(entry)

    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise ValueError("crossing ids must run from 1 to {0}".format(len(seen)))
    for crossing, entries in seen.items():
        if len(entries) != 2 or entries[0].over == entries[1].over:
            raise ValueError("crossing {0} must be met once over and once under".format(crossing))
        if entries[0].sign != entries[1].sign:
            raise ValueError("crossing {0} has inconsistent signs".format(crossing))
    return dict((crossing, entries[0].sign) for crossing, entries in seen.items())


def _renumber(entries, crossings=()):
    ids = {}
    for entry in entries:
        if entry.crossing not in ids:
            ids[entry.crossing] = len(ids) + 1
    gauss = [(ids[e.crossing], e.over, e.sign) for e in entries]
    kept = [c._replace(id=ids[c.id]) for c in crossings if c.id in ids]
    return DiagramCode(gauss, kept)


def gauss_text(code):
    return " ".join("{0}{1}{2}".format("O" if e.over else "U", e.crossing, "+" if e.sign > 0 else "-")
                    for e in code.gauss)


def parse_gauss(text):
    """
    Parse ``O1+ U2+ ...``; crossings are renumbered by first appearance.

    :raises ValueError: on a malformed token or an invalid code.
    """
    entries = []
    for token in text.split():
        match = _GAUSS_TOKEN.match(token)
        if match is None:
            raise ValueError("malformed Gauss token {0!r}".format(token))
        over, crossing, sign = match.groups()
        entries.append(GaussEntry(int(crossing), over == "O", 1 if sign == "+" else -1))
    return _renumber(entries)


def pd_text(code):
    return "PD[{0}]".format(", ".join("X({0},{1},{2},{3})".format(*x) for x in code.pd))


def parse_pd(text):
    """
    Parse ``PD[X(a,b,c,d), ...]`` into a diagram.

    :raises ValueError: if the labels are not ``1..2c`` each used twice, or a
        crossing's over strand is not a consecutive pair of edges.
    """
    crossings = [tuple(int(v) for v in m.groups()) for m in _PD_TOKEN.finditer(text)]
    size = 2 * len(crossings)
    labels = sorted(v for x in crossings for v in x)
    if labels != sorted(list(range(1, size + 1)) * 2):
        raise ValueError("PD labels must be 1..{0}, each used twice".format(size))

    def follows(a, b):
        return b == a % size + 1

    sequence = [None] * size
    for index, (a, b, c, d) in enumerate(crossings):
        if not follows(a, c):
            raise ValueError("X({0},{1},{2},{3}): under edges are not consecutive".format(a, b, c, d))
        if size == 2:
            sign = 1 if a == b else -1
        elif follows(d, b):
            sign = 1
        elif follows(b, d):
            sign = -1
        else:
            raise ValueError("X({0},{1},{2},{3}): over edges are not consecutive".format(a, b, c, d))
        out_over = b if sign > 0 else d
        for position, over in ((c - 1, False), (out_over - 1, True)):
            if sequence[position] is not None:
                raise ValueError("edge {0} leaves two crossings".format(position + 1))
            sequence[position] = GaussEntry(index + 1, over, sign)
    return _renumber(sequence)


def reduce_kinks(code):
    """
    Remove Reidemeister I loops: crossings whose two passages are adjacent
    along the orientation, repeatedly.
    """
    entries = list(code.gauss)
    crossings = list(code.crossings)
    removed = 0
    while entries:
        size = len(entries)
        kink = next((entries[i].crossing for i in range(size)
                     if entries[i].crossing == entries[(i + 1) % size].crossing), None)
        if kink is None:
            break
        entries = [e for e in entries if e.crossing != kink]
        crossings = [c for c in crossings if c.id != kink]
        removed += 1
    if removed:
        logger.debug("removed %d kinks", removed)
    return _renumber(entries, crossings)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _polish(knot, t, s):
    # 2x2 Newton on P(t) - P(s) = 0
    for _ in range(constants.NEWTON_MAX_ITER):
        xt, yt = knot.shadow(t)
        xs, ys = knot.shadow(s)
        fx, fy = float(xt - xs), float(yt - ys)
        dxt, dyt = knot.tangent(t)
        dxs, dys = knot.tangent(s)
        det = float(_cross(-dxt, -dyt, dxs, dys))
        if det == 0:
            break
        dt = (fx * float(dys) - fy * float(dxs)) / det
        ds = (-float(dxt) * fy + float(dyt) * fx) / det
        t, s = t + dt, s + ds
        if max(abs(dt), abs(ds)) < constants.NEWTON_TOL:
            break
    return t % 1.0, s % 1.0


def _residual(knot, t, s):
    xt, yt = knot.shadow(t)
    xs, ys = knot.shadow(s)
    return float(np.hypot(xt - xs, yt - ys))


def _chords_meet(knot, t0, t1, s0, s1, slack=1e-9):
    (xa, xb), (ya, yb) = knot.shadow(np.array([t0, t1]))
    (xc, xd), (yc, yd) = knot.shadow(np.array([s0, s1]))
    rx, ry = xb - xa, yb - ya
    wx, wy = xd - xc, yd - yc
    denom = _cross(rx, ry, wx, wy)
    if denom == 0:
        return None
    qx, qy = xc - xa, yc - ya
    u = _cross(qx, qy, wx, wy) / denom
    v = _cross(qx, qy, rx, ry) / denom
    if -slack <= u <= 1 + slack and -slack <= v <= 1 + slack:
        return u, v
    return None


def _refine(knot, t0, t1, s0, s1):
    """
    Bisect the two parameter intervals, keeping the pair of halves whose
    chords still meet, then polish with Newton.
    """
    hit = _chords_meet(knot, t0, t1, s0, s1, slack=0.5)
    u, v = hit if hit is not None else (0.5, 0.5)
    while max(t1 - t0, s1 - s0) > constants.REFINE_TOL:
        tm, sm = 0.5 * (t0 + t1), 0.5 * (s0 + s1)
        for a, b in ((t0, tm), (tm, t1)):
            for c, d in ((s0, sm), (sm, s1)):
                hit = _chords_meet(knot, a, b, c, d)
                if hit is not None:
                    break
            if hit is not None:
                break
        if hit is None:
            break
        t0, t1, s0, s1 = a, b, c, d
        u, v = hit
    return _polish(knot, t0 + u * (t1 - t0), s0 + v * (s1 - s0))


def _segment_hits(x, y, rows):
    size = len(x)
    x1, y1 = np.roll(x, -1), np.roll(y, -1)
    rx, ry = x1 - x, y1 - y
    i = rows[:, None]
    j = np.arange(size)[None, :]
    denom = rx[i] * ry[j] - ry[i] * rx[j]
    qx, qy = x[j] - x[i], y[j] - y[i]
    with np.errstate(divide="ignore", invalid="ignore"):
        u = (qx * ry[j] - qy * rx[j]) / denom
        v = (qx * ry[i] - qy * rx[i]) / denom
    ok = (j > i + 1) & ~((i == 0) & (j == size - 1)) & (denom != 0)
    ok &= (u >= 0) & (u < 1) & (v >= 0) & (v < 1)
    hit_i, hit_j = np.nonzero(ok)
    return [(int(rows[a]), int(b), float(u[a, b]), float(v[a, b])) for a, b in zip(hit_i, hit_j)]


def find_double_points(knot, samples=None):
    """
    Double points of the shadow by a sweep over ``samples`` chords
    (default ``max(16 * total frequency, 1024)``).

    :returns: parameter pairs ``(t, s)`` with ``t < s``, ordered by ``t``.
    """
    size = samples or max(constants.SAMPLES_PER_FREQUENCY * knot.total_frequency(), constants.MIN_SAMPLES)
    t = np.arange(size) / float(size)
    x, y = knot.shadow(t)
    step = 1.0 / size

    candidates = []
    for lo in range(0, size, 256):
        candidates.extend(_segment_hits(x, y, np.arange(lo, min(lo + 256, size))))

    found = []
    for i, j, u, v in candidates:
        ti, si = _refine(knot, i * step, (i + 1) * step, j * step, (j + 1) * step)
        ti, si = min(ti, si), max(ti, si)
        if any(abs(ti - a) < 1e-7 and abs(si - b) < 1e-7 for a, b in found):
            continue
        found.append((ti, si))
    logger.debug("%d chord intersections, %d double points from %d samples", len(candidates), len(found), size)
    return sorted(found)


def _hint_pairs(hints):
    if hasattr(hints, "parameters"):
        t, s = hints.parameters()
        return list(zip(t, s))
    if len(hints) == 2 and isinstance(hints[0], np.ndarray):
        return list(zip(hints[0], hints[1]))
    return [tuple(pair) for pair in hints]


def _polish_hints(knot, pairs):
    result = []
    for t, s in pairs:
        t, s = float(t), float(s)
        if _residual(knot, t, s) > constants.COINCIDENCE_TOL:
            pt, ps = _polish(knot, t, s)
            if _residual(knot, pt, ps) < _residual(knot, t, s):
                t, s = pt, ps
        same = abs((t - s + 0.5) % 1.0 - 0.5) < constants.COINCIDENCE_TOL
        if same or _residual(knot, t, s) > constants.COINCIDENCE_TOL:
            raise NonGenericShadow("hint t={0}, s={1} is not a double point of the shadow".format(t, s))
        result.append((t, s))
    return result


def _check_generic(knot, pairs):
    t = np.array([p[0] for p in pairs])
    s = np.array([p[1] for p in pairs])
    tx, ty = knot.tangent(t)
    sx, sy = knot.tangent(s)
    angle = np.abs(_cross(tx, ty, sx, sy)) / (np.hypot(tx, ty) * np.hypot(sx, sy))
    for i in np.nonzero(angle < constants.COINCIDENCE_TOL)[0]:
        raise NonGenericShadow("tangential double point at t={0}, s={1}".format(t[i], s[i]))

    x, y = knot.shadow(t)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if np.hypot(x[i] - x[j], y[i] - y[j]) < 1e-7:
                raise NonGenericShadow("triple point near ({0}, {1})".format(x[i], y[i]))


def extract_diagram(knot, hints=None):
    """
    The oriented diagram of ``knot`` traversed along ``t`` in ``[0, 1)``.

    :param knot: a :py:class:`knotforge.curve.FourierKnot`.
    :param hints: (optional) node parameters: a
        :py:class:`knotforge.lissajous.NodeTable`, arrays ``(t, s)`` or a list
        of pairs. Defaults to ``knot.hints``; without either the shadow is
        swept numerically.
    :returns: a :py:class:`DiagramCode` whose crossings keep the hint order.
    :raises NonGenericShadow: on a tangential or triple double point.
    :raises HeightTie: if ``|z(t) - z(s)| < 1e-9`` at a double point.
    """
    if hints is None:
        hints = knot.hints
    if hints is not None:
        pairs = _polish_hints(knot, _hint_pairs(hints))
    else:
        pairs = find_double_points(knot)
    if not pairs:
        return DiagramCode([])
    _check_generic(knot, pairs)

    t = np.array([p[0] for p in pairs])
    s = np.array([p[1] for p in pairs])
    height = knot.height(t) - knot.height(s)
    ties = np.nonzero(np.abs(height) < constants.HEIGHT_TIE)[0]
    if len(ties):
        i = ties[0]
        raise HeightTie("heights tie at t={0}, s={1}".format(t[i], s[i]))

    over = np.where(height > 0, t, s)
    under = np.where(height > 0, s, t)
    ox, oy = knot.tangent(over)
    ux, uy = knot.tangent(under)
    signs = np.where(_cross(ox, oy, ux, uy) > 0, 1, -1)
    x, y = knot.shadow(t)

    events = sorted([(float(over[i]), i, True) for i in range(len(pairs))] +
                    [(float(under[i]), i, False) for i in range(len(pairs))])
    ids = {}
    gauss = []
    for _, i, is_over in events:
        if i not in ids:
            ids[i] = len(ids) + 1
        gauss.append((ids[i], is_over, int(signs[i])))

    crossings = [Crossing(ids[i], float(t[i]), float(s[i]), float(over[i]), float(under[i]),
                          int(signs[i]), float(height[i]), float(x[i]), float(y[i]))
                 for i in range(len(pairs))]
    code = DiagramCode(gauss, crossings)
    logger.info("diagram with %d crossings, writhe %d", code.crossing_count, code.writhe)
    return code
