# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

"""
Importing the module
--------------------
To build knots end to end:

.. code:: python

   from knotforge.pipeline import build_knot
   from knotforge.lissajous import FrequencySet
   from knotforge.height import SignAssignment

Shadows
-------
Every knot starts from the Lissajous shadow ``L(n1, n2, phi)``,
``t -> (cos 2 pi n1 t, cos 2 pi n2 (t + phi))``. For coprime ``n1, n2`` and
``0 < phi < 1/(4 n1 n2)`` it has exactly ``2 n1 n2 - n1 - n2`` transverse
double points, one per integer point ``(k, l)`` of the triangle
``n2 k + n1 l < 2 n1 n2``:

.. code:: python

   freq = FrequencySet(3, 5)
   table = enumerate_nodes(freq)      # 22 nodes

The knot diagram is fixed by choosing, at each node, which strand is over.
That choice is a :py:class:`knotforge.height.SignAssignment`, one ``+`` or
``-`` per node in lexicographic ``(k, l)`` order; ``+`` means the strand
through ``t`` is over.

Deforming the shadow
--------------------
A height function ``cos 2 pi n4 (t + tau)`` can only realize an arbitrary
assignment when the node parameters are rationally independent, which they
never are on the undeformed shadow. Adding ``eps cos 2 pi n3 (t + phi + psi)``
to the second coordinate moves every node along an analytic curve in
``eps``; each node is solved from its normal form with Newton's method,
within the validated radius :py:func:`knotforge.deformation.eps0`:

.. code:: python

   freq = FrequencySet(3, 7, n3=44)
   curve = nodal_curve(freq, [1e-3])
   t, s = curve.parameters(1e-3)

Certifying
----------
The nodal curve is skew (lies in no affine hyperplane) when its Wronskian at
``eps = 0`` is non-zero. For ``n1`` an odd prime, ``n2 = 2 n1 p + 1`` prime
and ``n3 = 2 (mod n1 n2)`` even, the lowest-order part factors into the
constants ``c_n`` and a Vandermonde product, and the full determinant is
checked in extended precision:

.. code:: python

   report = certify(3, 7, 44)
   report.certified

.. note:: Certification is optional in :py:func:`build_knot`; the height
   search verifies every sign it reports whether or not the curve was
   certified.

Heights
-------
:py:func:`knotforge.height.kronecker_search` scans ``n4 = 1, 2, ...`` with
``gcd(n4, n1) = 1`` and the phases ``tau = j / (64 n4)``, returning the first
candidate that realizes every sign with a margin of at least ``1e-6``.
Independent signs on ``m`` nodes typically need on the order of ``2^m``
candidates; patterns induced by a low frequency height are found at once.

Putting it together
-------------------

.. code:: python

   freq = FrequencySet(3, 7, n3=44)
   signs = SignAssignment.from_string(open("signs.txt").read())
   knot = build_knot(freq, signs)
   code = extract_diagram(knot)
   assert code.height_signs() == signs

The knot returned is a :py:class:`knotforge.curve.FourierKnot112` carrying
``n4``, ``tau`` and ``eps`` in its frequency set and the deformed node
parameters as hints for :py:func:`knotforge.diagram.extract_diagram`.
"""

import logging

from knotforge import config
from knotforge.curve import FourierKnot112
from knotforge.deformation import eps0, nodal_curve
from knotforge.diagram import extract_diagram
from knotforge.errors import SignMismatch
from knotforge.height import DIRECT, kronecker_search, verify_signs
from knotforge.lissajous import check_frequencies, enumerate_nodes
from knotforge.wronskian import certify

logger = logging.getLogger(__name__)


def deformed_nodes(freq, eps=None):
    """
    Parameters of the deformed nodes.

    :param eps: deformation amplitude; defaults to ``freq.eps`` or, when that
        is zero, half of :py:func:`knotforge.deformation.eps0`.
    :returns: the frequency set with ``eps`` filled in and the arrays ``(t, s)``.
    :raises RadiusExceeded: if ``eps`` is beyond the validated radius.
    """
    if freq.n3 is None:
        raise ValueError("n3 is required to deform the shadow")
    check_frequencies(freq)
    if eps is None:
        eps = freq.eps or 0.5 * eps0(freq)
    freq = freq.with_eps(eps)
    curve = nodal_curve(freq, [eps], order=1)
    t, s = curve.parameters(eps)
    logger.debug("deformed %d nodes at eps=%g", len(t), eps)
    return freq, (t, s)


def build_knot(freq, assignment, eps=None, certified=False, n_max=None, strategy=DIRECT,
               margin_min=None, workers=1):
    """
    Build a (1,1,2) Fourier knot whose diagram on the deformed shadow has
    the prescribed crossing signs.

    :param freq: shadow frequencies ``n1, n2, phi`` and deformation ``n3, psi``.
    :param assignment: a :py:class:`knotforge.height.SignAssignment` in node order.
    :param eps: (optional) deformation amplitude, see :py:func:`deformed_nodes`.
    :param certified: run :py:func:`knotforge.wronskian.certify` first and
        warn if the certificate does not hold.
    :param n_max: largest height frequency to try.
    :param strategy: ``"direct"`` or ``"screen"``.
    :returns: a :py:class:`knotforge.curve.FourierKnot112`.
    :raises BudgetExhausted: if no height frequency up to ``n_max`` works.
    :raises NonGenericShadow: if the assembled diagram is not generic.
    :raises SignMismatch: if the assignment has the wrong length or the built
        knot does not realize it.
    """
    table = enumerate_nodes(freq)
    if len(assignment) != len(table):
        raise SignMismatch("expected {0} signs, got {1}".format(len(table), len(assignment)))

    if certified:
        report = certify(freq.n1, freq.n2, freq.n3, phi=freq.phi, psi=freq.psi)
        if not report.certified:
            config.warn("skewness certificate failed for ({0},{1},{2}): {3}".format(
                freq.n1, freq.n2, freq.n3, report.verdicts))

    freq, nodes = deformed_nodes(freq, eps)
    solution = kronecker_search(nodes, assignment, freq.n1, n_max=n_max, margin_min=margin_min,
                                strategy=strategy, workers=workers)
    freq = freq.with_height(solution.n4, solution.tau)

    result = verify_signs(freq, nodes, assignment)
    if not result.ok:
        raise SignMismatch("height mismatch at nodes {0}".format(result.mismatches))

    knot = FourierKnot112.from_frequencies(freq, hints=list(zip(*nodes)))
    code = extract_diagram(knot)
    if code.height_signs() != assignment:
        raise SignMismatch("diagram signs {0} differ from {1}".format(code.height_signs(), assignment))
    logger.info("built knot n4=%d tau=%g eps=%g, %d crossings, margin %g",
                solution.n4, solution.tau, freq.eps, code.crossing_count, solution.margin)
    return knot
