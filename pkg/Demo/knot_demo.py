# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import logging

from knotforge.curve import lissajous_knot, torus_knot_112
from knotforge.diagram import extract_diagram
from knotforge.height import realized_signs
from knotforge.invariants import invariants
from knotforge.lissajous import FrequencySet
from knotforge.pipeline import build_knot, deformed_nodes

if __name__ == "__main__":

    logging.basicConfig(level=logging.INFO, format="%(name)s %(levelname)s: %(message)s")

    for name, knot in (("T(2,3)", torus_knot_112(2, 3)),
                       ("T(2,5)", torus_knot_112(2, 5)),
                       ("L(3,2,5)", lissajous_knot(3, 2, 5, 1.5, 0.2))):
        print(name, invariants(extract_diagram(knot)))

    # start from the signs of a low frequency height and flip one of them
    freq = FrequencySet(3, 5, n3=8)
    _, nodes = deformed_nodes(freq)
    signs = realized_signs(nodes, 7, 0.0).flip(0)
    knot = build_knot(freq, signs)
    print("built n4={0} tau={1}".format(knot.freq.n4, knot.freq.tau))
    print(invariants(extract_diagram(knot)))
