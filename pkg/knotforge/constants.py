# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import sys


class _const:

    class ConstError(TypeError):
        pass

    def __setattr__(self, name, value):
        if name in self.__dict__:
            raise self.ConstError("Can't rebind const(%s)" % name)
        self.__dict__[name] = value

    def chebyshev_nodes(self, n1, n2):
        # node count of the degenerate phi=0 curve, a 2-1 cover
        return (n1 - 1) * (n2 - 1) // 2


KNOT = _const()

# Node types
KNOT.TYPE_I = "I"
KNOT.TYPE_II = "II"

# Pair kinds of the node coupling
KNOT.SIGMA_H_I = "sigma_h_I"
KNOT.SIGMA_H_II = "sigma_h_II"
KNOT.TAU_I = "tau_I"
KNOT.TAU_II = "tau_II"

# Shadow geometry
KNOT.COINCIDENCE_TOL = 1e-9
KNOT.REFINE_TOL = 1e-10
KNOT.HEIGHT_TIE = 1e-9
KNOT.SAMPLES_PER_FREQUENCY = 16
KNOT.MIN_SAMPLES = 1024

# Inverse functions
KNOT.POLE_TOL = 1e-12
KNOT.RESIDUAL_TOL = 1e-12
KNOT.NEWTON_TOL = 1e-14
KNOT.NEWTON_MAX_ITER = 50

# Certification
KNOT.DEFAULT_PRECISION = 128
KNOT.ALPHA_GAP = 1e-9
KNOT.SEARCH_BUDGET = 5 * 10 ** 7

# Height search
KNOT.MARGIN_MIN = 1e-6
KNOT.EPS_K = 0.2
KNOT.EPS_K_FLOOR = 0.05
KNOT.TAU_GRID = 64
KNOT.N_MAX = 10 ** 6
KNOT.CHUNK = 512

# Diagrams
KNOT.BRACKET_CUTOFF = 24

# Emitters
KNOT.SIGNIFICANT_DIGITS = 17

sys.modules[__name__] = KNOT
