# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.


class KnotforgeError(RuntimeError):
    """
    Base class of every domain error raised by knotforge. The class name is
    the machine readable error code reported by the command line tool.
    """

    @property
    def code(self):
        return type(self).__name__

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class NonCoprime(KnotforgeError, ValueError):
    pass


class PhaseOutOfRange(KnotforgeError, ValueError):
    pass


class EvenFrequency(KnotforgeError, ValueError):
    pass


class NotOddPrime(KnotforgeError, ValueError):
    pass


class NearPole(KnotforgeError, ArithmeticError):
    pass


class NoConvergence(KnotforgeError):
    pass


class RadiusExceeded(KnotforgeError):
    pass


class CongruenceViolation(KnotforgeError, ValueError):
    pass


class DegenerateTable(KnotforgeError):
    pass


class PrecisionLoss(KnotforgeError, ArithmeticError):
    pass


class SearchSpaceTooLarge(KnotforgeError):
    pass


class BudgetExhausted(KnotforgeError):

    def __init__(self, message, best=0, tested=0):
        super(BudgetExhausted, self).__init__(message)
        self.best = best
        self.tested = tested

    def to_dict(self):
        d = super(BudgetExhausted, self).to_dict()
        d.update(best=self.best, tested=self.tested)
        return d


class DegenerateNode(KnotforgeError):
    pass


class NonGenericShadow(KnotforgeError):
    pass


class HeightTie(KnotforgeError):
    pass


class TooManyCrossings(KnotforgeError):
    pass


class SignMismatch(KnotforgeError, ValueError):
    pass


def at_node(node, exc):
    """
    Re-raise helper: a copy of ``exc`` whose message names the offending node.
    """
    message = "node ({0},{1}): {2}".format(node.k, node.l, exc)
    if isinstance(exc, BudgetExhausted):
        return BudgetExhausted(message, exc.best, exc.tested)
    return type(exc)(message)
