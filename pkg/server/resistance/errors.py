# -*- coding: utf-8 -*-
"""
Exceptions raised by the resistance engine.

Management commands turn any ResistanceError into a CommandError, so every
failure below ends the run with a nonzero exit status and its message.
"""


class ResistanceError(Exception):
    pass


class IndexUnderflow(ResistanceError):
    pass


class DivisionByZeroPolynomial(ResistanceError, ZeroDivisionError):
    pass


class SizeTooSmall(ResistanceError):
    pass


class InvalidFamilyDefinition(ResistanceError):
    pass


class UnknownFamily(ResistanceError):
    def __init__(self, name):
        super(UnknownFamily, self).__init__("unknown family: %r" % name)
        self.name = name


class CapExceeded(ResistanceError):
    def __init__(self, cap, expansions):
        super(CapExceeded, self).__init__(
            "family cap of %d exceeded after %d expansions" % (cap, expansions))
        self.cap = cap
        self.expansions = expansions


class VacuousSystem(ResistanceError):
    pass


class SupportTooLarge(ResistanceError):
    pass


class DegenerateSystem(ResistanceError):
    pass


class CandidateFailsDivision(ResistanceError):
    pass


class NoAnnihilation(ResistanceError):
    pass


class NeverValid(ResistanceError):
    pass


class IllConditionedFit(ResistanceError):
    pass


class RootIsolationFailure(ResistanceError):
    pass


class DominanceTie(ResistanceError):
    def __init__(self, roots):
        super(DominanceTie, self).__init__(
            "%d distinct roots share the maximal modulus" % len(roots))
        self.roots = roots


class ZeroDenominator(ResistanceError, ZeroDivisionError):
    pass


class SingularSystem(ResistanceError):
    pass


class InvalidNodes(ResistanceError, ValueError):
    pass


class StageDependencyMissing(ResistanceError):
    pass
