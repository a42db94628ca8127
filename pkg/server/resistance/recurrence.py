# -*- coding: utf-8 -*-
"""
Minimal recurrences of determinant sequences.

An annihilator A found by elimination is usually not minimal. The minimal
one is recovered from data: the lowest-order linear recurrence fitting the
sequence tail exactly is a candidate C, accepted once C divides A and C
kills the sampled tail.
"""
import logging
from fractions import Fraction

from sympy import Poly, Symbol, lcm, resultant
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from resistance.errors import (
    CandidateFailsDivision, NeverValid, NoAnnihilation, ResistanceError, SizeTooSmall)
from resistance.oracle import det_exact
from resistance.shift_poly import X, CharPoly, IndexedSequence, ShiftPoly

logger = logging.getLogger(__name__)

TAIL_RETRIES = 3

Z = Symbol('Z')


class Recurrence(object):

    def __init__(self, annihilator, validity_index, family=None, tested_range=None):
        self.annihilator = annihilator
        self.validity_index = validity_index
        self.family = family
        self.tested_range = tested_range

    def __repr__(self):
        return "<Recurrence %s valid from %d>" % (self.annihilator, self.validity_index)

    def to_dict(self):
        return {
            'family': self.family,
            'annihilator_Y': str(self.annihilator),
            'annihilator_X': str(self.annihilator.to_char()),
            'validity_index': self.validity_index,
            'tested_range': list(self.tested_range) if self.tested_range else None,
        }


def oracle_sequence(handle, start, stop):
    if start < handle.min_size:
        raise SizeTooSmall("%s starts at %d, asked for %d" % (handle.describe(), handle.min_size, start))
    return IndexedSequence(start, [det_exact(handle.instantiate(n)) for n in range(start, stop + 1)])


def fit_recurrence(seq, order):
    """
    Coefficients (c_1..c_d) with s_k = sum c_i s_{k-i} on the whole window,
    None when no recurrence of this order fits, or False when the window
    cannot pin it down.
    """
    if order == 0:
        return () if not any(seq) else None
    rows = [[QQ(int(seq[k - i])) for i in range(1, order + 1)] + [QQ(int(seq[k]))]
            for k in range(seq.start + order, seq.stop + 1)]
    if not rows:
        return False
    rref, pivots = DomainMatrix(rows, (len(rows), order + 1), QQ).rref()
    pivots = tuple(pivots)
    if order in pivots:
        return None
    if pivots != tuple(range(order)):
        return False
    solved = rref.to_Matrix()
    return tuple(Fraction(int(solved[i, order].p), int(solved[i, order].q)) for i in range(order))


def _annihilator_from(coefficients):
    scale = int(lcm([c.denominator for c in coefficients])) if coefficients else 1
    return ShiftPoly([scale] + [-int(c * scale) for c in coefficients]).normalized()


def minimal_recurrence(seq):
    """
    Lowest-order recurrence fitting the window exactly, with at least two
    more equations than unknowns.
    """
    order = 0
    while len(seq) - order >= order + 2:
        coefficients = fit_recurrence(seq, order)
        if coefficients not in (None, False):
            return _annihilator_from(coefficients)
        order += 1
    raise NoAnnihilation("no recurrence fits %d terms from index %d" % (len(seq), seq.start))


def has_recurrence_of_order(seq, order):
    return fit_recurrence(seq, order) not in (None, False)


def validity_index(annihilator, seq):
    """
    Smallest v with a zero residual at every tested n >= v.
    """
    valid = None
    for n in range(seq.stop, seq.start + annihilator.degree - 1, -1):
        if annihilator.apply(seq, n) != 0:
            break
        valid = n
    if valid is None:
        raise NeverValid("%s does not vanish at the end of the tested range" % annihilator)
    return valid


def minimal_annihilator(annihilator, seq, family=None):
    annihilator = annihilator.normalized()
    try:
        start = validity_index(annihilator, seq)
    except NeverValid:
        raise NoAnnihilation("%s does not annihilate the sequence" % annihilator)

    tail = seq.window(max(start, seq.stop - 2 * annihilator.degree - 5))
    candidate = minimal_recurrence(tail)
    divides, quotient = candidate.divides(annihilator)
    if not divides:
        raise CandidateFailsDivision(
            "candidate %s from %d terms does not divide %s" % (candidate, len(tail), annihilator))
    for n in range(seq.stop - quotient.degree + 1, seq.stop + 1):
        if candidate.apply(seq, n) != 0:
            raise CandidateFailsDivision("candidate %s leaves a residual at %d" % (candidate, n))

    valid = validity_index(candidate, seq)
    logger.info("minimal annihilator %s (degree %d of %d), valid from %d",
                candidate, candidate.degree, annihilator.degree, valid)
    return Recurrence(candidate, valid, family, (seq.start, seq.stop))


def find_minimal_recurrence(handle, annihilator, length=None, retries=TAIL_RETRIES):
    """
    Sample the family from its smallest size and minimize `annihilator`,
    doubling the sample when the tail turns out too short.
    """
    length = length or 3 * annihilator.degree + 10
    for attempt in range(retries + 1):
        seq = oracle_sequence(handle, handle.min_size, handle.min_size + length - 1)
        try:
            return minimal_annihilator(annihilator, seq, handle.describe()), seq
        except CandidateFailsDivision as exc:
            if attempt == retries:
                raise
            logger.warning("%s; retrying with %d terms", exc, 2 * length)
            length *= 2


def root_power_annihilator(annihilator, stride):
    """
    Annihilator whose characteristic roots are the stride-th powers of the
    roots of `annihilator`, multiplicities kept: Res_X(C(X), Z - X^stride).
    """
    char = annihilator.to_char().as_poly(X)
    powered = Poly(resultant(char.as_expr(), Z - X ** stride, X), Z)
    return CharPoly(reversed([int(c) for c in powered.all_coeffs()])).from_char().normalized()


def subsequence_annihilator(annihilator, stride, seq, residue=None, family=None):
    if stride < 2:
        raise ResistanceError("stride must be at least 2, got %d" % stride)
    candidate = root_power_annihilator(annihilator, stride)
    logger.debug("stride %d root-power annihilator %s", stride, candidate)
    return minimal_annihilator(candidate, seq.subsequence(stride, residue), family)
