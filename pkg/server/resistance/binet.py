# -*- coding: utf-8 -*-
"""
Binet forms s(n) = sum_r sum_j c(r, j) n^j r^n of recurrent determinant
sequences, their dominant-root asymptotics, and resistance distance built
from the numerator and denominator families.
"""
import logging
from fractions import Fraction

import mpmath
from mpmath.libmp.libhyper import NoConvergence
from sympy import Rational, binomial

from resistance.errors import (
    DominanceTie, IllConditionedFit, RootIsolationFailure, SizeTooSmall, ZeroDenominator)
from resistance.families import bapat_handles
from resistance.oracle import det_exact
from resistance.shift_poly import X

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 50
MIN_PRECISION = 30
GUARD_DIGITS = 20
CHECK_SPAN = 25


def _mpf(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, Rational):
        return mpmath.mpf(int(value.p)) / int(value.q)
    return mpmath.mpf(value)


def _real(value, tolerance):
    if isinstance(value, mpmath.mpc) and abs(value.imag) <= tolerance * max(1, abs(value.real)):
        return value.real
    return value


def _key(root):
    value = mpmath.mpc(root)
    return (-abs(value), -value.real, -value.imag)


def isolate_roots(annihilator, precision):
    """
    Distinct characteristic roots with multiplicities. Real roots come from
    exact isolating intervals refined by bisection; the others from
    simultaneous iteration, accepted only under the requested error bound.
    """
    with mpmath.workdps(precision + GUARD_DIGITS):
        return sorted(_isolate(annihilator, precision), key=lambda item: _key(item[0]))


def _isolate(annihilator, precision):
    char = annihilator.to_char().as_poly(X)
    eps = Rational(1, 10 ** (precision + 5))
    tolerance = mpmath.mpf(10) ** (-precision)
    roots = []
    for factor, multiplicity in char.sqf_list()[1]:
        if factor.degree() == 0:
            continue
        reals = []
        for (a, b), _ in factor.intervals():
            a, b = factor.refine_root(a, b, eps=eps)
            reals.append((_mpf(a) + _mpf(b)) / 2)
        try:
            approx, error = mpmath.polyroots(
                [int(c) for c in factor.all_coeffs()], maxsteps=500,
                extraprec=2 * precision, error=True)
        except NoConvergence:
            raise RootIsolationFailure("no convergence for the roots of %s" % factor.as_expr())
        if error > tolerance:
            raise RootIsolationFailure("root error bound %s for %s" % (mpmath.nstr(error, 5), factor.as_expr()))
        approx = list(approx)
        for value in reals:
            approx.pop(min(range(len(approx)), key=lambda k: abs(approx[k] - value)))
        roots.extend((value, multiplicity) for value in reals)
        roots.extend((mpmath.mpc(value), multiplicity) for value in approx)
    return roots


class BinetForm(object):
    """
    Coefficients are in the power basis n^j r^n over the sequence index n.
    `start_shift` only records the origin used when the dominant terms are
    reported in binomial form.
    """

    def __init__(self, roots, coeffs, start_shift=0, precision=DEFAULT_PRECISION, fit_range=None):
        self.roots = roots
        self.coeffs = coeffs
        self.start_shift = start_shift
        self.precision = precision
        self.fit_range = fit_range

    @property
    def degree(self):
        return sum(multiplicity for _, multiplicity in self.roots)

    def evaluate(self, n):
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            total = mpmath.mpf(0)
            for (root, _), coeffs in zip(self.roots, self.coeffs):
                power = root ** n
                total += sum(c * mpmath.mpf(n) ** j * power for j, c in enumerate(coeffs))
            return _real(total, mpmath.mpf(10) ** (-self.precision))

    def to_dict(self):
        digits = self.precision
        return {
            'precision': self.precision,
            'start_shift': self.start_shift,
            'fit_range': list(self.fit_range) if self.fit_range else None,
            'roots': [{'value': mpmath.nstr(root, digits), 'multiplicity': multiplicity,
                       'coeffs': [mpmath.nstr(c, digits) for c in coeffs]}
                      for (root, multiplicity), coeffs in zip(self.roots, self.coeffs)],
        }


def binet_fit(rec, seq, precision=DEFAULT_PRECISION, start_shift=0):
    if precision < MIN_PRECISION:
        raise ValueError("precision must be at least %d digits" % MIN_PRECISION)
    with mpmath.workdps(precision + GUARD_DIGITS):
        roots = isolate_roots(rec.annihilator, precision)
        columns = [(k, j) for k, (_, multiplicity) in enumerate(roots) for j in range(multiplicity)]
        first = max(rec.validity_index, seq.start)
        indices = range(first, first + len(columns))
        if indices and indices[-1] > seq.stop:
            raise IllConditionedFit("need %d terms from %d, sequence ends at %d"
                                    % (len(columns), first, seq.stop))

        system = mpmath.matrix([[mpmath.mpf(n) ** j * roots[k][0] ** n for k, j in columns]
                                for n in indices])
        values = mpmath.matrix([seq[n] for n in indices])
        try:
            solution = mpmath.lu_solve(system, values) if columns else []
        except ZeroDivisionError:
            raise IllConditionedFit("confluent Vandermonde system is singular at %d digits" % precision)

        coeffs = [[] for _ in roots]
        for (k, j), value in zip(columns, solution):
            coeffs[k].append(_real(value, mpmath.mpf(10) ** (-precision)))
        form = BinetForm(roots, coeffs, start_shift, precision, (first, first + len(columns) - 1))

        bound = mpmath.mpf(10) ** (-precision + 10)
        for n in range(first, min(seq.stop, first + CHECK_SPAN) + 1):
            exact = seq[n]
            if abs(form.evaluate(n) - exact) > bound * max(1, abs(exact)):
                raise IllConditionedFit("fit misses the term at %d; raise the precision" % n)
    logger.info("Binet form of degree %d fitted on %s", form.degree, form.fit_range)
    return form


class AsymptoticForm(object):

    def __init__(self, root, coeffs, start_shift=0, precision=DEFAULT_PRECISION):
        self.root = root
        self.coeffs = coeffs
        self.start_shift = start_shift
        self.precision = precision

    @property
    def multiplicity(self):
        return len(self.coeffs)

    def evaluate(self, n):
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            return _real(sum(c * mpmath.mpf(n) ** j for j, c in enumerate(self.coeffs)) * self.root ** n,
                         mpmath.mpf(10) ** (-self.precision))

    def shifted_coefficients(self):
        """
        C'_1..C'_m with the dominant part equal to
        sum_j C'_j binom(n - s + j - 1, j - 1) r^n, s the start shift.
        """
        m, s = self.multiplicity, self.start_shift
        with mpmath.workdps(self.precision + GUARD_DIGITS):
            points = range(s, s + m)
            basis = mpmath.matrix([[int(binomial(n - s + j, j)) for j in range(m)] for n in points])
            values = mpmath.matrix([sum(c * mpmath.mpf(n) ** j for j, c in enumerate(self.coeffs))
                                    for n in points])
            return list(mpmath.lu_solve(basis, values))

    def ratios(self, seq, indices):
        return [(n, self.evaluate(n) / seq[n]) for n in indices]

    def to_dict(self):
        digits = self.precision
        return {
            'root': mpmath.nstr(self.root, digits),
            'multiplicity': self.multiplicity,
            'start_shift': self.start_shift,
            'coeffs': [mpmath.nstr(c, digits) for c in self.coeffs],
            'shifted_coeffs': [mpmath.nstr(c, digits) for c in self.shifted_coefficients()],
        }


def asymptotic_form(bf):
    """
    Truncation of `bf` to the terms of its unique root of maximal modulus.
    """
    with mpmath.workdps(bf.precision + GUARD_DIGITS):
        moduli = [abs(root) for root, _ in bf.roots]
        top = max(moduli)
        tolerance = mpmath.mpf(10) ** (-(bf.precision // 2)) * max(1, top)
        dominant = [k for k, modulus in enumerate(moduli) if top - modulus <= tolerance]
        if len(dominant) > 1:
            raise DominanceTie([bf.roots[k][0] for k in dominant])
        k = dominant[0]
        return AsymptoticForm(bf.roots[k][0], list(bf.coeffs[k]), bf.start_shift, bf.precision)


def resistance_exact(spec, n, denom_choice=None):
    """
    Det L({1,n}|{1,n}) / Det L(1|1) (or L(n|n)) as an exact fraction.
    """
    numerator, denominator = bapat_handles(spec, denom_choice)
    if n < numerator.min_size:
        raise SizeTooSmall("%s needs at least %d nodes" % (spec.name, numerator.min_size))
    bottom = det_exact(denominator.instantiate(n))
    if bottom == 0:
        raise ZeroDenominator("%s at n=%d has no spanning tree" % (spec.name, n))
    return Fraction(det_exact(numerator.instantiate(n)), bottom)


def resistance_asymptotic_difference(num_bf, den_bf, n_range, num_shift=2, den_shift=1):
    """
    R(n+1) - R(n) with R(n) = num(n - num_shift) / den(n - den_shift).
    Accepts Binet or asymptotic forms.
    """
    precision = max(num_bf.precision, den_bf.precision)
    with mpmath.workdps(precision + GUARD_DIGITS):
        def ratio(n):
            return num_bf.evaluate(n - num_shift) / den_bf.evaluate(n - den_shift)
        return [(n, ratio(n + 1) - ratio(n)) for n in n_range]


def exact_differences(spec, n_range, denom_choice=None):
    return [(n, resistance_exact(spec, n + 1, denom_choice) - resistance_exact(spec, n, denom_choice))
            for n in n_range]


class ResistanceReport(object):

    def __init__(self, family, exact, asymptotic=None, differences=None, exact_differences=None):
        self.family = family
        self.exact = exact
        self.asymptotic = asymptotic or {}
        self.differences = differences or []
        self.exact_differences = exact_differences or []

    @property
    def limit_estimate(self):
        if self.differences:
            return self.differences[-1][1]
        if self.exact_differences:
            return self.exact_differences[-1][1]
        return None

    def to_dict(self, digits=DEFAULT_PRECISION):
        def fmt(value):
            if isinstance(value, Fraction):
                return str(value)
            return mpmath.nstr(value, digits)
        limit = self.limit_estimate
        return {
            'family': self.family,
            'exact': [{'n': n, 'resistance': str(r)} for n, r in self.exact],
            'asymptotic': dict((part, form.to_dict()) for part, form in sorted(self.asymptotic.items())),
            'differences': [{'n': n, 'difference': fmt(d)} for n, d in self.differences],
            'exact_differences': [{'n': n, 'difference': str(d)} for n, d in self.exact_differences],
            'limit_estimate': None if limit is None else fmt(limit),
        }
