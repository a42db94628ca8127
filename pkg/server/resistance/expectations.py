# -*- coding: utf-8 -*-
"""
Bundled expectations for the built-in families and the harness comparing
them with a pipeline run.

Hard expectations fail the check. Soft ones (order-sensitive counts, and
printed values known to disagree with the exact oracle) only warn.
"""
import logging
from collections import namedtuple
from fractions import Fraction

import mpmath
from sympy import Rational, fibonacci, lucas, sqrt

from resistance import binet, oracle, recurrence
from resistance.errors import NeverValid
from resistance.expansion import LedgerRow
from resistance.families import get_family
from resistance.shift_poly import ShiftPoly

logger = logging.getLogger(__name__)

PASS = 'pass'
WARN = 'warn'
FAIL = 'fail'


class FixtureResult(namedtuple('FixtureResult', 'family name expected actual status note')):
    __slots__ = ()

    @property
    def ok(self):
        return self.status != FAIL

    def to_dict(self):
        return {
            'family': self.family, 'name': self.name, 'expected': str(self.expected),
            'actual': str(self.actual), 'status': self.status, 'note': self.note,
        }


def overall_status(results):
    statuses = set(r.status for r in results)
    if FAIL in statuses:
        return 'failed'
    if WARN in statuses:
        return 'warned'
    return 'ok'


def _ledger(rows):
    return [LedgerRow(i, pending, mode, parent, r, c, ShiftPoly.parse(coeff))
            for i, pending, mode, parent, r, c, coeff in rows]


def _poly(text):
    return ShiftPoly.parse(text).normalized()


def fib(k):
    return int(fibonacci(k))


def luc(k):
    return int(lucas(k))


def path_resistance(n):
    return Fraction(n - 1)


def linear2tree_resistance(n):
    return Fraction(n - 1, 5) + Fraction(4 * fib(n - 1), 5 * luc(n - 1))


def fan_resistance(i, k):
    return Fraction(fib(2 * (k - 1 - i) + 1) * fib(2 * i - 1), fib(2 * k - 2))


def fan_resistance_printed(i, k):
    return Fraction(fib(2 * (k - 1 - i) + 1) + fib(2 * i - 1), fib(2 * k - 2))


def wheel_resistance(k):
    return Fraction(fib(2 * k - 2) ** 2, fib(4 * k - 4) - 2 * fib(2 * k - 2))


def ladder_resistance(m):
    """
    r(1, 2m) as a radical expression in sqrt(3).
    """
    root = sqrt(3)
    return Rational(m, 2) - 1 - root / 2 + root / (1 - (2 - root) ** m)


def ladder_resistance_printed(m):
    root = sqrt(3)
    return -1 - root + 2 * root / (1 - (2 - root) ** (2 * m))


LADDER_LEDGER = _ledger([
    (1, 0, 'R', 0, 0, 0, '0'),
    (2, 0, 'R', 1, 1, 1, '2*Y'),
    (3, 0, 'C', 1, 1, 3, '-Y'),
    (4, 0, 'R', 2, 1, 1, '3*Y'),
    (5, 0, 'R', 2, 1, 2, 'Y'),
    (6, 0, 'C', 2, 1, 3, '-Y'),
    (7, 0, 'R', 3, 2, 1, 'Y'),
    (2, 0, '0', 4, 1, 1, '3*Y'),
    (8, 0, 'C', 4, 1, 3, '-Y'),
    (2, 0, '0', 5, 1, 1, '-Y'),
    (9, 0, 'C', 5, 1, 3, '-Y'),
    (10, 0, 'C', 6, 1, 1, '-Y'),
    (11, 0, 'R', 6, 2, 1, 'Y'),
    (2, 0, '0', 7, 1, 1, '3*Y'),
    (12, 0, 'C', 7, 1, 2, 'Y'),
    (7, 0, '0', 8, 2, 1, 'Y'),
    (5, 0, '0', 9, 1, 1, '-Y'),
    (5, 0, '0', 10, 2, 1, 'Y'),
    (4, 0, '0', 11, 1, 1, '3*Y'),
    (13, 0, 'C', 11, 1, 2, 'Y'),
    (4, 0, '0', 12, 1, 1, '-Y'),
    (2, 0, '0', 13, 1, 1, '-Y'),
])

PATH_LEDGER = _ledger([
    (1, 0, 'R', 0, 0, 0, '0'),
    (1, 0, '0', 1, 1, 1, '2*Y'),
    (2, 0, 'C', 1, 1, 2, 'Y'),
    (1, 0, '0', 2, 1, 1, '-Y'),
])

FAN_NUMERATOR_LEDGER = _ledger([
    (1, 0, 'R', 0, 0, 0, '0'),
    (1, 0, '0', 1, 1, 1, '3*Y'),
    (2, 0, 'C', 1, 1, 2, 'Y'),
    (1, 0, '0', 2, 1, 1, '-Y'),
])

FAN_DENOMINATOR_LEDGER = _ledger([
    (1, 0, 'R', 0, 0, 0, '0'),
    (2, 0, 'R', 1, 1, 1, '2*Y'),
    (3, 0, 'C', 1, 1, 2, 'Y'),
    (2, 0, '0', 2, 1, 1, '3*Y'),
    (4, 0, 'C', 2, 1, 2, 'Y'),
    (2, 0, '0', 3, 1, 1, '-Y'),
    (2, 0, '0', 4, 1, 1, '-Y'),
])

# Keys per family:
#   ledger        part -> expected ledger rows
#   counts        part -> (ledger rows, families)
#   soft_counts   same, warn only
#   Q_rows/R_rows part -> {row: {col: poly}}, the full sparse row
#   R_cols        part -> {col: [poly per row]}
#   support       part -> reduced support columns
#   annihilator   part -> extracted annihilator
#   minimal       part -> (minimal annihilator, validity index)
#   stride        part -> minimal stride annihilator of the graph sizes
#   sequence      part -> (first index, exact values)
#   tie           parts whose full sequence has no dominant root
#   root          part -> dominant root
#   multiplicity  part -> multiplicity of the dominant root
#   shifted       part -> C'_1..C'_m of the dominant terms
#   ratios        part -> (first index, asymptotic/exact ratios)
FIXTURES = {
    'path': {
        'ledger': {'numerator': PATH_LEDGER},
        'Q_rows': {'numerator': {1: {1: '2*Y', 2: 'Y'}, 2: {1: '-Y'}}},
        'R_rows': {'numerator': {1: {1: '2*Y - Y^2'}, 2: {1: '-Y'}}},
        'annihilator': {'numerator': 'Y^2 - 2*Y + 1'},
        'minimal': {'numerator': ('(Y - 1)^2', 3), 'denominator': ('Y - 1', 2)},
    },
    'linear2tree': {
        'counts': {'numerator': (21, 10)},
        'support': {'numerator': [2, 3]},
        'minimal': {'numerator': ('(Y + 1)*(Y^2 - 3*Y + 1)^2', 7),
                    'denominator': ('Y^2 - 3*Y + 1', 5)},
    },
    'linear3tree': {
        'soft_counts': {'numerator': (201, 80)},
        'support': {'numerator': [3, 6, 48]},
        'annihilator': {'numerator': '(Y - 1)^2*(Y^4 - 4*Y^3 - Y^2 - 4*Y + 1)^2'
                                     '*(Y^4 + 3*Y^3 + 6*Y^2 + 3*Y + 1)'
                                     '*(2*Y^7 + 20*Y^5 - 48*Y^4 - 6*Y^3 - Y^2 + 6*Y - 1)'},
        'minimal': {
            'numerator': ('Y^14 - 7*Y^13 + 7*Y^12 + 98*Y^10 - 56*Y^9 + 56*Y^8 - 198*Y^7 + 56*Y^6'
                          ' - 56*Y^5 + 98*Y^4 + 7*Y^2 - 7*Y + 1', 18),
            'denominator': ('Y^5 - 5*Y^4 + 3*Y^3 - 3*Y^2 + 5*Y - 1', 10),
        },
        'sequence': {
            'numerator': (8, [127920, 606530, 2858661, 13426688, 62846424, 293216196,
                              1364289416, 6331841700, 29319607080, 135483247712,
                              624865625995]),
            'denominator': (1, [4, 19, 46, 110, 336, 1488, 6580, 29085, 128544, 568101,
                                2510716, 11096064]),
        },
        'root': {'numerator': '4.4194803657875665', 'denominator': '4.4194803657875665'},
        'multiplicity': {'numerator': 2, 'denominator': 1},
        'shifted': {'numerator': ['0.816459', '0.0630896'], 'denominator': ['0.199855']},
        'ratios': {'numerator': (8, ['1.000670', '0.999617', '1.000069', '1.000041',
                                     '0.999965', '1.000010', '1.000002', '0.999997'])},
    },
    'ladder': {
        'ledger': {'numerator': LADDER_LEDGER},
        'Q_rows': {'numerator': {1: {2: '2*Y', 3: '-Y'}}},
        'R_rows': {'numerator': {9: {5: '-Y'}, 12: {4: '-Y'}}},
        'support': {'numerator': [4, 5, 13]},
        'annihilator': {'numerator': 'Y^14 - 9*Y^12 + 27*Y^10 - 35*Y^8 + 35*Y^6 - 27*Y^4'
                                     ' + 9*Y^2 - 1'},
        'minimal': {'numerator': ('(Y + 1)*(Y^4 - 4*Y^2 + 1)^2', 11),
                    'denominator': ('(Y^2 - 1)*(Y^4 - 4*Y^2 + 1)^2', 13)},
        'stride': {'numerator': '(Y - 1)*(Y^2 - 4*Y + 1)^2', 'denominator': 'Y^2 - 4*Y + 1'},
        'sequence': {'numerator': (1, [2, 4, 7, 21, 35, 105, 160, 495])},
        'tie': ['numerator', 'denominator'],
    },
    'fan': {
        'ledger': {'numerator': FAN_NUMERATOR_LEDGER, 'denominator': FAN_DENOMINATOR_LEDGER},
        'R_cols': {'denominator': {2: ['2*Y - Y^2', '3*Y - Y^2', '-Y', '-Y']}},
        'annihilator': {'numerator': 'Y^2 - 3*Y + 1', 'denominator': 'Y^2 - 3*Y + 1'},
        'minimal': {'numerator': ('Y^2 - 3*Y + 1', 3), 'denominator': ('Y^2 - 3*Y + 1', 4)},
    },
    'wheel': {
        'annihilator': {'numerator': 'Y^2 - 3*Y + 1'},
        'minimal': {'numerator': ('Y^2 - 3*Y + 1', 3),
                    'denominator': ('(Y - 1)*(Y^2 - 3*Y + 1)', 6)},
        'sequence': {'denominator': (1, [-1, 8, 16, 45, 121])},
    },
    'corrugated2tree': {
        'soft_counts': {'numerator': (834, 423)},
        'soft_support_size': {'numerator': 26},
    },
}

FIXTURE_STAGES = {
    'corrugated2tree': 'expand,reduce',
}

ASYMPTOTIC_DIFFERENCE_TOLERANCE = mpmath.mpf('1e-9')

# Upper bounds on |exact difference - 1/14| for the linear 3-tree.
EXACT_DIFFERENCE_BOUNDS = [(25, '1e-8'), (30, '1e-9'), (35, '1e-11'), (40, '1e-12')]
EXACT_DIFFERENCE_RANGE = range(25, 41)


def difference_envelope(n):
    """
    Ten times the tightest bound of EXACT_DIFFERENCE_BOUNDS at or below n.
    """
    bound = [b for m, b in EXACT_DIFFERENCE_BOUNDS if m <= n][-1]
    return 10 * Fraction(bound)


class FixtureCheck(object):

    def __init__(self, family):
        self.family = family
        self.results = []

    def record(self, name, expected, actual, status, note=''):
        result = FixtureResult(self.family, name, expected, actual, status, note)
        if status == FAIL:
            logger.error("%s %s: expected %s, got %s %s", self.family, name, expected, actual, note)
        elif status == WARN:
            logger.warning("%s %s: expected %s, got %s %s", self.family, name, expected, actual, note)
        self.results.append(result)
        return result

    def equal(self, name, expected, actual, soft=False, note=''):
        if expected == actual:
            return self.record(name, expected, actual, PASS)
        return self.record(name, expected, actual, WARN if soft else FAIL, note)

    def close(self, name, expected, actual, tolerance):
        expected = mpmath.mpf(expected)
        good = abs(actual - expected) <= tolerance * max(1, abs(expected))
        return self.record(name, expected, mpmath.nstr(actual, 12), PASS if good else FAIL)

    def mismatches(self, name, pairs, soft=False, note=''):
        """
        `pairs` yields (label, expected, actual); one result for the lot.
        """
        bad = [(label, expected, actual) for label, expected, actual in pairs if expected != actual]
        if not bad:
            return self.record(name, 'all equal', 'all equal', PASS)
        label, expected, actual = bad[0]
        return self.record(name, expected, actual, WARN if soft else FAIL,
                           "%d mismatches, first at %s %s" % (len(bad), label, note))


def _sparse_row(system, i):
    return dict((j, p) for j, p in enumerate(system.row(i), 1) if p)


def _check_systems(check, fixtures, result):
    for part_name, rows in sorted(fixtures.get('ledger', {}).items()):
        part = result.parts[part_name]
        if part.expansion is None:
            continue
        actual = part.expansion.ledger
        check.equal('%s ledger length' % part_name, len(rows), len(actual))
        check.mismatches('%s ledger' % part_name,
                         (('row %d' % k, e, a) for k, (e, a) in enumerate(zip(rows, actual), 1)))

    for key, soft in (('counts', False), ('soft_counts', True)):
        for part_name, (expansions, count) in sorted(fixtures.get(key, {}).items()):
            part = result.parts[part_name]
            if part.expansion is None:
                continue
            note = '' if not soft else 'counts depend on the expansion order'
            check.equal('%s expansions' % part_name, expansions, part.expansion.expansions, soft, note)
            check.equal('%s families' % part_name, count, len(part.expansion.families), soft, note)

    for key, attr in (('Q_rows', 'expansion'), ('R_rows', 'reduced')):
        for part_name, rows in sorted(fixtures.get(key, {}).items()):
            holder = getattr(result.parts[part_name], attr)
            if holder is None:
                continue
            system = holder.Q if attr == 'expansion' else holder.R
            for i, expected in sorted(rows.items()):
                expected = dict((j, ShiftPoly.parse(p)) for j, p in expected.items())
                check.equal('%s %s row %d' % (part_name, key[0], i), expected, _sparse_row(system, i))

    for part_name, cols in sorted(fixtures.get('R_cols', {}).items()):
        reduced = result.parts[part_name].reduced
        if reduced is None:
            continue
        for j, expected in sorted(cols.items()):
            actual = [reduced.R[i, j] for i in range(1, reduced.R.size + 1)]
            check.equal('%s R column %d' % (part_name, j),
                        [ShiftPoly.parse(p) for p in expected], actual)

    for part_name, support in sorted(fixtures.get('support', {}).items()):
        reduced = result.parts[part_name].reduced
        if reduced is not None:
            check.equal('%s support' % part_name, support, reduced.support)
    for part_name, size in sorted(fixtures.get('soft_support_size', {}).items()):
        reduced = result.parts[part_name].reduced
        if reduced is not None:
            check.equal('%s support size' % part_name, size, len(reduced.support), soft=True)


def _check_recurrences(check, fixtures, result):
    for part_name, text in sorted(fixtures.get('annihilator', {}).items()):
        part = result.parts[part_name]
        if part.annihilator is not None:
            check.equal('%s annihilator' % part_name, _poly(text), part.annihilator)

    for part_name, (text, validity) in sorted(fixtures.get('minimal', {}).items()):
        rec = result.parts[part_name].recurrence
        if rec is None:
            continue
        check.equal('%s minimal annihilator' % part_name, _poly(text), rec.annihilator)
        check.equal('%s validity index' % part_name, validity, rec.validity_index)

    for part_name, text in sorted(fixtures.get('stride', {}).items()):
        subsequences = result.parts[part_name].subsequences
        if subsequences:
            check.equal('%s stride annihilator' % part_name, _poly(text), subsequences[0].annihilator)

    for part_name, (start, values) in sorted(fixtures.get('sequence', {}).items()):
        handle = result.parts[part_name].handle
        seq = recurrence.oracle_sequence(handle, start, start + len(values) - 1)
        check.equal('%s sequence from %d' % (part_name, start), values, list(seq))


def _check_binet(check, fixtures, result):
    for part_name in fixtures.get('tie', []):
        part = result.parts[part_name]
        if part.binet is not None:
            check.equal('%s dominance tie' % part_name, True, part.tie is not None)

    for part_name, root in sorted(fixtures.get('root', {}).items()):
        form = result.parts[part_name].asymptotic
        if form is not None:
            check.close('%s dominant root' % part_name, root, mpmath.re(form.root), mpmath.mpf('1e-15'))
    for part_name, multiplicity in sorted(fixtures.get('multiplicity', {}).items()):
        form = result.parts[part_name].asymptotic
        if form is not None:
            check.equal('%s dominant multiplicity' % part_name, multiplicity, form.multiplicity)

    for part_name, coeffs in sorted(fixtures.get('shifted', {}).items()):
        form = result.parts[part_name].asymptotic
        if form is None:
            continue
        actual = form.shifted_coefficients()
        for j, (expected, value) in enumerate(zip(coeffs, actual), 1):
            check.close("%s C'_%d" % (part_name, j), expected, mpmath.re(value), mpmath.mpf('1e-5'))

    for part_name, (start, ratios) in sorted(fixtures.get('ratios', {}).items()):
        table = dict(result.parts[part_name].ratios)
        for n, expected in enumerate(ratios, start):
            if n in table:
                check.close('%s ratio at %d' % (part_name, n), expected, mpmath.re(table[n]),
                            mpmath.mpf('1e-6'))


def _check_closed_forms(check, spec):
    name = spec.name
    if name == 'path':
        check.mismatches('r(1,n) = n - 1, n = 3..50',
                         (('n=%d' % n, path_resistance(n), binet.resistance_exact(spec, n))
                          for n in range(3, 51)))
    elif name == 'linear2tree':
        check.mismatches('r(1,n) Fibonacci/Lucas form, n = 6..25',
                         (('n=%d' % n, linear2tree_resistance(n), binet.resistance_exact(spec, n))
                          for n in range(6, 26)))
    elif name == 'fan':
        check.mismatches('r(1,k) product form, k = 5..20',
                         (('k=%d' % k, fan_resistance(1, k), binet.resistance_exact(spec, k))
                          for k in range(5, 21)))
        check.mismatches('r(i,k) product form, all i, k = 5..12',
                         (('i=%d k=%d' % (i, k), fan_resistance(i, k), oracle.bapat_ratio(spec, k, i, k))
                          for k in range(5, 13) for i in range(1, k)))
        check.mismatches('r(i,k) printed sum form',
                         (('i=%d k=%d' % (i, k), fan_resistance_printed(i, k),
                           oracle.bapat_ratio(spec, k, i, k)) for k in range(5, 13) for i in range(1, k)),
                         soft=True, note='the product F_{2(k-1-i)+1} F_{2i-1} is the verified form')
    elif name == 'wheel':
        check.mismatches('r(1,k), k = 5..20',
                         (('k=%d' % k, wheel_resistance(k), binet.resistance_exact(spec, k))
                          for k in range(5, 21)))
        check.mismatches('r(i,k), all i, k = 6..15',
                         (('i=%d k=%d' % (i, k), wheel_resistance(k), oracle.bapat_ratio(spec, k, i, k))
                          for k in range(6, 16) for i in range(1, k)))
    elif name == 'ladder':
        _check_ladder_forms(check, spec)


def _radical_equals(expr, value, digits=60):
    return abs((expr - Rational(value.numerator, value.denominator)).evalf(digits)) < Rational(1, 10 ** 40)


def _check_ladder_forms(check, spec):
    exact = [(m, binet.resistance_exact(spec, 2 * m)) for m in range(3, 13)]
    check.mismatches('r(1,2m) radical form, m = 3..12',
                     (('m=%d' % m, True, _radical_equals(ladder_resistance(m), value)) for m, value in exact))
    check.mismatches('r(1,2m) printed radical form',
                     (('m=%d' % m, True, _radical_equals(ladder_resistance_printed(m), value))
                      for m, value in exact),
                     soft=True, note='m/2 - 1 - sqrt(3)/2 + sqrt(3)/(1 - (2 - sqrt(3))^m) is the verified form')


def _check_printed_ladder(check, result):
    """
    The printed ladder recursion and stride polynomial, against the data.
    """
    numerator = result.numerator
    if numerator.sequence is None:
        return
    printed = _poly('(Y - 1)*(Y + 1)*(Y^4 - 4*Y^2 + 1)^2')
    try:
        valid = recurrence.validity_index(printed, numerator.sequence)
    except NeverValid:
        valid = None
    check.equal('printed numerator recursion validity', 10, valid, soft=True,
                note='(Y - 1)(Y + 1)(Y^4 - 4Y^2 + 1)^2 is not minimal and holds from a later index')
    if numerator.subsequences:
        check.equal('printed stride annihilator', _poly('(Y - 1)*(Y^4 - 4*Y^2 + 1)^2'),
                    numerator.subsequences[0].annihilator, soft=True,
                    note='the printed polynomial is in the unstrided shift')


def _check_differences(check, spec, result):
    report = result.resistance
    if report is None:
        return
    target = mpmath.mpf(1) / 14
    if report.differences:
        worst = max(abs(d - target) for _, d in report.differences)
        good = worst < ASYMPTOTIC_DIFFERENCE_TOLERANCE
        check.record('asymptotic difference to 1/14, n = %d..%d'
                     % (report.differences[0][0], report.differences[-1][0]),
                     '< %s' % ASYMPTOTIC_DIFFERENCE_TOLERANCE, mpmath.nstr(worst, 5), PASS if good else FAIL)
    exact = dict((n, binet.resistance_exact(spec, n))
                 for n in range(EXACT_DIFFERENCE_RANGE[0], EXACT_DIFFERENCE_RANGE[-1] + 2))
    deviations = dict((n, abs(exact[n + 1] - exact[n] - Fraction(1, 14))) for n in EXACT_DIFFERENCE_RANGE)
    for n, bound in EXACT_DIFFERENCE_BOUNDS:
        deviation = deviations[n]
        good = deviation < Fraction(bound)
        check.record('exact difference to 1/14 at n=%d' % n, '< %s' % bound,
                     mpmath.nstr(mpmath.mpf(deviation.numerator) / deviation.denominator, 5),
                     PASS if good else FAIL)
    outside = [n for n in EXACT_DIFFERENCE_RANGE if deviations[n] >= difference_envelope(n)]
    check.record('exact differences inside the 1/14 envelope, n = %d..%d'
                 % (EXACT_DIFFERENCE_RANGE[0], EXACT_DIFFERENCE_RANGE[-1]),
                 'all inside', 'outside at %s' % outside if outside else 'all inside',
                 FAIL if outside else PASS)


def check_fixtures(family, result=None, precision=None):
    """
    Itemized comparison of a run of `family` against its bundled fixtures.
    Runs the pipeline when no result is given.
    """
    from resistance.pipeline import RunConfig, run

    if result is None:
        config = RunConfig(family=family, stages=FIXTURE_STAGES.get(family, 'all'),
                           precision=precision, stretch=True)
        result = run(config)
    fixtures = FIXTURES.get(family, {})
    spec = get_family(family)
    check = FixtureCheck(family)

    _check_systems(check, fixtures, result)
    _check_recurrences(check, fixtures, result)
    _check_binet(check, fixtures, result)
    if 'resistance' in result.completed:
        _check_closed_forms(check, spec)
    if family == 'ladder':
        _check_printed_ladder(check, result)
    if family == 'linear3tree':
        _check_differences(check, spec, result)

    logger.info("%s: %d fixtures, %s", family, len(check.results), overall_status(check.results))
    return check.results
