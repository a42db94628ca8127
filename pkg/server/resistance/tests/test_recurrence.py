# -*- coding: utf-8 -*-
from fractions import Fraction

from django.test import SimpleTestCase

from resistance import families, recurrence
from resistance.errors import NeverValid, NoAnnihilation, ResistanceError, SizeTooSmall
from resistance.families import get_family
from resistance.shift_poly import IndexedSequence, ShiftPoly


def P(text):
    return ShiftPoly.parse(text)


def fibonacci(count):
    values = [1, 1]
    while len(values) < count:
        values.append(values[-1] + values[-2])
    return IndexedSequence(1, values[:count])


class FitTest(SimpleTestCase):

    def test_fit_recurrence(self):
        fib = fibonacci(12)
        self.assertEqual(recurrence.fit_recurrence(fib, 2), (Fraction(1), Fraction(1)))
        self.assertIsNone(recurrence.fit_recurrence(fib, 1))
        self.assertIs(recurrence.fit_recurrence(fibonacci(3), 2), False)

    def test_minimal_recurrence(self):
        self.assertEqual(recurrence.minimal_recurrence(fibonacci(12)), P('Y^2 + Y - 1'))
        self.assertEqual(recurrence.minimal_recurrence(IndexedSequence(0, [3 ** k for k in range(8)])),
                         P('3*Y - 1'))
        self.assertTrue(recurrence.has_recurrence_of_order(fibonacci(12), 2))

    def test_short_window_has_no_recurrence(self):
        with self.assertRaises(NoAnnihilation):
            recurrence.minimal_recurrence(IndexedSequence(0, [1, 2, 4, 9]))

    def test_validity_index(self):
        self.assertEqual(recurrence.validity_index(P('Y - 1'), IndexedSequence(0, [5, 1, 1, 1, 1])), 2)
        with self.assertRaises(NeverValid):
            recurrence.validity_index(P('Y - 1'), IndexedSequence(0, [1, 2, 3]))


class MinimalAnnihilatorTest(SimpleTestCase):

    def test_path(self):
        numerator, denominator = families.dimension_handles(get_family('path'))
        extracted = P('Y^2 - 2*Y + 1')
        rec, seq = recurrence.find_minimal_recurrence(numerator, extracted)
        self.assertEqual(rec.annihilator, P('(Y - 1)^2'))
        self.assertEqual(rec.validity_index, 3)
        self.assertEqual(seq[5], 6)
        rec, _ = recurrence.find_minimal_recurrence(denominator, extracted)
        self.assertEqual(rec.annihilator, P('Y - 1'))
        self.assertEqual(rec.validity_index, 2)

    def test_fan(self):
        numerator, _ = families.dimension_handles(get_family('fan'))
        rec, _ = recurrence.find_minimal_recurrence(numerator, P('Y^2 - 3*Y + 1'))
        self.assertEqual(rec.annihilator, P('Y^2 - 3*Y + 1'))
        self.assertEqual(rec.validity_index, 3)
        self.assertEqual(rec.to_dict()['annihilator_X'], 'X^2 - 3*X + 1')

    def test_wrong_annihilator(self):
        numerator, _ = families.dimension_handles(get_family('path'))
        with self.assertRaises(NoAnnihilation):
            recurrence.find_minimal_recurrence(numerator, P('Y - 2'))

    def test_oracle_sequence_bounds(self):
        numerator, _ = families.dimension_handles(get_family('path'))
        with self.assertRaises(SizeTooSmall):
            recurrence.oracle_sequence(numerator, 0, 5)


class StrideTest(SimpleTestCase):

    def test_root_powers(self):
        self.assertEqual(recurrence.root_power_annihilator(P('Y^2 - 3*Y + 1'), 2), P('Y^2 - 7*Y + 1'))
        self.assertEqual(recurrence.root_power_annihilator(P('1 - Y^2'), 2), P('(Y - 1)^2'))

    def test_subsequence_annihilator(self):
        seq = IndexedSequence(0, [2 ** n + (-2) ** n for n in range(30)])
        rec = recurrence.subsequence_annihilator(P('1 - 4*Y^2'), 2, seq, 0)
        self.assertEqual(rec.annihilator, P('4*Y - 1'))

    def test_stride_must_be_at_least_two(self):
        with self.assertRaises(ResistanceError):
            recurrence.subsequence_annihilator(P('Y - 1'), 1, IndexedSequence(0, [1, 1, 1]))

    def test_ladder_stride_annihilator_kills_the_subsequence(self):
        numerator, _ = families.dimension_handles(get_family('ladder'))
        minimal = P('(Y + 1)*(Y^4 - 4*Y^2 + 1)^2')
        seq = recurrence.oracle_sequence(numerator, numerator.min_size, numerator.min_size + 2 * 37 - 1)
        rec = recurrence.subsequence_annihilator(minimal, 2, seq, 0)
        self.assertEqual(rec.annihilator, P('(Y - 1)*(Y^2 - 4*Y + 1)^2'))
        even = seq.subsequence(2, 0)
        indices = range(rec.validity_index, rec.validity_index + 20)
        self.assertLessEqual(indices[-1], even.stop)
        self.assertEqual([rec.annihilator.apply(even, n) for n in indices], [0] * 20)


class MinimalityTest(SimpleTestCase):

    def test_no_lower_order_fits(self):
        cases = [('path', 0, P('Y^2 - 2*Y + 1')), ('fan', 0, P('Y^2 - 3*Y + 1')),
                 ('fan', 1, P('Y^2 - 3*Y + 1')), ('ladder', 0, P('(Y + 1)*(Y^4 - 4*Y^2 + 1)^2'))]
        for name, part, extracted in cases:
            handle = families.dimension_handles(get_family(name))[part]
            rec, seq = recurrence.find_minimal_recurrence(handle, extracted)
            tail = seq.window(rec.validity_index)
            degree = rec.annihilator.degree
            self.assertTrue(recurrence.has_recurrence_of_order(tail, degree), name)
            self.assertIsNone(recurrence.fit_recurrence(tail, degree - 1), name)
