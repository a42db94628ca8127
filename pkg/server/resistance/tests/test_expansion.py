# -*- coding: utf-8 -*-
from django.test import SimpleTestCase

from resistance import expansion, families
from resistance.errors import CapExceeded, SizeTooSmall
from resistance.expansion import EXHAUSTIVE, IdentitySystem, LedgerRow, laplace_expand, ledger_to_Q
from resistance.expectations import FAN_DENOMINATOR_LEDGER, LADDER_LEDGER, PATH_LEDGER
from resistance.families import get_family
from resistance.shift_poly import ShiftPoly


def P(text):
    return ShiftPoly.parse(text)


def numerator(name):
    return families.dimension_handles(get_family(name))[0]


class LaplaceExpandTest(SimpleTestCase):

    def test_ladder_ledger(self):
        result = laplace_expand(numerator('ladder'), 5)
        self.assertEqual(result.ledger, LADDER_LEDGER)
        self.assertEqual(len(result.families), 13)
        self.assertEqual(result.expansions, 22)
        self.assertEqual(result.Q.size, 13)
        self.assertEqual(result.Q.row(1), [ShiftPoly(), P('2*Y'), P('-Y')] + [ShiftPoly()] * 10)
        self.assertEqual(result.degenerate, [])

    def test_path_ledger(self):
        ledger, found, q = laplace_expand(numerator('path'), 3)
        self.assertEqual(ledger, PATH_LEDGER)
        self.assertEqual(len(found), 2)
        self.assertEqual(q, IdentitySystem([[P('2*Y'), P('Y')], [P('-Y'), ShiftPoly()]]))

    def test_fan_denominator_ledger(self):
        _, last = families.dimension_handles(get_family('fan'))
        self.assertEqual(laplace_expand(last, 4).ledger, FAN_DENOMINATOR_LEDGER)

    def test_ledger_identities_hold(self):
        for name in ('path', 'linear2tree', 'ladder'):
            spec = get_family(name)
            result = laplace_expand(numerator(name), spec.min_size)
            sizes = range(spec.min_size + 1, spec.min_size + 7)
            self.assertEqual(expansion.verify_identities(result.Q, result.families, sizes), [], name)

    def test_exhaustive_policy_is_sound(self):
        result = laplace_expand(numerator('ladder'), 5, policy=EXHAUSTIVE)
        self.assertEqual(expansion.verify_identities(result.Q, result.families, range(6, 12)), [])

    def test_family_cap(self):
        with self.assertRaises(CapExceeded) as caught:
            laplace_expand(numerator('ladder'), 5, family_cap=5)
        self.assertEqual(caught.exception.cap, 5)

    def test_probe_too_small(self):
        with self.assertRaises(SizeTooSmall):
            laplace_expand(numerator('path'), 0)

    def test_unknown_policy(self):
        with self.assertRaises(ValueError):
            expansion.LaplaceExpander(numerator('path'), 3, policy='greedy')

    def test_ledger_to_q_sums_repeated_children(self):
        ledger = [
            LedgerRow(1, 0, 'R', 0, 0, 0, ShiftPoly()),
            LedgerRow(2, 0, 'C', 1, 1, 1, P('Y')),
            LedgerRow(2, 0, '0', 1, 1, 2, P('2*Y')),
        ]
        self.assertEqual(ledger_to_Q(ledger)[1, 2], P('3*Y'))

    def test_ledger_row_serialization(self):
        row = LADDER_LEDGER[7]
        self.assertTrue(row.is_alias)
        self.assertEqual(LedgerRow.from_dict(row.to_dict()), row)


class DeduplicationTest(SimpleTestCase):

    def test_exhaustive_retains_no_equal_families(self):
        for name in sorted(families.BUILTIN_FAMILIES):
            if name in families.STRETCH_FAMILIES:
                continue
            spec = get_family(name)
            result = laplace_expand(numerator(name), spec.min_size, policy=EXHAUSTIVE)
            self.assertTrue(result.deduplicated, name)
            self.assertEqual(expansion.equal_family_pairs(result.families, spec.min_size), [], name)

    def test_exhaustive_fan_denominator(self):
        _, last = families.dimension_handles(get_family('fan'))
        result = laplace_expand(last, 4, policy=EXHAUSTIVE)
        self.assertEqual(expansion.equal_family_pairs(result.families, 4), [])

    def test_published_keeps_equal_pairs(self):
        result = laplace_expand(numerator('linear2tree'), 5)
        self.assertFalse(result.deduplicated)
        self.assertEqual(len(result.families), 10)
        self.assertEqual(len(expansion.equal_family_pairs(result.families, 5)), 4)

        result = laplace_expand(numerator('ladder'), 5)
        self.assertEqual(expansion.equal_family_pairs(result.families, 5), [(3, 8)])

    def test_pairs_are_ordered(self):
        result = laplace_expand(numerator('linear2tree'), 5)
        for a, b in expansion.equal_family_pairs(result.families, 5):
            self.assertLess(a, b)
            self.assertTrue(families.families_equal(result.families[b - 1], result.families[a - 1], 5))
