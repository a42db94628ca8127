# -*- coding: utf-8 -*-
from django.test import SimpleTestCase

from resistance import expansion, families, reduction
from resistance.errors import DegenerateSystem, SupportTooLarge, VacuousSystem
from resistance.expansion import IdentitySystem, laplace_expand
from resistance.families import get_family
from resistance.reduction import ONE, ReducedSystem, solve_identity_system, system_reduce
from resistance.shift_poly import ShiftPoly


def P(text):
    return ShiftPoly.parse(text)


def expand(name, probe):
    return laplace_expand(families.dimension_handles(get_family(name))[0], probe)


class SystemReduceTest(SimpleTestCase):

    def test_path(self):
        reduced = system_reduce(expand('path', 3).Q)
        self.assertEqual(reduced.R, IdentitySystem([[P('2*Y - Y^2'), ShiftPoly()], [P('-Y'), ShiftPoly()]]))
        self.assertEqual(reduced.support, [1])
        self.assertEqual(reduced.eliminated, [2])

    def test_ladder(self):
        reduced = system_reduce(expand('ladder', 5).Q)
        self.assertEqual(reduced.support, [4, 5, 13])
        self.assertEqual(reduced.R.row(9), [ShiftPoly()] * 4 + [P('-Y')] + [ShiftPoly()] * 8)
        self.assertEqual(reduced.R.row(12), [ShiftPoly()] * 3 + [P('-Y')] + [ShiftPoly()] * 9)

    def test_every_step_preserves_the_identities(self):
        result = expand('ladder', 5)
        failures = []

        def check(k, system):
            failures.extend(expansion.verify_identities(system, result.families, range(16, 20)))

        system_reduce(result.Q, on_step=check)
        self.assertEqual(failures, [])

    def test_input_is_left_alone(self):
        q = expand('path', 3).Q
        before = q.copy()
        system_reduce(q)
        self.assertEqual(q, before)


class AnnihilatorTest(SimpleTestCase):

    def test_ladder(self):
        reduced = system_reduce(expand('ladder', 5).Q)
        self.assertEqual(solve_identity_system(reduced),
                         P('Y^14 - 9*Y^12 + 27*Y^10 - 35*Y^8 + 35*Y^6 - 27*Y^4 + 9*Y^2 - 1'))

    def test_path_and_fan(self):
        self.assertEqual(solve_identity_system(system_reduce(expand('path', 3).Q)), P('Y^2 - 2*Y + 1'))
        self.assertEqual(solve_identity_system(system_reduce(expand('fan', 4).Q)), P('Y^2 - 3*Y + 1'))

    def test_linear2tree_support(self):
        reduced = system_reduce(expand('linear2tree', 5).Q)
        self.assertEqual(reduced.support, [2, 3])
        self.assertEqual(solve_identity_system(reduced), P('(Y + 1)*(Y^2 - 3*Y + 1)^2'))

    def test_small_formulas(self):
        self.assertEqual(reduction.annihilator_1x1(P('1'), P('2*Y')), P('1 - 2*Y'))
        with self.assertRaises(VacuousSystem):
            reduction.annihilator_1x1(P('Y'), P('Y'))
        # x = Yx + Yy, y = Yx
        self.assertEqual(reduction.annihilator_2x2(ONE, P('Y'), P('Y'), ONE, P('Y'), ShiftPoly()),
                         P('1 - Y - Y^2'))

    def test_three_variable_formula_matches_elimination(self):
        a, b, c, d, e, f, g, h, i = [P(t) for t in ('Y', '2*Y', '0', 'Y', '0', '-Y', '0', 'Y', 'Y^2')]
        system = [[a, b, c], [d, e, f], [g, h, i]]
        (x1, x2), (x3, x4) = reduction.eliminate_last(system)
        direct = reduction.annihilator_3x3(a, b, c, d, e, f, g, h, i)
        via_last = reduction.annihilator_2x2(ONE, x1, x2, ONE, x3, x4)
        # both are multiples of det(I - A)
        det = (ONE - a) * ((ONE - e) * (ONE - i) - f * h) - b * (d * (ONE - i) + f * g) \
            - c * (d * h + (ONE - e) * g)
        self.assertTrue(det.divides(direct)[0])
        self.assertTrue(det.divides(via_last)[0])

    def test_errors(self):
        with self.assertRaises(DegenerateSystem):
            solve_identity_system(ReducedSystem(IdentitySystem.zeros(3), []))
        reduced = system_reduce(expand('ladder', 5).Q)
        with self.assertRaises(SupportTooLarge):
            solve_identity_system(reduced, max_support=2)

    def test_wheel_fixture(self):
        fixture = reduction.wheel_denominator_fixture()
        self.assertEqual(fixture.annihilator, P('(Y - 1)*(Y^2 - 3*Y + 1)'))
        self.assertEqual(fixture.validity, 6)
