# -*- coding: utf-8 -*-
import io
import random
from fractions import Fraction

from django.test import SimpleTestCase

from resistance import families, oracle
from resistance.errors import InvalidNodes, SingularSystem
from resistance.families import DerivedHandle, FamilySpec, Pattern, get_family
from resistance.shift_poly import IndexedSequence


def cofactor_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


class DeterminantTest(SimpleTestCase):

    def test_identity_and_empty(self):
        identity = [[int(i == j) for j in range(5)] for i in range(5)]
        self.assertEqual(oracle.det_exact(identity), 1)
        self.assertEqual(oracle.det_exact([]), 1)

    def test_agrees_with_cofactor_expansion(self):
        rng = random.Random(1234)
        for _ in range(200):
            m = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)]
            self.assertEqual(oracle.det_exact(m), cofactor_det(m))

    def test_linear3tree_numerator(self):
        numerator, _ = families.dimension_handles(get_family('linear3tree'))
        self.assertEqual(oracle.det_exact(numerator.instantiate(8)), 127920)

    def test_ladder_first_row_identity(self):
        """
        Det M(1)(n) = 2 Det M(1)(n)(1|1) - Det M(1)(n)(1|3).
        """
        root = families.dimension_handles(get_family('ladder'))[0]
        keep, cross = DerivedHandle(root, 1, 1), DerivedHandle(root, 1, 3)
        for n in range(5, 10):
            self.assertEqual(oracle.det_exact(root.instantiate(n)),
                             2 * oracle.det_exact(keep.instantiate(n - 1))
                             - oracle.det_exact(cross.instantiate(n - 1)))


class ResistanceSolveTest(SimpleTestCase):

    def test_path(self):
        path = get_family('path')
        for n in range(3, 12):
            self.assertEqual(oracle.resistance_solve(path, n, 1, n), n - 1)
        self.assertEqual(oracle.resistance_solve(path, 6, 2, 4), 2)

    def test_symmetry(self):
        for name in ('linear2tree', 'ladder', 'fan', 'wheel'):
            spec = get_family(name)
            self.assertEqual(oracle.resistance_solve(spec, 8, 2, 7), oracle.resistance_solve(spec, 8, 7, 2))

    def test_triangle_inequality(self):
        rng = random.Random(7)
        for name in ('linear3tree', 'fan', 'wheel', 'ladder'):
            spec = get_family(name)
            for _ in range(10):
                i, j, k = rng.sample(range(1, 11), 3)
                self.assertLessEqual(oracle.resistance_solve(spec, 10, i, k),
                                     oracle.resistance_solve(spec, 10, i, j)
                                     + oracle.resistance_solve(spec, 10, j, k))

    def test_agrees_with_determinant_ratio(self):
        for name in ('linear2tree', 'fan', 'wheel'):
            spec = get_family(name)
            for i in range(1, 7):
                self.assertEqual(oracle.resistance_solve(spec, 8, i, 8), oracle.bapat_ratio(spec, 8, i, 8))

    def test_triangle_graph(self):
        self.assertEqual(oracle.resistance_solve(get_family('fan'), 3, 1, 3), Fraction(2, 3))

    def test_bad_nodes(self):
        path = get_family('path')
        with self.assertRaises(InvalidNodes):
            oracle.resistance_solve(path, 5, 2, 2)
        with self.assertRaises(InvalidNodes):
            oracle.resistance_solve(path, 5, 1, 6)
        with self.assertRaises(InvalidNodes):
            oracle.bapat_ratio(path, 5, 3, 3)

    def test_disconnected(self):
        empty = FamilySpec('empty', Pattern(core=[0]), min_size=2)
        with self.assertRaises(SingularSystem):
            oracle.resistance_solve(empty, 4, 1, 4)


class SequenceCsvTest(SimpleTestCase):

    def test_write(self):
        stream = io.StringIO()
        oracle.write_sequence_csv(IndexedSequence(3, [2, 10 ** 30]), stream)
        self.assertEqual(stream.getvalue(), 'n,value\n3,2\n4,%d\n' % 10 ** 30)
