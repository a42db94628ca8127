# -*- coding: utf-8 -*-
import json
import os
import shutil
import tempfile

from django.test import SimpleTestCase

from resistance import families
from resistance.errors import InvalidFamilyDefinition, SizeTooSmall, UnknownFamily
from resistance.families import (
    BUILTIN_FAMILIES, DerivedHandle, FamilySpec, Pattern, drop, families_equal, get_family, match_orientation)

GRAPH_SIZES = {
    'path': 6, 'linear2tree': 7, 'linear3tree': 9, 'ladder': 8, 'fan': 7, 'wheel': 7,
    'corrugated2tree': 11,
}


class FamilySpecTest(SimpleTestCase):

    def test_path_laplacian(self):
        self.assertEqual(get_family('path').laplacian(4), (
            (1, -1, 0, 0),
            (-1, 2, -1, 0),
            (0, -1, 2, -1),
            (0, 0, -1, 1),
        ))

    def test_builtins_are_laplacians(self):
        for name, spec in BUILTIN_FAMILIES.items():
            m = spec.laplacian(GRAPH_SIZES[name])
            for i, line in enumerate(m):
                self.assertEqual(sum(line), 0, "%s row %d" % (name, i + 1))
                for j, v in enumerate(line):
                    self.assertEqual(v, m[j][i])

    def test_row_sums_vanish_at_twenty_sizes(self):
        for name, spec in BUILTIN_FAMILIES.items():
            sizes = [n for n in range(GRAPH_SIZES[name], GRAPH_SIZES[name] + 80) if spec.is_graph_size(n)][:20]
            self.assertEqual(len(sizes), 20, name)
            for n in sizes:
                m = spec.laplacian(n)
                self.assertEqual([sum(line) for line in m], [0] * n, "%s at %d" % (name, n))
                self.assertEqual(m, tuple(zip(*m)), "%s at %d" % (name, n))

    def test_wheel_closes_the_rim(self):
        m = get_family('wheel').laplacian(6)
        self.assertEqual(m[0][4], -1)
        self.assertEqual(m[5][5], 5)

    def test_graph_sizes(self):
        ladder = get_family('ladder')
        self.assertTrue(ladder.is_graph_size(6))
        self.assertFalse(ladder.is_graph_size(7))
        corrugated = get_family('corrugated2tree')
        self.assertTrue(corrugated.is_graph_size(11))
        self.assertFalse(corrugated.is_graph_size(12))

    def test_round_trip_keeps_the_laplacian(self):
        for spec in BUILTIN_FAMILIES.values():
            copy = FamilySpec.from_dict(spec.to_dict())
            self.assertEqual(copy.laplacian(12), spec.laplacian(12))

    def test_invalid_definitions(self):
        with self.assertRaises(InvalidFamilyDefinition):
            FamilySpec('bad', Pattern(core=[2]), denominator='middle')
        with self.assertRaises(InvalidFamilyDefinition):
            FamilySpec('bad', Pattern(core=[2]), offdiags={0: Pattern(core=[-1])})
        with self.assertRaises(InvalidFamilyDefinition):
            FamilySpec.from_dict({'diag': {'core': [2]}})
        with self.assertRaises(InvalidFamilyDefinition):
            Pattern(core=[])

    def test_unknown_family(self):
        with self.assertRaises(UnknownFamily):
            get_family('nosuch')

    def test_load_family_file(self):
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        path = os.path.join(tmp, 'cycle.json')
        with open(path, 'w') as handle:
            json.dump(get_family('path').to_dict(), handle)
        specs = families.load_family_file(path)
        self.assertEqual([s.name for s in specs], ['path'])

        with open(path, 'w') as handle:
            handle.write('{not json')
        with self.assertRaises(InvalidFamilyDefinition):
            families.load_family_file(path)


class HandleTest(SimpleTestCase):

    def test_bapat_handles(self):
        spec = get_family('path')
        numerator, denominator = families.bapat_handles(spec)
        m = spec.laplacian(5)
        self.assertEqual(numerator.instantiate(5), drop(m, [1, 5], [1, 5]))
        self.assertEqual(denominator.instantiate(5), drop(m, [1], [1]))
        _, last = families.bapat_handles(get_family('fan'))
        self.assertEqual(last.instantiate(5), drop(get_family('fan').laplacian(5), [5], [5]))

    def test_dimension_indexing(self):
        spec = get_family('ladder')
        numerator, denominator = families.bapat_handles(spec)
        by_dim = numerator.by_dimension()
        self.assertEqual(by_dim.instantiate(4), numerator.instantiate(6))
        self.assertEqual(len(by_dim.instantiate(4)), 4)
        self.assertEqual(denominator.by_dimension().dimension(7), 7)

    def test_size_too_small(self):
        numerator, _ = families.bapat_handles(get_family('path'))
        with self.assertRaises(SizeTooSmall):
            numerator.instantiate(2)

    def test_derived_handle(self):
        root = families.dimension_handles(get_family('ladder'))[0]
        child = DerivedHandle(root, 1, 3)
        self.assertEqual(child.instantiate(6), drop(root.instantiate(7), [1], [3]))
        self.assertEqual(child.dimension(6), 6)
        self.assertEqual(child.describe(), root.describe() + '(1|3)')

    def test_match_orientation(self):
        root = families.dimension_handles(get_family('linear2tree'))[0]
        sizes = range(5, 9)
        self.assertEqual(match_orientation(root, root, sizes), 'direct')
        self.assertEqual(match_orientation(DerivedHandle(root, 1, 2), DerivedHandle(root, 2, 1), sizes),
                         'transpose')
        self.assertIsNone(match_orientation(DerivedHandle(root, 1, 1), DerivedHandle(root, 1, 2), sizes))

    def test_families_equal(self):
        root = families.dimension_handles(get_family('linear2tree'))[0]
        self.assertTrue(families_equal(root, root, 5))
        swapped = DerivedHandle(root, 1, 2), DerivedHandle(root, 2, 1)
        self.assertTrue(families_equal(swapped[0], swapped[1], 5))
        self.assertTrue(families_equal(swapped[1], swapped[0], 5))
        self.assertFalse(families_equal(DerivedHandle(root, 1, 1), swapped[0], 5))
        self.assertFalse(families_equal(swapped[0], DerivedHandle(root, 1, 1), 5))

    def test_families_equal_below_min_size(self):
        root = families.dimension_handles(get_family('linear2tree'))[0]
        self.assertFalse(families_equal(root, root, root.min_size - 1))
