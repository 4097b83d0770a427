#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing structure-constant algebras, groups, groupoids and extensions
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import QQ_FIELD, FieldSpec, Matrix, StructureAlgebra, Subalgebra, Extension
from depthtwo import centralizer, subgroup_extension, identity_extension, group_algebra, matrix_algebra
from depthtwo import InvalidStructure, DimensionMismatch
from depthtwo.algebra import (FiniteGroup, center, cyclic_group, groupoid_algebra, is_isomorphism, opposite,
                              opposite_extension, pair_groupoid, product_groupoid, scalar_extension,
                              symmetric_group_3, transpose_map, validate_algebra, vector_label)
from depthtwo.linalg import unit

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
E11, E12, E21, E22 = range(4)
S3_E, S3_12, S3_13, S3_23, S3_123, S3_132 = range(6)
A3 = [S3_E, S3_123, S3_132]


def e(a, i):
    return a.basis(i)


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestStructureAlgebra(unittest.TestCase):

    def test_matrix_units(self):
        m2 = matrix_algebra(2)
        self.assertEqual(m2.multiply(e(m2, E12), e(m2, E21)), e(m2, E11))
        self.assertFalse(any(m2.multiply(e(m2, E12), e(m2, E12))))
        self.assertEqual(m2.unit, tuple(QQ_FIELD(x) for x in (1, 0, 0, 1)))
        self.assertTrue(validate_algebra(m2).ok)

    def test_unit_law(self):
        m2 = matrix_algebra(2)
        x = tuple(QQ_FIELD(c) for c in (1, -2, 3, 5))
        self.assertEqual(m2.multiply(m2.unit, x), x)
        self.assertEqual(m2.product(x, m2.unit), x)

    def test_group_convention(self):
        s3 = group_algebra(symmetric_group_3())
        self.assertEqual(s3.labels[S3_23], '(23)')
        self.assertEqual(s3.multiply(e(s3, S3_12), e(s3, S3_123)), e(s3, S3_23))
        self.assertTrue(validate_algebra(s3).ok)
        self.assertFalse(s3.is_commutative())

    def test_cyclic(self):
        c2 = group_algebra(cyclic_group(2))
        self.assertEqual(c2.dim, 2)
        self.assertEqual(c2.multiply(e(c2, 1), e(c2, 1)), c2.unit)
        self.assertTrue(c2.is_commutative())

    def test_corrupted_constants(self):
        m2 = matrix_algebra(2)
        table = [[list(v) for v in row] for row in m2.table]
        table[0][0][0] = QQ_FIELD(2)
        bad = StructureAlgebra(QQ_FIELD, 4, table, m2.unit)
        with self.assertLogs('depthtwo', level='WARNING'):
            report = validate_algebra(bad)
        self.assertFalse(report.ok)
        failure = report.get('associativity')
        self.assertEqual(failure.status, 'fail')
        self.assertEqual(failure.failures[0], (0, 0, 1))
        self.assertEqual(failure.counterexample['indices'], [0, 0, 1])
        self.assertEqual(report.status('left-unit'), 'fail')

    def test_from_triples(self):
        a = StructureAlgebra.from_triples(QQ_FIELD, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, '-1')], [1, 0])
        self.assertEqual(list(a.triples())[-1], (1, 1, 0, QQ_FIELD(-1)))
        self.assertTrue(validate_algebra(a).ok)
        with self.assertRaises(DimensionMismatch):
            StructureAlgebra.from_triples(QQ_FIELD, 2, [(0, 0, 2, 1)], [1, 0])
        self.assertEqual(vector_label(a, a.unit), '1*e0')

    def test_opposite(self):
        s3 = group_algebra(symmetric_group_3())
        self.assertEqual(opposite(opposite(s3)), s3)
        c2 = group_algebra(cyclic_group(2))
        self.assertEqual(opposite(c2), c2)
        m2 = matrix_algebra(2)
        self.assertTrue(is_isomorphism(opposite(m2), m2, transpose_map(2)))
        self.assertFalse(is_isomorphism(m2, m2, Matrix.zeros(QQ_FIELD, 4, 4)))

    def test_groupoid_algebra(self):
        for n in (1, 2, 3):
            self.assertTrue(groupoid_algebra(pair_groupoid(n)).same_constants(matrix_algebra(n)))
        g = product_groupoid(cyclic_group(2), 2)
        a = groupoid_algebra(g)
        self.assertEqual(a.dim, 8)
        self.assertTrue(validate_algebra(a).ok)

    def test_prime_field(self):
        f2 = FieldSpec.parse('fp:2')
        m2 = matrix_algebra(2, f2)
        self.assertEqual(m2.field, f2)
        self.assertTrue(validate_algebra(m2).ok)


class TestGroups(unittest.TestCase):

    def test_bad_tables(self):
        with self.assertRaises(InvalidStructure):
            FiniteGroup(['a', 'b'], [[0, 1], [0, 1]])
        with self.assertRaises(InvalidStructure):
            FiniteGroup(['a', 'b'], [[0, 1], [1, 2]])

    def test_normal_subgroups(self):
        s3 = symmetric_group_3()
        self.assertTrue(s3.is_normal_subgroup(A3))
        self.assertFalse(s3.is_normal_subgroup([S3_E, S3_12]))
        with self.assertRaises(InvalidStructure):
            s3.is_normal_subgroup([S3_E, S3_123])


class TestSubalgebras(unittest.TestCase):

    def test_not_closed(self):
        m2 = matrix_algebra(2)
        with self.assertRaises(InvalidStructure):
            Subalgebra.span(m2, [m2.unit, e(m2, E12), e(m2, E21)])
        with self.assertRaises(InvalidStructure):
            Subalgebra.span(m2, [e(m2, E11)])

    def test_as_algebra(self):
        m2 = matrix_algebra(2)
        diag = Subalgebra.span(m2, [e(m2, E11), e(m2, E22)], name='D2')
        alg, incl = diag.as_algebra()
        self.assertEqual(alg.dim, 2)
        self.assertTrue(alg.is_commutative())
        self.assertEqual(incl.apply(alg.unit), m2.unit)


class TestExtensions(unittest.TestCase):

    def test_iota_checks(self):
        m2 = matrix_algebra(2)
        c2 = group_algebra(cyclic_group(2))
        # 1 ↦ 1, g ↦ e12 is not multiplicative
        bad = Matrix.from_columns(QQ_FIELD, [m2.unit, e(m2, E12)], 4)
        with self.assertRaises(InvalidStructure):
            Extension(c2, m2, bad)
        with self.assertRaises(InvalidStructure):
            Extension(c2, m2, Matrix.from_columns(QQ_FIELD, [m2.unit, m2.unit], 4))
        with self.assertRaises(DimensionMismatch):
            Extension(c2, m2, Matrix.identity(QQ_FIELD, 2))
        with self.assertRaises(InvalidStructure):
            Extension(c2, matrix_algebra(2, FieldSpec.parse('fp:3')), bad)

    def test_centralizer_of_identity(self):
        m2 = matrix_algebra(2)
        r = centralizer(identity_extension(m2))
        self.assertEqual(r.dim, 1)
        self.assertTrue(r.contains(m2.unit))
        self.assertEqual(center(m2).dim, 1)

    def test_centralizer_of_scalars(self):
        m2 = matrix_algebra(2)
        self.assertEqual(centralizer(scalar_extension(m2)).dim, 4)

    def test_centralizer_of_subgroup(self):
        s3 = symmetric_group_3()
        ext = subgroup_extension(s3, A3, name='A3')
        r = centralizer(ext)
        # A3-conjugation orbits on S3
        self.assertEqual(r.dim, 4)
        transpositions = tuple(QQ_FIELD(x) for x in (0, 1, 1, 1, 0, 0))
        self.assertTrue(r.contains(transpositions))
        self.assertFalse(r.contains(ext.A.basis(S3_12)))
        self.assertEqual(centralizer(subgroup_extension(s3, [S3_E, S3_12])).dim, 4)

    def test_subgroup_extension(self):
        s3 = symmetric_group_3()
        ext = subgroup_extension(s3, A3, name='A3')
        self.assertEqual((ext.B.dim, ext.A.dim), (3, 6))
        self.assertEqual(ext.images[1], unit(QQ_FIELD, 6, S3_123))
        with self.assertRaises(InvalidStructure):
            subgroup_extension(s3, [S3_E, S3_123])

    def test_opposite_extension(self):
        ext = subgroup_extension(symmetric_group_3(), A3, name='A3')
        op = opposite_extension(ext)
        self.assertTrue(op.name.endswith('^op'))
        self.assertEqual(opposite_extension(op).name, ext.name)
        self.assertEqual(centralizer(op).dim, centralizer(ext).dim)


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
