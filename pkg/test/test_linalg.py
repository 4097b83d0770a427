#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing exact linear algebra
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import random
import unittest
import logging
from pathlib import Path

from depthtwo import FieldSpec, QQ_FIELD, Matrix, Subspace, solve_linear, kernel
from depthtwo import DimensionMismatch, InvalidStructure
from depthtwo.linalg import lincomb, quotient_basis, unit, rref

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
F2 = FieldSpec.parse('fp:2')
F3 = FieldSpec.parse('fp:3')


def vec(*xs):
    return tuple(QQ_FIELD(x) for x in xs)


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestFieldSpec(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(FieldSpec.parse('q'), QQ_FIELD)
        self.assertEqual(FieldSpec.parse(' FP:7 ').p, 7)
        self.assertEqual(str(F3), 'fp:3')
        self.assertEqual(F3.characteristic, 3)
        self.assertEqual(QQ_FIELD.characteristic, 0)
        for bad in ('fp:4', 'fp:x', 'reals', 'fp:1'):
            with self.assertRaises(InvalidStructure):
                FieldSpec.parse(bad)

    def test_scalars(self):
        self.assertEqual(QQ_FIELD.format(QQ_FIELD('-3/6')), '-1/2')
        self.assertEqual(QQ_FIELD.format(QQ_FIELD(4)), '4')
        self.assertEqual(F3.format(F3(-1)), '2')
        self.assertEqual(F3.format(F3('1/2')), '2')
        with self.assertRaises(InvalidStructure):
            QQ_FIELD('1/0')

    def test_json(self):
        for f in (QQ_FIELD, F2, F3):
            self.assertEqual(FieldSpec.from_json(f.to_json()), f)
        self.assertEqual(FieldSpec.from_json(None), QQ_FIELD)
        self.assertEqual(FieldSpec.from_json('fp:2'), F2)


class TestMatrix(unittest.TestCase):

    def test_columns(self):
        m = Matrix.from_entries(QQ_FIELD, 2, 3, [1, 2, 3, 4, 5, 6])
        self.assertEqual(m.shape, (2, 3))
        self.assertEqual(m.column(1), (QQ_FIELD(2), QQ_FIELD(5)))
        self.assertEqual(m.apply(unit(QQ_FIELD, 3, 2)), m.column(2))
        self.assertEqual(Matrix.from_columns(QQ_FIELD, m.columns(), 2), m)
        self.assertEqual(m.transpose().shape, (3, 2))
        with self.assertRaises(DimensionMismatch):
            m.apply((1, 2))
        with self.assertRaises(DimensionMismatch):
            Matrix.from_entries(QQ_FIELD, 2, 2, [1, 2, 3])

    def test_arithmetic(self):
        a = Matrix.from_entries(QQ_FIELD, 2, 2, [1, 1, 0, 1])
        b = Matrix.from_entries(QQ_FIELD, 2, 2, [1, -1, 0, 1])
        self.assertTrue((a @ b).is_identity())
        self.assertEqual(a.inverse(), b)
        self.assertEqual(a + b, a.scale(QQ_FIELD(2)) - Matrix.from_entries(QQ_FIELD, 2, 2, [0, 2, 0, 0]))
        self.assertEqual(a.hstack(b).shape, (2, 4))
        self.assertEqual(a.vstack(b).shape, (4, 2))

    def test_singular(self):
        s = Matrix.from_entries(QQ_FIELD, 2, 2, [1, 2, 2, 4])
        self.assertEqual(s.rank(), 1)
        self.assertIsNone(s.inverse())
        with self.assertRaises(DimensionMismatch):
            Matrix.zeros(QQ_FIELD, 2, 3).inverse()

    def test_characteristic_matters(self):
        # singular over GF(2), invertible over Q
        entries = [1, 1, 1, -1]
        self.assertEqual(Matrix.from_entries(QQ_FIELD, 2, 2, entries).rank(), 2)
        self.assertEqual(Matrix.from_entries(F2, 2, 2, entries).rank(), 1)
        self.assertIsNone(Matrix.from_entries(F2, 2, 2, entries).inverse())

    def test_rref(self):
        m = Matrix.from_entries(QQ_FIELD, 3, 3, [2, 4, 0, 1, 2, 1, 3, 6, 1])
        reduced, pivots = rref(m)
        self.assertEqual(pivots, (0, 2))
        self.assertEqual(reduced.tolist()[0], [QQ_FIELD(1), QQ_FIELD(2), QQ_FIELD(0)])
        self.assertFalse(any(reduced.row(2)))


class TestSolve(unittest.TestCase):

    def test_solve_consistent(self):
        a = Matrix.from_entries(QQ_FIELD, 2, 3, [1, 0, 1, 0, 1, 1])
        b = (QQ_FIELD(2), QQ_FIELD(3))
        x = solve_linear(a, b)
        self.assertEqual(a.apply(x), b)

    def test_solve_inconsistent(self):
        a = Matrix.from_entries(QQ_FIELD, 2, 2, [1, 1, 2, 2])
        self.assertIsNone(solve_linear(a, (QQ_FIELD(1), QQ_FIELD(3))))
        with self.assertRaises(DimensionMismatch):
            solve_linear(a, (QQ_FIELD(1),))

    def test_kernel(self):
        a = Matrix.from_entries(QQ_FIELD, 2, 4, [1, 1, 0, 0, 0, 0, 1, -1])
        k = kernel(a)
        self.assertEqual(k.dim, 2)
        for v in k.vectors:
            self.assertFalse(any(a.apply(v)))

    def test_random_systems(self):
        rng = random.Random(20210513)
        for _ in range(20):
            m = Matrix.from_entries(F3, 3, 4, [rng.randrange(3) for _ in range(12)])
            x = tuple(F3(rng.randrange(3)) for _ in range(4))
            b = m.apply(x)
            y = solve_linear(m, b)
            self.assertIsNotNone(y)
            self.assertEqual(m.apply(y), b)
            self.assertEqual(m.rank() + kernel(m).dim, 4)


class TestSubspace(unittest.TestCase):

    def test_span_canonical(self):
        u = Subspace.span(QQ_FIELD, 3, [vec(1, 1, 0), vec(0, 1, 1)])
        v = Subspace.span(QQ_FIELD, 3, [vec(1, 2, 1), vec(1, 0, -1)])
        self.assertEqual(u, v)
        self.assertEqual(u.dim, 2)
        self.assertIn(vec(2, 3, 1), u)
        self.assertFalse(u.contains(vec(1, 0, 0)))

    def test_coordinates(self):
        u = Subspace.span(QQ_FIELD, 3, [vec(1, 1, 0), vec(0, 1, 1)])
        w = lincomb(QQ_FIELD, 3, [(QQ_FIELD(3), u.vectors[0]), (QQ_FIELD(-2), u.vectors[1])])
        self.assertEqual(u.element(u.coordinates(w)), w)
        with self.assertRaises(InvalidStructure):
            u.coordinates(unit(QQ_FIELD, 3, 0))

    def test_lattice(self):
        x = Subspace.span(QQ_FIELD, 3, [unit(QQ_FIELD, 3, 0), unit(QQ_FIELD, 3, 1)])
        y = Subspace.span(QQ_FIELD, 3, [unit(QQ_FIELD, 3, 1), unit(QQ_FIELD, 3, 2)])
        self.assertEqual((x + y).dim, 3)
        self.assertEqual(x.intersect(y), Subspace.span(QQ_FIELD, 3, [unit(QQ_FIELD, 3, 1)]))
        self.assertTrue(x.intersect(y).is_subspace_of(x))
        self.assertEqual(x.free_columns, (2,))
        self.assertEqual(quotient_basis(3, x), [unit(QQ_FIELD, 3, 2)])
        self.assertEqual(x + Subspace.zero(QQ_FIELD, 3), x)
        with self.assertRaises(DimensionMismatch):
            x + Subspace.zero(QQ_FIELD, 2)
        with self.assertRaises(DimensionMismatch):
            quotient_basis(2, x)


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
