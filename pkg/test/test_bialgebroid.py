#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing the bialgebroids T and S and their pairing
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import Matrix, VerificationError, identity_extension, matrix_algebra, group_algebra, subgroup_extension
from depthtwo import build_T, build_S, full_check, verify_duality
from depthtwo.algebra import cyclic_group, scalar_extension, symmetric_group_3
from depthtwo.bialgebroid import (LEFT, RIGHT, check_bialgebroid_axioms, check_coring, check_tensor_square_isomorphisms,
                                  projectivity_witnesses, to_left_bialgebroid)

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
A3 = [0, 4, 5]


def s3_over_a3():
    return subgroup_extension(symmetric_group_3(), A3, name='A3')


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestTrivialBase(unittest.TestCase):

    def test_matrix_over_itself(self):
        ext = identity_extension(matrix_algebra(2))
        T = build_T(ext)
        self.assertEqual(T.handedness, RIGHT)
        self.assertEqual((T.total.dim, T.base.dim), (1, 1))
        self.assertEqual(T.delta(T.total.unit), T.tensor.pure(T.total.unit, T.total.unit))
        self.assertEqual(T.epsilon(T.total.unit), T.base.unit)
        self.assertTrue(check_coring(T).ok)
        S = build_S(ext)
        self.assertEqual(S.handedness, LEFT)
        self.assertEqual(S.total.dim, 1)
        self.assertTrue(full_check(S).ok)
        duality = verify_duality(ext, T, S)
        self.assertTrue(duality.ok)
        self.assertEqual(duality.dimensions['pairing-rank'], 1)

    def test_scalar_base(self):
        ext = scalar_extension(group_algebra(cyclic_group(2)))
        T = build_T(ext)
        # T = A⊗A over R = A
        self.assertEqual((T.total.dim, T.base.dim), (4, 2))
        report = check_bialgebroid_axioms(T)
        self.assertEqual(report.status('takeuchi-balance'), 'pass')
        self.assertTrue(report.ok)

    def test_missing_quasibase(self):
        ext = subgroup_extension(symmetric_group_3(), [0, 1], name='C2')
        with self.assertRaises(VerificationError):
            build_T(ext)
        with self.assertRaises(VerificationError):
            build_S(ext)


class TestNormalSubgroup(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ext = s3_over_a3()
        cls.T = build_T(cls.ext)
        cls.S = build_S(cls.ext)

    def test_dimensions(self):
        self.assertEqual(self.T.total.dim, 8)
        self.assertEqual(self.S.total.dim, 8)
        self.assertEqual(self.T.base.dim, 4)

    def test_T_axioms(self):
        report = full_check(self.T)
        self.assertTrue(report.ok, report.summary())
        for id in ('coassociativity', 'counit-left', 'counit-right', 'comul-unit', 'counit-unit',
                   'counit-product', 'takeuchi-balance', 'comul-multiplicative'):
            self.assertEqual(report.status(id), 'pass')
        self.assertEqual(self.T.epsilon(self.T.total.unit), self.T.base.unit)

    def test_S_axioms(self):
        report = full_check(self.S)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.status('counit-product'), 'pass')

    def test_duality(self):
        report = verify_duality(self.ext, self.T, self.S)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.dimensions['pairing-rank'], 8)
        self.assertEqual(report.dimensions['S*'], 8)

    def test_projectivity(self):
        self.assertTrue(projectivity_witnesses(self.ext).ok)

    def test_tensor_squares(self):
        report = check_tensor_square_isomorphisms(self.ext, self.T, self.S)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.dimensions['T⊗_R T'], report.dimensions['(A⊗_B A⊗_B A)^B'])

    def test_left_conversion(self):
        left, assignment = to_left_bialgebroid(self.T)
        self.assertIsNotNone(left)
        self.assertEqual(left.handedness, LEFT)
        self.assertIn(assignment, ('s_L = t_R, t_L = s_R', 's_L = t_R, t_L = t_R'))

    def test_zero_comultiplication(self):
        T = build_T(self.ext)
        T.set_structure(Matrix.zeros(T.field, T.tensor.dim, T.total.dim), T.counit)
        with self.assertLogs('depthtwo', level='WARNING'):
            report = check_coring(T)
        self.assertEqual(report.status('counit-left'), 'fail')
        self.assertEqual(report.status('counit-right'), 'fail')

    def test_corrupted_source(self):
        T = self.T.transported(source=self.T.source.scale(self.T.field(2)))
        with self.assertLogs('depthtwo', level='WARNING'):
            report = check_bialgebroid_axioms(T)
        self.assertFalse(report.ok)
        self.assertEqual(report.status('source-homomorphism'), 'fail')


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
