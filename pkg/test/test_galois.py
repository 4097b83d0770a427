#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing coactions, Galois maps and the characterization harness
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import identity_extension, matrix_algebra, subgroup_extension
from depthtwo import canonical_coaction, galois_map, characterize, split_monic_check, analyze_extension
from depthtwo.algebra import scalar_extension, symmetric_group_3
from depthtwo.galois import coinvariants, is_balanced_right, left_coaction

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
A3 = [0, 4, 5]
C2 = [0, 1]


def ext_of(elements, name):
    return subgroup_extension(symmetric_group_3(), elements, name=name)


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestCanonicalCoaction(unittest.TestCase):

    def test_normal_subgroup(self):
        ext = ext_of(A3, 'A3')
        c = canonical_coaction(ext)
        self.assertTrue(c.validate().ok)
        B = ext.ctx().B
        for i in range(B.dim):
            b = ext.images[i]
            self.assertEqual(c.coact(b), c.trivial(b))
        coinv = coinvariants(c)
        self.assertEqual(coinv.dim, 3)
        self.assertEqual(coinv.space, ext.image_subspace())

    def test_galois_map(self):
        ext = ext_of(A3, 'A3')
        g = galois_map(canonical_coaction(ext))
        self.assertTrue(g.bijective)
        self.assertIsNotNone(g.inverse)
        self.assertEqual(g.report.status('inverse-closed-form'), 'pass')
        self.assertTrue(g.report.ok)
        self.assertEqual(g.beta.shape, (ext.ctx().Q.dim, ext.ctx().Q.dim))

    def test_trivial(self):
        ext = identity_extension(matrix_algebra(2))
        c = canonical_coaction(ext)
        A = ext.A
        for i in range(A.dim):
            self.assertEqual(c.coact(A.basis(i)), c.trivial(A.basis(i)))
        self.assertEqual(coinvariants(c).dim, 4)

    def test_left_coaction(self):
        coaction, report = left_coaction(ext_of(A3, 'A3'))
        self.assertIsNotNone(coaction)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.status('beta-bijective'), 'pass')
        self.assertEqual(report.status('coinvariants-equal-B'), 'pass')


class TestBalanced(unittest.TestCase):

    def test_balanced(self):
        self.assertTrue(is_balanced_right(ext_of(A3, 'A3')))
        self.assertTrue(is_balanced_right(scalar_extension(matrix_algebra(2))))
        self.assertTrue(is_balanced_right(identity_extension(matrix_algebra(2))))


class TestCharacterize(unittest.TestCase):

    def test_normal_subgroup(self):
        verdict, report = characterize(ext_of(A3, 'A3'))
        self.assertTrue(verdict.right_d2 and verdict.left_d2)
        self.assertTrue(verdict.right_balanced and verdict.left_balanced)
        self.assertTrue(verdict.galois_right and verdict.galois_left)
        self.assertTrue(verdict.consistent)
        self.assertTrue(report.ok, report.summary())

    def test_non_normal_subgroup(self):
        verdict, report = characterize(ext_of(C2, 'C2'))
        self.assertFalse(verdict.right_d2 or verdict.left_d2)
        self.assertFalse(verdict.galois_right or verdict.galois_left)
        self.assertTrue(verdict.consistent)
        self.assertEqual(report.status('right.canonical-coaction'), 'not-applicable')

    def test_identity(self):
        verdict, _ = characterize(identity_extension(matrix_algebra(2)))
        self.assertTrue(all(verdict.to_dict().values()))


class TestSplitMonic(unittest.TestCase):

    def test_normal_subgroup(self):
        report = split_monic_check(ext_of(A3, 'A3'))
        self.assertTrue(report.ok, report.summary())
        for id in ('retraction', 'right-d2', 'right-balanced', 'galois'):
            self.assertEqual(report.status(id), 'pass')

    def test_non_d2(self):
        report = split_monic_check(ext_of(C2, 'C2'))
        self.assertEqual(report.status('split-monic'), 'not-applicable')


class TestAnalyze(unittest.TestCase):

    def test_normal_subgroup(self):
        report = analyze_extension(ext_of(A3, 'A3'))
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.verdicts['galois_right'])
        self.assertEqual(report.dimensions['A⊗_B A'], 12)
        self.assertEqual(report.dimensions['T'], 8)
        self.assertEqual(report.status('T.comul-multiplicative'), 'pass')
        self.assertEqual(report.status('duality.eta-bijective'), 'pass')

    def test_non_normal_subgroup(self):
        report = analyze_extension(ext_of(C2, 'C2'))
        self.assertTrue(report.ok, report.summary())
        self.assertFalse(report.verdicts['right_d2'])
        self.assertFalse(report.verdicts['galois_right'])
        self.assertEqual(report.status('bialgebroids'), 'not-applicable')

    def test_identity(self):
        report = analyze_extension(identity_extension(matrix_algebra(2)))
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.verdicts['consistent'])


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
