#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing Hopf algebras, normality and the Hopf-Galois property
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import QQ_FIELD, Matrix, Subspace, InvalidStructure, group_hopf, sweedler4
from depthtwo import HopfSubalgebra, is_normal, hopf_galois, normality_theorem_harness
from depthtwo.algebra import cyclic_group, symmetric_group_3
from depthtwo.hopf import (hopf_galois_check, augmentation_ideal, left_ideal, quotient_coalgebra, quotient_hopf, right_ideal,
                           subgroup_pair, validate_hopf)
from depthtwo.linalg import unit

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
A3 = [0, 4, 5]
ONE, G, X, GX = range(4)


def vec(*xs):
    return tuple(QQ_FIELD(x) for x in xs)


def h4_pair():
    H = sweedler4()
    return H, HopfSubalgebra.span(H, [H.unit, unit(H.field, 4, G)], name='k[g]')


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestValidate(unittest.TestCase):

    def test_group(self):
        self.assertTrue(validate_hopf(group_hopf(cyclic_group(2))).ok)
        self.assertTrue(validate_hopf(group_hopf(symmetric_group_3())).ok)

    def test_sweedler(self):
        H = sweedler4()
        report = validate_hopf(H)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(H.multiply(H.basis(X), H.basis(G)), vec(0, 0, 0, -1))
        self.assertEqual(H.S(H.basis(X)), vec(0, 0, 0, -1))

    def test_zero_antipode(self):
        H = sweedler4()
        broken = H.with_antipode(Matrix.zeros(H.field, 4, 4))
        with self.assertLogs('depthtwo', level='WARNING'):
            report = validate_hopf(broken)
        self.assertEqual(report.status('antipode-left'), 'fail')
        self.assertEqual(report.status('antipode-right'), 'fail')

    def test_not_a_subcoalgebra(self):
        H = sweedler4()
        with self.assertRaises(InvalidStructure):
            HopfSubalgebra.span(H, [H.unit, H.basis(X)])


class TestIdeals(unittest.TestCase):

    def test_augmentation(self):
        H, K = subgroup_pair(symmetric_group_3(), A3)
        self.assertEqual(augmentation_ideal(K).dim, 2)
        self.assertEqual(augmentation_ideal(HopfSubalgebra.trivial(H)).dim, 0)
        _, kg = h4_pair()
        self.assertEqual(augmentation_ideal(kg), Subspace.span(QQ_FIELD, 4, [vec(-1, 1, 0, 0)]))

    def test_sweedler_ideals(self):
        H, K = h4_pair()
        hk = left_ideal(H, K)
        kh = right_ideal(H, K)
        self.assertEqual(hk, Subspace.span(QQ_FIELD, 4, [vec(-1, 1, 0, 0), vec(0, 0, 1, 1)]))
        self.assertEqual(kh, Subspace.span(QQ_FIELD, 4, [vec(-1, 1, 0, 0), vec(0, 0, -1, 1)]))
        self.assertNotEqual(hk, kh)

    def test_quotients(self):
        H, K = subgroup_pair(symmetric_group_3(), A3)
        self.assertEqual(quotient_coalgebra(H, Subspace.zero(H.field, H.dim)).dim, 6)
        W, qc = quotient_hopf(H, left_ideal(H, K), name='W')
        self.assertEqual(W.dim, 2)
        self.assertTrue(validate_hopf(W).ok)
        self.assertEqual(qc.project(H.unit), W.unit)

    def test_not_a_coideal(self):
        H = sweedler4()
        with self.assertRaises(InvalidStructure):
            quotient_coalgebra(H, Subspace.span(H.field, 4, [H.basis(G)]))


class TestNormality(unittest.TestCase):

    def test_normal_subgroup(self):
        H, K = subgroup_pair(symmetric_group_3(), A3)
        flags = is_normal(H, K)
        self.assertTrue(flags.normal and flags.ad_left and flags.ad_right)
        self.assertTrue(flags.consistent)

    def test_non_normal_subgroup(self):
        H, K = subgroup_pair(symmetric_group_3(), [0, 1])
        flags = is_normal(H, K)
        self.assertFalse(flags.normal)
        self.assertTrue(flags.consistent)

    def test_sweedler(self):
        flags = is_normal(*h4_pair())
        self.assertEqual(flags.to_dict(), {'ideal_equality': False, 'ad_left': False, 'ad_right': False})

    def test_extremes(self):
        H = sweedler4()
        self.assertTrue(is_normal(H, HopfSubalgebra.whole(H)).normal)
        self.assertTrue(is_normal(H, HopfSubalgebra.trivial(H)).normal)


class TestHopfGalois(unittest.TestCase):

    def test_normal_subgroup(self):
        data = hopf_galois(*subgroup_pair(symmetric_group_3(), A3))
        self.assertTrue(data.galois)
        self.assertTrue(data.coinvariants_equal)
        self.assertEqual(data.quotient.dim, 2)
        self.assertEqual(data.report.status('inverse-closed-form'), 'pass')

    def test_sweedler(self):
        data = hopf_galois(*h4_pair())
        self.assertFalse(data.galois)
        self.assertEqual(data.report.status('inverse-closed-form'), 'not-applicable')
        self.assertFalse(hopf_galois_check(*h4_pair()).verdicts['galois'])

    def test_whole(self):
        H = sweedler4()
        data = hopf_galois(H, HopfSubalgebra.whole(H))
        self.assertEqual(data.quotient.dim, 1)
        self.assertTrue(data.galois)


class TestHarness(unittest.TestCase):

    def test_normal_subgroup(self):
        s3 = symmetric_group_3()
        H, K = subgroup_pair(s3, A3)
        report = normality_theorem_harness(H, K, s3, A3)
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.verdicts['normal'] and report.verdicts['galois'])
        self.assertTrue(report.verdicts['consistent'])
        for id in ('group-normality', 'hopf-ideal', 'phi.surjective', 'dim-W', 'dim-Hbar', 'dim-Hbarbar'):
            self.assertEqual(report.status(id), 'pass')

    def test_sweedler(self):
        report = normality_theorem_harness(*h4_pair())
        self.assertFalse(report.verdicts['normal'])
        self.assertFalse(report.verdicts['galois'])
        self.assertTrue(report.verdicts['consistent'])
        self.assertEqual(report.status('normal-iff-galois'), 'pass')
        self.assertEqual(report.status('adjoint-cross-check'), 'pass')

    def test_cyclic(self):
        c4 = cyclic_group(4)
        H, K = subgroup_pair(c4, [0, 2])
        report = normality_theorem_harness(H, K, c4, [0, 2])
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.verdicts['normal'] and report.verdicts['galois'])
        self.assertEqual(report.dimensions['n'], 2)

    def test_rank(self):
        H = group_hopf(symmetric_group_3())
        K = HopfSubalgebra.whole(sweedler4())
        with self.assertRaises(InvalidStructure):
            normality_theorem_harness(H, K)


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
