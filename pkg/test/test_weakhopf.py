#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing weak bialgebras, weak Hopf algebras and their Galois data
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import QQ_FIELD, FieldSpec, StructureAlgebra, Subspace, NotApplicable, WeakBialgebra
from depthtwo import group_hopf, matrix_weak_hopf
from depthtwo import counital_projections, WeakComoduleAlgebra, weak_galois, reconstruct_antipode, weak_hopf_pipeline
from depthtwo.algebra import cyclic_group, symmetric_group_3
from depthtwo.weakhopf import (check_projections, d2_of_weak_galois, dual_weak_hopf, ell_r_report, identity_battery,
                               left_integrals, same_structure, self_galois, strip_antipode,
                               surjectivity_implies_bijectivity, validate_weak_bialgebra, validate_weak_hopf,
                               weak_coinvariants)

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
E11, E12, E21, E22 = range(4)


def bundle_of(w):
    c = WeakComoduleAlgebra.regular(w)
    return weak_galois(c, weak_coinvariants(c))


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestAxioms(unittest.TestCase):

    def test_matrix(self):
        for n in (2, 3):
            report = validate_weak_hopf(matrix_weak_hopf(n))
            self.assertTrue(report.ok, report.summary())

    def test_hopf_is_weak_hopf(self):
        self.assertTrue(validate_weak_hopf(group_hopf(cyclic_group(2))).ok)

    def test_broken_counit(self):
        w = matrix_weak_hopf(2)
        counit = list(w.counit)
        counit[E12] = w.field.zero
        broken = WeakBialgebra(w.algebra, w.comul, counit, name='broken')
        with self.assertLogs('depthtwo', level='WARNING'):
            report = validate_weak_bialgebra(broken)
        self.assertEqual(report.status('weak-counit-left'), 'fail')
        self.assertEqual(report.status('weak-unit-left'), 'pass')

    def test_characteristic_two(self):
        w = matrix_weak_hopf(2, FieldSpec.parse('fp:2'))
        # ε(1) = ε(e11) + ε(e22) = 0
        self.assertFalse(w.epsilon(w.unit))
        self.assertTrue(validate_weak_hopf(w).ok)
        self.assertTrue(check_projections(w).ok)


class TestProjections(unittest.TestCase):

    def test_matrix(self):
        w = matrix_weak_hopf(2)
        proj = counital_projections(w)
        for i in range(2):
            for j in range(2):
                self.assertEqual(proj.PiL.column(i * 2 + j), w.basis(i * 3))
                self.assertEqual(proj.PiR.column(i * 2 + j), w.basis(j * 3))
        self.assertEqual(proj.HL, Subspace.span(w.field, 4, [w.basis(E11), w.basis(E22)]))
        self.assertTrue(check_projections(w, proj).ok)

    def test_hopf(self):
        w = group_hopf(cyclic_group(2))
        proj = counital_projections(w)
        self.assertEqual(proj.PiL.column(1), w.unit)
        self.assertEqual(proj.HL.dim, 1)

    def test_identities(self):
        for w in (matrix_weak_hopf(2), matrix_weak_hopf(3), group_hopf(cyclic_group(2))):
            report = identity_battery(w)
            self.assertTrue(report.ok, report.summary())


class TestGalois(unittest.TestCase):

    def test_coinvariants(self):
        w = matrix_weak_hopf(2)
        B = weak_coinvariants(WeakComoduleAlgebra.regular(w))
        self.assertEqual(B.space, counital_projections(w).HL)
        s3 = group_hopf(symmetric_group_3())
        self.assertEqual(weak_coinvariants(WeakComoduleAlgebra.regular(s3)).dim, 1)

    def test_matrix(self):
        bundle = bundle_of(matrix_weak_hopf(2))
        self.assertTrue(bundle.bijective)
        self.assertTrue(bundle.report.ok, bundle.report.summary())
        self.assertTrue(ell_r_report(bundle).ok)
        self.assertTrue(surjectivity_implies_bijectivity(bundle).ok)

    def test_group(self):
        bundle = bundle_of(group_hopf(symmetric_group_3()))
        self.assertTrue(bundle.bijective)
        report = d2_of_weak_galois(bundle)
        self.assertTrue(report.verdicts['right'] and report.verdicts['left'])

    def test_depth_two(self):
        report = d2_of_weak_galois(bundle_of(matrix_weak_hopf(2)))
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.status('T-bound'), 'pass')

    def test_self_galois(self):
        w = matrix_weak_hopf(2)
        report = self_galois(w)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.status('dimension-count'), 'pass')
        self.assertTrue(report.verdicts['galois'])


class TestIntegrals(unittest.TestCase):

    def test_matrix(self):
        w = matrix_weak_hopf(2)
        data = left_integrals(w)
        ones = tuple(w.field.one for _ in range(4))
        self.assertTrue(data.space.contains(ones))
        self.assertTrue(data.nondegenerate)

    def test_group(self):
        w = group_hopf(cyclic_group(2))
        data = left_integrals(w)
        self.assertEqual(data.space, Subspace.span(w.field, 2, [tuple(w.field.one for _ in range(2))]))
        self.assertTrue(data.nondegenerate)


class TestReconstruct(unittest.TestCase):

    def test_matrix(self):
        w = matrix_weak_hopf(2)
        S, report = reconstruct_antipode(w)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(S.column(E12), w.basis(E21))
        self.assertEqual(S, w.antipode)
        self.assertEqual(report.status('matches-stored'), 'pass')

    def test_group(self):
        w = group_hopf(symmetric_group_3())
        S, report = reconstruct_antipode(strip_antipode(w))
        self.assertEqual(S, w.antipode)
        self.assertEqual(report.status('matches-stored'), 'not-applicable')

    def test_not_galois(self):
        # k[{1, z}] with z² = z: β(1⊗z) = β(z⊗z)
        alg = StructureAlgebra.from_triples(QQ_FIELD, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)], [1, 0])
        monoid = WeakBialgebra(alg, [{(0, 0): 1}, {(1, 1): 1}], [1, 1], name="k[1, z]")
        self.assertTrue(validate_weak_bialgebra(monoid).ok)
        with self.assertRaises(NotApplicable):
            reconstruct_antipode(monoid)


class TestDuality(unittest.TestCase):

    def test_matrix(self):
        w = matrix_weak_hopf(2)
        D = dual_weak_hopf(w)
        self.assertTrue(validate_weak_hopf(D).ok)
        self.assertTrue(same_structure(dual_weak_hopf(D), w))

    def test_group(self):
        w = group_hopf(cyclic_group(2))
        D = dual_weak_hopf(w)
        # functions on C2 multiply pointwise
        self.assertEqual(D.multiply(D.basis(0), D.basis(1)), tuple(D.field.zero for _ in range(2)))
        self.assertEqual(D.multiply(D.basis(1), D.basis(1)), D.basis(1))


class TestPipeline(unittest.TestCase):

    def test_matrix(self):
        report = weak_hopf_pipeline(matrix_weak_hopf(2))
        self.assertTrue(report.ok, report.summary())
        self.assertTrue(report.verdicts['galois'])
        self.assertTrue(report.verdicts['nondegenerate_integral'])
        self.assertEqual(report.dimensions['HL'], 2)

    def test_without_antipode(self):
        report = weak_hopf_pipeline(matrix_weak_hopf(2), no_antipode=True)
        self.assertTrue(report.ok, report.summary())
        self.assertFalse(report.verdicts['weak_hopf'])
        self.assertEqual(report.status('identities'), 'not-applicable')
        self.assertEqual(report.status('reconstruct.forms-agree'), 'pass')


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
