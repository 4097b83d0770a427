#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing balanced tensor products, centralized subspaces and Hom spaces
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import QQ_FIELD, InvalidStructure, identity_extension, matrix_algebra, group_algebra, subgroup_extension
from depthtwo import tensor_over
from depthtwo.algebra import center, cyclic_group, opposite_extension, scalar_extension, symmetric_group_3, validate_algebra
from depthtwo.tensor import ActionModule, TensorSpace, bimodule_hom, end_algebra, endomorphisms, swap_tensor

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

class TestTensorSpace(unittest.TestCase):

    def test_over_itself(self):
        ctx = identity_extension(matrix_algebra(2)).ctx()
        self.assertEqual(ctx.Q.dim, 4)
        self.assertEqual(ctx.Q.full_dim, 16)

    def test_over_scalars(self):
        ctx = scalar_extension(matrix_algebra(2)).ctx()
        self.assertEqual(ctx.Q.dim, 16)
        self.assertEqual(ctx.T_space.dim, 16)

    def test_subgroup(self):
        ctx = s3_over_a3().ctx()
        Q, A = ctx.Q, ctx.A
        self.assertEqual(Q.dim, 12)
        # g·b ⊗ h = g ⊗ b·h
        b = A.basis(4)
        x, y = A.basis(1), A.basis(2)
        self.assertEqual(Q.pure(A.multiply(x, b), y), Q.pure(x, A.multiply(b, y)))
        self.assertNotEqual(Q.pure(A.multiply(b, x), y), Q.pure(x, A.multiply(b, y)))

    def test_project_section(self):
        Q = s3_over_a3().ctx().Q
        for q in range(Q.dim):
            v = Q.section(Q.pure_basis(*Q.pairs[q]))
            self.assertEqual(Q.project(v), Q.pure_basis(*Q.pairs[q]))
            self.assertIsInstance(Q.pure_basis(*Q.pairs[q]), tuple)
        self.assertTrue((Q.project_matrix @ Q.section_matrix).is_identity())

    def test_balanced_maps(self):
        ctx = s3_over_a3().ctx()
        A, Q = ctx.A, ctx.Q
        # multiplication is balanced, the flip is not
        self.assertTrue(Q.is_balanced_map(lambda m, n: A.mul_basis(m, n), A.dim))
        self.assertFalse(Q.is_balanced_map(lambda m, n: A.mul_basis(n, m), A.dim))
        mu = Q.induced_map(lambda m, n: A.mul_basis(m, n), A.dim)
        self.assertEqual(mu.apply(Q.pure(A.unit, A.basis(3))), A.basis(3))

    def test_action_mismatch(self):
        ctx = s3_over_a3().ctx()
        with self.assertRaises(InvalidStructure):
            TensorSpace(ctx.regular, ctx.A_BA, ctx.B)

    def test_triple(self):
        ctx = s3_over_a3().ctx()
        ts = tensor_over([ctx.A_AB, ctx.A_BB, ctx.A_BA], [ctx.B, ctx.B], name='A⊗A⊗A')
        self.assertEqual(ts.dim, 24)
        self.assertEqual(len(ts.factors), 3)
        self.assertEqual(len(ts.representatives[0]), 3)
        A = ctx.A
        self.assertTrue(any(ts.pure(A.unit, A.unit, A.unit)))

    def test_swap(self):
        ext = s3_over_a3()
        Q, Qop, A = ext.ctx().Q, opposite_extension(ext).ctx().Q, ext.A
        x, y = A.basis(1), A.basis(4)
        self.assertEqual(swap_tensor(Qop, Q, Qop.pure(x, y)), Q.pure(y, x))
        q = Q.pure(A.basis(2), A.basis(3))
        self.assertEqual(swap_tensor(Qop, Q, swap_tensor(Q, Qop, q)), q)


class TestCentralized(unittest.TestCase):

    def test_subgroup(self):
        ctx = s3_over_a3().ctx()
        T = ctx.T_space
        self.assertEqual(T.dim, 8)
        self.assertTrue(T.contains(ctx.Q.pure(ctx.A.unit, ctx.A.unit)))
        self.assertTrue(validate_algebra(ctx.T).ok)
        self.assertTrue(ctx.T_module.validate())

    def test_commutative_over_itself(self):
        ctx = identity_extension(group_algebra(cyclic_group(2))).ctx()
        self.assertEqual(ctx.T_space.dim, 2)

    def test_matrix_over_itself(self):
        ctx = identity_extension(matrix_algebra(2)).ctx()
        self.assertEqual(ctx.T_space.dim, 1)
        self.assertEqual(ctx.T.dim, 1)


class TestHom(unittest.TestCase):

    def test_endomorphisms(self):
        hs = endomorphisms(QQ_FIELD, 2)
        self.assertEqual(hs.dim, 4)
        alg = end_algebra(hs)
        self.assertTrue(validate_algebra(alg).ok)
        self.assertEqual(center(alg).dim, 1)

    def test_bimodule_endomorphisms(self):
        m2 = matrix_algebra(2)
        reg = ActionModule.regular(m2)
        self.assertTrue(reg.validate())
        hs = bimodule_hom(reg, reg)
        self.assertEqual(hs.dim, 1)
        self.assertEqual(end_algebra(hs).dim, 1)
        self.assertEqual(bimodule_hom(reg, reg, left=False, right=False).dim, 16)

    def test_subgroup_S(self):
        ctx = s3_over_a3().ctx()
        self.assertEqual(ctx.S.dim, 8)
        self.assertTrue(validate_algebra(ctx.S).ok)
        self.assertTrue(ctx.S_module.validate())


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
