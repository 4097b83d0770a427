#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing depth two quasibase searches
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import unittest
import logging
from pathlib import Path

from depthtwo import Matrix, identity_extension, matrix_algebra, subgroup_extension
from depthtwo import is_d2, find_right_quasibase, find_left_quasibase, verify_quasibase
from depthtwo.algebra import opposite_extension, symmetric_group_3
from depthtwo.depth import RightQuasibase, round_trip

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

class TestTrivial(unittest.TestCase):

    def test_identity_extension(self):
        ext = identity_extension(matrix_algebra(2))
        qb = find_right_quasibase(ext)
        self.assertIsNotNone(qb)
        self.assertEqual(len(qb), 1)
        gamma = qb.gamma[0]
        c = gamma.row(0)[0]
        self.assertTrue(c)
        self.assertEqual(gamma, Matrix.identity(ext.field, 4).scale(c))
        self.assertTrue(verify_quasibase(qb))
        verdict = is_d2(ext)
        self.assertTrue(verdict.left and verdict.right)
        self.assertTrue(verdict.depth_two)


class TestSubgroups(unittest.TestCase):

    def test_normal_subgroup(self):
        ext = ext_of(A3, 'A3')
        rqb = find_right_quasibase(ext)
        lqb = find_left_quasibase(ext)
        self.assertIsNotNone(rqb)
        self.assertIsNotNone(lqb)
        cases = list(rqb.cases())
        self.assertEqual(len(cases), 36)
        self.assertTrue(all(lhs == rhs for _, lhs, rhs in cases))
        self.assertTrue(verify_quasibase(lqb))
        self.assertTrue(all(lhs == rhs for _, lhs, rhs in lqb.cases()))
        self.assertEqual(is_d2(ext).to_dict(), {'left': True, 'right': True})

    def test_round_trip(self):
        ext = ext_of(A3, 'A3')
        self.assertTrue(round_trip(ext.ctx().right_quasibase))
        self.assertTrue(round_trip(ext.ctx().left_quasibase))

    def test_quasibase_dict(self):
        rqb = find_right_quasibase(ext_of(A3, 'A3'))
        d = rqb.to_dict()
        self.assertEqual(d['side'], 'right')
        self.assertEqual(d['length'], len(rqb))
        self.assertEqual(len(d['u']), len(d['gamma']))

    def test_non_normal_subgroup(self):
        ext = ext_of(C2, 'C2')
        self.assertIsNone(find_right_quasibase(ext))
        self.assertIsNone(find_left_quasibase(ext))
        self.assertEqual(is_d2(ext).to_dict(), {'left': False, 'right': False})

    def test_opposite_correspondence(self):
        for elements, name in ((A3, 'A3'), (C2, 'C2')):
            ext = ext_of(elements, name)
            op = opposite_extension(ext)
            self.assertEqual(is_d2(op).right, is_d2(ext).left)
            self.assertEqual(is_d2(op).left, is_d2(ext).right)

    def test_corrupted_quasibase(self):
        ext = ext_of(A3, 'A3')
        good = ext.ctx().right_quasibase
        bad = RightQuasibase(good.ctx, good.family, [m.scale(ext.field(2)) for m in good.maps])
        with self.assertLogs('depthtwo', level='WARNING'):
            self.assertFalse(verify_quasibase(bad))


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
