#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Script for testing the registry of built-in examples and JSON loading
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import os
import json
import unittest
import logging
from pathlib import Path

from depthtwo import FieldSpec, QQ_FIELD, Extension, HopfAlgebra, WeakBialgebra, WeakHopfAlgebra
from depthtwo import InvalidStructure, SchemaError
from depthtwo import registry, schema
from depthtwo.algebra import validate_algebra

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

logging.basicConfig(level=logging.INFO)
TEST_DIR = Path(os.path.abspath(os.path.dirname(__file__)))
TEST_DATA = TEST_DIR / 'data'
REQUIRED = {'matrix:2', 'matrix:3', 'group:C2', 'group:C4/C2', 'group:S3', 'group:S3/A3', 'group:S3/C2', 'sweedler4'}


# ------------------------------------------------------------------------------
# Test cases
# ------------------------------------------------------------------------------

class TestRegistry(unittest.TestCase):

    def test_names(self):
        names = registry.names()
        self.assertTrue(REQUIRED.issubset(names))
        self.assertEqual(names, sorted(names))
        for name in names:
            self.assertEqual(registry.lookup(name).name, name)

    def test_unknown(self):
        with self.assertRaises(SchemaError):
            registry.lookup('group:A5')
        with self.assertRaises(SchemaError):
            registry.build('matrix:{}'.format(registry.MAX_MATRIX_SIZE + 1))
        with self.assertRaises(SchemaError):
            registry.build('matrix:0')

    def test_kinds(self):
        self.assertIsInstance(registry.build('sweedler4'), HopfAlgebra)
        self.assertIsInstance(registry.build('matrix:2'), WeakHopfAlgebra)
        with self.assertRaises(SchemaError):
            registry.build('group:S3/A3', kind=registry.HOPF)
        with self.assertRaises(SchemaError):
            registry.extension('matrix:2')

    def test_extensions(self):
        ext = registry.extension('group:S3/A3')
        self.assertIsInstance(ext, Extension)
        self.assertEqual((ext.B.dim, ext.A.dim), (3, 6))
        self.assertEqual(registry.extension('trivial:S3').B.dim, 6)
        self.assertEqual(registry.extension('matrix:2/diag').B.dim, 2)
        self.assertEqual(registry.extension('sweedler4/k[g]').B.dim, 2)

    def test_hopf_pair(self):
        H, K, group, elements = registry.hopf_pair('group:S3/A3')
        self.assertEqual((H.dim, K.dim), (6, 3))
        self.assertEqual(elements, [0, 4, 5])
        H2, K2, _, _ = registry.hopf_pair('group:S3', 'A3')
        self.assertEqual(K2.space, K.space)
        H4, kg, group, _ = registry.hopf_pair('sweedler4', 'k[g]')
        self.assertEqual((H4.dim, kg.dim), (4, 2))
        self.assertIsNone(group)
        with self.assertRaises(SchemaError):
            registry.hopf_pair('sweedler4')

    def test_prime_field(self):
        f2 = FieldSpec.parse('fp:2')
        w = registry.build('matrix:2', f2)
        self.assertEqual(w.field, f2)
        self.assertEqual(registry.build('groupoid:C2xpair:2').dim, 8)


class TestSchema(unittest.TestCase):

    def test_algebra(self):
        a = schema.algebra_from_json(schema.read_json(TEST_DATA / 'c2.json'))
        self.assertEqual(a.dim, 2)
        self.assertEqual(a.labels[1], 'g')
        self.assertTrue(validate_algebra(a).ok)
        again = schema.algebra_from_json(json.loads(schema.dump_json(schema.algebra_to_json(a))))
        self.assertTrue(again.same_constants(a))

    def test_extension(self):
        ext = schema.load_extension(str(TEST_DATA / 'c2_in_m2.json'))
        self.assertEqual((ext.B.dim, ext.A.dim), (2, 4))
        self.assertEqual(ext.name, 'C2 in M2')
        self.assertEqual(schema.load_extension('group:S3/C2').A.dim, 6)

    def test_bialgebra(self):
        H = schema.load_bialgebra(str(TEST_DATA / 'sweedler4.json'))
        self.assertIsInstance(H, HopfAlgebra)
        reference = registry.build('sweedler4')
        self.assertEqual(H.comul, reference.comul)
        self.assertEqual(H.antipode, reference.antipode)
        monoid = schema.load_bialgebra(str(TEST_DATA / 'monoid.json'))
        self.assertIsInstance(monoid, WeakBialgebra)
        self.assertIsNone(monoid.antipode)
        data = schema.bialgebra_to_json(H)
        self.assertEqual(data['kind'], 'hopf')
        self.assertEqual(schema.bialgebra_from_json(data).counit, H.counit)

    def test_subspace(self):
        space = schema.subspace_from_json(schema.read_json(TEST_DATA / 'kg.json'), QQ_FIELD, 4)
        self.assertEqual(space.dim, 2)
        with self.assertRaises(SchemaError):
            schema.subspace_from_json({'span': [[1, 0]]}, QQ_FIELD, 4)

    def test_field_override(self):
        a = schema.algebra_from_json(schema.read_json(TEST_DATA / 'c2.json'), FieldSpec.parse('fp:3'))
        self.assertEqual(a.field.characteristic, 3)

    def test_malformed(self):
        with self.assertRaises(SchemaError):
            schema.read_json(TEST_DATA / 'broken.json')
        with self.assertRaises(SchemaError):
            schema.read_json(TEST_DATA / 'missing.json')
        with self.assertRaises(SchemaError):
            schema.load_extension(str(TEST_DATA / 'bad_scalar.json'))
        with self.assertRaises(InvalidStructure):
            schema.load_extension(str(TEST_DATA / 'bad_iota.json'))
        with self.assertRaises(SchemaError):
            schema.algebra_from_json({'dim': 2, 'unit': [1, 0]})
        with self.assertRaises(SchemaError):
            schema.algebra_from_json({'dim': 1, 'unit': [1], 'mul': [[0, 0, 1]]})


# ------------------------------------------------------------------------------
# Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    unittest.main()
