#!/usr/bin/env python3
# -*- coding: utf-8 -*-

""" depthtwo demo script: depth two, bialgebroids and the Galois property for k[A3] ⊆ k[S3]

Latest version can be found at https://github.com/letuananh/depthtwo
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

from depthtwo import subgroup_extension, is_d2, build_T, build_S, full_check, verify_duality, characterize
from depthtwo.algebra import symmetric_group_3

# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

# e, (12), (13), (23), (123), (132)
S3 = symmetric_group_3()
SUBGROUPS = {'A3': [0, 4, 5], 'C2': [0, 1]}


# ----------------------------------------------------------------------
# Main
# ----------------------------------------------------------------------

for name, elements in SUBGROUPS.items():
    ext = subgroup_extension(S3, elements, name=name)
    ctx = ext.ctx()
    print("k[{}] ⊆ k[S3]".format(name))
    print("----------------------")
    print("dim R = {}, dim A⊗_B A = {}, dim T = {}".format(ctx.R.dim, ctx.Q.dim, ctx.T_space.dim))
    verdict = is_d2(ext)
    print("depth two: left = {}, right = {}".format(verdict.left, verdict.right))
    if verdict.right:
        T, S = build_T(ext), build_S(ext)
        print(full_check(T).summary())
        print(full_check(S).summary())
        print(verify_duality(ext, T, S).summary())
    galois, _ = characterize(ext)
    print(galois)
    print()
