#!/usr/bin/env python3
# -*- coding: utf-8 -*-

""" depthtwo demo script: M2 as a weak Hopf algebra, Galois over its diagonal

Latest version can be found at https://github.com/letuananh/depthtwo
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

from depthtwo import matrix_weak_hopf, counital_projections, reconstruct_antipode, weak_hopf_pipeline
from depthtwo.weakhopf import strip_antipode

w = matrix_weak_hopf(2)
proj = counital_projections(w)
print("Π^L(e_ij) = e_ii")
print("----------------------")
for j in range(w.dim):
    print(w.algebra.labels[j], '->', proj.PiL.column(j))

# rebuild S(e_ij) = e_ji from the inverse Galois map alone
S, report = reconstruct_antipode(strip_antipode(w))
print(report.summary())
print("S == stored antipode:", S == w.antipode)

print(weak_hopf_pipeline(w).summary())
