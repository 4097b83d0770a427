# -*- coding: utf-8 -*-

""" Cached derived data of an extension A|B

Every pipeline (quasibases, bialgebroids, coactions) pulls R, A⊗_B A, T and S from one
ExtensionContext so that each is computed at most once per extension.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import functools
import logging
from functools import cached_property

from .algebra import Extension, centralizer
from .linalg import Matrix
from .tensor import ActionModule, TensorSpace, bimodule_hom, centralized_subspace, end_algebra


class ExtensionContext(object):
    """ Lazily computed R, A⊗_B A, T = (A⊗_B A)^B, S = End_B A_B and the D2 data of one extension
    """

    def __init__(self, ext: Extension):
        self.ext = ext
        self.field = ext.field
        self.A = ext.A
        self.B = ext.B

    # -- centralizer ------------------------------------------------

    @cached_property
    def R_sub(self):
        return centralizer(self.ext)

    @cached_property
    def _R_pair(self):
        alg, incl = self.R_sub.as_algebra()
        alg.name = 'R'
        return alg, incl

    @property
    def R(self):
        return self._R_pair[0]

    @property
    def R_incl(self) -> Matrix:
        """ Columns are the R basis vectors inside A """
        return self._R_pair[1]

    def r_image(self, r):
        return self.R_incl.apply(r)

    def r_coords(self, a):
        """ R-coordinates of an element of A lying in R """
        return self.R_sub.space.coordinates(a)

    # -- modules -----------------------------------------------------

    @cached_property
    def regular(self) -> ActionModule:
        return ActionModule.regular(self.A)

    @cached_property
    def A_AB(self) -> ActionModule:
        return self.regular.restrict(right=(self.B, self.ext.iota))

    @cached_property
    def A_BA(self) -> ActionModule:
        return self.regular.restrict(left=(self.B, self.ext.iota))

    @cached_property
    def A_BB(self) -> ActionModule:
        return self.regular.restrict(left=(self.B, self.ext.iota), right=(self.B, self.ext.iota))

    @cached_property
    def A_AR(self) -> ActionModule:
        return self.regular.restrict(right=(self.R, self.R_incl))

    @cached_property
    def A_RA(self) -> ActionModule:
        return self.regular.restrict(left=(self.R, self.R_incl))

    # -- A⊗_B A and T --------------------------------------------------

    @cached_property
    def Q(self) -> TensorSpace:
        """ A⊗_B A with its A-A-bimodule structure """
        q = TensorSpace(self.A_AB, self.A_BA, self.B, name='A⊗_B A')
        logging.getLogger(__name__).debug("{}: dim A⊗_B A = {}".format(self.ext.name, q.dim))
        return q

    @property
    def Q_module(self) -> ActionModule:
        return self.Q.as_module()

    @cached_property
    def T_space(self):
        return centralized_subspace(self.Q, self.ext)

    @property
    def T(self):
        return self.T_space.algebra

    @cached_property
    def T_module(self) -> ActionModule:
        """ T with r·t = rt¹⊗t² and t·r = t¹⊗t²r """
        return self.T_space.module(left=(self.R, self.R_incl), right=(self.R, self.R_incl), name='T')

    def t_vector(self, t):
        """ An element of T (T-coordinates) as a vector of A⊗_B A """
        return self.T_space.element(t)

    def t_coords(self, q):
        return self.T_space.coordinates(q)

    # -- S -------------------------------------------------------------

    @cached_property
    def S_hom(self):
        return bimodule_hom(self.A_BB, self.A_BB, left=True, right=True)

    @cached_property
    def S(self):
        s = end_algebra(self.S_hom, name='S')
        logging.getLogger(__name__).debug("{}: dim S = {}".format(self.ext.name, s.dim))
        return s

    def s_coords(self, m: Matrix):
        return self.S_hom.coordinates(m)

    @cached_property
    def S_module(self) -> ActionModule:
        """ S with r·α = λ(r)∘α and α·r = ρ(r)∘α """
        left = []
        right = []
        for k in range(self.R.dim):
            r = self.r_image(self.R.basis(k))
            lam, rho = self.A.left_matrix(r), self.A.right_matrix(r)
            left.append(Matrix.from_columns(self.field, [self.s_coords(lam @ m) for m in self.S_hom.basis], self.S.dim))
            right.append(Matrix.from_columns(self.field, [self.s_coords(rho @ m) for m in self.S_hom.basis], self.S.dim))
        return ActionModule(self.field, self.S.dim, self.R, left, self.R, right, name='S')

    # -- depth two -----------------------------------------------------

    @cached_property
    def right_quasibase(self):
        from .depth import find_right_quasibase
        return find_right_quasibase(self.ext, ctx=self)

    @cached_property
    def left_quasibase(self):
        from .depth import find_left_quasibase
        return find_left_quasibase(self.ext, ctx=self)

    @cached_property
    def verdict(self):
        from .depth import D2Verdict
        return D2Verdict(left=self.left_quasibase is not None, right=self.right_quasibase is not None)

    def __repr__(self):
        return "ExtensionContext({})".format(self.ext.name)


def with_ctx(func=None):
    """ Fill in ctx=ext.ctx() when the caller did not pass a context """
    @functools.wraps(func)
    def func_with_context(ext, *args, **kwargs):
        if 'ctx' not in kwargs or kwargs['ctx'] is None:
            kwargs['ctx'] = ext.ctx()
        return func(ext, *args, **kwargs)

    return func_with_context
