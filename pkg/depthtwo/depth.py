# -*- coding: utf-8 -*-

""" Left and right depth two quasibases as exact linear feasibility problems

Right quasibase: Σ_j a·γ_j(a′)·u_j = a⊗a′, left quasibase: Σ_i t_i·β_i(a)·a′ = a⊗a′,
with u_j, t_i ∈ T and γ_j, β_i ∈ S. The family is a basis of T unless one is given, so the
search for the γ's (β's) is a single linear system in their S-coordinates.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging
from dataclasses import dataclass
from typing import List, Optional

from .context import with_ctx
from .errors import VerificationError
from .linalg import Matrix, format_vector, lincomb, log_system, rank_of, solve_linear


@dataclass(frozen=True)
class D2Verdict:
    left: bool
    right: bool

    @property
    def depth_two(self):
        return self.left and self.right

    def to_dict(self):
        return {'left': self.left, 'right': self.right}


class _Quasibase(object):

    side = ''

    def __init__(self, ctx, family, maps: List[Matrix]):
        self.ctx = ctx
        self.family = [tuple(x) for x in family]
        self.maps = list(maps)

    def __len__(self):
        return len(self.family)

    @property
    def family_coords(self):
        """ T-coordinates of the T-family """
        return [self.ctx.t_coords(x) for x in self.family]

    @property
    def map_coords(self):
        """ S-coordinates of the S-family """
        return [self.ctx.s_coords(m) for m in self.maps]

    def _phi(self):
        """ Matrix of ⊕ⁿA → A⊗_B A; block k is a ↦ a·u_k (right) or a ↦ t_k·a (left) """
        A, mod = self.ctx.A, self.ctx.Q_module
        acts = mod.left if self.side == 'right' else mod.right
        cols = [acts[i].apply(x) for x in self.family for i in range(A.dim)]
        return Matrix.from_columns(self.ctx.field, cols, self.ctx.Q.dim)

    def _psi_value(self, m, n):
        A = self.ctx.A
        parts = []
        for g in self.maps:
            if self.side == 'right':
                parts.extend(A.multiply(A.basis(m), g.column(n)))
            else:
                parts.extend(A.multiply(g.column(m), A.basis(n)))
        return parts

    def section(self):
        """ The bimodule section ψ of φ: ⊕ⁿA → A⊗_B A and whether φ∘ψ = id """
        Q = self.ctx.Q
        n = len(self.maps) * self.ctx.A.dim
        psi = Q.induced_map(self._psi_value, n)
        balanced = Q.is_balanced_map(self._psi_value, n)
        ok = balanced and (self._phi() @ psi).is_identity()
        return psi, ok

    def to_dict(self):
        f = self.ctx.field
        key_t, key_s = ('u', 'gamma') if self.side == 'right' else ('t', 'beta')
        return {'side': self.side,
                'length': len(self),
                key_t: [format_vector(f, v) for v in self.family_coords],
                key_s: [format_vector(f, v) for v in self.map_coords]}


class RightQuasibase(_Quasibase):
    """ u_j ∈ T, γ_j ∈ S with Σ_j a·γ_j(a′)·u_j = a⊗a′ """

    side = 'right'

    @property
    def u(self):
        return self.family

    @property
    def gamma(self):
        return self.maps

    def value(self, m):
        """ Σ_j γ_j(e_m)·u_j ∈ A⊗_B A """
        mod = self.ctx.Q_module
        return lincomb(self.ctx.field, self.ctx.Q.dim,
                       [(self.ctx.field.one, mod.act_left(g.column(m), u)) for g, u in zip(self.maps, self.family)])

    def cases(self):
        A, Q, mod = self.ctx.A, self.ctx.Q, self.ctx.Q_module
        for m in range(A.dim):
            v = self.value(m)
            for l in range(A.dim):
                yield (l, m), mod.left[l].apply(v), Q.pure_basis(l, m)


class LeftQuasibase(_Quasibase):
    """ t_i ∈ T, β_i ∈ S with Σ_i t_i·β_i(a)·a′ = a⊗a′ """

    side = 'left'

    @property
    def t(self):
        return self.family

    @property
    def beta(self):
        return self.maps

    def value(self, m):
        """ Σ_i t_i·β_i(e_m) ∈ A⊗_B A """
        mod = self.ctx.Q_module
        return lincomb(self.ctx.field, self.ctx.Q.dim,
                       [(self.ctx.field.one, mod.act_right(t, b.column(m))) for b, t in zip(self.maps, self.family)])

    def cases(self):
        A, Q, mod = self.ctx.A, self.ctx.Q, self.ctx.Q_module
        for m in range(A.dim):
            v = self.value(m)
            for l in range(A.dim):
                yield (m, l), mod.right[l].apply(v), Q.pure_basis(m, l)


def verify_quasibase(qb) -> bool:
    """ Exhaustive check of the defining equation on all basis pairs """
    bad = [idx for idx, lhs, rhs in qb.cases() if lhs != rhs]
    if bad:
        logging.getLogger(__name__).warning("{} quasibase fails on {} basis pairs, first {}".format(qb.side, len(bad), bad[0]))
    return not bad


def _search(ctx, side, family):
    A, Q, field = ctx.A, ctx.Q, ctx.field
    mod = ctx.Q_module
    acts = mod.left if side == 'right' else mod.right
    family = [tuple(x) for x in (family if family is not None else ctx.T_space.vectors)]
    # φ must be onto A⊗_B A before a section can exist
    spanning = [acts[i].apply(x) for x in family for i in range(A.dim)]
    if rank_of(field, spanning, Q.dim) != Q.dim:
        logging.getLogger(__name__).info("{}: {} multiples of the T-family do not span A⊗_B A".format(ctx.ext.name, side))
        return None
    sigmas = ctx.S_hom.basis
    # acted[k][i] = e_i·x_k (right search) or x_k·e_i (left search)
    acted = [[acts[i].apply(x) for i in range(A.dim)] for x in family]
    columns = []
    for k in range(len(family)):
        for sigma in sigmas:
            col = []
            for m in range(A.dim):
                col.extend(lincomb(field, Q.dim, [(c, acted[k][i]) for i, c in enumerate(sigma.column(m))]))
            columns.append(tuple(col))
    rhs = []
    for m in range(A.dim):
        rhs.extend(Q.pure(A.unit, A.basis(m)) if side == 'right' else Q.pure(A.basis(m), A.unit))
    nrows = A.dim * Q.dim
    log_system("{} quasibase of {}".format(side, ctx.ext.name), nrows, len(columns))
    if not columns:
        return None
    coeffs = solve_linear(Matrix.from_columns(field, columns, nrows), rhs)
    if coeffs is None:
        logging.getLogger(__name__).info("{}: no {} quasibase".format(ctx.ext.name, side))
        return None
    ns = len(sigmas)
    zero = Matrix.zeros(field, A.dim, A.dim)
    maps = []
    for k in range(len(family)):
        m = zero
        for s, sigma in enumerate(sigmas):
            c = coeffs[k * ns + s]
            if c:
                m = m + sigma.scale(c)
        maps.append(m)
    cls = RightQuasibase if side == 'right' else LeftQuasibase
    qb = cls(ctx, family, maps)
    if not verify_quasibase(qb):
        raise VerificationError("Solved {} quasibase of {} fails its defining equation".format(side, ctx.ext.name))
    logging.getLogger(__name__).info("{}: {} quasibase of length {} found".format(ctx.ext.name, side, len(qb)))
    return qb


@with_ctx
def find_right_quasibase(ext, family=None, ctx=None) -> Optional[RightQuasibase]:
    """ A verified right quasibase whose u-family is `family` (default: the basis of T), or None """
    return _search(ctx, 'right', family)


@with_ctx
def find_left_quasibase(ext, family=None, ctx=None) -> Optional[LeftQuasibase]:
    """ A verified left quasibase whose t-family is `family` (default: the basis of T), or None """
    return _search(ctx, 'left', family)


@with_ctx
def is_d2(ext, ctx=None) -> D2Verdict:
    return ctx.verdict


def round_trip(qb) -> bool:
    """ Rebuild the section from a quasibase and solve again with the same family """
    psi, ok = qb.section()
    if not ok:
        return False
    search = find_right_quasibase if qb.side == 'right' else find_left_quasibase
    again = search(qb.ctx.ext, family=qb.family, ctx=qb.ctx)
    return again is not None

