# -*- coding: utf-8 -*-

""" The right bialgebroid T and the left bialgebroid S of a depth two extension

Right-handed (T over R): r·x·r′ = x·s(r′)·t(r), Takeuchi balance s(r)x₁⊗x₂ = x₁⊗t(r)x₂.
Left-handed (S over R): r·x·r′ = s(r)t(r′)x, Takeuchi balance x₁t(r)⊗x₂ = x₁⊗x₂s(r).
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging

from .algebra import StructureAlgebra
from .depth import verify_quasibase
from .errors import DepthTwoError, DimensionMismatch, InvalidStructure, VerificationError
from .linalg import Matrix, Subspace, kernel_rows, lincomb, rank_of, support, unit
from .report import Report
from .tensor import ActionModule, TensorSpace, bimodule_hom, centralized_subspace, tensor_over, rebracket

RIGHT = 'right'
LEFT = 'left'


class Bialgebroid(object):
    """ Total algebra over a base R with source, target, comultiplication and counit as matrices """

    def __init__(self, handedness, total: StructureAlgebra, base: StructureAlgebra,
                 source: Matrix, target: Matrix, name=''):
        if handedness not in (LEFT, RIGHT):
            raise ValueError("handedness must be 'left' or 'right'")
        if source.shape != (total.dim, base.dim) or target.shape != (total.dim, base.dim):
            raise DimensionMismatch("source and target must be {}x{} matrices".format(total.dim, base.dim))
        self.handedness = handedness
        self.total = total
        self.base = base
        self.source = source
        self.target = target
        self.name = name
        self.field = total.field
        self.module = self._module()
        self.tensor = TensorSpace(self.module, self.module, base, name='{0}⊗_R {0}'.format(name or 'H'))
        self.comul = None
        self.counit = None
        self._triple = None

    def _module(self):
        H = self.total
        left, right = [], []
        for k in range(self.base.dim):
            s, t = self.source.column(k), self.target.column(k)
            if self.handedness == RIGHT:
                left.append(H.right_matrix(t))
                right.append(H.right_matrix(s))
            else:
                left.append(H.left_matrix(s))
                right.append(H.left_matrix(t))
        return ActionModule(self.field, H.dim, self.base, left, self.base, right, name=self.name)

    def set_structure(self, comul: Matrix, counit: Matrix):
        if comul.shape != (self.tensor.dim, self.total.dim):
            raise DimensionMismatch("Comultiplication must be a {}x{} matrix".format(self.tensor.dim, self.total.dim))
        if counit.shape != (self.base.dim, self.total.dim):
            raise DimensionMismatch("Counit must be a {}x{} matrix".format(self.base.dim, self.total.dim))
        self.comul = comul
        self.counit = counit
        return self

    def s(self, r):
        return self.source.apply(r)

    def t(self, r):
        return self.target.apply(r)

    def delta(self, x):
        return self.comul.apply(x)

    def epsilon(self, x):
        return self.counit.apply(x)

    @property
    def triple(self) -> TensorSpace:
        """ H⊗_R H⊗_R H, bracketed to the left """
        if self._triple is None:
            self._triple = tensor_over([self.module] * 3, [self.base] * 2, name='H⊗_R H⊗_R H')
        return self._triple

    def transported(self, total=None, source=None, target=None, handedness=None, name=None) -> 'Bialgebroid':
        """ Same Δ and ε on representatives, with some structure maps replaced """
        other = Bialgebroid(handedness or self.handedness, total or self.total, self.base,
                            source if source is not None else self.source,
                            target if target is not None else self.target,
                            name=self.name if name is None else name)
        cols = []
        for j in range(self.total.dim):
            acc = [self.field.zero] * other.tensor.dim
            for a, m, n in self.tensor.terms(self.comul.column(j)):
                for q, c in support(other.tensor.pure_basis(m, n)):
                    acc[q] += a * c
            cols.append(tuple(acc))
        return other.set_structure(Matrix.from_columns(self.field, cols, other.tensor.dim), self.counit)

    def takeuchi_maps(self, r):
        """ The two sides of the Takeuchi balance for r ∈ R, as matrices on H⊗_R H """
        H, ts = self.total, self.tensor
        s, t = self.s(r), self.t(r)
        if self.handedness == RIGHT:
            f, g = H.left_matrix(s), H.left_matrix(t)
        else:
            f, g = H.right_matrix(t), H.right_matrix(s)
        dim = H.dim
        lhs = ts.induced_map(lambda m, n: ts.pure(f.column(m), unit(self.field, dim, n)), ts.dim)
        rhs = ts.induced_map(lambda m, n: ts.pure(unit(self.field, dim, m), g.column(n)), ts.dim)
        return lhs, rhs

    def takeuchi(self) -> Subspace:
        """ H ×_R H as the subspace of H⊗_R H where the Takeuchi balance holds """
        rows = []
        for k in range(self.base.dim):
            lhs, rhs = self.takeuchi_maps(self.base.basis(k))
            rows.extend(tuple(r) for r in (lhs - rhs).tolist())
        return kernel_rows(self.field, rows, self.tensor.dim)

    def tensor_product(self, y, z):
        """ Componentwise product (y¹z¹)⊗(y²z²) computed on representatives """
        H, ts = self.total, self.tensor
        acc = [self.field.zero] * ts.dim
        zt = ts.terms(z)
        for a, m, n in ts.terms(y):
            for b, k, l in zt:
                for q, c in support(ts.pure(H.mul_basis(m, k), H.mul_basis(n, l))):
                    acc[q] += a * b * c
        return tuple(acc)

    def __repr__(self):
        return "Bialgebroid({}, {}, dim={} over dim {})".format(self.name, self.handedness, self.total.dim, self.base.dim)


# -------------------------------------------------------------
# Constructions
# -------------------------------------------------------------

def _require(rqb):
    if rqb is None:
        raise VerificationError("A right depth two quasibase is required")
    if not verify_quasibase(rqb):
        raise VerificationError("The right quasibase fails its defining equation")


def build_T(ext, rqb=None) -> Bialgebroid:
    """ T = (A⊗_B A)^B with Δ(t) = Σ_j (t¹⊗γ_j(t²))⊗u_j, ε = multiplication, s(r) = 1⊗r, t(r) = r⊗1 """
    ctx = ext.ctx()
    rqb = rqb if rqb is not None else ctx.right_quasibase
    _require(rqb)
    A, Q, T, R, field = ctx.A, ctx.Q, ctx.T, ctx.R, ctx.field
    source = Matrix.from_columns(field, [ctx.t_coords(Q.pure(A.unit, ctx.r_image(R.basis(k)))) for k in range(R.dim)], T.dim)
    target = Matrix.from_columns(field, [ctx.t_coords(Q.pure(ctx.r_image(R.basis(k)), A.unit)) for k in range(R.dim)], T.dim)
    b = Bialgebroid(RIGHT, T, R, source, target, name='T')
    u_coords = rqb.family_coords
    comul_cols, counit_cols = [], []
    for i in range(T.dim):
        terms = Q.terms(ctx.t_vector(T.basis(i)))
        acc = [field.zero] * b.tensor.dim
        for g, u in zip(rqb.gamma, u_coords):
            y = lincomb(field, Q.dim, [(a, Q.pure(A.basis(m), g.column(n))) for a, m, n in terms])
            for q, c in support(b.tensor.pure(ctx.t_coords(y), u)):
                acc[q] += c
        comul_cols.append(tuple(acc))
        mu = lincomb(field, A.dim, [(a, A.mul_basis(m, n)) for a, m, n in terms])
        counit_cols.append(ctx.r_coords(mu))
    b.set_structure(Matrix.from_columns(field, comul_cols, b.tensor.dim), Matrix.from_columns(field, counit_cols, R.dim))
    logging.getLogger(__name__).info("{}: right bialgebroid T built, dim T = {}, dim R = {}, dim T⊗_R T = {}".format(
        ext.name, T.dim, R.dim, b.tensor.dim))
    return b


def _left_mult_matrices(ctx, u):
    """ (c, L_{e_m}, L_{e_n}) for the representative terms of u ∈ A⊗_B A """
    A = ctx.A
    return [(a, A.left_basis_matrix(m), A.left_basis_matrix(n)) for a, m, n in ctx.Q.terms(u)]


def build_S(ext, rqb=None) -> Bialgebroid:
    """ S = End_B A_B with Δ(α) = Σ_j γ_j⊗u_j¹α(u_j²−), ε(α) = α(1), s(r) = λ(r), t(r) = ρ(r) """
    ctx = ext.ctx()
    rqb = rqb if rqb is not None else ctx.right_quasibase
    _require(rqb)
    A, S, R, field = ctx.A, ctx.S, ctx.R, ctx.field
    source = Matrix.from_columns(field, [ctx.s_coords(A.left_matrix(ctx.r_image(R.basis(k)))) for k in range(R.dim)], S.dim)
    target = Matrix.from_columns(field, [ctx.s_coords(A.right_matrix(ctx.r_image(R.basis(k)))) for k in range(R.dim)], S.dim)
    b = Bialgebroid(LEFT, S, R, source, target, name='S')
    gammas = [ctx.s_coords(g) for g in rqb.gamma]
    u_terms = [_left_mult_matrices(ctx, u) for u in rqb.u]
    comul_cols, counit_cols = [], []
    for alpha in ctx.S_hom.basis:
        acc = [field.zero] * b.tensor.dim
        for g, terms in zip(gammas, u_terms):
            if not terms:
                continue
            delta = None
            for a, Lm, Ln in terms:
                part = (Lm @ alpha @ Ln).scale(a)
                delta = part if delta is None else delta + part
            for q, c in support(b.tensor.pure(g, ctx.s_coords(delta))):
                acc[q] += c
        comul_cols.append(tuple(acc))
        counit_cols.append(ctx.r_coords(alpha.apply(A.unit)))
    b.set_structure(Matrix.from_columns(field, comul_cols, b.tensor.dim), Matrix.from_columns(field, counit_cols, R.dim))
    logging.getLogger(__name__).info("{}: left bialgebroid S built, dim S = {}, dim S⊗_R S = {}".format(ext.name, S.dim, b.tensor.dim))
    return b


# -------------------------------------------------------------
# Checkers
# -------------------------------------------------------------

def check_coring(b: Bialgebroid) -> Report:
    """ Coassociativity in H⊗_R H⊗_R H and both counit laws, on every basis element """
    report = Report('coring {}'.format(b.name), b.field)
    H, ts, field = b.total, b.tensor, b.field
    triple = b.triple

    def coassoc():
        for j in range(H.dim):
            terms = ts.terms(b.comul.column(j))
            lhs = lincomb(field, triple.dim, [(a, triple.pure(b.comul.column(m), unit(field, H.dim, n))) for a, m, n in terms])
            rhs = lincomb(field, triple.dim, [(a, rebracket(triple, ts, unit(field, H.dim, m), b.comul.column(n))) for a, m, n in terms])
            yield (j,), lhs, rhs

    def counit(side):
        mod = b.module
        for j in range(H.dim):
            terms = ts.terms(b.comul.column(j))
            if side == 'left':
                value = lincomb(field, H.dim, [(a, mod.act_left(b.counit.column(m), H.basis(n))) for a, m, n in terms])
            else:
                value = lincomb(field, H.dim, [(a, mod.act_right(H.basis(m), b.counit.column(n))) for a, m, n in terms])
            yield (j,), value, H.basis(j)

    report.expect_equal('coassociativity', coassoc())
    report.expect_equal('counit-left', counit('left'))
    report.expect_equal('counit-right', counit('right'))
    return report


def check_bialgebroid_axioms(b: Bialgebroid) -> Report:
    """ The five bialgebroid axioms for the declared handedness, plus the structural invariants """
    report = Report('{} bialgebroid {}'.format(b.handedness, b.name), b.field)
    H, R, ts, field, mod = b.total, b.base, b.tensor, b.field, b.module
    one_r = R.unit
    # (1), (2)
    report.check('comul-unit', b.delta(H.unit) == ts.pure(H.unit, H.unit), "Δ(1) = 1⊗1")
    report.check('counit-unit', b.epsilon(H.unit) == one_r, "ε(1) = 1")

    # (3)
    def counit_products():
        for i in range(H.dim):
            e = b.epsilon(H.basis(i))
            for j in range(H.dim):
                x, y = H.basis(i), H.basis(j)
                lhs = b.epsilon(H.multiply(x, y))
                if b.handedness == RIGHT:
                    via_t = b.epsilon(H.multiply(b.t(e), y))
                    via_s = b.epsilon(H.multiply(b.s(e), y))
                else:
                    e = b.epsilon(y)
                    via_s = b.epsilon(H.multiply(x, b.s(e)))
                    via_t = b.epsilon(H.multiply(x, b.t(e)))
                yield (i, j), (lhs, lhs), (via_t, via_s)

    report.expect_equal('counit-product', counit_products())

    # (4)
    maps = [b.takeuchi_maps(R.basis(k)) for k in range(R.dim)]

    def balance():
        for j in range(H.dim):
            d = b.comul.column(j)
            for k, (lhs, rhs) in enumerate(maps):
                yield (j, k), lhs.apply(d), rhs.apply(d)

    report.expect_equal('takeuchi-balance', balance())
    takeuchi = b.takeuchi()
    report.dimensions['takeuchi'] = takeuchi.dim
    report.expect_true('comul-in-takeuchi', (((j,), takeuchi.contains(b.comul.column(j))) for j in range(H.dim)))

    # (5)
    def multiplicative():
        for i in range(H.dim):
            for j in range(H.dim):
                lhs = b.delta(H.mul_basis(i, j))
                yield (i, j), lhs, b.tensor_product(b.comul.column(i), b.comul.column(j))

    report.expect_equal('comul-multiplicative', multiplicative())

    # structure maps
    def source_hom():
        yield (), b.s(one_r), H.unit
        for i in range(R.dim):
            for j in range(R.dim):
                yield (i, j), b.s(R.mul_basis(i, j)), H.multiply(b.s(R.basis(i)), b.s(R.basis(j)))

    def target_anti():
        yield (), b.t(one_r), H.unit
        for i in range(R.dim):
            for j in range(R.dim):
                yield (i, j), b.t(R.mul_basis(i, j)), H.multiply(b.t(R.basis(j)), b.t(R.basis(i)))

    def commute():
        for i in range(R.dim):
            for j in range(R.dim):
                s, t = b.s(R.basis(i)), b.t(R.basis(j))
                yield (i, j), H.multiply(s, t), H.multiply(t, s)

    report.expect_equal('source-homomorphism', source_hom())
    report.expect_equal('target-antihomomorphism', target_anti())
    report.expect_equal('source-target-commute', commute())

    tmod = ts.as_module()

    def comul_bilinear():
        for j in range(H.dim):
            x = H.basis(j)
            d = b.delta(x)
            for k in range(R.dim):
                yield (j, k, 'left'), b.delta(mod.left[k].apply(x)), tmod.left[k].apply(d)
                yield (j, k, 'right'), b.delta(mod.right[k].apply(x)), tmod.right[k].apply(d)

    def counit_bilinear():
        for j in range(H.dim):
            x = H.basis(j)
            e = b.epsilon(x)
            for k in range(R.dim):
                yield (j, k, 'left'), b.epsilon(mod.left[k].apply(x)), R.multiply(R.basis(k), e)
                yield (j, k, 'right'), b.epsilon(mod.right[k].apply(x)), R.multiply(e, R.basis(k))

    report.expect_equal('comul-bilinear', comul_bilinear())
    report.expect_equal('counit-bilinear', counit_bilinear())
    return report


def full_check(b: Bialgebroid) -> Report:
    report = Report(b.name, b.field)
    report.merge(check_coring(b))
    report.merge(check_bialgebroid_axioms(b))
    report.dimensions.update({'total': b.total.dim, 'base': b.base.dim, 'tensor': b.tensor.dim})
    return report


def to_left_bialgebroid(b: Bialgebroid):
    """ Turn a right bialgebroid into a left one on the opposite algebra

    Returns (left bialgebroid, assignment) where assignment names the (source, target) pair
    that passed, or (None, None) when no candidate passes.
    """
    if b.handedness != RIGHT:
        raise InvalidStructure("Expected a right bialgebroid")
    op = b.total.opposite()
    candidates = (('t_R', 's_R', b.target, b.source), ('t_R', 't_R', b.target, b.target))
    for s_name, t_name, s, t in candidates:
        assignment = "s_L = {}, t_L = {}".format(s_name, t_name)
        try:
            left = b.transported(total=op, source=s, target=t, handedness=LEFT, name=b.name + '^op')
            ok = check_coring(left).ok and check_bialgebroid_axioms(left).ok
        except DepthTwoError as e:
            logging.getLogger(__name__).debug("Candidate {} rejected: {}".format(assignment, e))
            ok = False
        if ok:
            logging.getLogger(__name__).info("{}: left bialgebroid on the opposite algebra with {}".format(b.name, assignment))
            left.assignment = assignment
            return left, assignment
        logging.getLogger(__name__).info("{}: candidate {} fails the left bialgebroid axioms".format(b.name, assignment))
    return None, None


# -------------------------------------------------------------
# Duality
# -------------------------------------------------------------

def pairing(ctx, t, alpha: Matrix):
    """ ⟨t|α⟩ = t¹α(t²) ∈ R for t in T-coordinates """
    A = ctx.A
    v = lincomb(ctx.field, A.dim, [(a, A.multiply(A.basis(m), alpha.column(n))) for a, m, n in ctx.Q.terms(ctx.t_vector(t))])
    return ctx.r_coords(v)


def left_pairing(ctx, alpha: Matrix, t):
    """ [α|t] = α(t¹)t² ∈ A """
    A = ctx.A
    return lincomb(ctx.field, A.dim, [(a, A.multiply(alpha.column(m), A.basis(n))) for a, m, n in ctx.Q.terms(ctx.t_vector(t))])


def verify_duality(ext, T: Bialgebroid, S: Bialgebroid, rqb=None) -> Report:
    """ η: T → Hom(S_R, R_R), t ↦ ⟨t|−⟩ is bijective and compatible with Δ and ε """
    ctx = ext.ctx()
    rqb = rqb if rqb is not None else ctx.right_quasibase
    field, R, A = ctx.field, ctx.R, ctx.A
    report = Report('duality {}'.format(ext.name), field)
    sigmas = ctx.S_hom.basis
    nT, nS = T.total.dim, S.total.dim
    eta = [[pairing(ctx, T.total.basis(i), alpha) for alpha in sigmas] for i in range(nT)]

    # (a) η is a bijection onto the right R-linear functionals on S
    s_right = ActionModule(field, nS, right_algebra=R, right=S.module.right, name='S_R')
    r_right = ActionModule(field, R.dim, right_algebra=R, right=[R.right_basis_matrix(k) for k in range(R.dim)], name='R_R')
    dual = bimodule_hom(s_right, r_right, left=False, right=True)
    eta_mats = [Matrix.from_columns(field, eta[i], R.dim) for i in range(nT)]
    report.dimensions.update({'T': nT, 'S': nS, 'S*': dual.dim})
    report.expect_true('eta-right-linear', (((i,), dual.contains(m)) for i, m in enumerate(eta_mats)))
    rank = rank_of(field, [m.entries for m in eta_mats], nS * R.dim)
    report.dimensions['pairing-rank'] = rank
    report.check('eta-bijective', rank == nT == dual.dim, "rank {} with dim T = {} and dim S* = {}".format(rank, nT, dual.dim))

    gammas = [ctx.s_coords(g) for g in rqb.gamma]
    mod = ctx.Q_module

    def eta_inverse(phi: Matrix):
        """ φ ↦ Σ_j φ(γ_j)·u_j """
        v = lincomb(field, ctx.Q.dim, [(field.one, mod.act_left(ctx.r_image(phi.apply(g)), u)) for g, u in zip(gammas, rqb.u)])
        return ctx.t_coords(v)

    report.expect_equal('eta-inverse-left', (((i,), eta_inverse(m), T.total.basis(i)) for i, m in enumerate(eta_mats)))

    def right_inverse():
        for k, phi in enumerate(dual.basis):
            t = eta_inverse(phi)
            yield (k,), Matrix.from_columns(field, [pairing(ctx, t, alpha) for alpha in sigmas], R.dim), phi

    report.expect_equal('eta-inverse-right', right_inverse())

    # (b) ⟨t₍₁₎·⟨t₍₂₎|α′⟩ | α⟩ = ⟨t|α∘α′⟩, with x·r = x¹⊗x²r
    ts = T.tensor

    def comultiplicative():
        for i in range(nT):
            terms = ts.terms(T.comul.column(i))
            for s2, alpha2 in enumerate(sigmas):
                inner = [(a, T.module.act_right(T.total.basis(m), eta[n][s2])) for a, m, n in terms]
                x = lincomb(field, nT, inner)
                for s1, alpha1 in enumerate(sigmas):
                    yield (i, s1, s2), pairing(ctx, x, alpha1), pairing(ctx, T.total.basis(i), alpha1 @ alpha2)

    report.expect_equal('pairing-comultiplicative', comultiplicative())

    # (c) ⟨t|id⟩ = ε(t)
    ident = Matrix.identity(field, A.dim)
    report.expect_equal('pairing-counit', (((i,), pairing(ctx, T.total.basis(i), ident), T.epsilon(T.total.basis(i)))
                                           for i in range(nT)))

    # (d) [α|t] = α(t¹)t² is nondegenerate
    by_t = [sum((left_pairing(ctx, alpha, T.total.basis(i)) for alpha in sigmas), ()) for i in range(nT)]
    by_s = [sum((left_pairing(ctx, alpha, T.total.basis(i)) for i in range(nT)), ()) for alpha in sigmas]
    rank_t = rank_of(field, by_t, nS * A.dim)
    rank_s = rank_of(field, by_s, nT * A.dim)
    report.check('left-pairing-nondegenerate', rank_t == nT and rank_s == nS,
                 "rank in T {} of {}, rank in S {} of {}".format(rank_t, nT, rank_s, nS))
    return report


# -------------------------------------------------------------
# Finite projectivity and tensor identifications
# -------------------------------------------------------------

def projectivity_witnesses(ext, lqb=None, rqb=None) -> Report:
    """ t = Σ t_i·f_i(t) with f_i(t) = β_i(t¹)t², and α = Σ γ_j·h_j(α) with h_j(α) = u_j¹α(u_j²) """
    ctx = ext.ctx()
    lqb = lqb if lqb is not None else ctx.left_quasibase
    rqb = rqb if rqb is not None else ctx.right_quasibase
    field, A, Q, T = ctx.field, ctx.A, ctx.Q, ctx.T
    mod = ctx.Q_module
    report = Report('projectivity {}'.format(ext.name), field)
    if lqb is None:
        report.not_applicable('T-dual-bases', "no left quasibase")
    else:
        def t_cases():
            for i in range(T.dim):
                x = ctx.t_vector(T.basis(i))
                terms = Q.terms(x)
                acc = [field.zero] * Q.dim
                for beta, ti in zip(lqb.beta, lqb.t):
                    f = lincomb(field, A.dim, [(a, A.multiply(beta.column(m), A.basis(n))) for a, m, n in terms])
                    if not ctx.R_sub.contains(f):
                        yield (i, 'f-in-R'), f, None
                    for q, c in support(mod.act_right(ti, f)):
                        acc[q] += c
                yield (i,), tuple(acc), x

        report.expect_equal('T-dual-bases', t_cases())
    if rqb is None:
        report.not_applicable('S-dual-bases', "no right quasibase")
    else:
        u_terms = [Q.terms(u) for u in rqb.u]

        def s_cases():
            for k, alpha in enumerate(ctx.S_hom.basis):
                total = Matrix.zeros(field, A.dim, A.dim)
                for g, terms in zip(rqb.gamma, u_terms):
                    h = lincomb(field, A.dim, [(a, A.multiply(A.basis(m), alpha.column(n))) for a, m, n in terms])
                    if not ctx.R_sub.contains(h):
                        yield (k, 'h-in-R'), h, None
                    total = total + A.right_matrix(h) @ g
                yield (k,), total, alpha

        report.expect_equal('S-dual-bases', s_cases())
    return report


def check_tensor_square_isomorphisms(ext, T: Bialgebroid, S: Bialgebroid) -> Report:
    """ T⊗_R T ≅ (A⊗_B A⊗_B A)^B and S⊗_R S ≅ Hom(_B A⊗_B A_B, _B A_B) """
    ctx = ext.ctx()
    field, A, Q = ctx.field, ctx.A, ctx.Q
    report = Report('tensor squares {}'.format(ext.name), field)
    Q3 = tensor_over([ctx.A_AB, ctx.A_BB, ctx.A_BA], [ctx.B, ctx.B], name='A⊗_B A⊗_B A')
    C3 = centralized_subspace(Q3, ext)
    tt = T.tensor
    t_terms = [Q.terms(ctx.t_vector(T.total.basis(i))) for i in range(T.total.dim)]

    def t_map(m, n):
        acc = [field.zero] * Q3.dim
        for a, i, j in t_terms[m]:
            for b, k, l in t_terms[n]:
                for q, c in support(Q3.pure(A.basis(i), A.mul_basis(j, k), A.basis(l))):
                    acc[q] += a * b * c
        return tuple(acc)

    images = [t_map(m, n) for m, n in tt.pairs]
    report.dimensions.update({'T⊗_R T': tt.dim, '(A⊗_B A⊗_B A)^B': C3.dim})
    report.expect_true('T-square-into-centralizer', (((q,), C3.contains(v)) for q, v in enumerate(images)))
    report.check('T-square-balanced', tt.is_balanced_map(t_map, Q3.dim))
    rank = rank_of(field, images, Q3.dim)
    report.check('T-square-bijective', rank == tt.dim == C3.dim, "rank {}".format(rank))

    ss = S.tensor
    QB = Q.as_module().restrict(left=(ctx.B, ext.iota), right=(ctx.B, ext.iota))
    hom = bimodule_hom(QB, ctx.A_BB)
    sig = ctx.S_hom.basis

    def s_map(m, n):
        cols = []
        for i, j in Q.pairs:
            cols.append(A.multiply(sig[m].column(i), sig[n].column(j)))
        return Matrix.from_columns(field, cols, A.dim)

    mats = [s_map(m, n) for m, n in ss.pairs]
    report.dimensions.update({'S⊗_R S': ss.dim, 'Hom(A⊗_B A, A)': hom.dim})
    report.expect_true('S-square-into-hom', (((q,), hom.contains(m)) for q, m in enumerate(mats)))
    rank = rank_of(field, [m.entries for m in mats], A.dim * Q.dim)
    report.check('S-square-bijective', rank == ss.dim == hom.dim, "rank {}".format(rank))
    return report
