# -*- coding: utf-8 -*-

""" Hopf subalgebras, normality, quotient coalgebras and the Hopf-Galois side of the
normality theorem

H̄ = H/HK⁺ carries the coaction h ↦ h₍₁₎⊗h̄₍₂₎ and the Galois map
β(a⊗a′) = aa′₍₁₎⊗ā′₍₂₎ on H⊗_K H. H̿ = H/K⁺H is only used for dimension bookkeeping.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging
from collections import defaultdict
from dataclasses import dataclass

from .algebra import Extension, FiniteGroup, StructureAlgebra, Subalgebra, validate_algebra
from .bialgebra import (HopfAlgebra, clean, coassociativity_cases, counit_cases, group_hopf,
                        multiplicativity_cases, pure2, tensor_map, to_dense)
from .errors import InvalidStructure
from .linalg import Matrix, Subspace, kernel_rows, lincomb, support, unit
from .report import Report

LEFT = 'left'
RIGHT = 'right'
TWO_SIDED = 'two-sided'


# -------------------------------------------------------------
# Hopf algebra axioms
# -------------------------------------------------------------

def validate_hopf(h: HopfAlgebra) -> Report:
    """ Bialgebra and antipode identities on basis elements """
    field, alg, n = h.field, h.algebra, h.dim
    report = Report('validate_hopf {}'.format(h.name), field)
    report.merge(validate_algebra(alg), prefix='algebra.')
    report.expect_equal('coassociativity', coassociativity_cases(h))
    report.expect_equal('counit', counit_cases(h))
    report.expect_equal('comul-multiplicative', multiplicativity_cases(h))
    report.check('comul-unit', h.unit_coproduct == pure2(h.unit, h.unit), "Δ(1) = 1⊗1")
    report.check('counit-unit', h.epsilon(h.unit) == field.one, "ε(1) = 1")
    report.expect_equal('counit-multiplicative',
                        (((i, j), h.epsilon(alg.mul_basis(i, j)), h.counit[i] * h.counit[j])
                         for i in range(n) for j in range(n)))

    def antipode(side):
        for i in range(n):
            acc = [field.zero] * n
            for (j, k), c in h.comul[i].items():
                if side == LEFT:
                    prod = alg.multiply(h.S(h.basis(j)), h.basis(k))
                else:
                    prod = alg.multiply(h.basis(j), h.S(h.basis(k)))
                for q, x in support(prod):
                    acc[q] += c * x
            yield (i,), tuple(acc), tuple(h.counit[i] * x for x in h.unit)

    report.expect_equal('antipode-left', antipode(LEFT), "τ(h₍₁₎)h₍₂₎ = ε(h)1")
    report.expect_equal('antipode-right', antipode(RIGHT), "h₍₁₎τ(h₍₂₎) = ε(h)1")
    return report


# -------------------------------------------------------------
# Hopf subalgebras
# -------------------------------------------------------------

def _tensor_square(field, n, space: Subspace) -> Subspace:
    return Subspace.span(field, n * n, [to_dense(field, pure2(u, v), (n, n))
                                        for u in space.vectors for v in space.vectors])


class HopfSubalgebra(object):
    """ A unital subalgebra K ⊆ H with Δ(K) ⊆ K⊗K and τ(K) ⊆ K """

    def __init__(self, H: HopfAlgebra, space: Subspace, name=''):
        self.H = H
        self.space = space
        self.name = name or 'K'
        self.subalgebra = Subalgebra(H.algebra, space, name=self.name)
        square = _tensor_square(H.field, H.dim, space)
        for v in space.vectors:
            if not square.contains(H.vector(H.coproduct(v))):
                raise InvalidStructure("{} is not a subcoalgebra of {}".format(self.name, H.name))
            if not space.contains(H.S(v)):
                raise InvalidStructure("{} is not stable under the antipode of {}".format(self.name, H.name))
        self._ext = None

    @staticmethod
    def span(H, vectors, name=''):
        return HopfSubalgebra(H, Subspace.span(H.field, H.dim, vectors), name=name)

    @staticmethod
    def trivial(H):
        return HopfSubalgebra.span(H, [H.unit], name='k1')

    @staticmethod
    def whole(H):
        return HopfSubalgebra(H, Subspace.full(H.field, H.dim), name=H.name)

    @property
    def dim(self):
        return self.space.dim

    @property
    def field(self):
        return self.H.field

    def contains(self, x):
        return self.space.contains(x)

    def extension(self) -> Extension:
        """ K ⊆ H as an algebra extension, cached """
        if self._ext is None:
            self._ext = Extension.from_subalgebra(self.subalgebra, name='{}/{}'.format(self.H.name, self.name))
        return self._ext

    def __repr__(self):
        return "HopfSubalgebra({} in {}, dim={})".format(self.name, self.H.name, self.dim)


def subgroup_pair(group: FiniteGroup, elements, field=None, name=''):
    """ (k[G], k[N]) for a subgroup N given by element indices """
    H = group_hopf(group, field)
    if not group.is_subgroup(elements):
        raise InvalidStructure("{} is not a subgroup of {}".format(list(elements), group.name))
    K = HopfSubalgebra.span(H, [unit(H.field, H.dim, g) for g in elements],
                            name=name or 'k[{}]'.format(','.join(group.names[g] for g in elements)))
    return H, K


def augmentation_ideal(sub: HopfSubalgebra) -> Subspace:
    """ K⁺ = K ∩ ker ε """
    H = sub.H
    ker = kernel_rows(H.field, [H.counit], H.dim)
    return sub.space.intersect(ker)


def product_space(a: StructureAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """ span{uv : u ∈ U, v ∈ V} """
    return Subspace.span(a.field, a.dim, [a.multiply(u, v) for u in U.vectors for v in V.vectors])


def left_ideal(H: HopfAlgebra, K: HopfSubalgebra) -> Subspace:
    """ HK⁺ """
    return product_space(H.algebra, Subspace.full(H.field, H.dim), augmentation_ideal(K))


def right_ideal(H: HopfAlgebra, K: HopfSubalgebra) -> Subspace:
    """ K⁺H """
    return product_space(H.algebra, augmentation_ideal(K), Subspace.full(H.field, H.dim))


@dataclass(frozen=True)
class Normality:
    ideal_equality: bool
    ad_left: bool
    ad_right: bool

    @property
    def normal(self):
        return self.ideal_equality

    @property
    def consistent(self):
        """ HK⁺ = K⁺H exactly when K is stable under both adjoint actions """
        return self.ideal_equality == (self.ad_left and self.ad_right)

    def to_dict(self):
        return {'ideal_equality': self.ideal_equality, 'ad_left': self.ad_left, 'ad_right': self.ad_right}


def _adjoint_stable(H, K, side):
    alg, field = H.algebra, H.field
    for a in range(H.dim):
        for x in K.space.vectors:
            acc = [field.zero] * H.dim
            for (j, k), c in H.comul[a].items():
                if side == LEFT:
                    prod = alg.product(H.S(H.basis(j)), x, H.basis(k))
                else:
                    prod = alg.product(H.basis(j), x, H.S(H.basis(k)))
                for q, v in support(prod):
                    acc[q] += c * v
            if not K.contains(tuple(acc)):
                return False
    return True


def is_normal(H: HopfAlgebra, K: HopfSubalgebra) -> Normality:
    """ HK⁺ = K⁺H, and independently τ(a₍₁₎)xa₍₂₎ ∈ K and a₍₁₎xτ(a₍₂₎) ∈ K for all a ∈ H, x ∈ K """
    flags = Normality(ideal_equality=left_ideal(H, K) == right_ideal(H, K),
                      ad_left=_adjoint_stable(H, K, LEFT),
                      ad_right=_adjoint_stable(H, K, RIGHT))
    if not flags.consistent:
        logging.getLogger(__name__).warning("{} in {}: ideal equality and adjoint stability disagree ({})".format(
            K.name, H.name, flags.to_dict()))
    return flags


# -------------------------------------------------------------
# Quotients
# -------------------------------------------------------------

class QuotientCoalgebra(object):
    """ H/I for a coideal I that is a left, right or two-sided ideal

    The quotient basis is represented by the unit vectors at the non-pivot columns of I.
    """

    def __init__(self, H, ideal: Subspace, side=LEFT, name=''):
        if side not in (LEFT, RIGHT, TWO_SIDED):
            raise ValueError("Invalid side: {}".format(side))
        self.H = H
        self.ideal = ideal
        self.side = side
        self.field = H.field
        self.name = name or '{}/I'.format(H.name)
        n = H.dim
        self.representatives = ideal.free_columns
        self.dim = len(self.representatives)
        self.projection = Matrix.from_columns(self.field, [ideal.quotient_coordinates(H.basis(i)) for i in range(n)], self.dim)
        for v in ideal.vectors:
            if H.epsilon(v):
                raise InvalidStructure("{}: ε does not vanish on the ideal".format(self.name))
            if tensor_map([self.projection, self.projection], H.coproduct(v)):
                raise InvalidStructure("{}: the ideal is not a coideal".format(self.name))
        for v in ideal.vectors:
            for i in range(n):
                e = H.basis(i)
                if side in (LEFT, TWO_SIDED) and not ideal.contains(H.multiply(e, v)):
                    raise InvalidStructure("{}: the ideal is not a left ideal".format(self.name))
                if side in (RIGHT, TWO_SIDED) and not ideal.contains(H.multiply(v, e)):
                    raise InvalidStructure("{}: the ideal is not a right ideal".format(self.name))
        self.comul = [tensor_map([self.projection, self.projection], H.comul[r]) for r in self.representatives]
        self.counit = tuple(H.counit[r] for r in self.representatives)
        logging.getLogger(__name__).debug("{}: quotient of dim {} by a {} ideal of dim {}".format(
            self.name, self.dim, side, ideal.dim))

    def project(self, h):
        return self.projection.apply(h)

    def lift(self, q):
        """ The representative of q in H """
        v = [self.field.zero] * self.H.dim
        for r, c in zip(self.representatives, q):
            v[r] = c
        return tuple(v)

    def action(self, h) -> Matrix:
        """ Residual action [v] ↦ [hv] (left ideal) or [v] ↦ [vh] (right ideal) """
        H = self.H
        if self.side == LEFT:
            images = [H.multiply(h, self.lift(unit(self.field, self.dim, p))) for p in range(self.dim)]
        elif self.side == RIGHT:
            images = [H.multiply(self.lift(unit(self.field, self.dim, p)), h) for p in range(self.dim)]
        else:
            raise InvalidStructure("A two-sided quotient is an algebra, use quotient_hopf")
        return Matrix.from_columns(self.field, [self.project(x) for x in images], self.dim)

    def __repr__(self):
        return "QuotientCoalgebra({}, dim={}, side={})".format(self.name, self.dim, self.side)


def quotient_coalgebra(H, ideal: Subspace, side=LEFT, name='') -> QuotientCoalgebra:
    return QuotientCoalgebra(H, ideal, side=side, name=name)


def quotient_hopf(H: HopfAlgebra, ideal: Subspace, name=''):
    """ (H/I, quotient data) for a Hopf ideal I """
    qc = QuotientCoalgebra(H, ideal, side=TWO_SIDED, name=name or '{}/I'.format(H.name))
    for v in ideal.vectors:
        if not ideal.contains(H.S(v)):
            raise InvalidStructure("{}: the ideal is not stable under the antipode".format(qc.name))
    f, reps, d = H.field, qc.representatives, qc.dim
    triples = []
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            for c, x in support(qc.project(H.algebra.mul_basis(ra, rb))):
                triples.append((a, b, c, x))
    alg = StructureAlgebra.from_triples(f, d, triples, qc.project(H.unit), name=qc.name,
                                        labels=['[{}]'.format(H.algebra.labels[r]) for r in reps])
    antipode = Matrix.from_columns(f, [qc.project(H.S(H.basis(r))) for r in reps], d)
    W = HopfAlgebra(alg, qc.comul, qc.counit, antipode, name=qc.name)
    return W, qc


# -------------------------------------------------------------
# Hopf-Galois
# -------------------------------------------------------------

class HopfGaloisData(object):
    """ H̄ = H/HK⁺, ρ(h) = h₍₁₎⊗h̄₍₂₎ and β on H⊗_K H """

    def __init__(self, H, K, quotient, rho, coinvariants, beta, well_defined, bijective, inverse, report):
        self.H = H
        self.K = K
        self.quotient = quotient
        self.rho = rho
        self.coinvariants = coinvariants
        self.beta = beta
        self.well_defined = well_defined
        self.bijective = bijective
        self.inverse = inverse
        self.report = report

    @property
    def coinvariants_equal(self):
        return self.coinvariants == self.K.space

    @property
    def galois(self):
        return self.well_defined and self.bijective and self.coinvariants_equal


def _quotient_coaction(H, qc: QuotientCoalgebra):
    """ Matrix of h ↦ h₍₁₎⊗π(h₍₂₎), index j·dim H̄ + p """
    d = qc.dim
    cols = []
    for i in range(H.dim):
        acc = [H.field.zero] * (H.dim * d)
        for (j, k), c in H.comul[i].items():
            for p, x in support(qc.projection.column(k)):
                acc[j * d + p] += c * x
        cols.append(tuple(acc))
    return Matrix.from_columns(H.field, cols, H.dim * d)


def hopf_galois(H: HopfAlgebra, K: HopfSubalgebra) -> HopfGaloisData:
    field, alg = H.field, H.algebra
    report = Report('hopf-galois {}/{}'.format(H.name, K.name), field)
    qc = QuotientCoalgebra(H, left_ideal(H, K), side=LEFT, name='{}/{}K+'.format(H.name, H.name))
    d = qc.dim
    tdim = H.dim * d
    rho = _quotient_coaction(H, qc)
    qone = qc.project(H.unit)

    def rho_dict(i):
        return {divmod(q, d): c for q, c in support(rho.column(i))}

    def counit():
        for i in range(H.dim):
            acc = [field.zero] * H.dim
            for (j, p), c in rho_dict(i).items():
                acc[j] += c * qc.counit[p]
            yield (i,), tuple(acc), H.basis(i)

    def coassoc():
        for i in range(H.dim):
            lhs = defaultdict(lambda: field.zero)
            rhs = defaultdict(lambda: field.zero)
            for (j, p), c in rho_dict(i).items():
                for (a, b), x in rho_dict(j).items():
                    lhs[(a, b, p)] += c * x
                for (a, b), x in qc.comul[p].items():
                    rhs[(j, a, b)] += c * x
            yield (i,), clean(lhs), clean(rhs)

    report.expect_equal('coaction-counit', counit())
    report.expect_equal('coaction-coassociativity', coassoc())

    trivial = Matrix.from_columns(field, [tuple(x * y for x in H.basis(i) for y in qone) for i in range(H.dim)], tdim)
    coinv = kernel_rows(field, [tuple(r) for r in (rho - trivial).tolist()], H.dim)

    Q = K.extension().ctx().Q

    def value(m, n):
        acc = [field.zero] * tdim
        for q, c in support(rho.column(n)):
            j, p = divmod(q, d)
            for k, x in support(alg.mul_basis(m, j)):
                acc[k * d + p] += c * x
        return acc

    beta = Q.induced_map(value, tdim)
    well_defined = Q.is_balanced_map(value, tdim)
    rank = beta.rank()
    bijective = well_defined and rank == Q.dim == tdim
    inverse = None
    if bijective:
        inverse = beta.inverse()

        def closed(m, p):
            r = qc.representatives[p]
            return lincomb(field, Q.dim, [(c, Q.pure(alg.multiply(H.basis(m), H.S(H.basis(j))), H.basis(k)))
                                          for (j, k), c in H.comul[r].items()])

        closed_form = Matrix.from_columns(field, [closed(m, p) for m in range(H.dim) for p in range(d)], Q.dim)
        report.check('inverse-closed-form', closed_form == inverse, "β⁻¹(x⊗ȳ) = xτ(y₍₁₎)⊗y₍₂₎")
        logging.getLogger(__name__).info("{}/{}: β is bijective".format(H.name, K.name))
    else:
        report.not_applicable('inverse-closed-form', "β is not a bijection H⊗_K H → H⊗H̄")
    report.dimensions.update({'H': H.dim, 'K': K.dim, 'H⊗_K H': Q.dim, 'Hbar': d, 'rank-beta': rank,
                              'coinvariants': coinv.dim})
    data = HopfGaloisData(H, K, qc, rho, coinv, beta, well_defined, bijective, inverse, report)
    report.verdicts.update({'beta_well_defined': well_defined, 'beta_bijective': bijective,
                            'coinvariants_equal_K': data.coinvariants_equal, 'galois': data.galois})
    return data


def hopf_galois_check(H: HopfAlgebra, K: HopfSubalgebra) -> Report:
    return hopf_galois(H, K).report


def schneider_maps(H: HopfAlgebra, K: HopfSubalgebra) -> Report:
    """ x⊗y ↦ xy₍₁₎⊗[y₍₂₎] into H⊗H/K⁺H and x⊗y ↦ [x₍₁₎]⊗x₍₂₎y into H/HK⁺⊗H """
    field, alg, n = H.field, H.algebra, H.dim
    report = Report('schneider {}/{}'.format(H.name, K.name), field)
    Q = K.extension().ctx().Q
    right_q = QuotientCoalgebra(H, right_ideal(H, K), side=RIGHT)
    left_q = QuotientCoalgebra(H, left_ideal(H, K), side=LEFT)
    dr, dl = right_q.dim, left_q.dim

    def right_map(m, v):
        acc = [field.zero] * (n * dr)
        for (j, k), c in H.comul[v].items():
            for a, x in support(alg.mul_basis(m, j)):
                for p, y in support(right_q.projection.column(k)):
                    acc[a * dr + p] += c * x * y
        return acc

    def left_map(m, v):
        acc = [field.zero] * (dl * n)
        for (j, k), c in H.comul[m].items():
            for p, x in support(left_q.projection.column(j)):
                for b, y in support(alg.mul_basis(k, v)):
                    acc[p * n + b] += c * x * y
        return acc

    for id, fn, target in (('right', right_map, n * dr), ('left', left_map, dl * n)):
        report.check('{}-well-defined'.format(id), Q.is_balanced_map(fn, target))
        rank = Q.induced_map(fn, target).rank()
        report.check('{}-bijective'.format(id), rank == Q.dim == target, "rank {} onto {}".format(rank, target))
    report.dimensions.update({'H/K+H': dr, 'H/HK+': dl})
    return report


# -------------------------------------------------------------
# The Φ map
# -------------------------------------------------------------

def phi_map(H: HopfAlgebra, W: HopfAlgebra, rho: Matrix, K: HopfSubalgebra = None):
    """ Φ = (ε⊗id)∘ρ for a W-comodule algebra structure ρ: H → H⊗W, with its report """
    field, d = H.field, W.dim
    report = Report('phi {}→{}'.format(H.name, W.name), field)
    cols = []
    for i in range(H.dim):
        acc = [field.zero] * d
        for q, c in support(rho.column(i)):
            j, w = divmod(q, d)
            acc[w] += H.counit[j] * c
        cols.append(tuple(acc))
    phi = Matrix.from_columns(field, cols, d)
    report.check('unital', phi.apply(H.unit) == W.unit, "Φ(1) = 1")
    report.expect_equal('algebra-homomorphism',
                        (((i, j), phi.apply(H.algebra.mul_basis(i, j)), W.multiply(phi.column(i), phi.column(j)))
                         for i in range(H.dim) for j in range(H.dim)))
    report.expect_equal('augmented', (((i,), W.epsilon(phi.column(i)), H.counit[i]) for i in range(H.dim)))

    def comodule():
        for i in range(H.dim):
            acc = defaultdict(lambda: field.zero)
            for q, c in support(rho.column(i)):
                j, w = divmod(q, d)
                for a, x in support(phi.column(j)):
                    acc[(a, w)] += c * x
            yield (i,), clean(acc), W.coproduct(phi.column(i))

    report.expect_equal('comodule-morphism', comodule(), "(Φ⊗id)ρ = ΔΦ")
    rank = phi.rank()
    report.check('surjective', rank == d, "rank Φ = {} of {}".format(rank, d))
    if K is not None:
        report.expect_true('kernel-contains-K+', (((k,), not any(phi.apply(v)))
                                                  for k, v in enumerate(augmentation_ideal(K).vectors)))
    return phi, report


# -------------------------------------------------------------
# The normality theorem on instances
# -------------------------------------------------------------

def normality_theorem_harness(H: HopfAlgebra, K: HopfSubalgebra, group: FiniteGroup = None, elements=None) -> Report:
    """ Evaluate normality and the Hopf-Galois property independently and compare them

    The two sides run one after the other in this process. Neither reads the other's result.
    """
    if H.dim % K.dim:
        raise InvalidStructure("dim {} = {} is not a multiple of dim {} = {}".format(H.name, H.dim, K.name, K.dim))
    n = H.dim // K.dim
    report = Report('normality {}/{}'.format(H.name, K.name), H.field)
    report.dimensions['n'] = n
    flags = is_normal(H, K)
    report.verdicts.update(flags.to_dict())
    report.verdicts['normal'] = flags.normal
    report.check('adjoint-cross-check', flags.consistent, "HK⁺ = K⁺H ⟺ K is ad-stable on both sides")
    if group is not None:
        expected = group.is_normal_subgroup(elements)
        report.check('group-normality', flags.normal == expected,
                     "Cayley table says normal = {}".format(expected))
    data = hopf_galois(H, K)
    report.merge(data.report, prefix='galois.')
    report.verdicts['galois'] = data.galois
    report.check('normal-iff-galois', flags.normal == data.galois,
                 "normal = {}, galois = {}".format(flags.normal, data.galois))
    if flags.normal:
        report.check('coinvariants-equal-K', data.coinvariants_equal,
                     "dim coinvariants = {}, dim K = {}".format(data.coinvariants.dim, K.dim))
    report.merge(schneider_maps(H, K), prefix='schneider.')
    hbar = data.quotient.dim
    hbarbar = H.dim - right_ideal(H, K).dim
    report.dimensions.update({'Hbar': hbar, 'Hbarbar': hbarbar})
    if flags.normal:
        try:
            W, qc = quotient_hopf(H, data.quotient.ideal, name='W')
        except InvalidStructure as e:
            report.check('hopf-ideal', False, str(e))
        else:
            report.check('hopf-ideal', True, "HK⁺ is a two-sided ideal, a coideal and τ-stable")
            report.dimensions['W'] = W.dim
            report.merge(validate_hopf(W), prefix='W.')
            _, phi_report = phi_map(H, W, data.rho, K)
            report.merge(phi_report, prefix='phi.')
            if data.galois:
                report.check('dim-W', W.dim == n, "dim W = {}, n = {}".format(W.dim, n))
    if data.galois:
        report.check('dim-Hbar', hbar == n, "dim H̄ = {}, n = {}".format(hbar, n))
        report.check('dim-Hbarbar', hbarbar == n, "dim H̿ = {}, n = {}".format(hbarbar, n))
    consistent = flags.consistent and flags.normal == data.galois
    report.verdicts['consistent'] = consistent
    if consistent:
        logging.getLogger(__name__).info("{}/{}: normal = galois = {}".format(H.name, K.name, flags.normal))
    else:
        logging.getLogger(__name__).warning("{}/{}: normality theorem violated on this instance".format(H.name, K.name))
    return report
