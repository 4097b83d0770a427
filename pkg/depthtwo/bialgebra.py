# -*- coding: utf-8 -*-

""" Weak bialgebras, weak Hopf algebras and Hopf algebras by structure constants

Coproducts are stored sparsely: comul[i] maps (j, k) to the coefficient of e_j⊗e_k in Δ(e_i).
Elements of H⊗H (H⊗H⊗H) are dicts keyed by index pairs (triples).
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging
from collections import defaultdict

from .algebra import FiniteGroup, Groupoid, StructureAlgebra, group_algebra, groupoid_algebra, matrix_algebra
from .errors import DimensionMismatch
from .linalg import QQ_FIELD, Matrix, support, unit


# -------------------------------------------------------------
# Sparse tensors
# -------------------------------------------------------------

def clean(d):
    return {k: v for k, v in d.items() if v}


def add_into(acc, d, c=1):
    for k, v in d.items():
        acc[k] += c * v
    return acc


def pure2(x, y):
    """ x⊗y as a sparse dict """
    ys = support(y)
    return {(i, j): a * b for i, a in support(x) for j, b in ys}


def to_dense(field, d, dims):
    """ Flatten a sparse tensor row-major """
    n = 1
    for k in dims:
        n *= k
    v = [field.zero] * n
    for key, c in d.items():
        idx = 0
        for k, dim in zip(key, dims):
            idx = idx * dim + k
        v[idx] += c
    return tuple(v)


def from_dense(v, dims):
    out = {}
    for idx, c in support(v):
        key = []
        for dim in reversed(dims):
            idx, r = divmod(idx, dim)
            key.append(r)
        out[tuple(reversed(key))] = c
    return out


def tensor_product(algebras, x, y):
    """ Componentwise product in A1⊗...⊗Ak of two sparse tensors """
    field = algebras[0].field
    acc = defaultdict(lambda: field.zero)
    for kx, a in x.items():
        for ky, b in y.items():
            terms = [{(): a * b}]
            for alg, i, j in zip(algebras, kx, ky):
                prod = support(alg.mul_basis(i, j))
                terms = [{key + (k,): c * p for key, c in t.items()} for t in terms for k, p in prod]
            for t in terms:
                add_into(acc, t)
    return clean(acc)


def tensor_map(maps, d):
    """ (f1⊗...⊗fk)(d) for matrices fi """
    field = maps[0].field
    acc = defaultdict(lambda: field.zero)
    for key, c in d.items():
        terms = {(): c}
        for f, i in zip(maps, key):
            col = support(f.column(i))
            terms = {k + (j,): a * b for k, a in terms.items() for j, b in col}
        add_into(acc, terms)
    return clean(acc)


# -------------------------------------------------------------
# Weak bialgebras
# -------------------------------------------------------------

class WeakBialgebra(object):
    """ An algebra with a coassociative, counital Δ satisfying the weak unit and counit laws """

    def __init__(self, algebra: StructureAlgebra, comul, counit, name=''):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = algebra.dim
        self.name = name or algebra.name
        if len(comul) != self.dim:
            raise DimensionMismatch("Need one coproduct per basis element ({} given for dim {})".format(len(comul), self.dim))
        self.comul = []
        for d in comul:
            entry = {}
            for (j, k), c in d.items():
                if not (0 <= j < self.dim and 0 <= k < self.dim):
                    raise DimensionMismatch("Coproduct index ({}, {}) out of range".format(j, k))
                c = self.field(c)
                if c:
                    entry[(j, k)] = entry.get((j, k), self.field.zero) + c
            self.comul.append(clean(entry))
        self.counit = tuple(self.field(c) for c in counit)
        if len(self.counit) != self.dim:
            raise DimensionMismatch("Counit must have length {}".format(self.dim))

    @classmethod
    def from_triples(cls, algebra, triples, counit, *args, **kwargs):
        """ Build from (i, j, k, c) entries meaning c·e_j⊗e_k in Δ(e_i) """
        comul = [{} for _ in range(algebra.dim)]
        for i, j, k, c in triples:
            if not 0 <= i < algebra.dim:
                raise DimensionMismatch("Coproduct index {} out of range".format(i))
            comul[i][(j, k)] = comul[i].get((j, k), 0) + algebra.field(c)
        return cls(algebra, comul, counit, *args, **kwargs)

    def comul_triples(self):
        for i, d in enumerate(self.comul):
            for (j, k), c in sorted(d.items()):
                yield i, j, k, c

    # -- coalgebra arithmetic ------------------------------------------

    def coproduct(self, x):
        acc = defaultdict(lambda: self.field.zero)
        for i, a in support(x):
            add_into(acc, self.comul[i], a)
        return clean(acc)

    def double_coproduct(self, x):
        """ (Δ⊗id)Δ(x) keyed by triples """
        acc = defaultdict(lambda: self.field.zero)
        for (j, k), c in self.coproduct(x).items():
            for (a, b), d in self.comul[j].items():
                acc[(a, b, k)] += c * d
        return clean(acc)

    def epsilon(self, x):
        s = self.field.zero
        for i, a in support(x):
            s += a * self.counit[i]
        return s

    def multiply(self, x, y):
        return self.algebra.multiply(x, y)

    def basis(self, i):
        return self.algebra.basis(i)

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def unit_coproduct(self):
        """ Δ(1) = 1₍₁₎⊗1₍₂₎ """
        return self.coproduct(self.unit)

    def vector(self, d):
        return to_dense(self.field, d, (self.dim, self.dim))

    def comul_matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, [self.vector(d) for d in self.comul], self.dim * self.dim)

    @property
    def antipode(self):
        return None

    def __repr__(self):
        return "{}({}, dim={})".format(self.__class__.__name__, self.name, self.dim)


class WeakHopfAlgebra(WeakBialgebra):
    """ A weak bialgebra with an antipode S given as a matrix """

    def __init__(self, algebra, comul, counit, antipode: Matrix, name=''):
        super().__init__(algebra, comul, counit, name=name)
        if antipode.shape != (self.dim, self.dim):
            raise DimensionMismatch("Antipode must be a {0}x{0} matrix".format(self.dim))
        self._antipode = antipode
        self._inverse = None

    @property
    def antipode(self) -> Matrix:
        return self._antipode

    def S(self, x):
        return self._antipode.apply(x)

    @property
    def antipode_inverse(self):
        """ S̄ = S⁻¹, or None when S is singular """
        if self._inverse is None:
            self._inverse = self._antipode.inverse()
            if self._inverse is None:
                logging.getLogger(__name__).warning("{}: antipode is not invertible".format(self.name))
        return self._inverse

    def with_antipode(self, antipode: Matrix, name=None):
        return self.__class__(self.algebra, self.comul, self.counit, antipode, name=self.name if name is None else name)


class HopfAlgebra(WeakHopfAlgebra):
    """ A Hopf algebra: Δ(1) = 1⊗1 and ε multiplicative """


# -------------------------------------------------------------
# Constructors
# -------------------------------------------------------------

def group_hopf(group: FiniteGroup, field=None, name=None) -> HopfAlgebra:
    """ k[G] with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹ """
    alg = group_algebra(group, field, name=name) if field is not None else group_algebra(group, name=name)
    f = alg.field
    n = group.order
    comul = [{(g, g): f.one} for g in range(n)]
    antipode = Matrix.from_columns(f, [unit(f, n, group.inverse(g)) for g in range(n)], n)
    return HopfAlgebra(alg, comul, [f.one] * n, antipode, name=alg.name)


def groupoid_weak_hopf(groupoid: Groupoid, field=None, name=None) -> WeakHopfAlgebra:
    """ k[G] of a finite groupoid with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹ """
    alg = groupoid_algebra(groupoid, field, name=name) if field is not None else groupoid_algebra(groupoid, name=name)
    f = alg.field
    n = groupoid.size
    comul = [{(g, g): f.one} for g in range(n)]
    antipode = Matrix.from_columns(f, [unit(f, n, groupoid.inverse(g)) for g in range(n)], n)
    return WeakHopfAlgebra(alg, comul, [f.one] * n, antipode, name=alg.name)


def matrix_weak_hopf(n, field=None) -> WeakHopfAlgebra:
    """ M_n with Δ(e_ij) = e_ij⊗e_ij, ε(e_ij) = 1, S(e_ij) = e_ji """
    alg = matrix_algebra(n, field) if field is not None else matrix_algebra(n)
    f = alg.field
    d = n * n
    comul = [{(i, i): f.one} for i in range(d)]
    antipode = Matrix.from_columns(f, [unit(f, d, (i % n) * n + i // n) for i in range(d)], d)
    return WeakHopfAlgebra(alg, comul, [f.one] * d, antipode, name=alg.name)


def sweedler4(field=None) -> HopfAlgebra:
    """ Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx

    g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
    """
    f = field or QQ_FIELD
    one, g, x, gx = 0, 1, 2, 3
    products = [
        (one, one, one, 1), (one, g, g, 1), (one, x, x, 1), (one, gx, gx, 1),
        (g, one, g, 1), (g, g, one, 1), (g, x, gx, 1), (g, gx, x, 1),
        (x, one, x, 1), (x, g, gx, -1),
        (gx, one, gx, 1), (gx, g, x, -1),
    ]
    alg = StructureAlgebra.from_triples(f, 4, products, [1, 0, 0, 0], name='H4', labels=['1', 'g', 'x', 'gx'],
                                        generators=[unit(f, 4, g), unit(f, 4, x)])
    comul = [{(one, one): 1},
             {(g, g): 1},
             {(x, one): 1, (g, x): 1},
             {(gx, g): 1, (one, gx): 1}]
    antipode = Matrix.from_entries(f, 4, 4, [1, 0, 0, 0,
                                             0, 1, 0, 0,
                                             0, 0, 0, 1,
                                             0, 0, -1, 0])
    return HopfAlgebra(alg, comul, [1, 1, 0, 0], antipode, name='H4')


# -------------------------------------------------------------
# Shared coalgebra checks
# -------------------------------------------------------------

def coassociativity_cases(w: WeakBialgebra):
    """ (Δ⊗id)Δ(e_i) against (id⊗Δ)Δ(e_i) """
    for i in range(w.dim):
        rhs = defaultdict(lambda: w.field.zero)
        for (j, k), c in w.comul[i].items():
            for (a, b), d in w.comul[k].items():
                rhs[(j, a, b)] += c * d
        yield (i,), w.double_coproduct(w.basis(i)), clean(rhs)


def counit_cases(w: WeakBialgebra):
    """ ε(e₍₁₎)e₍₂₎ = e = e₍₁₎ε(e₍₂₎) on the basis """
    f, n = w.field, w.dim
    for i in range(n):
        left = [f.zero] * n
        right = [f.zero] * n
        for (j, k), c in w.comul[i].items():
            left[k] += w.counit[j] * c
            right[j] += c * w.counit[k]
        e = w.basis(i)
        yield (i, 'left'), tuple(left), e
        yield (i, 'right'), tuple(right), e


def multiplicativity_cases(w: WeakBialgebra):
    """ Δ(e_i e_j) = Δ(e_i)Δ(e_j) """
    algs = [w.algebra, w.algebra]
    for i in range(w.dim):
        for j in range(w.dim):
            yield (i, j), w.coproduct(w.algebra.mul_basis(i, j)), tensor_product(algs, w.comul[i], w.comul[j])
