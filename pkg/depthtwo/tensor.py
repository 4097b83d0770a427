# -*- coding: utf-8 -*-

""" Balanced tensor products as explicit quotient spaces, B-centralized subspaces and
spaces of bimodule maps

The full tensor space M⊗N is indexed row-major: e_m⊗e_n has index m·dim(N) + n.
Quotient representatives are the non-pivot columns of the RREF relation space, so every
quotient basis vector is represented by a pure tensor of basis vectors.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging

from .algebra import StructureAlgebra
from .errors import DimensionMismatch, InvalidStructure
from .linalg import Matrix, Subspace, kernel_rows, lincomb, support, unit


def combine(field, rows, cols, terms):
    """ Σ c·M over (c, M) pairs """
    acc = [[field.zero] * cols for _ in range(rows)]
    for c, m in terms:
        if not c:
            continue
        for i in range(rows):
            r = m.row(i)
            for j in range(cols):
                if r[j]:
                    acc[i][j] += c * r[j]
    return Matrix(field, acc, cols)


# -------------------------------------------------------------
# Modules
# -------------------------------------------------------------

class ActionModule(object):
    """ A space with a left action of one algebra and a right action of another

    `left[i]` is the matrix of v ↦ e_i·v for the basis e_i of the left algebra, similarly `right`.
    """

    def __init__(self, field, dim, left_algebra=None, left=None, right_algebra=None, right=None, name=''):
        self.field = field
        self.dim = dim
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.left = list(left) if left is not None else None
        self.right = list(right) if right is not None else None
        self.name = name
        if left_algebra is not None and (self.left is None or len(self.left) != left_algebra.dim):
            raise DimensionMismatch("Need one left action matrix per basis element of the left algebra")
        if right_algebra is not None and (self.right is None or len(self.right) != right_algebra.dim):
            raise DimensionMismatch("Need one right action matrix per basis element of the right algebra")

    @staticmethod
    def regular(a: StructureAlgebra):
        """ A as an A-A-bimodule """
        return ActionModule(a.field, a.dim, a, [a.left_basis_matrix(i) for i in range(a.dim)],
                            a, [a.right_basis_matrix(i) for i in range(a.dim)], name=a.name)

    def left_matrix(self, r):
        return combine(self.field, self.dim, self.dim, zip(r, self.left))

    def right_matrix(self, r):
        return combine(self.field, self.dim, self.dim, zip(r, self.right))

    def act_left(self, r, v):
        return lincomb(self.field, self.dim, [(c, self.left[i].apply(v)) for i, c in support(r)])

    def act_right(self, v, r):
        return lincomb(self.field, self.dim, [(c, self.right[i].apply(v)) for i, c in support(r)])

    def restrict(self, left=None, right=None):
        """ Restrict along algebra maps given as (algebra, inclusion matrix) pairs; None keeps a side """
        left_alg, left_mats = self.left_algebra, self.left
        right_alg, right_mats = self.right_algebra, self.right
        if left is not None:
            left_alg, incl = left
            left_mats = [self.left_matrix(incl.column(k)) for k in range(left_alg.dim)]
        if right is not None:
            right_alg, incl = right
            right_mats = [self.right_matrix(incl.column(k)) for k in range(right_alg.dim)]
        return ActionModule(self.field, self.dim, left_alg, left_mats, right_alg, right_mats, name=self.name)

    def drop(self, left=False, right=False):
        return ActionModule(self.field, self.dim,
                            None if left else self.left_algebra, None if left else self.left,
                            None if right else self.right_algebra, None if right else self.right, name=self.name)

    def submodule(self, space: Subspace, name=''):
        """ The actions restricted to an invariant subspace, in its RREF coordinates """
        vecs = space.vectors

        def restricted(mats):
            if mats is None:
                return None
            return [Matrix.from_columns(self.field, [space.coordinates(m.apply(v)) for v in vecs], space.dim) for m in mats]

        return ActionModule(self.field, space.dim, self.left_algebra, restricted(self.left),
                            self.right_algebra, restricted(self.right), name=name)

    def validate(self):
        """ Unital, multiplicative on basis pairs, and the two actions commute """
        ident = Matrix.identity(self.field, self.dim)
        for alg, mats, side in ((self.left_algebra, self.left, 'left'), (self.right_algebra, self.right, 'right')):
            if alg is None:
                continue
            if combine(self.field, self.dim, self.dim, zip(alg.unit, mats)) != ident:
                return False
            for i in range(alg.dim):
                for j in range(alg.dim):
                    prod = combine(self.field, self.dim, self.dim, zip(alg.table[i][j], mats))
                    expected = mats[i] @ mats[j] if side == 'left' else mats[j] @ mats[i]
                    if prod != expected:
                        return False
        if self.left is not None and self.right is not None:
            return all(l @ r == r @ l for l in self.left for r in self.right)
        return True

    def __repr__(self):
        return "ActionModule({}, dim={})".format(self.name or '?', self.dim)


def bimodule(a: StructureAlgebra, left=None, right=None, name=''):
    """ The regular module of `a` with each side restricted along (algebra, inclusion) or kept as `a` """
    return ActionModule.regular(a).restrict(left=left, right=right)


def _same_algebra(x, y):
    return x is y or (x is not None and y is not None and x.same_constants(y))


# -------------------------------------------------------------
# Balanced tensor products
# -------------------------------------------------------------

class TensorSpace(object):
    """ M⊗_R N as a quotient of the full tensor space by the balancing relations """

    def __init__(self, left: ActionModule, right: ActionModule, over: StructureAlgebra, name='', outer_of=None):
        if not _same_algebra(left.right_algebra, over) or not _same_algebra(right.left_algebra, over):
            raise InvalidStructure("Action mismatch: both factors must be acted on by the middle algebra {}".format(over.name))
        self.field = left.field
        self.left_factor = left
        self.right_factor = right
        self.over_algebra = over
        self.name = name
        self.inner = outer_of
        dM, dN = left.dim, right.dim
        self.full_dim = dM * dN
        relations = []
        for c in over.acting_elements():
            Rc = left.right_matrix(c)
            Lc = right.left_matrix(c)
            for m in range(dM):
                col_r = [(k, x) for k, x in enumerate(Rc.column(m)) if x]
                for n in range(dN):
                    v = [self.field.zero] * self.full_dim
                    for k, x in col_r:
                        v[k * dN + n] += x
                    for l, x in enumerate(Lc.column(n)):
                        if x:
                            v[m * dN + l] -= x
                    if any(v):
                        relations.append(v)
        self.relations = Subspace.span(self.field, self.full_dim, relations)
        free = self.relations.free_columns
        self.dim = len(free)
        self._free_index = {j: q for q, j in enumerate(free)}
        self._pivot_cols = {}
        for row, p in zip(self.relations.vectors, self.relations.pivots):
            self._pivot_cols[p] = [(self._free_index[j], -x) for j, x in enumerate(row) if x and j in self._free_index]
        self.pairs = [divmod(j, dN) for j in free]
        self._module = None
        logging.getLogger(__name__).debug("Tensor space {}: full {}, relations rank {}, quotient {}".format(
            name, self.full_dim, self.relations.dim, self.dim))

    # -- structure ---------------------------------------------------

    @property
    def factors(self):
        if self.inner is not None:
            return self.inner.factors + [self.right_factor]
        return [self.left_factor, self.right_factor]

    @property
    def over(self):
        if self.inner is not None:
            return self.inner.over + [self.over_algebra]
        return [self.over_algebra]

    @property
    def representatives(self):
        """ Pure basis tensors (index tuples over all factors) representing the quotient basis """
        if self.inner is None:
            return [tuple(p) for p in self.pairs]
        inner_reps = self.inner.representatives
        return [inner_reps[m] + (n,) for m, n in self.pairs]

    def _column(self, j):
        q = self._free_index.get(j)
        if q is not None:
            return ((q, self.field.one),)
        return self._pivot_cols[j]

    def project(self, v):
        """ Quotient coordinates of a vector of the two-factor full space """
        if len(v) != self.full_dim:
            raise DimensionMismatch("Expected a vector of length {}, got {}".format(self.full_dim, len(v)))
        acc = [self.field.zero] * self.dim
        for j, a in support(v):
            for q, c in self._column(j):
                acc[q] += a * c
        return tuple(acc)

    def section(self, q):
        """ Two-factor full vector representing the quotient vector q """
        v = [self.field.zero] * self.full_dim
        dN = self.right_factor.dim
        for (m, n), a in zip(self.pairs, q):
            if a:
                v[m * dN + n] = a
        return tuple(v)

    def terms(self, q):
        """ q as a list of (coefficient, left index, right index) over representatives """
        return [(a, m, n) for (m, n), a in zip(self.pairs, q) if a]

    @property
    def project_matrix(self):
        cols = [self._dense(self._column(j)) for j in range(self.full_dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    @property
    def section_matrix(self):
        return Matrix.from_columns(self.field, [self.section(unit(self.field, self.dim, q)) for q in range(self.dim)], self.full_dim)

    def _dense(self, col):
        v = [self.field.zero] * self.dim
        for q, c in col:
            v[q] += c
        return tuple(v)

    def pure(self, *vectors):
        """ The class of v1⊗...⊗vk, each vi in the coordinates of its factor """
        if len(vectors) > 2:
            if self.inner is None:
                raise DimensionMismatch("Two-factor tensor space got {} vectors".format(len(vectors)))
            return self.pure(self.inner.pure(*vectors[:-1]), vectors[-1])
        x, y = vectors
        dN = self.right_factor.dim
        if len(x) != self.left_factor.dim or len(y) != dN:
            raise DimensionMismatch("Pure tensor of vectors with lengths {} and {}".format(len(x), len(y)))
        acc = [self.field.zero] * self.dim
        ys = support(y)
        for m, a in support(x):
            for n, b in ys:
                ab = a * b
                for q, c in self._column(m * dN + n):
                    acc[q] += ab * c
        return tuple(acc)

    def pure_basis(self, m, n):
        return self._dense(self._column(m * self.right_factor.dim + n))

    def project_full(self, v):
        """ Project a vector of the full k-fold linear tensor space """
        if self.inner is None:
            return self.project(v)
        dN = self.right_factor.dim
        if len(v) % dN:
            raise DimensionMismatch("Full vector length {} is not a multiple of {}".format(len(v), dN))
        inner_full = len(v) // dN
        acc = [self.field.zero] * self.dim
        for n in range(dN):
            chunk = tuple(v[i * dN + n] for i in range(inner_full))
            if any(chunk):
                q = self.inner.project_full(chunk)
                for m, a in support(q):
                    for qq, c in self._column(m * dN + n):
                        acc[qq] += a * c
        return tuple(acc)

    def section_full(self, q):
        if self.inner is None:
            return self.section(q)
        dN = self.right_factor.dim
        inner_dim = self.inner.full_dim_total
        v = [self.field.zero] * (inner_dim * dN)
        for a, m, n in self.terms(q):
            inner_v = self.inner.section_full(unit(self.field, self.inner.dim, m))
            for i, x in support(inner_v):
                v[i * dN + n] += a * x
        return tuple(v)

    @property
    def full_dim_total(self):
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    # -- maps --------------------------------------------------------

    def induced_map(self, fn, target_dim):
        """ Matrix of the map induced by fn(m, n) -> target vector on pure basis tensors """
        cols = [tuple(fn(m, n)) for m, n in self.pairs]
        return Matrix.from_columns(self.field, cols, target_dim)

    def is_balanced_map(self, fn, target_dim):
        """ True when fn, extended bilinearly, kills every balancing relation """
        dN = self.right_factor.dim
        cache = {}

        def value(j):
            if j not in cache:
                cache[j] = tuple(fn(*divmod(j, dN)))
            return cache[j]

        for rel in self.relations.vectors:
            if any(lincomb(self.field, target_dim, [(a, value(j)) for j, a in support(rel)])):
                return False
        return True

    def as_module(self):
        """ The quotient with the left action of the first factor and the right action of the last """
        if self._module is None:
            M, N = self.left_factor, self.right_factor
            left = right = None
            if M.left is not None:
                left = [self.induced_map(lambda m, n, L=L: self.pure(L.column(m), unit(self.field, N.dim, n)), self.dim)
                        for L in M.left]
            if N.right is not None:
                right = [self.induced_map(lambda m, n, R=R: self.pure(unit(self.field, M.dim, m), R.column(n)), self.dim)
                         for R in N.right]
            self._module = ActionModule(self.field, self.dim, M.left_algebra, left, N.right_algebra, right, name=self.name)
        return self._module

    def __repr__(self):
        return "TensorSpace({}, dim={}, full={})".format(self.name or '?', self.dim, self.full_dim)


def tensor_over(factors, middles, name='') -> TensorSpace:
    """ Iterated balanced tensor product ((M1⊗M2)⊗M3)⊗..., built left to right """
    factors = list(factors)
    middles = list(middles)
    if len(factors) < 2 or len(middles) != len(factors) - 1:
        raise DimensionMismatch("Need k >= 2 factors and k-1 middle algebras")
    ts = TensorSpace(factors[0], factors[1], middles[0], name=name if len(factors) == 2 else '')
    for k in range(2, len(factors)):
        ts = TensorSpace(ts.as_module(), factors[k], middles[k - 1],
                         name=name if k == len(factors) - 1 else '', outer_of=ts)
    return ts


def rebracket(outer: TensorSpace, inner: TensorSpace, x, w):
    """ Class of x⊗w, w ∈ N⊗_R P, inside (M⊗_R N)⊗_R P """
    middle = outer.inner
    if middle is None:
        raise DimensionMismatch("Rebracketing needs an iterated outer tensor space")
    acc = [outer.field.zero] * outer.dim
    for a, n, p in inner.terms(w):
        mn = middle.pure(x, unit(outer.field, middle.right_factor.dim, n))
        v = outer.pure(mn, unit(outer.field, outer.right_factor.dim, p))
        for q, c in support(v):
            acc[q] += a * c
    return tuple(acc)


def swap_tensor(source: TensorSpace, target: TensorSpace, q):
    """ Transport a⊗a' ↦ a'⊗a between a two-factor space and its mirror """
    acc = [target.field.zero] * target.dim
    for a, m, n in source.terms(q):
        for qq, c in support(target.pure_basis(n, m)):
            acc[qq] += a * c
    return tuple(acc)


# -------------------------------------------------------------
# Centralized subspaces
# -------------------------------------------------------------

class CentralizedSubspace(object):
    """ {x : b·x = x·b for all b ∈ B} inside a tensor power of A over B """

    def __init__(self, parent: TensorSpace, space: Subspace, algebra=None, ext=None):
        self.parent = parent
        self.space = space
        self.algebra = algebra
        self.ext = ext

    @property
    def dim(self):
        return self.space.dim

    @property
    def field(self):
        return self.parent.field

    @property
    def vectors(self):
        return self.space.vectors

    def coordinates(self, q):
        return self.space.coordinates(q)

    def element(self, coords):
        return self.space.element(coords)

    def contains(self, q):
        return self.space.contains(q)

    def module(self, left=None, right=None, name=''):
        """ The inherited actions, restricted along (algebra, inclusion) pairs, in T-coordinates """
        return self.parent.as_module().restrict(left=left, right=right).submodule(self.space, name=name)

    def __repr__(self):
        return "CentralizedSubspace(dim={} in {})".format(self.dim, self.parent)


def centralized_subspace(ts: TensorSpace, ext) -> CentralizedSubspace:
    """ (M)^B for a tensor power of A over B; the two-factor case also gets its algebra structure """
    mod = ts.as_module()
    A = ext.A
    rows = []
    for b in ext.acting_images:
        diff = mod.left_matrix(b) - mod.right_matrix(b)
        rows.extend(diff.tolist())
    space = kernel_rows(ts.field, [tuple(r) for r in rows], ts.dim)
    for b in ext.images:
        Lb, Rb = mod.left_matrix(b), mod.right_matrix(b)
        for x in space.vectors:
            if Lb.apply(x) != Rb.apply(x):
                raise InvalidStructure("Centralized subspace computed from generators fails on the full basis of B")
    cs = CentralizedSubspace(ts, space, ext=ext)
    if ts.inner is None and ts.left_factor.dim == A.dim and ts.right_factor.dim == A.dim:
        cs.algebra = _tensor_square_algebra(ts, space, A)
    logging.getLogger(__name__).debug("Centralized subspace of {} has dimension {}".format(ts.name, space.dim))
    return cs


def _tensor_square_algebra(ts, space, A):
    """ tt' = t'¹t¹ ⊗ t²t'² with unit 1⊗1 """
    vecs = space.vectors
    terms = [ts.terms(x) for x in vecs]

    def mul(i, j):
        acc = [ts.field.zero] * ts.dim
        for a, m, n in terms[i]:
            for b, mm, nn in terms[j]:
                v = ts.pure(A.mul_basis(mm, m), A.mul_basis(n, nn))
                for q, c in support(v):
                    acc[q] += a * b * c
        return space.coordinates(tuple(acc))

    d = space.dim
    table = [[mul(i, j) for j in range(d)] for i in range(d)]
    one = space.coordinates(ts.pure(A.unit, A.unit))
    T = StructureAlgebra(ts.field, d, table, one, name='T')
    for i in range(d):
        e = T.basis(i)
        if T.multiply(T.unit, e) != e or T.multiply(e, T.unit) != e:
            raise InvalidStructure("1⊗1 is not a unit of the centralized tensor square")
    return T


# -------------------------------------------------------------
# Hom spaces
# -------------------------------------------------------------

class HomSpace(object):
    """ Linear maps domain → codomain commuting with the declared actions """

    def __init__(self, domain: ActionModule, codomain: ActionModule, left: bool, right: bool, space: Subspace):
        self.domain = domain
        self.codomain = codomain
        self.left = left
        self.right = right
        self.space = space
        self.field = domain.field
        self.basis = [self._matrix(v) for v in space.vectors]

    def _matrix(self, v):
        n = self.domain.dim
        return Matrix(self.field, [v[i * n:(i + 1) * n] for i in range(self.codomain.dim)], n)

    @property
    def dim(self):
        return self.space.dim

    def contains(self, m: Matrix):
        return self.space.contains(m.entries)

    def coordinates(self, m: Matrix):
        return self.space.coordinates(m.entries)

    def element(self, coords):
        return self._matrix(self.space.element(coords))

    def __repr__(self):
        return "HomSpace(dim={}, {} -> {})".format(self.dim, self.domain.name, self.codomain.name)


def _equivariance_rows(field, X_rows, X_cols, src_mats, dst_mats):
    """ Rows of the linear system X·S = D·X for each pair of action matrices """
    rows = []
    n, m = X_cols, X_rows
    for S, D in zip(src_mats, dst_mats):
        for i in range(m):
            for j in range(n):
                row = [field.zero] * (m * n)
                for k in range(n):
                    s = S.row(k)[j]
                    if s:
                        row[i * n + k] += s
                for k in range(m):
                    d = D.row(i)[k]
                    if d:
                        row[k * n + j] -= d
                if any(row):
                    rows.append(tuple(row))
    return rows


def bimodule_hom(M: ActionModule, N: ActionModule, left=True, right=True) -> HomSpace:
    """ Basis of all linear maps M → N commuting with the declared actions """
    field = M.field
    rows = []
    for flag, alg_m, alg_n, mats_m, mats_n, side in (
            (left, M.left_algebra, N.left_algebra, M.left, N.left, 'left'),
            (right, M.right_algebra, N.right_algebra, M.right, N.right, 'right')):
        if not flag:
            continue
        if not _same_algebra(alg_m, alg_n):
            raise InvalidStructure("The {} acting algebras of the two modules differ".format(side))
        gens = alg_m.acting_elements()
        combine_m = M.left_matrix if side == 'left' else M.right_matrix
        combine_n = N.left_matrix if side == 'left' else N.right_matrix
        rows.extend(_equivariance_rows(field, N.dim, M.dim, [combine_m(g) for g in gens], [combine_n(g) for g in gens]))
    space = kernel_rows(field, rows, M.dim * N.dim)
    hs = HomSpace(M, N, left, right, space)
    for flag, mats_m, mats_n in ((left, M.left, N.left), (right, M.right, N.right)):
        if not flag:
            continue
        for X in hs.basis:
            for S, D in zip(mats_m, mats_n):
                if X @ S != D @ X:
                    raise InvalidStructure("Hom space computed from generators fails equivariance on the full basis")
    logging.getLogger(__name__).debug("Hom space {} -> {} has dimension {}".format(M.name, N.name, hs.dim))
    return hs


def end_algebra(hs: HomSpace, name='End') -> StructureAlgebra:
    """ Composition algebra (αβ)(x) = α(β(x)) of an endomorphism space """
    if hs.domain.dim != hs.codomain.dim:
        raise InvalidStructure("Not an endomorphism space")
    ident = Matrix.identity(hs.field, hs.domain.dim)
    if not hs.contains(ident):
        raise InvalidStructure("Identity map is not in the Hom space")
    table = []
    for a in hs.basis:
        row = []
        for b in hs.basis:
            ab = a @ b
            if not hs.contains(ab):
                raise InvalidStructure("Hom space is not closed under composition")
            row.append(hs.coordinates(ab))
        table.append(row)
    return StructureAlgebra(hs.field, hs.dim, table, hs.coordinates(ident), name=name)


def endomorphisms(field, n):
    """ End_k(k^n) as a Hom space between trivial modules """
    triv = ActionModule(field, n, name='k^{}'.format(n))
    return bimodule_hom(triv, triv, left=False, right=False)