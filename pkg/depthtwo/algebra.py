# -*- coding: utf-8 -*-

""" Finite-dimensional unital algebras given by structure constants

Group convention: the product g·h of two group elements is the Cayley table entry at row g,
column h. Permutations are stored as image tuples and g·h is the permutation x ↦ g(h(x)),
so that (12)·(123) = (23) in S3.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import itertools
import logging
from typing import Optional, Sequence

from .errors import DimensionMismatch, InvalidStructure
from .linalg import QQ_FIELD, Matrix, Subspace, kernel_rows, lincomb, support, unit, zeros
from .report import Report


# -------------------------------------------------------------
# Algebras
# -------------------------------------------------------------

class StructureAlgebra(object):
    """ e_i·e_j = Σ_k c[i][j][k] e_k over an exact field """

    def __init__(self, field, dim, table, unit_vector, name='', labels=None, generators=None):
        self.field = field
        self.dim = dim
        self.name = name
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        if len(self.table) != dim or any(len(row) != dim for row in self.table):
            raise DimensionMismatch("Structure constant table must be {0}x{0}".format(dim))
        if any(len(v) != dim for row in self.table for v in row):
            raise DimensionMismatch("Every product e_i·e_j must be a vector of length {}".format(dim))
        self.unit = tuple(unit_vector)
        if len(self.unit) != dim:
            raise DimensionMismatch("Unit vector must have length {}".format(dim))
        self.labels = list(labels) if labels else ['e{}'.format(i) for i in range(dim)]
        self.generators = [tuple(g) for g in generators] if generators else None
        self._sparse = [[support(v) for v in row] for row in self.table]
        self._left = {}
        self._right = {}

    @staticmethod
    def from_triples(field, dim, triples, unit_vector, **kwargs):
        """ Build from (i, j, k, scalar) entries; omitted entries are zero """
        table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in triples:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatch("Structure constant index ({}, {}, {}) out of range".format(i, j, k))
            table[i][j][k] += field(c)
        return StructureAlgebra(field, dim, table, [field(x) for x in unit_vector], **kwargs)

    @property
    def one(self):
        return self.unit

    @property
    def zero(self):
        return zeros(self.field, self.dim)

    def basis(self, i):
        return unit(self.field, self.dim, i)

    def constant(self, i, j, k):
        return self.table[i][j][k]

    def triples(self):
        for i, row in enumerate(self._sparse):
            for j, entries in enumerate(row):
                for k, c in entries:
                    yield i, j, k, c

    def multiply(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("Expected vectors of length {}, got {} and {}".format(self.dim, len(x), len(y)))
        acc = [self.field.zero] * self.dim
        ys = support(y)
        for i, a in support(x):
            row = self._sparse[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return tuple(acc)

    def product(self, *elements):
        result = self.unit
        for x in elements:
            result = self.multiply(result, x)
        return result

    def mul_basis(self, i, j):
        return self.table[i][j]

    def left_matrix(self, x):
        """ Matrix of y ↦ x·y """
        return Matrix.from_columns(self.field, [self.multiply(x, self.basis(j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, x):
        """ Matrix of y ↦ y·x """
        return Matrix.from_columns(self.field, [self.multiply(self.basis(j), x) for j in range(self.dim)], self.dim)

    def left_basis_matrix(self, i):
        if i not in self._left:
            self._left[i] = self.left_matrix(self.basis(i))
        return self._left[i]

    def right_basis_matrix(self, i):
        if i not in self._right:
            self._right[i] = self.right_matrix(self.basis(i))
        return self._right[i]

    def acting_elements(self):
        """ Generators when known, otherwise the full basis """
        if self.generators:
            return list(self.generators)
        return [self.basis(i) for i in range(self.dim)]

    def is_commutative(self):
        return all(self.table[i][j] == self.table[j][i] for i in range(self.dim) for j in range(i + 1, self.dim))

    def opposite(self):
        table = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
        name = self.name[:-3] if self.name.endswith('^op') else (self.name + '^op' if self.name else '')
        return StructureAlgebra(self.field, self.dim, table, self.unit, name=name,
                                labels=self.labels, generators=self.generators)

    def same_constants(self, other):
        return (self.field == other.field and self.dim == other.dim
                and self.table == other.table and self.unit == other.unit)

    def __eq__(self, other):
        return isinstance(other, StructureAlgebra) and self.same_constants(other)

    def __hash__(self):
        return hash((self.dim, self.unit))

    def __repr__(self):
        return "StructureAlgebra({}, dim={}, field={})".format(self.name or '?', self.dim, self.field)


def multiply(a: StructureAlgebra, x, y):
    return a.multiply(x, y)


def validate_algebra(a: StructureAlgebra) -> Report:
    """ Associativity on every basis triple and the two unit laws """
    report = Report('validate_algebra', a.field)
    n = a.dim

    def assoc_cases():
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = a.multiply(a.table[i][j], a.basis(k))
            rhs = a.multiply(a.basis(i), a.table[j][k])
            yield (i, j, k), lhs, rhs

    report.expect_equal('associativity', assoc_cases())
    report.expect_equal('left-unit', (((i,), a.multiply(a.unit, a.basis(i)), a.basis(i)) for i in range(n)))
    report.expect_equal('right-unit', (((i,), a.multiply(a.basis(i), a.unit), a.basis(i)) for i in range(n)))
    report.dimensions['algebra'] = n
    return report


def is_isomorphism(a: StructureAlgebra, b: StructureAlgebra, m: Matrix) -> bool:
    """ Check that an exhibited linear map a → b is a unital algebra isomorphism """
    if m.shape != (b.dim, a.dim) or m.rank() != a.dim or a.dim != b.dim:
        return False
    if m.apply(a.unit) != b.unit:
        return False
    images = [m.column(i) for i in range(a.dim)]
    return all(m.apply(a.table[i][j]) == b.multiply(images[i], images[j])
               for i in range(a.dim) for j in range(a.dim))


def transpose_map(n, field=QQ_FIELD):
    """ e_ij ↦ e_ji on M_n(k) """
    return Matrix.from_columns(field, [unit(field, n * n, j * n + i) for i in range(n) for j in range(n)], n * n)


# -------------------------------------------------------------
# Subalgebras and extensions
# -------------------------------------------------------------

class Subalgebra(object):
    """ A subspace of an algebra, multiplication-closed and unital when `closed` is set """

    def __init__(self, ambient: StructureAlgebra, space: Subspace, closed=True, name=''):
        if space.ambient != ambient.dim:
            raise DimensionMismatch("Subspace ambient {} does not match algebra dim {}".format(space.ambient, ambient.dim))
        self.ambient = ambient
        self.space = space
        self.name = name
        self.closed = closed
        self._algebra = None
        if closed:
            if not space.contains(ambient.unit):
                raise InvalidStructure("Subalgebra {} does not contain the unit".format(name))
            for x in space.vectors:
                for y in space.vectors:
                    if not space.contains(ambient.multiply(x, y)):
                        raise InvalidStructure("Subspace {} is not closed under multiplication".format(name))

    @staticmethod
    def span(ambient, vectors, name=''):
        return Subalgebra(ambient, Subspace.span(ambient.field, ambient.dim, vectors), name=name)

    @property
    def dim(self):
        return self.space.dim

    @property
    def field(self):
        return self.ambient.field

    def contains(self, x):
        return self.space.contains(x)

    def as_algebra(self):
        """ (standalone algebra in the RREF basis, inclusion matrix into the ambient algebra) """
        if self._algebra is None:
            a = self.ambient
            vecs = self.space.vectors
            table = [[self.space.coordinates(a.multiply(x, y)) for y in vecs] for x in vecs]
            alg = StructureAlgebra(a.field, self.dim, table, self.space.coordinates(a.unit),
                                   name=self.name or 'sub({})'.format(a.name))
            incl = Matrix.from_columns(a.field, vecs, a.dim)
            self._algebra = (alg, incl)
        return self._algebra

    def __eq__(self, other):
        return isinstance(other, Subalgebra) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return "Subalgebra({}, dim={} in {})".format(self.name or '?', self.dim, self.ambient.name)


class Extension(object):
    """ A proper extension A|B given by an injective unital algebra map iota: B → A """

    def __init__(self, B: StructureAlgebra, A: StructureAlgebra, iota: Matrix, name=''):
        if B.field != A.field:
            raise InvalidStructure("B and A live over different fields ({} vs {})".format(B.field, A.field))
        if iota.shape != (A.dim, B.dim):
            raise DimensionMismatch("iota must be a {}x{} matrix, got {}".format(A.dim, B.dim, iota.shape))
        self.B = B
        self.A = A
        self.iota = iota
        self.name = name
        if iota.rank() != B.dim:
            raise InvalidStructure("iota is not injective")
        if iota.apply(B.unit) != A.unit:
            raise InvalidStructure("iota is not unital")
        images = self.images
        for i in range(B.dim):
            for j in range(B.dim):
                if iota.apply(B.table[i][j]) != A.multiply(images[i], images[j]):
                    raise InvalidStructure("iota is not multiplicative at ({}, {})".format(i, j))
        self._ctx = None

    @staticmethod
    def from_subalgebra(sub: Subalgebra, name=''):
        alg, incl = sub.as_algebra()
        return Extension(alg, sub.ambient, incl, name=name or sub.name)

    @property
    def field(self):
        return self.A.field

    @property
    def images(self):
        """ iota(b) for the basis of B """
        return [self.iota.column(i) for i in range(self.B.dim)]

    @property
    def acting_images(self):
        """ iota of the generators of B (or of its whole basis) """
        return [self.iota.apply(b) for b in self.B.acting_elements()]

    def image_subspace(self):
        return Subspace.span(self.field, self.A.dim, self.images)

    def ctx(self):
        """ The cached ExtensionContext of this extension """
        if self._ctx is None:
            from .context import ExtensionContext
            self._ctx = ExtensionContext(self)
        return self._ctx

    def __repr__(self):
        return "Extension({}: {} -> {})".format(self.name or '?', self.B.name or self.B.dim, self.A.name or self.A.dim)


def commutant(a: StructureAlgebra, elements, name='') -> Subalgebra:
    """ {x ∈ A : x·y = y·x for every given y} """
    rows = []
    for y in elements:
        rows.extend((a.right_matrix(y) - a.left_matrix(y)).tolist())
    return Subalgebra(a, kernel_rows(a.field, [tuple(r) for r in rows], a.dim), name=name)


def centralizer(ext: Extension) -> Subalgebra:
    r = commutant(ext.A, ext.acting_images, name='R')
    # generators are enough for commutation; confirm on the full basis of B
    for b in ext.images:
        for x in r.space.vectors:
            if ext.A.multiply(x, b) != ext.A.multiply(b, x):
                raise InvalidStructure("Centralizer computed from generators fails on the full basis of B")
    logging.getLogger(__name__).debug("Centralizer of {} has dimension {}".format(ext.name, r.dim))
    return r


def center(a: StructureAlgebra) -> Subalgebra:
    return commutant(a, [a.basis(i) for i in range(a.dim)], name='Z({})'.format(a.name))


def opposite(a: StructureAlgebra) -> StructureAlgebra:
    return a.opposite()


def opposite_extension(ext: Extension) -> Extension:
    name = ext.name[:-3] if ext.name.endswith('^op') else ext.name + '^op'
    return Extension(ext.B.opposite(), ext.A.opposite(), ext.iota, name=name)


def scalar_extension(a: StructureAlgebra) -> Extension:
    """ k·1 ⊆ A """
    k = StructureAlgebra(a.field, 1, [[[a.field.one]]], [a.field.one], name='k')
    return Extension(k, a, Matrix.from_columns(a.field, [a.unit], a.dim), name='k/{}'.format(a.name))


def identity_extension(a: StructureAlgebra) -> Extension:
    """ A ⊆ A """
    return Extension(a, a, Matrix.identity(a.field, a.dim), name='{0}/{0}'.format(a.name))


# -------------------------------------------------------------
# Groups and groupoids
# -------------------------------------------------------------

class FiniteGroup(object):
    """ A finite group by its Cayley table: table[g][h] is the index of g·h """

    def __init__(self, names, table, generators=None, name=''):
        self.names = list(names)
        self.table = [list(row) for row in table]
        self.name = name
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InvalidStructure("Cayley table of {} must be {}x{}".format(name, n, n))
        if any(not (0 <= x < n) for r in self.table for x in r):
            raise InvalidStructure("Cayley table of {} has entries out of range".format(name))
        ids = [e for e in range(n) if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
        if len(ids) != 1:
            raise InvalidStructure("Cayley table of {} has no two-sided identity".format(name))
        self.identity = ids[0]
        for g, h, k in itertools.product(range(n), repeat=3):
            if self.table[self.table[g][h]][k] != self.table[g][self.table[h][k]]:
                raise InvalidStructure("Cayley table of {} is not associative at ({}, {}, {})".format(name, g, h, k))
        self._inverse = []
        for g in range(n):
            inv = [h for h in range(n) if self.table[g][h] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][g] != self.identity:
                raise InvalidStructure("Element {} of {} has no inverse".format(self.names[g], name))
            self._inverse.append(inv[0])
        self.generators = list(generators) if generators is not None else list(range(n))

    @property
    def order(self):
        return len(self.names)

    def mul(self, g, h):
        return self.table[g][h]

    def inverse(self, g):
        return self._inverse[g]

    def index(self, name):
        return self.names.index(name)

    def is_subgroup(self, elements):
        s = set(elements)
        return (self.identity in s and all(self.table[g][h] in s for g in s for h in s)
                and all(self._inverse[g] in s for g in s))

    def is_normal_subgroup(self, elements):
        """ g·N·g⁻¹ = N for every g """
        s = set(elements)
        if not self.is_subgroup(s):
            raise InvalidStructure("Not a subgroup of {}: {}".format(self.name, sorted(s)))
        return all(self.table[self.table[g][x]][self._inverse[g]] in s for g in range(self.order) for x in s)

    def __repr__(self):
        return "FiniteGroup({}, order={})".format(self.name, self.order)


def cyclic_group(n, name=None):
    names = ['e'] + ['g' if k == 1 else 'g^{}'.format(k) for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(names, table, generators=[1] if n > 1 else [0], name=name or 'C{}'.format(n))


def _cycle_name(perm):
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append('(' + ''.join(str(c + 1) for c in cycle) + ')')
    return ''.join(cycles) or 'e'


def permutation_group(perms, generators=None, name=''):
    """ Group of permutations (image tuples) with g·h = g∘h """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for g in perms:
        row = []
        for h in perms:
            gh = tuple(g[h[x]] for x in range(len(h)))
            if gh not in index:
                raise InvalidStructure("Permutations are not closed under composition")
            row.append(index[gh])
        table.append(row)
    gens = [index[tuple(p)] for p in generators] if generators else None
    return FiniteGroup([_cycle_name(p) for p in perms], table, generators=gens, name=name)


def symmetric_group_3():
    """ S3 in the basis order e, (12), (13), (23), (123), (132) """
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    return permutation_group(perms, generators=[(1, 0, 2), (1, 2, 0)], name='S3')


class Groupoid(object):
    """ A finite groupoid: arrows (name, source, target) with a partial composition a∘b """

    def __init__(self, objects, arrows, composition, name=''):
        self.objects = list(objects)
        self.arrows = [tuple(a) for a in arrows]
        self.name = name
        self.composition = dict(composition)
        n = len(self.arrows)
        for a in range(n):
            for b in range(n):
                composable = self.arrows[a][1] == self.arrows[b][2]
                if composable != ((a, b) in self.composition):
                    raise InvalidStructure("Composition of arrows {} and {} must be defined iff they are composable".format(a, b))
                if composable:
                    c = self.composition[(a, b)]
                    if self.arrows[c][1] != self.arrows[b][1] or self.arrows[c][2] != self.arrows[a][2]:
                        raise InvalidStructure("Composite of arrows {} and {} has wrong endpoints".format(a, b))
        for (a, b), ab in self.composition.items():
            for c in range(n):
                if (b, c) in self.composition and self.composition.get((ab, c)) != self.composition.get((a, self.composition[(b, c)])):
                    raise InvalidStructure("Groupoid composition is not associative at ({}, {}, {})".format(a, b, c))
        self.identities = {}
        for obj in self.objects:
            ids = [e for e in range(n) if self.arrows[e][1] == obj and self.arrows[e][2] == obj
                   and all(self.composition.get((e, b), b) == b for b in range(n) if self.arrows[b][2] == obj)
                   and all(self.composition.get((b, e), b) == b for b in range(n) if self.arrows[b][1] == obj)]
            if len(ids) != 1:
                raise InvalidStructure("Object {} has no identity arrow".format(obj))
            self.identities[obj] = ids[0]
        self._inverse = []
        for a in range(n):
            src, tgt = self.arrows[a][1], self.arrows[a][2]
            inv = [b for b in range(n) if self.composition.get((a, b)) == self.identities[tgt]
                   and self.composition.get((b, a)) == self.identities[src]]
            if not inv:
                raise InvalidStructure("Arrow {} has no inverse".format(self.arrows[a][0]))
            self._inverse.append(inv[0])

    @property
    def size(self):
        return len(self.arrows)

    def inverse(self, a):
        return self._inverse[a]

    def compose(self, a, b):
        return self.composition.get((a, b))


def pair_groupoid(n):
    """ Arrows e_ij : j → i in the row-major order of matrix units """
    arrows = [('e{}{}'.format(i + 1, j + 1), j, i) for i in range(n) for j in range(n)]
    comp = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        comp[(i * n + j, j * n + k)] = i * n + k
    return Groupoid(range(n), arrows, comp, name='pair{}'.format(n))


def product_groupoid(group: FiniteGroup, n):
    """ pair groupoid on n objects times a group: arrows (i, j, g) """
    m = group.order
    arrows = []
    for i in range(n):
        for j in range(n):
            for g in range(m):
                arrows.append(('e{}{}:{}'.format(i + 1, j + 1, group.names[g]), j, i))
    comp = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        for g in range(m):
            for h in range(m):
                comp[((i * n + j) * m + g, (j * n + k) * m + h)] = (i * n + k) * m + group.mul(g, h)
    return Groupoid(range(n), arrows, comp, name='{}xpair{}'.format(group.name, n))


# -------------------------------------------------------------
# Algebra constructors
# -------------------------------------------------------------

def group_algebra(group: FiniteGroup, field=QQ_FIELD, name=None) -> StructureAlgebra:
    n = group.order
    table = [[unit(field, n, group.mul(g, h)) for h in range(n)] for g in range(n)]
    return StructureAlgebra(field, n, table, unit(field, n, group.identity),
                            name=name or 'k[{}]'.format(group.name), labels=group.names,
                            generators=[unit(field, n, g) for g in group.generators])


def matrix_algebra(n, field=QQ_FIELD) -> StructureAlgebra:
    d = n * n
    table = []
    for i, j in itertools.product(range(n), repeat=2):
        row = []
        for k, l in itertools.product(range(n), repeat=2):
            row.append(unit(field, d, i * n + l) if j == k else zeros(field, d))
        table.append(row)
    one = lincomb(field, d, [(field.one, unit(field, d, i * n + i)) for i in range(n)])
    labels = ['e{}{}'.format(i + 1, j + 1) for i in range(n) for j in range(n)]
    return StructureAlgebra(field, d, table, one, name='M{}'.format(n), labels=labels)


def groupoid_algebra(groupoid: Groupoid, field=QQ_FIELD, name=None) -> StructureAlgebra:
    """ Product of non-composable arrows is 0 """
    d = groupoid.size
    table = [[unit(field, d, groupoid.compose(a, b)) if groupoid.compose(a, b) is not None else zeros(field, d)
              for b in range(d)] for a in range(d)]
    one = lincomb(field, d, [(field.one, unit(field, d, e)) for e in groupoid.identities.values()])
    return StructureAlgebra(field, d, table, one, name=name or 'k[{}]'.format(groupoid.name),
                            labels=[a[0] for a in groupoid.arrows])


def subgroup_extension(group: FiniteGroup, elements: Sequence[int], field=QQ_FIELD, name='') -> Extension:
    """ k[N] ⊆ k[G] for a subgroup N given by element indices of G """
    elements = list(elements)
    if not group.is_subgroup(elements):
        raise InvalidStructure("{} is not a subgroup of {}".format(elements, group.name))
    local = {g: i for i, g in enumerate(elements)}
    table = [[local[group.mul(g, h)] for h in elements] for g in elements]
    sub = FiniteGroup([group.names[g] for g in elements], table, name=name or 'N')
    B = group_algebra(sub, field)
    A = group_algebra(group, field)
    iota = Matrix.from_columns(field, [unit(field, group.order, g) for g in elements], group.order)
    return Extension(B, A, iota, name='{}/{}'.format(A.name, B.name))


def vector_label(a: StructureAlgebra, v) -> Optional[str]:
    """ Human form of a vector such as '1*(12) + -1*(13)' """
    terms = ['{}*{}'.format(a.field.format(c), a.labels[i]) for i, c in support(v)]
    return ' + '.join(terms) or '0'
