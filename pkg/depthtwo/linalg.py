# -*- coding: utf-8 -*-

""" Exact scalar fields (QQ and GF(p)) and the linear algebra every other module builds on

Vectors are plain tuples of domain elements. Heavy lifting (row reduction, rank, products)
is delegated to sympy's DomainMatrix.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import QQ
from sympy.polys.domains.finitefield import FF
from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatch, InvalidStructure

RATIONALS = 'rationals'
PRIME_FIELD = 'prime-field'


# -------------------------------------------------------------
# Fields
# -------------------------------------------------------------

@lru_cache(maxsize=None)
def _domain(kind, p):
    if kind == RATIONALS:
        return QQ
    return FF(p)


@dataclass(frozen=True)
class FieldSpec:
    """ The ground field k, either the rationals or a prime field GF(p) """

    kind: str = RATIONALS
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise InvalidStructure("The rational field takes no modulus (got p={})".format(self.p))
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not isprime(self.p):
                raise InvalidStructure("Prime field modulus must be a prime number (got {})".format(self.p))
        else:
            raise InvalidStructure("Unknown field kind: {}".format(self.kind))

    @staticmethod
    def parse(text):
        """ Parse a field flag: ``q`` for the rationals or ``fp:P`` for GF(P) """
        text = text.strip().lower()
        if text in ('q', 'qq', RATIONALS):
            return FieldSpec()
        if text.startswith('fp:'):
            try:
                p = int(text[3:])
            except ValueError:
                raise InvalidStructure("Invalid prime field flag: {}".format(text))
            return FieldSpec(PRIME_FIELD, p)
        raise InvalidStructure("Invalid field flag: {}".format(text))

    @property
    def domain(self):
        return _domain(self.kind, self.p)

    @property
    def characteristic(self):
        return 0 if self.kind == RATIONALS else self.p

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value):
        """ Convert an int, a scalar string ("p/q" or "p") or a domain element into this field """
        K = self.domain
        if isinstance(value, str):
            text = value.strip()
            if '/' in text:
                num, den = text.split('/', 1)
                den = int(den)
                if den == 0:
                    raise InvalidStructure("Zero denominator in scalar {}".format(value))
                return K(int(num)) / K(den)
            return K(int(text))
        if isinstance(value, int):
            return K(value)
        return K.convert(value)

    def format(self, x):
        """ Canonical string of a scalar: "p/q" (or "p") over QQ, a residue in [0, p) over GF(p) """
        if self.kind == RATIONALS:
            num, den = int(x.numerator), int(x.denominator)
            return str(num) if den == 1 else "{}/{}".format(num, den)
        return str(int(x) % self.p)

    def to_json(self):
        if self.kind == RATIONALS:
            return {"kind": RATIONALS}
        return {"kind": PRIME_FIELD, "p": self.p}

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            return FieldSpec.parse(data)
        if not data:
            return FieldSpec()
        return FieldSpec(data.get('kind', RATIONALS), data.get('p'))

    def __str__(self):
        return 'q' if self.kind == RATIONALS else 'fp:{}'.format(self.p)


QQ_FIELD = FieldSpec()


# -------------------------------------------------------------
# Vector helpers
# -------------------------------------------------------------

def zeros(field, n):
    return (field.zero,) * n


def unit(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def is_zero(v):
    return not any(v)


def _check_len(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("Vector lengths differ: {} vs {}".format(len(u), len(v)))


def vadd(u, v):
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    _check_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def lincomb(field, n, terms):
    """ Σ c·v over (c, v) pairs, skipping zero coefficients """
    acc = [field.zero] * n
    for c, v in terms:
        if not c:
            continue
        if len(v) != n:
            raise DimensionMismatch("Vector of length {} in a combination of length {}".format(len(v), n))
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


def support(v):
    return [(i, a) for i, a in enumerate(v) if a]


def format_vector(field, v):
    return [field.format(a) for a in v]


# -------------------------------------------------------------
# Row reduction through sympy
# -------------------------------------------------------------

def _to_dm(field, rows, ncols):
    """ Build a DomainMatrix in sparse (dict-of-dicts) format """
    data = {}
    for i, row in enumerate(rows):
        entries = {j: a for j, a in enumerate(row) if a}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), field.domain)


def _rref_rows(field, rows, ncols):
    """ Return (nonzero RREF rows, pivots) of the given row list """
    rows = [r for r in rows if any(r)]
    if not rows or not ncols:
        return [], ()
    dm = _to_dm(field, rows, ncols)
    reduced, pivots = dm.rref()
    dense = reduced.to_dense().to_list()
    return [tuple(dense[i]) for i in range(len(pivots))], tuple(pivots)


class Matrix:
    """ Immutable dense matrix over a FieldSpec (rows of domain elements) """

    __slots__ = ('field', '_rows', '_cols')

    def __init__(self, field, rows, cols=None):
        self.field = field
        self._rows = tuple(tuple(r) for r in rows)
        if cols is None:
            if not self._rows:
                raise DimensionMismatch("Column count is required for a matrix without rows")
            cols = len(self._rows[0])
        self._cols = cols
        for r in self._rows:
            if len(r) != cols:
                raise DimensionMismatch("Ragged matrix rows ({} != {})".format(len(r), cols))

    @staticmethod
    def zeros(field, rows, cols):
        return Matrix(field, [(field.zero,) * cols for _ in range(rows)], cols)

    @staticmethod
    def identity(field, n):
        return Matrix(field, [unit(field, n, i) for i in range(n)], n)

    @staticmethod
    def from_columns(field, columns, nrows):
        """ Matrix whose j-th column is columns[j] (so that M·e_j = columns[j]) """
        columns = list(columns)
        for c in columns:
            if len(c) != nrows:
                raise DimensionMismatch("Column of length {} for a matrix with {} rows".format(len(c), nrows))
        rows = [tuple(c[i] for c in columns) for i in range(nrows)]
        return Matrix(field, rows, len(columns))

    @staticmethod
    def from_entries(field, rows, cols, entries):
        """ Build from a row-major flat sequence of scalars (ints, strings or domain elements) """
        entries = [field(x) for x in entries]
        if len(entries) != rows * cols:
            raise DimensionMismatch("Expected {} entries, got {}".format(rows * cols, len(entries)))
        return Matrix(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return (len(self._rows), self._cols)

    @property
    def entries(self):
        return tuple(a for r in self._rows for a in r)

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self._cols)]

    def tolist(self):
        return [list(r) for r in self._rows]

    def apply(self, v):
        if len(v) != self._cols:
            raise DimensionMismatch("Cannot apply a {}x{} matrix to a vector of length {}".format(self.rows, self.cols, len(v)))
        nz = [(j, a) for j, a in enumerate(v) if a]
        zero = self.field.zero
        out = []
        for r in self._rows:
            s = zero
            for j, a in nz:
                x = r[j]
                if x:
                    s += x * a
            out.append(s)
        return tuple(out)

    def to_domain_matrix(self):
        return _to_dm(self.field, self._rows, self._cols)

    def __matmul__(self, other):
        if self._cols != other.rows:
            raise DimensionMismatch("Cannot multiply {} by {}".format(self.shape, other.shape))
        if not self.rows or not other.cols:
            return Matrix.zeros(self.field, self.rows, other.cols)
        if not self._cols:
            return Matrix.zeros(self.field, self.rows, other.cols)
        prod = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return Matrix(self.field, prod.to_dense().to_list(), other.cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("Cannot add {} and {}".format(self.shape, other.shape))
        return Matrix(self.field, [vadd(a, b) for a, b in zip(self._rows, other._rows)], self._cols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("Cannot subtract {} and {}".format(self.shape, other.shape))
        return Matrix(self.field, [vsub(a, b) for a, b in zip(self._rows, other._rows)], self._cols)

    def scale(self, c):
        return Matrix(self.field, [vscale(c, r) for r in self._rows], self._cols)

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self._cols)], self.rows)

    def hstack(self, *others):
        rows = [list(r) for r in self._rows]
        cols = self._cols
        for o in others:
            if o.rows != self.rows:
                raise DimensionMismatch("hstack needs equal row counts")
            for r, extra in zip(rows, o._rows):
                r.extend(extra)
            cols += o.cols
        return Matrix(self.field, rows, cols)

    def vstack(self, *others):
        rows = list(self._rows)
        for o in others:
            if o.cols != self._cols:
                raise DimensionMismatch("vstack needs equal column counts")
            rows.extend(o._rows)
        return Matrix(self.field, rows, self._cols)

    def rank(self):
        return len(_rref_rows(self.field, self._rows, self._cols)[1])

    def rref(self):
        return rref(self)

    def inverse(self):
        """ Inverse matrix, or None when singular """
        if self.rows != self._cols:
            raise DimensionMismatch("Only square matrices have inverses (got {})".format(self.shape))
        n = self.rows
        if not n:
            return self
        aug = [r + unit(self.field, n, i) for i, r in enumerate(self._rows)]
        reduced, pivots = _rref_rows(self.field, aug, 2 * n)
        if pivots[:n] != tuple(range(n)):
            return None
        return Matrix(self.field, [r[n:] for r in reduced[:n]], n)

    def is_zero(self):
        return not any(any(r) for r in self._rows)

    def is_identity(self):
        return self.rows == self._cols and self == Matrix.identity(self.field, self.rows)

    def image(self):
        """ Column space as a canonical Subspace """
        return Subspace.span(self.field, self.rows, self.columns())

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return "Matrix({}x{} over {})".format(self.rows, self._cols, self.field)

    def __str__(self):
        return "\n".join("[{}]".format(", ".join(self.field.format(a) for a in r)) for r in self._rows)


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """ Reduced row echelon form (full shape, zero rows last) and the pivot columns """
    reduced, pivots = _rref_rows(m.field, m._rows, m.cols)
    rows = list(reduced) + [zeros(m.field, m.cols)] * (m.rows - len(reduced))
    return Matrix(m.field, rows, m.cols), pivots


def solve_linear(a: Matrix, b: Sequence) -> Optional[tuple]:
    """ Some x with a·x = b, free variables set to zero, or None when inconsistent """
    if a.rows != len(b):
        raise DimensionMismatch("Right-hand side has length {} but the system has {} rows".format(len(b), a.rows))
    n = a.cols
    aug = [r + (c,) for r, c in zip(a._rows, b)]
    reduced, pivots = _rref_rows(a.field, aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [a.field.zero] * n
    for r, p in zip(reduced, pivots):
        x[p] = r[n]
    return tuple(x)


def kernel(a: Matrix) -> 'Subspace':
    """ Null space {x : a·x = 0} with canonical basis """
    return kernel_rows(a.field, a._rows, a.cols)


def kernel_rows(field, rows, ncols):
    reduced, pivots = _rref_rows(field, rows, ncols)
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in zip(reduced, pivots):
            if r[f]:
                v[p] = -r[f]
        vectors.append(tuple(v))
    return Subspace.span(field, ncols, vectors)


# -------------------------------------------------------------
# Subspaces
# -------------------------------------------------------------

class Subspace:
    """ A subspace of k^n stored by its canonical RREF basis """

    __slots__ = ('field', 'ambient', '_rows', 'pivots', '_free')

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self._rows = tuple(rows)
        self.pivots = tuple(pivots)
        self._free = None

    @staticmethod
    def span(field, ambient, vectors: Iterable):
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch("Vector of length {} in a {}-dimensional space".format(len(v), ambient))
        rows, pivots = _rref_rows(field, vectors, ambient)
        return Subspace(field, ambient, rows, pivots)

    @staticmethod
    def zero(field, ambient):
        return Subspace(field, ambient, (), ())

    @staticmethod
    def full(field, ambient):
        return Subspace(field, ambient, [unit(field, ambient, i) for i in range(ambient)], range(ambient))

    @property
    def dim(self):
        return len(self._rows)

    @property
    def vectors(self):
        return self._rows

    @property
    def basis(self):
        return Matrix(self.field, self._rows, self.ambient)

    @property
    def free_columns(self):
        """ Non-pivot columns: indices of the unit vectors representing ambient/self """
        if self._free is None:
            pivots = set(self.pivots)
            self._free = tuple(j for j in range(self.ambient) if j not in pivots)
        return self._free

    def _check(self, v):
        if len(v) != self.ambient:
            raise DimensionMismatch("Vector of length {} in a {}-dimensional space".format(len(v), self.ambient))

    def reduce(self, v):
        """ Residue of v modulo the subspace (zero at every pivot column) """
        self._check(v)
        w = list(v)
        for row, p in zip(self._rows, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient):
                    x = row[j]
                    if x:
                        w[j] -= c * x
        return tuple(w)

    def contains(self, v):
        return is_zero(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v):
        """ Coordinates of v in the RREF basis (the entries at pivot columns) """
        if not self.contains(v):
            raise InvalidStructure("Vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def element(self, coords):
        if len(coords) != self.dim:
            raise DimensionMismatch("Expected {} coordinates, got {}".format(self.dim, len(coords)))
        return lincomb(self.field, self.ambient, zip(coords, self._rows))

    def quotient_coordinates(self, v):
        w = self.reduce(v)
        return tuple(w[j] for j in self.free_columns)

    def quotient_basis(self):
        return [unit(self.field, self.ambient, j) for j in self.free_columns]

    def _same_ambient(self, other):
        if self.ambient != other.ambient:
            raise DimensionMismatch("Ambient dimensions differ: {} vs {}".format(self.ambient, other.ambient))

    def __add__(self, other):
        self._same_ambient(other)
        return Subspace.span(self.field, self.ambient, self._rows + other._rows)

    def intersect(self, other):
        """ Intersection through the Zassenhaus construction """
        self._same_ambient(other)
        n = self.ambient
        if not self.dim or not other.dim:
            return Subspace.zero(self.field, n)
        rows = [r + r for r in self._rows] + [r + zeros(self.field, n) for r in other._rows]
        reduced, pivots = _rref_rows(self.field, rows, 2 * n)
        meet = [r[n:] for r, p in zip(reduced, pivots) if p >= n]
        return Subspace.span(self.field, n, meet)

    def is_subspace_of(self, other):
        self._same_ambient(other)
        return all(other.contains(v) for v in self._rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self._rows == other._rows)

    def __hash__(self):
        return hash((self.ambient, self._rows))

    def __repr__(self):
        return "Subspace(dim={}, ambient={})".format(self.dim, self.ambient)


def quotient_basis(ambient: int, sub: Subspace):
    """ Unit-vector representatives of a basis of k^ambient / sub """
    if sub.ambient != ambient:
        raise DimensionMismatch("Subspace lives in dimension {}, not {}".format(sub.ambient, ambient))
    return sub.quotient_basis()


def rank_of(field, vectors, n):
    return len(_rref_rows(field, list(vectors), n)[1])


def log_system(name, rows, cols):
    logging.getLogger(__name__).debug("Solving {}: {} equations in {} unknowns".format(name, rows, cols))
