# -*- coding: utf-8 -*-

""" JSON input and output

Algebra:    {"field": {"kind": "rationals"}, "dim": n, "unit": [..], "mul": [[i, j, k, "c"], ..], "labels": [..]}
Extension:  {"B": <algebra or registry name>, "A": <algebra or registry name>, "iota": [[row], ..]}
Bialgebra:  algebra keys plus "comul": [[i, j, k, "c"], ..], "counit": [..] and optionally "antipode": [[row], ..]
            and "kind": "hopf"
Subspace:   {"span": [[vector], ..]}

Scalars are ints or strings "p" / "p/q". Omitted triples are zero.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import json
import logging
import os

from sympy.polys.polyerrors import CoercionFailed

from . import registry
from .algebra import Extension, StructureAlgebra
from .bialgebra import HopfAlgebra, WeakBialgebra, WeakHopfAlgebra
from .errors import DepthTwoError, SchemaError
from .linalg import FieldSpec, Matrix, Subspace

ALGEBRA_KEYS = ('dim', 'unit', 'mul')
BIALGEBRA_KEYS = ALGEBRA_KEYS + ('comul', 'counit')


def read_json(path):
    try:
        with open(path, encoding='utf-8') as infile:
            return json.load(infile)
    except OSError as e:
        raise SchemaError("Cannot read {}: {}".format(path, e))
    except ValueError as e:
        raise SchemaError("{} is not valid JSON: {}".format(path, e))


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise SchemaError("{} must be a JSON object".format(what))
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError("{} is missing {}".format(what, ', '.join(missing)))


def _field(data, field=None):
    if field is not None:
        return field
    try:
        return FieldSpec.from_json(data.get('field'))
    except DepthTwoError as e:
        raise SchemaError(str(e))


def _scalars(field, values, what):
    try:
        return [field(x) for x in values]
    except (TypeError, ValueError, ZeroDivisionError, CoercionFailed) as e:
        raise SchemaError("Bad scalar in {}: {}".format(what, e))


def _triples(field, entries, what):
    out = []
    for entry in entries:
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise SchemaError("Every {} entry must be [i, j, k, scalar] (got {})".format(what, entry))
        i, j, k, c = entry
        out.append((int(i), int(j), int(k), _scalars(field, [c], what)[0]))
    return out


def matrix_from_json(field, rows, what='matrix'):
    if not isinstance(rows, list) or not rows:
        raise SchemaError("{} must be a non-empty list of rows".format(what))
    return Matrix(field, [_scalars(field, r, what) for r in rows])


def matrix_to_json(m: Matrix):
    return [[m.field.format(a) for a in r] for r in m.tolist()]


# -------------------------------------------------------------
# Algebras and extensions
# -------------------------------------------------------------

def algebra_from_json(data, field=None) -> StructureAlgebra:
    _require(data, ALGEBRA_KEYS, 'algebra')
    field = _field(data, field)
    dim = int(data['dim'])
    return StructureAlgebra.from_triples(field, dim, _triples(field, data['mul'], 'mul'),
                                         _scalars(field, data['unit'], 'unit'),
                                         name=data.get('name', ''), labels=data.get('labels'))


def algebra_to_json(a: StructureAlgebra):
    f = a.field
    return {'field': f.to_json(), 'name': a.name, 'dim': a.dim, 'labels': list(a.labels),
            'unit': [f.format(x) for x in a.unit],
            'mul': [[i, j, k, f.format(c)] for i, j, k, c in a.triples()]}


def _algebra_ref(ref, field):
    if isinstance(ref, str):
        return registry.build(ref, field, kind=(registry.HOPF, registry.WEAK_HOPF)).algebra
    return algebra_from_json(ref, field)


def extension_from_json(data, field=None) -> Extension:
    _require(data, ('B', 'A', 'iota'), 'extension')
    field = _field(data, field)
    B = _algebra_ref(data['B'], field)
    A = _algebra_ref(data['A'], field)
    return Extension(B, A, matrix_from_json(field, data['iota'], 'iota'), name=data.get('name', ''))


# -------------------------------------------------------------
# Bialgebras
# -------------------------------------------------------------

def bialgebra_from_json(data, field=None):
    """ A WeakBialgebra, or a WeakHopfAlgebra (HopfAlgebra with "kind": "hopf") when an antipode is given """
    _require(data, BIALGEBRA_KEYS, 'bialgebra')
    alg = algebra_from_json(data, field)
    comul = _triples(alg.field, data['comul'], 'comul')
    counit = _scalars(alg.field, data['counit'], 'counit')
    name = data.get('name', '')
    if 'antipode' not in data:
        return WeakBialgebra.from_triples(alg, comul, counit, name=name)
    cls = HopfAlgebra if data.get('kind') == 'hopf' else WeakHopfAlgebra
    return cls.from_triples(alg, comul, counit, matrix_from_json(alg.field, data['antipode'], 'antipode'), name=name)


def bialgebra_to_json(w: WeakBialgebra):
    data = algebra_to_json(w.algebra)
    f = w.field
    data['name'] = w.name
    data['comul'] = [[i, j, k, f.format(c)] for i, j, k, c in w.comul_triples()]
    data['counit'] = [f.format(x) for x in w.counit]
    if w.antipode is not None:
        data['antipode'] = matrix_to_json(w.antipode)
        if isinstance(w, HopfAlgebra):
            data['kind'] = 'hopf'
    return data


def subspace_from_json(data, field, ambient) -> Subspace:
    _require(data, ('span',), 'subspace')
    vectors = [_scalars(field, v, 'span') for v in data['span']]
    if any(len(v) != ambient for v in vectors):
        raise SchemaError("Spanning vectors must have length {}".format(ambient))
    return Subspace.span(field, ambient, vectors)


# -------------------------------------------------------------
# File or registry
# -------------------------------------------------------------

def is_file_ref(ref):
    return ref.endswith('.json') or os.path.isfile(ref)


def load_extension(ref, field=None) -> Extension:
    if is_file_ref(ref):
        logging.getLogger(__name__).debug("Loading extension from {}".format(ref))
        return extension_from_json(read_json(ref), field)
    return registry.extension(ref, field)


def load_bialgebra(ref, field=None):
    if is_file_ref(ref):
        logging.getLogger(__name__).debug("Loading bialgebra from {}".format(ref))
        return bialgebra_from_json(read_json(ref), field)
    return registry.build(ref, field, kind=(registry.HOPF, registry.WEAK_HOPF))


def dump_json(data, path=None):
    """ Deterministic JSON text, written to `path` when given """
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    if path:
        with open(path, 'w', encoding='utf-8') as outfile:
            outfile.write(text + '\n')
    return text
