# -*- coding: utf-8 -*-

""" Built-in examples addressed by name, e.g. ``group:S3/A3``, ``matrix:2`` or ``sweedler4/k[g]``

Every example has integral structure constants, so each can be built over any FieldSpec.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import logging
import re
from dataclasses import dataclass
from typing import Callable

from .algebra import (Extension, cyclic_group, identity_extension, pair_groupoid, product_groupoid,
                      subgroup_extension, symmetric_group_3)
from .bialgebra import group_hopf, groupoid_weak_hopf, matrix_weak_hopf, sweedler4
from .errors import SchemaError
from .hopf import HopfSubalgebra, subgroup_pair
from .linalg import QQ_FIELD, unit
from .weakhopf import WeakComoduleAlgebra, weak_coinvariants

EXTENSION = 'extension'
PAIR = 'pair'
HOPF = 'hopf'
WEAK_HOPF = 'weak-hopf'

MAX_MATRIX_SIZE = 4


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str
    description: str
    build: Callable

    def to_dict(self):
        return {'name': self.name, 'kind': self.kind, 'description': self.description}


# -------------------------------------------------------------
# Groups and their subgroups
# -------------------------------------------------------------

GROUPS = {'C2': lambda: cyclic_group(2), 'C4': lambda: cyclic_group(4), 'S3': symmetric_group_3}

# element indices; S3 is ordered e, (12), (13), (23), (123), (132)
SUBGROUPS = {
    'C2': {'1': [0], 'C2': [0, 1]},
    'C4': {'1': [0], 'C2': [0, 2], 'C4': [0, 1, 2, 3]},
    'S3': {'1': [0], 'C2': [0, 1], 'A3': [0, 4, 5], 'S3': [0, 1, 2, 3, 4, 5]},
}


def _group_pair(gname, nname):
    def build(field):
        group = GROUPS[gname]()
        elements = SUBGROUPS[gname][nname]
        H, K = subgroup_pair(group, elements, field, name='k[{}]'.format(nname))
        return H, K, group, elements
    return build


def _group_extension(gname, nname):
    def build(field):
        group = GROUPS[gname]()
        return subgroup_extension(group, SUBGROUPS[gname][nname], field, name=nname)
    return build


def _sweedler_pair(field):
    H = sweedler4(field)
    K = HopfSubalgebra.span(H, [H.unit, unit(H.field, 4, 1)], name='k[g]')
    return H, K, None, None


def _diagonal_extension(n):
    def build(field):
        w = matrix_weak_hopf(n, field)
        B = weak_coinvariants(WeakComoduleAlgebra.regular(w), name='D{}'.format(n))
        return Extension.from_subalgebra(B, name='M{0}/D{0}'.format(n))
    return build


def _fixed_entries():
    entries = []
    for gname in GROUPS:
        entries.append(Entry('group:{}'.format(gname), HOPF, 'group Hopf algebra k[{}]'.format(gname),
                             lambda field, g=gname: group_hopf(GROUPS[g](), field)))
        for nname in SUBGROUPS[gname]:
            if nname in ('1', gname):
                continue
            entries.append(Entry('group:{}/{}'.format(gname, nname), PAIR,
                                 'k[{}] ⊆ k[{}] by a subgroup'.format(nname, gname), _group_pair(gname, nname)))
    entries.append(Entry('sweedler4', HOPF, "Sweedler's four-dimensional Hopf algebra H4", sweedler4))
    entries.append(Entry('sweedler4/k[g]', PAIR, 'the group-like Hopf subalgebra k[g] ⊆ H4 (not normal)', _sweedler_pair))
    entries.append(Entry('matrix:2/diag', EXTENSION, 'diagonal matrices ⊆ M2', _diagonal_extension(2)))
    entries.append(Entry('trivial:S3', EXTENSION, 'k[S3] ⊆ k[S3] (B = A)',
                         lambda field: identity_extension(group_hopf(symmetric_group_3(), field).algebra)))
    return {e.name: e for e in entries}


REGISTRY = _fixed_entries()

_MATRIX = re.compile(r'^matrix:(\d+)$')
_GROUPOID = re.compile(r'^groupoid:(pair|C2xpair):(\d+)$')


def _parametric(name):
    m = _MATRIX.match(name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= MAX_MATRIX_SIZE:
            raise SchemaError("Matrix size must be between 1 and {} (got {})".format(MAX_MATRIX_SIZE, n))
        return Entry(name, WEAK_HOPF, 'M{0} with Δ(e_ij) = e_ij⊗e_ij, S(e_ij) = e_ji'.format(n),
                     lambda field: matrix_weak_hopf(n, field))
    m = _GROUPOID.match(name)
    if m:
        n = int(m.group(2))
        if not 1 <= n <= MAX_MATRIX_SIZE:
            raise SchemaError("Groupoid size must be between 1 and {} (got {})".format(MAX_MATRIX_SIZE, n))
        if m.group(1) == 'pair':
            return Entry(name, WEAK_HOPF, 'pair groupoid algebra on {} objects'.format(n),
                         lambda field: groupoid_weak_hopf(pair_groupoid(n), field))
        return Entry(name, WEAK_HOPF, 'C2 × pair groupoid algebra on {} objects'.format(n),
                     lambda field: groupoid_weak_hopf(product_groupoid(cyclic_group(2), n), field))
    return None


def names():
    """ Fixed names plus one instance of each parametric family """
    return sorted(list(REGISTRY) + ['matrix:2', 'matrix:3', 'groupoid:pair:2', 'groupoid:C2xpair:2'])


def lookup(name) -> Entry:
    name = name.strip()
    entry = REGISTRY.get(name) or _parametric(name)
    if entry is None:
        raise SchemaError("Unknown registry name: {}".format(name))
    return entry


def build(name, field=None, kind=None):
    """ Build a registry example over `field` (default: the rationals) """
    entry = lookup(name)
    if kind is not None and entry.kind not in (kind if isinstance(kind, tuple) else (kind,)):
        raise SchemaError("{} is a {} example, expected {}".format(name, entry.kind, kind))
    logging.getLogger(__name__).debug("Building registry example {} over {}".format(name, field or QQ_FIELD))
    return entry.build(field or QQ_FIELD)


def extension(name, field=None) -> Extension:
    """ The algebra extension behind an extension or pair entry """
    entry = lookup(name)
    if entry.kind == EXTENSION:
        return entry.build(field or QQ_FIELD)
    if entry.kind == PAIR:
        if entry.name.startswith('group:'):
            gname, nname = entry.name[len('group:'):].split('/')
            return _group_extension(gname, nname)(field or QQ_FIELD)
        _, K, _, _ = entry.build(field or QQ_FIELD)
        return K.extension()
    raise SchemaError("{} is a {} example, not an extension".format(name, entry.kind))


def hopf_pair(hopf, sub=None, field=None):
    """ (H, K, group, elements) from a pair name, or a Hopf name plus a subgroup or pair suffix

    ``hopf_pair('group:S3/A3')``, ``hopf_pair('group:S3', 'A3')`` and ``hopf_pair('sweedler4', 'k[g]')`` all work;
    group and elements are None unless K comes from a subgroup.
    """
    if sub is None:
        return build(hopf, field, kind=PAIR)
    hopf, sub = hopf.strip(), sub.strip()
    if hopf.startswith('group:'):
        gname = hopf[len('group:'):]
        if gname in SUBGROUPS and sub in SUBGROUPS[gname]:
            return _group_pair(gname, sub)(field or QQ_FIELD)
    return build('{}/{}'.format(hopf, sub), field, kind=PAIR)
