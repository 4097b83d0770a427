# -*- coding: utf-8 -*-

""" Check results and reports shared by every verification routine
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import json
import logging

from .linalg import Matrix

PASS = 'pass'
FAIL = 'fail'
NOT_APPLICABLE = 'not-applicable'
STATUSES = (PASS, FAIL, NOT_APPLICABLE)
MAX_LISTED_FAILURES = 20


def _jsonable(field, value):
    if isinstance(value, Matrix):
        return [[field.format(a) for a in r] for r in value.tolist()]
    if isinstance(value, (tuple, list)):
        return [_jsonable(field, v) for v in value]
    if isinstance(value, (bool, str, int)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(field, v) for k, v in value.items()}
    return field.format(value)


class CheckResult(object):

    def __init__(self, id, status, detail='', counterexample=None, failures=None):
        if status not in STATUSES:
            raise ValueError("Invalid check status: {}".format(status))
        self.id = id
        self.status = status
        self.detail = detail
        self.counterexample = counterexample
        self.failures = failures or []

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        d = {'id': self.id, 'status': self.status, 'detail': self.detail}
        if self.counterexample is not None:
            d['counterexample'] = self.counterexample
        if self.failures:
            d['failures'] = [list(f) for f in self.failures[:MAX_LISTED_FAILURES]]
            d['failure_count'] = len(self.failures)
        return d

    def __repr__(self):
        return "CheckResult({}: {})".format(self.id, self.status)


class Report(object):
    """ Ordered collection of checks, dimensions and verdicts """

    def __init__(self, title='', field=None):
        self.title = title
        self.field = field
        self.checks = []
        self.dimensions = {}
        self.verdicts = {}
        self.data = {}

    def add(self, check):
        self.checks.append(check)
        if check.status == FAIL:
            logging.getLogger(__name__).warning("[{}] check failed: {} {}".format(self.title, check.id, check.detail))
        return check

    def check(self, id, passed, detail='', counterexample=None):
        if counterexample is not None and self.field is not None:
            counterexample = _jsonable(self.field, counterexample)
        return self.add(CheckResult(id, PASS if passed else FAIL, detail, counterexample))

    def not_applicable(self, id, detail=''):
        logging.getLogger(__name__).warning("[{}] {} is not applicable: {}".format(self.title, id, detail))
        return self.add(CheckResult(id, NOT_APPLICABLE, detail))

    def expect_equal(self, id, cases, detail=''):
        """ Record one check over (indices, lhs, rhs) cases; every mismatch is listed, the first is kept in full """
        failures = []
        first = None
        count = 0
        for indices, lhs, rhs in cases:
            count += 1
            if lhs != rhs:
                failures.append(tuple(indices))
                if first is None:
                    first = {'indices': list(indices), 'lhs': lhs, 'rhs': rhs}
        if first is not None and self.field is not None:
            first = _jsonable(self.field, first)
        text = detail or "{} cases".format(count)
        if failures:
            text = "{} of {} cases failed".format(len(failures), count) + (": " + detail if detail else '')
        return self.add(CheckResult(id, FAIL if failures else PASS, text, first, failures))

    def expect_true(self, id, cases, detail=''):
        """ Like expect_equal for (indices, bool) cases """
        return self.expect_equal(id, ((idx, bool(ok), True) for idx, ok in cases), detail)

    def merge(self, other, prefix=''):
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.id, c.status, c.detail, c.counterexample, c.failures))
        for k, v in other.dimensions.items():
            self.dimensions[prefix + k] = v
        for k, v in other.verdicts.items():
            self.verdicts[prefix + k] = v
        for k, v in other.data.items():
            self.data[prefix + k] = v
        return self

    def get(self, id):
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def status(self, id):
        return self.get(id).status

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        d = {'title': self.title,
             'checks': [c.to_dict() for c in self.checks],
             'dimensions': dict(self.dimensions),
             'verdicts': dict(self.verdicts)}
        if self.field is not None:
            d['field'] = str(self.field)
        if self.data:
            d['data'] = _jsonable(self.field, self.data) if self.field is not None else self.data
        return d

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)

    def summary(self):
        passed = sum(1 for c in self.checks if c.status == PASS)
        skipped = sum(1 for c in self.checks if c.status == NOT_APPLICABLE)
        lines = ["{}: {} passed, {} failed, {} not applicable".format(self.title or 'report', passed, len(self.failures), skipped)]
        for k, v in self.verdicts.items():
            lines.append("  {} = {}".format(k, v))
        for k, v in self.dimensions.items():
            lines.append("  dim {} = {}".format(k, v))
        for c in self.failures:
            lines.append("  FAIL {} {}".format(c.id, c.detail))
        return "\n".join(lines)

    def __repr__(self):
        return "Report({}, {} checks, ok={})".format(self.title, len(self.checks), self.ok)
