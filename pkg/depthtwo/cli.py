# -*- coding: utf-8 -*-

""" depthtwo command line tools

    depthtwo analyze-extension --input group:S3/A3
    depthtwo check-normal --hopf sweedler4 --sub 'k[g]'
    depthtwo weakhopf-check --input matrix:2 --field fp:2
    depthtwo reconstruct-antipode --input matrix:3 --out s.json
    depthtwo list-registry --json

Exit codes: 0 every check passed, 1 a check failed or the run was refused, 2 bad input.
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import argparse
import logging
import sys
import time

from . import registry, schema
from .__version__ import __version__
from .bialgebra import HopfAlgebra
from .errors import DepthTwoError, InvalidStructure, NotApplicable
from .galois import analyze_extension
from .hopf import HopfSubalgebra, normality_theorem_harness
from .linalg import FieldSpec
from .report import Report
from .weakhopf import reconstruct_antipode, weak_hopf_pipeline

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(Exception):
    """ Raised while loading inputs; maps to exit code 2 """


def _load(fn, *args):
    try:
        return fn(*args)
    except NotApplicable:
        raise
    except (DepthTwoError, ValueError, TypeError, KeyError) as e:
        raise InputError(str(e)) from e


# -------------------------------------------------------------
# Commands
# -------------------------------------------------------------

def cmd_analyze_extension(args):
    ext = _load(schema.load_extension, args.input, args.field)
    return analyze_extension(ext)


def _normal_inputs(args):
    if schema.is_file_ref(args.hopf):
        H = schema.load_bialgebra(args.hopf, args.field)
        if not isinstance(H, HopfAlgebra):
            raise InputError("{} is not a Hopf algebra (add \"kind\": \"hopf\")".format(args.hopf))
        if not args.sub or not schema.is_file_ref(args.sub):
            raise InputError("--sub must name a subspace JSON file when --hopf is a file")
        space = schema.subspace_from_json(schema.read_json(args.sub), H.field, H.dim)
        return H, HopfSubalgebra(H, space, name='K'), None, None
    return registry.hopf_pair(args.hopf, args.sub, args.field)


def cmd_check_normal(args):
    H, K, group, elements = _load(_normal_inputs, args)
    if not isinstance(H, HopfAlgebra):
        raise InputError("{} is not a Hopf algebra".format(H.name))
    _load(_check_rank, H, K)
    return normality_theorem_harness(H, K, group, elements)


def _check_rank(H, K):
    if H.dim % K.dim:
        raise InvalidStructure("dim {} = {} is not a multiple of dim {} = {}".format(H.name, H.dim, K.name, K.dim))


def cmd_weakhopf_check(args):
    w = _load(schema.load_bialgebra, args.input, args.field)
    return weak_hopf_pipeline(w, no_antipode=args.no_antipode)


def cmd_reconstruct_antipode(args):
    w = _load(schema.load_bialgebra, args.input, args.field)
    try:
        _, report = reconstruct_antipode(w)
    except NotApplicable as e:
        report = Report('reconstruct antipode {}'.format(w.name), w.field)
        report.not_applicable('reconstruct', str(e))
        report.verdicts['reconstructed'] = False
        return report
    report.verdicts['reconstructed'] = True
    return report


def cmd_list_registry(args):
    entries = [registry.lookup(n).to_dict() for n in registry.names()]
    if args.json:
        print(schema.dump_json(entries))
    else:
        width = max(len(e['name']) for e in entries)
        for e in entries:
            print("{}  {:<9}  {}".format(e['name'].ljust(width), e['kind'], e['description']))
    return None


# -------------------------------------------------------------
# Parser
# -------------------------------------------------------------

def _field_flag(text):
    try:
        return FieldSpec.parse(text)
    except DepthTwoError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--field', type=_field_flag, default=None, help="Ground field: q (default) or fp:P")
    common.add_argument('--out', default=None, help="Write the JSON report to this file")
    common.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG logging")
    common.add_argument('--quiet', action='store_true', help="Do not print the human-readable summary")

    parser = argparse.ArgumentParser(prog='depthtwo', description="Depth two extensions, bialgebroids and weak Hopf algebras")
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('analyze-extension', parents=[common], help="D2 quasibases, T, S, Galois coaction and balance")
    p.add_argument('--input', required=True, help="Extension JSON file or registry name")
    p.set_defaults(func=cmd_analyze_extension)

    p = sub.add_parser('check-normal', parents=[common], help="Normality against the Hopf-Galois property")
    p.add_argument('--hopf', required=True, help="Hopf JSON file, Hopf registry name or pair registry name")
    p.add_argument('--sub', default=None, help="Subgroup name, pair suffix or subspace JSON file")
    p.set_defaults(func=cmd_check_normal)

    p = sub.add_parser('weakhopf-check', parents=[common], help="Weak bialgebra and weak Hopf batteries")
    p.add_argument('--input', required=True, help="Bialgebra JSON file or registry name")
    p.add_argument('--no-antipode', action='store_true', help="Ignore the stored antipode")
    p.set_defaults(func=cmd_weakhopf_check)

    p = sub.add_parser('reconstruct-antipode', parents=[common], help="Rebuild S from the inverse Galois map")
    p.add_argument('--input', required=True, help="Bialgebra JSON file or registry name")
    p.set_defaults(func=cmd_reconstruct_antipode)

    p = sub.add_parser('list-registry', help="List built-in examples")
    p.add_argument('--json', action='store_true', help="Emit a JSON list")
    p.add_argument('-v', '--verbose', action='count', default=0)
    p.add_argument('--quiet', action='store_true')
    p.set_defaults(func=cmd_list_registry)
    return parser


def _emit(args, report: Report):
    data = report.to_dict()
    data['command'] = {'name': args.command, 'field_override': str(args.field) if args.field else None,
                       'inputs': [x for x in (getattr(args, 'input', None), getattr(args, 'hopf', None),
                                              getattr(args, 'sub', None)) if x]}
    text = schema.dump_json(data, args.out)
    if not args.out:
        print(text)
    if not args.quiet:
        print(report.summary(), file=sys.stderr if not args.out else sys.stdout)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(name)s:%(levelname)s:%(message)s')
    logger = logging.getLogger(__name__)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except InputError as e:
        logger.error("Invalid input: {}".format(e))
        return EXIT_INPUT
    except DepthTwoError as e:
        logger.error("{} failed: {}".format(args.command, e))
        return EXIT_FAILED
    except Exception:
        logger.exception("{} stopped on an unexpected error".format(args.command))
        return EXIT_FAILED
    if report is None:
        return EXIT_OK
    logger.info("{} finished in {:.3f}s".format(args.command, time.perf_counter() - start))
    try:
        _emit(args, report)
    except OSError as e:
        logger.error("Cannot write report: {}".format(e))
        return EXIT_INPUT
    if report.verdicts.get('reconstructed') is False:
        return EXIT_FAILED
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == '__main__':
    raise SystemExit(main())
