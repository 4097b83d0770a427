# -*- coding: utf-8 -*-

""" Benchmark quasibase search and bialgebroid construction
"""

# This source code is a part of depthtwo library: https://github.com/letuananh/depthtwo
# Copyright (c) 2021, Le Tuan Anh <tuananh.ke@gmail.com>
# license: MIT

import io
from pathlib import Path
import timeit
import cProfile
import pstats

from depthtwo import __version__
from depthtwo import registry, build_T, build_S, full_check, weak_hopf_pipeline


def benchmark_extension(name='group:S3/A3'):
    ext = registry.extension(name)
    T = build_T(ext)
    S = build_S(ext)
    full_check(T)
    full_check(S)


def benchmark_weakhopf(name='matrix:3'):
    weak_hopf_pipeline(registry.build(name))


def _timeit(benchmark_func, repeat=3):
    t = timeit.timeit(lambda: benchmark_func(), number=repeat)
    print(f"{benchmark_func.__name__} timeit ({repeat} times): {t} secs | avg: {t / repeat} secs")


def profile_it(benchmark_func, sort_fields=["cumulative", "filename", "ncalls"]):
    pr = cProfile.Profile()
    pr.enable()
    benchmark_func()
    pr.disable()
    s = io.StringIO()
    ps = pstats.Stats(pr, stream=s)
    if sort_fields:
        ps.sort_stats(*sort_fields)
    ps.print_stats()
    lines = s.getvalue().splitlines()
    return lines


if __name__ == "__main__":
    print(f"Benchmarking depthtwo version {__version__}")
    lines = profile_it(benchmark_extension)
    parent = Path(__file__).absolute().parent
    for idx, l in enumerate(lines):
        if idx >= 6 and 'depthtwo' not in l:
            continue
        print(l.replace(str(parent), parent.name))
    _timeit(benchmark_extension)
    _timeit(benchmark_weakhopf)
    print(f"Benchmarking depthtwo version {__version__}")
