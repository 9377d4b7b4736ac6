#!/usr/bin/env python3
"""Benchmark the compiled move kernel against the pure-Python fallback.

Times the flat-path kernel on random Lusztig vectors and random
word-change paths, then an end-to-end crystal generation with each
backend.  Run after an editable install:

    python benchmarks/bench_moves.py
"""

import random
import time
from array import array

from mvcrystal.kernels import _moves_py

try:
    from mvcrystal.kernels import _moves_c
except ImportError:
    _moves_c = None


def random_path(m, nmoves, rng):
    flat = array("l")
    for _ in range(nmoves):
        if rng.random() < 0.5:
            flat.extend((2, rng.randrange(m - 1)))
        else:
            flat.extend((3, rng.randrange(m - 2)))
    return flat


def bench_kernel(impl, m=36, nmoves=64, vectors=20000, seed=7):
    rng = random.Random(seed)
    path = random_path(m, nmoves, rng)
    data = [array("l", [rng.randrange(6) for _ in range(m)]) for _ in range(vectors)]
    t0 = time.perf_counter()
    for v in data:
        impl.apply_moves_flat(v, path)
    dt = time.perf_counter() - t0
    return vectors * nmoves / dt, dt


def bench_end_to_end(pure_python):
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from mvcrystal import root_datum, generate_crystal, change_word, all_words_w0\n"
        "from mvcrystal.kernels import BACKEND\n"
        "d = root_datum('A3'); lam = d.coweight((3, 4, 3))\n"
        "t0 = time.perf_counter()\n"
        "g = generate_crystal(d, lam, with_strata=False)\n"
        "t1 = time.perf_counter()\n"
        "for node in g.nodes:\n"
        "    for word in all_words_w0(d):\n"
        "        change_word(node.datum, word)\n"
        "t2 = time.perf_counter()\n"
        "print(f'  {BACKEND:8s} generate {g.node_count()} nodes: {t1-t0:.3f}s;'\n"
        "      f' convert x16 words: {t2-t1:.3f}s')\n"
    )
    env = dict(os.environ)
    if pure_python:
        env["MVC_PURE_PYTHON"] = "1"
    else:
        env.pop("MVC_PURE_PYTHON", None)
    sys.stdout.flush()
    subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    print("kernel micro-benchmark (moves applied per second):")
    rate, dt = bench_kernel(_moves_py)
    print(f"  python  {rate:12.0f} moves/s  ({dt:.3f}s)")
    if _moves_c is not None:
        crate, cdt = bench_kernel(_moves_c)
        print(f"  cython  {crate:12.0f} moves/s  ({cdt:.3f}s)  speedup x{crate / rate:.1f}")
    else:
        print("  cython  (not built)")
    print("end-to-end, A3 lambda=(3,4,3):")
    bench_end_to_end(pure_python=True)
    if _moves_c is not None:
        bench_end_to_end(pure_python=False)


if __name__ == "__main__":
    main()
