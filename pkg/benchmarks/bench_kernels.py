"""Time the pure-Python kernels against the compiled ones.

    python3 benchmarks/bench_kernels.py [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import timeit

from carlitz import _kernels
from carlitz._kernels import _pure
from carlitz.ffcore import FieldSpec
from carlitz.linalg import _tables


def _cases(rng):
    tabs = _tables(FieldSpec(2, 2, 2).big)
    for p, size in ((3, 100), (3, 200), (65521, 120)):
        M = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        yield f"rref mod {p}, {size}x{size}", "rref_modp", (M, size, p)
    M = [[rng.randrange(16) for _ in range(80)] for _ in range(80)]
    yield "rref over GF(16), 80x80", "rref_table", (M, 80, *tabs)
    for p, n in ((3, 2000), (65521, 2000)):
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        yield f"conv mod {p}, length {n}", "conv_modp", (a, b, p)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _kernels.native_available():
        print("compiled kernels are not built; only the pure timings are shown")
    _native = _kernels._native
    print(f"{'case':32s} {'pure (s)':>10s} {'native (s)':>11s} {'speedup':>8s}")
    for label, name, call_args in _cases(random.Random(0)):
        t_pure = min(timeit.repeat(lambda: getattr(_pure, name)(*call_args), number=1, repeat=args.repeat))
        if _native is None:
            print(f"{label:32s} {t_pure:10.4f}")
            continue
        assert getattr(_native, name)(*call_args) == getattr(_pure, name)(*call_args)
        t_nat = min(timeit.repeat(lambda: getattr(_native, name)(*call_args), number=1, repeat=args.repeat))
        print(f"{label:32s} {t_pure:10.4f} {t_nat:11.4f} {t_pure / t_nat:7.1f}x")


if __name__ == "__main__":
    main()
