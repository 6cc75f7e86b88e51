#!/usr/bin/env python3
"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--size N] [--repeat R]
"""

import argparse
import importlib
import timeit

import numpy as np

from mnesor import _kernels_py, kernels
from mnesor.algebra import check, discrete_instance

KERNEL_NAMES = ("to_log", "to_linear", "scale", "power", "complement", "join", "meet",
                "max_abs_diff", "ck_gap_sup")


def cases(impl, logs, other):
    return {
        "to_linear": lambda: impl.to_linear(logs),
        "scale": lambda: impl.scale(logs, 0.37),
        "complement": lambda: impl.complement(logs, 0.4),
        "join": lambda: impl.join(logs, other),
        "max_abs_diff": lambda: impl.max_abs_diff(logs, other),
        "ck_gap_sup(100001)": lambda: impl.ck_gap_sup(0.4, 100_001),
        "small complement (n=6)": lambda: impl.complement(logs[:6], 0.4),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=1_000_000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    rng = np.random.default_rng(0)
    logs = np.log(rng.random(args.size))
    other = np.log(rng.random(args.size))

    impls = {"python": _kernels_py}
    try:
        impls["cython"] = importlib.import_module("mnesor._kernels")
    except ImportError:
        print("compiled extension not built; timing the fallback only")

    timings = {}
    for name, impl in impls.items():
        for label, fn in cases(impl, logs, other).items():
            number = 2000 if label.startswith("small") else 3
            best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            timings.setdefault(label, {})[name] = best

    for name, impl in impls.items():
        # route the library through this backend for an end-to-end law check
        saved = {k: getattr(kernels, k) for k in KERNEL_NAMES}
        for k in KERNEL_NAMES:
            setattr(kernels, k, getattr(impl, k))
        try:
            best = min(timeit.repeat(lambda: check(discrete_instance(), cases=100, seed=1),
                                     number=1, repeat=max(1, args.repeat // 2)))
        finally:
            for k, v in saved.items():
                setattr(kernels, k, v)
        timings.setdefault("check discrete x100", {})[name] = best

    print(f"{'kernel':<24}" + "".join(f"{n:>14}" for n in impls) + ("     speedup" if len(impls) > 1 else ""))
    for label, row in timings.items():
        line = f"{label:<24}" + "".join(f"{row[n] * 1e6:>11.1f} us" for n in impls)
        if len(impls) > 1:
            line += f"{row['python'] / row['cython']:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
