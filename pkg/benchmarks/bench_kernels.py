"""Compare the compiled and pure-Python MCFE search kernels.

    python benchmarks/bench_kernels.py --max-den 300 --repeat 3
"""
from __future__ import annotations

import argparse
import random
import time
from math import gcd

from fibersurf._mcfe_py import mcfe_search as search_py
from fibersurf.contfrac import scfe
from fibersurf.kernels import mcfe_search_compiled


def workloads(max_den: int, seed: int) -> dict[str, list[tuple[int, ...]]]:
    small = [scfe(f"{p}/{q}") for q in range(2, max_den + 1) for p in range(1, q) if gcd(p, q) == 1]
    rng = random.Random(seed)
    long_runs = []
    for _ in range(200):
        # alternating unit-heavy expansions have the most minimal rewrites
        n = rng.randint(12, 20)
        s = rng.choice((1, -1))
        long_runs.append(tuple(s * (-1) ** i * rng.choice((1, 1, 2, 3)) for i in range(n - 1)) + (s * (-1) ** (n - 1) * 2,))
    return {f"all p/q, q <= {max_den}": small, "long alternating": long_runs}


def timed(fn, inputs, repeat: int) -> tuple[float, int]:
    best = float("inf")
    count = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        count = sum(len(fn(c)) for c in inputs)
        best = min(best, time.perf_counter() - t0)
    return best, count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-den", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if mcfe_search_compiled is None:
        print("compiled kernel not built; only the Python kernel is timed")
    for name, inputs in workloads(args.max_den, args.seed).items():
        t_py, n_py = timed(search_py, inputs, args.repeat)
        line = f"{name:28s} inputs={len(inputs):6d} results={n_py:8d}  python {t_py * 1e3:9.1f} ms"
        if mcfe_search_compiled is not None:
            t_c, n_c = timed(mcfe_search_compiled, inputs, args.repeat)
            if n_c != n_py:
                raise SystemExit(f"kernels disagree on {name}: {n_c} vs {n_py} results")
            line += f"  cython {t_c * 1e3:9.1f} ms  speedup {t_py / t_c:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
