"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times the qubit grid mask and a k = 3 and k = 4 grid search on the
five-level two-region pair. The first numba call pays compilation (or
cache load); it is timed separately as warm-up.
"""

import argparse
import time

from catalyxis import _kernels
from catalyxis.majorization import make_probvec
from catalyxis.search import grid_search, qubit_grid_mask

P = make_probvec("0.49,0.30,0.13,0.06,0.02".split(","))
Q = make_probvec("0.56,0.25,0.10,0.08,0.01".split(","))

CASES = {
    "qubit mask, 20000 points": lambda: qubit_grid_mask(P, Q, 20000),
    "grid search k=3, N=120": lambda: grid_search(P, Q, 3, 120),
    "grid search k=4, N=60": lambda: grid_search(P, Q, 4, 60),
    "grid search k=5, N=80": lambda: grid_search(P, Q, 5, 80),
}


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    results = {}
    for backend in _kernels.BACKENDS:
        _kernels.set_backend(backend)
        t0 = time.perf_counter()
        for fn in CASES.values():
            fn()
        warm = time.perf_counter() - t0
        print(f"{backend:>6} warm-up (all cases): {warm:.3f}s")
        for name, fn in CASES.items():
            results[backend, name] = best_of(fn, args.repeat)

    print(f"\n{'case':<28}{'numba':>10}{'numpy':>10}{'speedup':>10}")
    for name in CASES:
        a, b = results["numba", name], results["numpy", name]
        print(f"{name:<28}{a:>9.4f}s{b:>9.4f}s{b / a:>9.1f}x")


if __name__ == "__main__":
    main()
