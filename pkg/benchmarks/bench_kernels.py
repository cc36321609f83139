"""Compare the compiled and pure-Python series kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is timed with ``timeit`` on both backends; results must agree
bit for bit, and the script exits 1 if they do not.
"""

import argparse
import sys
import timeit

from dualhyp import _kernels_py

try:
    from dualhyp import _kernels
except ImportError:
    _kernels = None

WORKLOADS = {
    # name: (callable name, args)
    "0F0 x=1+2eps": ("series_sum", ([], [], [], 1.0, 2.0, 1e-12, 10_000, -1, 0.0)),
    "2F1 x=0.75": ("series_sum", ([(0.7, 1.0), (1.2, 0.0)], [(1.9, -0.5)], [], 0.75, 0.3,
                                  1e-12, 10_000, -1, 0.75)),
    "3F2 weighted": ("series_sum", ([(0.5, 1.0), (1.5, 0.0), (2.0, 0.2)],
                                    [(1.3, 0.0), (2.7, 1.0)], [(0.0, 0.0), (1.0, 0.5)],
                                    -0.7, 1.0, 1e-12, 10_000, -1, 0.7)),
    "1F1 x=-20": ("series_sum", ([(0.5, 1.0)], [(2.5, 0.0)], [], -20.0, 0.0,
                                 1e-12, 10_000, -1, 0.0)),
    "boundary 2F1 1e5 terms": ("partial_sums", ([(0.5, 0.0), (0.5, 0.0)], [(2.0, 0.0)],
                                                1.0, 0.0, [100_000])),
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    ns = parser.parse_args(argv)
    if _kernels is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")
        return 1
    print(f"{'workload':<26}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    ok = True
    for name, (fn, args) in WORKLOADS.items():
        f_py = getattr(_kernels_py, fn)
        f_cy = getattr(_kernels, fn)
        ok = ok and f_py(*args) == f_cy(*args)
        number = 20 if fn == "series_sum" else 1
        t_py = min(timeit.repeat(lambda: f_py(*args), number=number, repeat=ns.repeat)) / number
        t_cy = min(timeit.repeat(lambda: f_cy(*args), number=number, repeat=ns.repeat)) / number
        print(f"{name:<26}{t_py:>12.3e}{t_cy:>12.3e}{t_py / t_cy:>9.1f}x")
    print("results identical" if ok else "RESULTS DIFFER")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
