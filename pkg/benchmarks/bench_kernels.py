"""Time each hot kernel on its numba and numpy paths.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

The numba kernels are compiled (or loaded from cache) before timing.
"""
from __future__ import annotations

import argparse
import json
import platform
import timeit

import numpy as np

from magic_rir import _kernels as K


def cases(rng):
    """Inputs sized like one desk training step."""
    xp = rng.standard_normal((4, 32, 34, 34))
    cols = K.im2col_np(xp, 3, 3, 1, 1, 32, 32)
    values = rng.standard_normal((8 * 64, 16))
    cells = rng.integers(0, 32 * 32, 8 * 64)
    n = 60_000  # image sources at order 12 for two ears, roughly
    index = rng.integers(0, 4096, n)
    frac = rng.uniform(size=n)
    amp = rng.standard_normal(n)
    return {
        "im2col": (K.im2col_nb, K.im2col_np, (xp, 3, 3, 1, 1, 32, 32)),
        "col2im": (K.col2im_nb, K.col2im_np, (cols, 34, 34, 1, 1)),
        "scatter_max": (K.scatter_max_nb, K.scatter_max_np, (values, cells, 32 * 32)),
        "accumulate_impulses": (K.accumulate_impulses_nb, K.accumulate_impulses_np, (index, frac, amp, 4096)),
    }


def best_time(fn, args, repeat):
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05 and number < 10_000:
        number *= 2
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args(argv)
    if not K._HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(0)
    rows = []
    print(f"{'kernel':<22}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}{'identical':>11}")
    for name, (nb, npy, a) in cases(rng).items():
        same = np.array_equal(np.asarray(nb(*a)[0] if name == "scatter_max" else nb(*a)),
                              np.asarray(npy(*a)[0] if name == "scatter_max" else npy(*a)))
        t_nb, t_np = best_time(nb, a, args.repeat), best_time(npy, a, args.repeat)
        rows.append({"kernel": name, "numba_s": t_nb, "numpy_s": t_np, "speedup": t_np / t_nb, "identical": same})
        print(f"{name:<22}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>10.2f}{str(same):>11}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"machine": platform.platform(), "python": platform.python_version(), "results": rows}, fh,
                      indent=1)


if __name__ == "__main__":
    main()
