"""Compare the compiled kernels against the interpreted / numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both paths live in nlhorn._kernels; the compiled ones are built here directly,
so the env flag does not need to be toggled between runs.
"""

import argparse
import time

import numpy as np

from nlhorn import _kernels
from nlhorn.inequalities import enumerate_extended
from nlhorn.partitions import partitions_up_to


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def lr_cases():
    # (lam, mu, nu) with sizable LR fillings
    shapes = [
        ((6, 5, 4, 3, 2, 1), (3, 2, 1), (5, 4, 3, 2, 1)),
        ((7, 5, 4, 2, 1), (4, 2, 1), (5, 3, 2, 1, 1)),
        ((8, 7, 6, 5, 4, 3, 2, 1), (4, 3, 2, 1), (6, 5, 4, 4, 3, 2, 1, 1)),
        ((8, 6, 4, 2), (4, 3, 1), (6, 4, 2)),
        ((6, 6, 4, 4, 2, 2), (4, 3, 2, 1), (5, 4, 3, 2)),
    ]
    out = []
    for lam, mu, nu in shapes:
        outer = np.asarray(lam, dtype=np.int64)
        inner = np.zeros(len(lam), dtype=np.int64)
        inner[: len(mu)] = mu
        out.append((outer, inner, np.asarray(nu, dtype=np.int64)))
    return out


def slack_case(n=3, max_size=8):
    coeffs = enumerate_extended(n).matrix()
    parts = [np.asarray(p + (0,) * (n - len(p)), dtype=np.int64) for p in partitions_up_to(n, max_size)]
    m = len(parts)
    idx = np.indices((m, m, m)).reshape(3, -1).T
    table = np.stack(parts)
    points = np.concatenate([table[idx[:, 0]], table[idx[:, 1]], table[idx[:, 2]]], axis=1)
    return np.ascontiguousarray(coeffs), np.ascontiguousarray(points)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _kernels.HAS_NUMBA:
        print("numba unavailable or disabled; only the fallback is timed")
    from numba import njit

    lr_jit = njit(_kernels._lr_count_py)
    slack_jit = njit(_kernels._min_slack_py)

    cases = lr_cases()
    for c in cases:  # warm up compilation
        lr_jit(*c, 0)
    t_py, r_py = _best(lambda: [_kernels._lr_count_py(*c, 0) for c in cases], args.repeat)
    t_jit, r_jit = _best(lambda: [lr_jit(*c, 0) for c in cases], args.repeat)
    assert r_py == r_jit, (r_py, r_jit)
    print(f"lr_count   coefficients={r_py}")
    print(f"  python {t_py * 1e3:9.2f} ms   numba {t_jit * 1e3:9.2f} ms   speedup {t_py / t_jit:6.1f}x")

    coeffs, points = slack_case()
    slack_jit(coeffs, points[:10])
    t_np, s_np = _best(lambda: _kernels._min_slack_np(coeffs, points), args.repeat)
    t_jit, s_jit = _best(lambda: slack_jit(coeffs, points), args.repeat)
    assert np.array_equal(s_np, s_jit)
    print(f"min_slack  {coeffs.shape[0]} vectors x {points.shape[0]} points")
    print(f"  numpy  {t_np * 1e3:9.2f} ms   numba {t_jit * 1e3:9.2f} ms   speedup {t_np / t_jit:6.1f}x")


if __name__ == "__main__":
    main()
