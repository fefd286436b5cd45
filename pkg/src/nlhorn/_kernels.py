"""Hot inner loops: LR tableau counting and batched inequality slack.

Each kernel is written once as plain Python over int64 arrays.  When numba is
importable and ``NLHORN_DISABLE_NUMBA`` is unset (or "0"), the module-level
names are bound to the ``@njit`` compiled versions; otherwise they fall back to
the interpreted loop (LR counting) and to a numpy matmul (slack).
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("NLHORN_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def _lr_count_py(outer, inner, content, limit):
    """Count LR fillings of ``outer/inner`` with the given content.

    Cells are visited row by row (top to bottom), right to left within a row,
    which is exactly the reverse reading order, so the lattice condition can
    be maintained incrementally.  Stops once ``limit`` fillings are found
    (``limit <= 0`` means count everything).
    """
    nrows = outer.shape[0]
    k = content.shape[0]
    ncells = 0
    for r in range(nrows):
        ncells += outer[r] - inner[r]
    if ncells == 0:
        return 1

    width = outer[0]
    grid = np.full((nrows, width), -1, dtype=np.int64)
    cell_row = np.empty(ncells, dtype=np.int64)
    right = np.full(ncells, -1, dtype=np.int64)
    above = np.full(ncells, -1, dtype=np.int64)
    idx = 0
    for r in range(nrows):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            grid[r, c] = idx
            cell_row[idx] = r
            if c + 1 < outer[r]:
                right[idx] = grid[r, c + 1]
            if r > 0 and grid[r - 1, c] >= 0:
                above[idx] = grid[r - 1, c]
            idx += 1

    vals = np.zeros(ncells, dtype=np.int64)
    counts = np.zeros(k + 1, dtype=np.int64)
    total = 0
    pos = 0
    vals[0] = 0
    while pos >= 0:
        # candidate range for the current cell
        lo = 1
        a = above[pos]
        if a >= 0:
            lo = vals[a] + 1
        hi = cell_row[pos] + 1
        if hi > k:
            hi = k
        rt = right[pos]
        if rt >= 0 and vals[rt] < hi:
            hi = vals[rt]
        v = vals[pos] + 1
        if v < lo:
            v = lo
        placed = False
        while v <= hi:
            if counts[v] < content[v - 1] and (v == 1 or counts[v] < counts[v - 1]):
                placed = True
                break
            v += 1
        if placed:
            vals[pos] = v
            counts[v] += 1
            if pos == ncells - 1:
                total += 1
                if limit > 0 and total >= limit:
                    return total
                counts[v] -= 1
            else:
                pos += 1
                vals[pos] = 0
        else:
            vals[pos] = 0
            pos -= 1
            if pos >= 0:
                counts[vals[pos]] -= 1
    return total


def _min_slack_py(coeffs, points):
    """Row-wise minimum of ``points @ coeffs.T`` (loop form for the JIT)."""
    npts = points.shape[0]
    nvec = coeffs.shape[0]
    dim = coeffs.shape[1]
    out = np.empty(npts, dtype=np.int64)
    for p in range(npts):
        best = np.iinfo(np.int64).max
        for q in range(nvec):
            s = 0
            for j in range(dim):
                s += coeffs[q, j] * points[p, j]
            if s < best:
                best = s
        out[p] = best
    return out


def _min_slack_np(coeffs, points):
    if coeffs.shape[0] == 0:
        return np.full(points.shape[0], np.iinfo(np.int64).max, dtype=np.int64)
    return (points @ coeffs.T).min(axis=1)


if HAS_NUMBA:
    lr_count = njit(cache=True, nogil=True)(_lr_count_py)
    min_slack = njit(cache=True, nogil=True)(_min_slack_py)
else:
    lr_count = _lr_count_py
    min_slack = _min_slack_np

BACKEND = "numba" if HAS_NUMBA else "python"
