import os
import subprocess
import sys

import numpy as np
import pytest

from nlhorn import _kernels
from nlhorn.inequalities import enumerate_extended

from oracles import lr_brute

CASES = [
    ((3, 2, 1), (2, 1), (2, 1)),
    ((4, 2, 1), (2, 1), (2, 1, 1)),
    ((5, 3, 2), (3, 1), (3, 2, 1)),
    ((2,), (1,), (1,)),
    ((1, 1), (1,), (1,)),
]


def _arrays(lam, mu, nu):
    outer = np.asarray(lam, dtype=np.int64)
    inner = np.zeros(len(lam), dtype=np.int64)
    inner[: len(mu)] = mu
    return outer, inner, np.asarray(nu, dtype=np.int64)


@pytest.mark.parametrize("lam,mu,nu", CASES)
def test_lr_count_paths_agree(lam, mu, nu):
    args = _arrays(lam, mu, nu)
    want = lr_brute(mu, nu, lam)
    assert _kernels._lr_count_py(*args, 0) == want
    assert _kernels.lr_count(*args, 0) == want
    if want:
        assert _kernels.lr_count(*args, 1) == 1


def test_min_slack_paths_agree():
    coeffs = enumerate_extended(2).matrix()
    rng = np.random.default_rng(3)
    points = rng.integers(0, 6, size=(200, coeffs.shape[1])).astype(np.int64)
    ref = _kernels._min_slack_np(coeffs, points)
    assert np.array_equal(_kernels._min_slack_py(coeffs, points), ref)
    assert np.array_equal(_kernels.min_slack(coeffs, points), ref)


def test_min_slack_empty_matrix():
    out = _kernels._min_slack_np(np.zeros((0, 3), dtype=np.int64), np.zeros((2, 3), dtype=np.int64))
    assert (out == np.iinfo(np.int64).max).all()


def test_env_flag_selects_fallback():
    env = dict(os.environ, NLHORN_DISABLE_NUMBA="1")
    code = "from nlhorn import _kernels as k; print(k.BACKEND, k.lr_count is k._lr_count_py)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba disabled")
def test_numba_backend_active():
    assert _kernels.BACKEND == "numba"
