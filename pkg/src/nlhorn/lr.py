"""Littlewood-Richardson coefficients: exact counts and memoized positivity."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _kernels
from .partitions import Partition, contains, partitions_inside

# Unbounded by default; set_cache_limit() installs a cap.
_COEF: dict[tuple, int] = {}
_POS: dict[tuple, bool] = {}
_SUPPORT: dict[tuple, dict] = {}
_CACHE_LIMIT: int | None = None


def set_cache_limit(limit: int | None) -> None:
    """Cap each LR cache at ``limit`` entries (``None`` = unbounded)."""
    global _CACHE_LIMIT
    _CACHE_LIMIT = limit
    clear_cache()


def clear_cache() -> None:
    _COEF.clear()
    _POS.clear()
    _SUPPORT.clear()


def cache_info() -> dict[str, int]:
    return {"coefficients": len(_COEF), "positivity": len(_POS)}


def _store(cache: dict, key, value) -> None:
    if _CACHE_LIMIT is not None and len(cache) >= _CACHE_LIMIT:
        cache.clear()
    cache[key] = value


def _key(mu, nu, lam):
    mu, nu, lam = tuple(Partition(mu)), tuple(Partition(nu)), tuple(Partition(lam))
    if nu < mu:
        mu, nu = nu, mu
    return mu, nu, lam


def _compatible(mu, nu, lam) -> bool:
    return sum(lam) == sum(mu) + sum(nu) and contains(lam, mu) and contains(lam, nu)


def _count(mu, nu, lam, limit: int) -> int:
    # fill lam/mu with content nu; the larger of the two as mu means fewer cells
    if sum(nu) > sum(mu):
        mu, nu = nu, mu
    outer = np.asarray(lam, dtype=np.int64)
    inner = np.zeros(len(lam), dtype=np.int64)
    inner[: len(mu)] = mu
    content = np.asarray(nu, dtype=np.int64)
    return int(_kernels.lr_count(outer, inner, content, limit))


def lr_coefficient(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """c^lam_{mu,nu}: LR skew tableaux of shape lam/mu and content nu."""
    key = _key(mu, nu, lam)
    hit = _COEF.get(key)
    if hit is not None:
        return hit
    small, big, lam = key
    if not _compatible(small, big, lam):
        return 0
    value = _count(small, big, lam, 0)
    _store(_COEF, key, value)
    _store(_POS, key, value > 0)
    return value


def lr_positive(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether c^lam_{mu,nu} > 0; stops at the first LR tableau found."""
    key = _key(mu, nu, lam)
    hit = _POS.get(key)
    if hit is not None:
        return hit
    small, big, lam = key
    if not _compatible(small, big, lam):
        return False
    value = _count(small, big, lam, 1) > 0
    _store(_POS, key, value)
    return value


def lr_positive_horn(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> bool:
    """Decide c^lam_{mu,nu} > 0 through the Horn inequalities alone.

    The inequalities at level n are indexed by triples whose own positivity
    is decided by this same function one level down, so no tableau is ever
    built.  Requires ``|lam| == |mu| + |nu|``.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if lam.size != mu.size + nu.size:
        raise ValueError("lr_positive_horn needs |lam| = |mu| + |nu|")
    n = max(len(mu), len(nu), len(lam), 1)
    return _horn_holds(mu, nu, lam, n)


def _horn_holds(mu, nu, lam, n) -> bool:
    from .inequalities import horn_triples

    for I, J, K in _horn_index_triples(n, horn_triples):
        if sum(lam.part(k) for k in K) > sum(mu.part(i) for i in I) + sum(nu.part(j) for j in J):
            return False
    return True


_HORN_BY_N: dict[int, list] = {}


def _horn_index_triples(n, horn_triples):
    got = _HORN_BY_N.get(n)
    if got is None:
        got = [
            (t.I.elems, t.J.elems, t.K.elems)
            for t in horn_triples(n, positive=_tau_positive_horn)
        ]
        _HORN_BY_N[n] = got
    return got


def _tau_positive_horn(a, b, c) -> bool:
    # positivity of a tau-triple, recursively through Horn; size mismatch is 0
    a, b, c = Partition(a), Partition(b), Partition(c)
    if c.size != a.size + b.size:
        return False
    return lr_positive_horn(a, b, c)


def lr_support(lam: Sequence[int]) -> dict[Partition, frozenset[Partition]]:
    """All pairs (alpha, beta) with c^lam_{alpha,beta} > 0, as alpha -> {beta}."""
    lam = tuple(Partition(lam))
    hit = _SUPPORT.get(lam)
    if hit is not None:
        return hit
    out = {}
    total = sum(lam)
    for alpha in partitions_inside(lam):
        betas = frozenset(
            beta
            for beta in partitions_inside(lam, total - alpha.size)
            if lr_positive(alpha, beta, lam)
        )
        if betas:
            out[alpha] = betas
    _store(_SUPPORT, lam, out)
    return out
