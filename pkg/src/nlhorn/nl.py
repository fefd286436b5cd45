"""Newell-Littlewood numbers, the parity test and the Pieri-case constructions."""

from __future__ import annotations

from typing import Sequence

from .lr import lr_coefficient, lr_support
from .partitions import (
    Partition,
    conjugate,
    is_horizontal_strip,
    is_vertical_strip,
    meet,
    partitions_inside,
)


def _forced_sizes(mu, nu, lam):
    """Sizes of (alpha, beta, gamma) forced by LR vanishing, or None."""
    m, n, l = mu.size, nu.size, lam.size
    if (m + n + l) % 2:
        return None
    a, b, g = (m + n - l) // 2, (m + l - n) // 2, (n + l - m) // 2
    if a < 0 or b < 0 or g < 0:
        return None
    return a, b, g


def newell_littlewood(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """N_{mu,nu,lam} = sum over alpha, beta, gamma of c^mu_{a,b} c^nu_{a,g} c^lam_{b,g}."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    sizes = _forced_sizes(mu, nu, lam)
    if sizes is None:
        return 0
    a, b, g = sizes
    betas = list(partitions_inside(meet(mu, lam), b))
    gammas = list(partitions_inside(meet(nu, lam), g))
    total = 0
    for alpha in partitions_inside(meet(mu, nu), a):
        for beta in betas:
            c1 = lr_coefficient(alpha, beta, mu)
            if not c1:
                continue
            for gamma in gammas:
                c2 = lr_coefficient(alpha, gamma, nu)
                if not c2:
                    continue
                c3 = lr_coefficient(beta, gamma, lam)
                if c3:
                    total += c1 * c2 * c3
    return total


def nl_positive(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether N_{mu,nu,lam} > 0, stopping at the first nonzero summand.

    Works from the cached LR supports of mu, nu and lam, so repeated calls
    over a sweep reduce to set lookups.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    sizes = _forced_sizes(mu, nu, lam)
    if sizes is None:
        return False
    a, b, _ = sizes
    sup_mu, sup_nu, sup_lam = lr_support(mu), lr_support(nu), lr_support(lam)
    pairs_lam = [(beta, gammas) for beta, gammas in sup_lam.items() if beta.size == b]
    if not pairs_lam:
        return False
    for alpha, betas in sup_mu.items():
        if alpha.size != a:
            continue
        gammas_nu = sup_nu.get(alpha)
        if not gammas_nu:
            continue
        for beta, gammas_lam in pairs_lam:
            if beta in betas and not gammas_nu.isdisjoint(gammas_lam):
                return True
    return False


def parity_ok(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> bool:
    return (sum(mu) + sum(nu) + sum(lam)) % 2 == 0


def _pieri_k(mu, nu, p):
    total = mu.size + nu.size - p
    if p < 0 or total < 0 or total % 2:
        return None
    return total // 2


def pieri_row_positive(mu: Sequence[int], nu: Sequence[int], p: int) -> bool:
    """Whether some alpha has mu/alpha, nu/alpha horizontal strips of the balancing sizes.

    Such alpha are exactly the partitions squeezed row by row between
    ``max(mu_{i+1}, nu_{i+1})`` and ``min(mu_i, nu_i)``; every choice in those
    intervals is a partition, so only the total size has to be reachable.
    """
    mu, nu = Partition(mu), Partition(nu)
    k = _pieri_k(mu, nu, p)
    if k is None:
        return False
    length = max(len(mu), len(nu))
    lo_total = hi_total = 0
    for i in range(1, length + 1):
        lo = max(mu.part(i + 1), nu.part(i + 1))
        hi = min(mu.part(i), nu.part(i))
        if lo > hi:
            return False
        lo_total += lo
        hi_total += hi
    return lo_total <= k <= hi_total


def pieri_col_positive(mu: Sequence[int], nu: Sequence[int], p: int) -> bool:
    """Vertical-strip version; equal to ``pieri_row_positive`` on conjugates."""
    mu, nu = Partition(mu), Partition(nu)
    k = _pieri_k(mu, nu, p)
    if k is None:
        return False
    wedge = meet(mu, nu)
    if not (is_vertical_strip(mu, wedge) and is_vertical_strip(nu, wedge)):
        return False
    # alpha_i is pinned to min(mu_i, nu_i) except where mu_i = nu_i > 0,
    # where it may also drop by one
    removable = sum(1 for i in range(1, len(wedge) + 1) if mu.part(i) == nu.part(i) > 0)
    return wedge.size - removable <= k <= wedge.size


def pieri_row_witness(mu: Sequence[int], nu: Sequence[int], p: int) -> Partition | None:
    """The alpha built in the row case of the Pieri argument, or None.

    Starting from ``mu ^ nu``, delete the bottom box of each of the
    ``|mu ^ nu| - k`` rightmost columns i with ``mu'_i = nu'_i > 0``, where
    ``k = (|mu| + |nu| - p) / 2``.
    """
    mu, nu = Partition(mu), Partition(nu)
    k = _pieri_k(mu, nu, p)
    wedge = meet(mu, nu)
    if k is None or k > wedge.size:
        return None
    if not (is_horizontal_strip(mu, wedge) and is_horizontal_strip(nu, wedge)):
        return None
    mu_c, nu_c = conjugate(mu), conjugate(nu)
    cols = [c for c in range(1, len(mu_c) + 1) if mu_c.part(c) == nu_c.part(c) > 0]
    drop = wedge.size - k
    if len(cols) < drop:
        return None
    heights = list(conjugate(wedge))
    for c in cols[len(cols) - drop:]:
        heights[c - 1] -= 1
    return conjugate(heights)


def pieri_col_witness(mu: Sequence[int], nu: Sequence[int], p: int) -> Partition | None:
    """The alpha built in the column case: drop the last box of the
    ``|mu ^ nu| - k`` southernmost rows with ``mu_i = nu_i > 0``."""
    mu, nu = Partition(mu), Partition(nu)
    k = _pieri_k(mu, nu, p)
    wedge = meet(mu, nu)
    if k is None or k > wedge.size:
        return None
    if not (is_vertical_strip(mu, wedge) and is_vertical_strip(nu, wedge)):
        return None
    rows = [i for i in range(1, len(wedge) + 1) if mu.part(i) == nu.part(i) > 0]
    drop = wedge.size - k
    if len(rows) < drop:
        return None
    parts = list(wedge)
    for i in rows[len(rows) - drop:]:
        parts[i - 1] -= 1
    return Partition(parts)


def _certify(mu, nu, p, alpha, strip) -> bool:
    mu, nu, alpha = Partition(mu), Partition(nu), Partition(alpha)
    twice_mu = mu.size + p - nu.size
    twice_nu = nu.size + p - mu.size
    if twice_mu < 0 or twice_nu < 0 or twice_mu % 2 or twice_nu % 2:
        return False
    return (
        strip(mu, alpha)
        and strip(nu, alpha)
        and mu.size - alpha.size == twice_mu // 2
        and nu.size - alpha.size == twice_nu // 2
    )


def certify_row_witness(mu, nu, p, alpha) -> bool:
    """Check mu/alpha and nu/alpha are horizontal strips of the balancing sizes."""
    return _certify(mu, nu, p, alpha, is_horizontal_strip)


def certify_col_witness(mu, nu, p, alpha) -> bool:
    return _certify(mu, nu, p, alpha, is_vertical_strip)


def pieri_brute(mu: Sequence[int], nu: Sequence[int], p: int, *, column: bool = False) -> bool:
    """Generic search over every alpha inside mu ^ nu; cross-check for the above."""
    mu, nu = Partition(mu), Partition(nu)
    k = _pieri_k(mu, nu, p)
    if k is None:
        return False
    check = certify_col_witness if column else certify_row_witness
    return any(check(mu, nu, p, alpha) for alpha in partitions_inside(meet(mu, nu), k))
