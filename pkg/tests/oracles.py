"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here shares code with the package: LR coefficients are counted by
trying every filling of the skew shape, NL numbers by the defining triple sum.
"""

import itertools


def _cells(outer, inner):
    inner = list(inner) + [0] * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def lr_brute(mu, nu, lam):
    """Fillings of lam/mu with content nu: rows weak, columns strict, reverse word lattice."""
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    cs = _cells(lam, mu)
    if not cs:
        return 1
    k = len(nu)
    want = sorted(v for i, m in enumerate(nu) for v in [i + 1] * m)
    total = 0
    for vals in itertools.product(range(1, k + 1), repeat=len(cs)):
        if sorted(vals) != want:
            continue
        T = dict(zip(cs, vals))
        ok = all(
            not ((r, c + 1) in T and T[(r, c + 1)] < v) and not ((r + 1, c) in T and T[(r + 1, c)] <= v)
            for (r, c), v in T.items()
        )
        if not ok:
            continue
        seen = [0] * (k + 2)
        for r in range(len(lam)):
            for c in reversed(range(lam[r])):
                if (r, c) in T:
                    v = T[(r, c)]
                    seen[v] += 1
                    if v > 1 and seen[v] > seen[v - 1]:
                        ok = False
        total += ok
    return total


def _inside(rows, cols):
    for p in itertools.product(range(cols, -1, -1), repeat=rows):
        if all(p[i] >= p[i + 1] for i in range(len(p) - 1)):
            yield tuple(x for x in p if x)


def nl_brute(mu, nu, lam):
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    rows = max(len(mu), len(nu), len(lam), 1)
    cols = max(mu + nu + lam + (0,))
    shapes = list(_inside(rows, cols))
    total = 0
    for a in shapes:
        for b in shapes:
            x = lr_brute(a, b, mu)
            if not x:
                continue
            for g in shapes:
                y = lr_brute(a, g, nu)
                if y:
                    total += x * y * lr_brute(b, g, lam)
    return total


def partitions_small(max_parts, max_size):
    """Every partition with at most max_parts parts and size <= max_size."""
    out = []
    for s in range(max_size + 1):
        for p in itertools.product(range(s + 1), repeat=max_parts):
            if sum(p) == s and all(p[i] >= p[i + 1] for i in range(max_parts - 1)):
                out.append(tuple(x for x in p if x))
    return out
