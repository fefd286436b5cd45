"""Exact redundancy filtering for homogeneous inequality systems.

Every system handled here is a cone ``{x : g . x >= 0}``, so ``c . x >= 0`` is
implied by the generators ``g`` iff ``c`` is a non-negative combination of
them (Farkas).  That feasibility question is settled by a phase-one simplex
over :class:`fractions.Fraction`, with Bland's rule against cycling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ScaleGuardError
from .inequalities import InequalityRecord, InequalitySet

MAX_N = 3


def partition_inequalities(n: int) -> list[tuple[int, ...]]:
    """``x_i - x_{i+1} >= 0`` and ``x_n >= 0`` for each of the three blocks."""
    out = []
    for block in range(3):
        for i in range(n):
            v = [0] * (3 * n)
            v[block * n + i] = 1
            if i + 1 < n:
                v[block * n + i + 1] = -1
            out.append(tuple(v))
    return out


def in_cone(target: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Whether ``target = sum y_g g`` for some ``y >= 0`` (exact)."""
    m = len(target)
    k = len(generators)
    if not any(target):
        return True
    if k == 0:
        return False
    # rows: equality constraints, made to have non-negative right-hand side
    rows = []
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        rows.append([Fraction(sign * g[i]) for g in generators] + [Fraction(sign * target[i])])
    # columns 0..k-1 are y, k..k+m-1 artificials; basis starts on artificials
    width = k + m
    tab = [r[:k] + [Fraction(int(j == i)) for j in range(m)] + [r[k]] for i, r in enumerate(rows)]
    basis = list(range(k, k + m))
    # objective: minimize sum of artificials, expressed in reduced-cost form
    cost = [Fraction(0)] * (width + 1)
    for r in tab:
        for j in range(width + 1):
            if j < k or j == width:
                cost[j] -= r[j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i, r in enumerate(tab):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded below cannot happen for a phase-one objective
            raise ArithmeticError("phase-one simplex reported unboundedness")
        piv = tab[leave][enter]
        prow = [x / piv for x in tab[leave]]
        tab[leave] = prow
        for i, r in enumerate(tab):
            if i != leave and r[enter] != 0:
                f = r[enter]
                tab[i] = [a - f * b for a, b in zip(r, prow)]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * b for a, b in zip(cost, prow)]
        basis[leave] = enter
    return cost[width] == 0


def is_redundant(vec: Sequence[int], others: Sequence[Sequence[int]], n: int) -> bool:
    return in_cone(vec, list(others) + partition_inequalities(n))


def filter_redundant(ineqs: InequalitySet, *, max_n: int = MAX_N) -> InequalitySet:
    """Drop every inequality implied by the survivors plus the partition inequalities.

    Records are visited in canonical (lexicographic) order; a record is
    removed when the records still standing, other than itself, imply it.
    """
    if ineqs.n > max_n:
        raise ScaleGuardError(f"redundancy filtering is limited to n <= {max_n}")
    seen: dict[tuple[int, ...], InequalityRecord] = {}
    for rec in ineqs.records:
        seen.setdefault(tuple(rec.coeffs), rec)
    alive = [v for v in sorted(seen) if any(v)]
    keep = list(alive)
    for vec in alive:
        others = [w for w in keep if w != vec]
        if is_redundant(vec, others, ineqs.n):
            keep.remove(vec)
    return InequalitySet(ineqs.n, ineqs.family, [seen[v] for v in keep])
