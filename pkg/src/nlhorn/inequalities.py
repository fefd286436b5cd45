"""Generation and evaluation of Horn-type inequality families.

Coefficient vectors have length 3n, laid out as the mu block, then nu, then
lambda.  An inequality with vector ``v`` reads ``0 <= v . (mu | nu | lam)``.

The extended family is indexed by six subsets ``(A, A', B, B', C, C')`` of
[n] (stored in that order as ``sets``) together with a witness
``(A1, A2, B1, B2, C1, C2)``.  Sets are plain sorted int tuples internally;
:class:`ExtHornInequality` wraps them in :class:`IndexSet` at the API edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from ._parallel import ordered_map
from .lr import lr_positive
from .partitions import IndexSet, Partition, pad, tau

FAMILIES = ("horn", "extended", "weyl", "subset-sum", "variant")

Sets6 = tuple[tuple[int, ...], ...]


# --------------------------------------------------------------------------
# vectors and the S3 action


def coeff_vector(n: int, sets: Sets6) -> tuple[int, ...]:
    """The 3n coefficient vector of ``(A, A', B, B', C, C')``."""
    vec = [0] * (3 * n)
    for block in range(3):
        plus, minus = sets[2 * block], sets[2 * block + 1]
        for i in plus:
            vec[block * n + i - 1] += 1
        for i in minus:
            vec[block * n + i - 1] -= 1
    return tuple(vec)


def evaluate(coeffs: Sequence[int], mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> int:
    """Right-hand side of ``0 <= v . (mu | nu | lam)``; the inequality holds iff >= 0."""
    n = len(coeffs) // 3
    point = pad(mu, n) + pad(nu, n) + pad(lam, n)
    return sum(c * x for c, x in zip(coeffs, point))


def permute_vector(vec: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """New block j is old block ``perm[j]``."""
    n = len(vec) // 3
    return tuple(itertools.chain.from_iterable(vec[p * n:(p + 1) * n] for p in perm))


def zero_extend(vec: Sequence[int], n_new: int) -> tuple[int, ...]:
    n = len(vec) // 3
    pad_ = (0,) * (n_new - n)
    return tuple(itertools.chain.from_iterable(tuple(vec[b * n:(b + 1) * n]) + pad_ for b in range(3)))


# Group elements act on (sets, witness): new pair j = old pair block[j];
# new witness slot s = old witness slot wit[s].  Generated by the 3-cycle
# (A,B,C) <- (B,C,A) and the swap A <-> B, which must also reverse the
# witness pairs so that condition (III) is carried to itself.
_CYCLE = ((1, 2, 0), (2, 3, 4, 5, 0, 1))
_SWAP = ((1, 0, 2), (3, 2, 1, 0, 5, 4))


def _compose(g, h):
    # apply g then h
    return tuple(g[0][i] for i in h[0]), tuple(g[1][i] for i in h[1])


def _s3_elements():
    ident = ((0, 1, 2), (0, 1, 2, 3, 4, 5))
    seen = [ident]
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for gen in (_CYCLE, _SWAP):
            h = _compose(g, gen)
            if h not in seen:
                seen.append(h)
                frontier.append(h)
    return tuple(sorted(seen))


S3 = _s3_elements()


def act(g, sets: Sets6, witness: Sets6 | None) -> tuple[Sets6, Sets6 | None]:
    block, wit = g
    new_sets = tuple(x for j in block for x in (sets[2 * j], sets[2 * j + 1]))
    new_wit = None if witness is None else tuple(witness[s] for s in wit)
    return new_sets, new_wit


def s3_orbit(vec: Sequence[int]) -> set[tuple[int, ...]]:
    return {permute_vector(vec, g[0]) for g in S3}


# --------------------------------------------------------------------------
# conditions (I)-(III) and the complemented form of (III)(3)


@lru_cache(maxsize=None)
def _tau(elems: tuple[int, ...]) -> Partition:
    return tau(elems)


def _pos(big, left, right) -> bool:
    """c^{tau(big)}_{tau(left), tau(right)} > 0."""
    return lr_positive(_tau(left), _tau(right), _tau(big))


def condition_i(sets: Sets6) -> bool:
    A, Ap, B, Bp, C, Cp = sets
    return not (set(A) & set(Ap) or set(B) & set(Bp) or set(C) & set(Cp))


def condition_ii(sets: Sets6) -> bool:
    A, Ap, B, Bp, C, Cp = map(len, sets)
    return A == Bp + Cp and B == Ap + Cp and C == Ap + Bp


def condition_ii_prime(sets: Sets6) -> bool:
    A, Ap, B, Bp, C, Cp = map(len, sets)
    return A >= max(Bp, Cp) and B >= max(Ap, Cp) and C >= max(Ap, Bp)


def condition_iii1(sets: Sets6, witness: Sets6) -> bool:
    _, Ap, _, Bp, _, Cp = map(len, sets)
    A1, A2, B1, B2, C1, C2 = map(len, witness)
    return A1 == A2 == Ap and B1 == B2 == Bp and C1 == C2 == Cp


def condition_iii2(sets: Sets6, witness: Sets6) -> bool:
    _, Ap, _, Bp, _, Cp = sets
    A1, A2, B1, B2, C1, C2 = witness
    return _pos(Ap, A1, A2) and _pos(Bp, B1, B2) and _pos(Cp, C1, C2)


def condition_iii3(sets: Sets6, witness: Sets6) -> bool:
    A, _, B, _, C, _ = sets
    A1, A2, B1, B2, C1, C2 = witness
    return _pos(A, B1, C2) and _pos(B, C1, A2) and _pos(C, A1, B2)


def _shifted_complement(X, n, t):
    # X^c inside [n], then union [n+1, n+t]
    xs = set(X)
    return tuple(i for i in range(1, n + 1) if i not in xs) + tuple(range(n + 1, n + t + 1))


def condition_iii3_prime(sets: Sets6, witness: Sets6, n: int) -> bool:
    """Complemented form of (III)(3): LR positivity of ``tau(X^c u [n+1, n+|X|-m])`` triples."""
    if not condition_iii1(sets, witness):
        raise ValueError("witness cardinalities do not match (A', B', C')")
    A, Ap, B, Bp, C, Cp = sets
    A1, A2, B1, B2, C1, C2 = witness
    m_a = min(len(Bp), len(Cp))
    m_b = min(len(Ap), len(Cp))
    m_c = min(len(Ap), len(Bp))

    def ok(big, left, right, m):
        return _pos(
            _shifted_complement(big, n, len(big) - m),
            _shifted_complement(left, n, len(left) - m),
            _shifted_complement(right, n, len(right) - m),
        )

    return ok(A, B1, C2, m_a) and ok(B, C1, A2, m_b) and ok(C, A1, B2, m_c)


def is_valid(n: int, sets: Sets6, witness: Sets6) -> bool:
    """Full re-validation of (I), (II) and (III) for one tuple and witness."""
    everything = tuple(sets) + tuple(witness)
    if any(x and (min(x) < 1 or max(x) > n) for x in everything):
        return False
    return (
        condition_i(sets)
        and condition_ii(sets)
        and condition_iii1(sets, witness)
        and condition_iii2(sets, witness)
        and condition_iii3(sets, witness)
    )


# --------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class ExtHornInequality:
    n: int
    A: IndexSet
    Ap: IndexSet
    B: IndexSet
    Bp: IndexSet
    C: IndexSet
    Cp: IndexSet
    witness: tuple[IndexSet, ...]

    @classmethod
    def build(cls, n: int, sets: Sets6, witness: Sets6) -> ExtHornInequality:
        return cls(n, *(IndexSet.of(s, n) for s in sets), tuple(IndexSet.of(w, n) for w in witness))

    @property
    def sets(self) -> Sets6:
        return tuple(s.elems for s in (self.A, self.Ap, self.B, self.Bp, self.C, self.Cp))

    @property
    def witness_sets(self) -> Sets6:
        return tuple(w.elems for w in self.witness)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return coeff_vector(self.n, self.sets)

    def validate(self) -> None:
        if not is_valid(self.n, self.sets, self.witness_sets):
            raise ValueError(f"tuple {self.sets} with witness {self.witness_sets} fails (I)-(III)")


@dataclass(frozen=True)
class HornTriple:
    """One classical Horn inequality: sum_K lam <= sum_I mu + sum_J nu."""

    I: IndexSet
    J: IndexSet
    K: IndexSet
    n: int
    d: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return coeff_vector(self.n, (self.I.elems, (), self.J.elems, (), (), self.K.elems))

    def __str__(self) -> str:
        return f"horn I={self.I} J={self.J} K={self.K}"


@dataclass(frozen=True)
class WeylInstance:
    """mu_i - mu_j <= lam_k - lam_l + nu_{m-p+1} + nu_{M+p+2}."""

    n: int
    k: int
    i: int
    j: int
    l: int
    p: int

    @property
    def small(self) -> int:
        return min(self.i - self.k, self.l - self.j)

    @property
    def large(self) -> int:
        return max(self.i - self.k, self.l - self.j)

    @property
    def nu_indices(self) -> tuple[int, int]:
        return (self.small - self.p + 1, self.large + self.p + 2)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return coeff_vector(self.n, ((self.j,), (self.i,), self.nu_indices, (), (self.k,), (self.l,)))

    def __str__(self) -> str:
        return f"weyl k={self.k} i={self.i} j={self.j} l={self.l} p={self.p}"


@dataclass(frozen=True)
class SubsetSumInstance:
    """0 <= sum_X mu + sum_Y nu - sum_Y mu - sum_X nu + lam_1 + ... + lam_{|X|+|Y|}."""

    n: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    label: str = "subset-sum"

    def __post_init__(self):
        if set(self.X) & set(self.Y):
            raise ValueError("X and Y must be disjoint")

    @property
    def coeffs(self) -> tuple[int, ...]:
        top = tuple(range(1, len(self.X) + len(self.Y) + 1))
        return coeff_vector(self.n, (self.X, self.Y, self.Y, self.X, top, ()))

    def __str__(self) -> str:
        return f"{self.label} X={IndexSet.of(self.X)} Y={IndexSet.of(self.Y)}"


def triangle_instance(n: int) -> SubsetSumInstance:
    """|lam| <= |mu| + |nu| up to S3: the subset-sum case X = [n], Y = {}."""
    return SubsetSumInstance(n, tuple(range(1, n + 1)), (), label="triangle")


def wedge_instance(mu: Sequence[int], nu: Sequence[int], n: int) -> SubsetSumInstance:
    """The subset-sum instance equivalent to |mu ^ nu| >= (|mu| + |nu| - |lam|)/2 at (mu, nu)."""
    mu_p, nu_p = pad(mu, n), pad(nu, n)
    X = tuple(i for i in range(1, n + 1) if mu_p[i - 1] <= nu_p[i - 1])
    Y = tuple(i for i in range(1, n + 1) if mu_p[i - 1] > nu_p[i - 1])
    return SubsetSumInstance(n, X, Y, label="wedge")


@dataclass
class InequalityRecord:
    coeffs: tuple[int, ...]
    witness: Sets6 | None
    provenance: list[Sets6] = field(default_factory=list)
    sources: list[str] = field(default_factory=list)

    @property
    def trivial(self) -> bool:
        """Holds for every triple of partitions (no negative coefficient)."""
        return all(c >= 0 for c in self.coeffs)


@dataclass
class InequalitySet:
    n: int
    family: str
    records: list[InequalityRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def vectors(self) -> set[tuple[int, ...]]:
        return {r.coeffs for r in self.records}

    def matrix(self) -> np.ndarray:
        if not self.records:
            return np.zeros((0, 3 * self.n), dtype=np.int64)
        return np.array([r.coeffs for r in self.records], dtype=np.int64)

    def orbit_representatives(self) -> list[tuple[int, ...]]:
        """One vector (the lexicographically largest) per S3 orbit."""
        return sorted({max(s3_orbit(v)) for v in self.vectors()})


class _Collector:
    """Deduplicates by coefficient vector, keeping provenance lists."""

    def __init__(self, n: int, family: str):
        self.n = n
        self.family = family
        self.by_vec: dict[tuple[int, ...], InequalityRecord] = {}

    def add(self, vec, sets=None, witness=None, source=None):
        if not any(vec):
            return
        rec = self.by_vec.get(vec)
        if rec is None:
            rec = self.by_vec[vec] = InequalityRecord(vec, witness)
        if sets is not None and sets not in rec.provenance:
            rec.provenance.append(sets)
        if source is not None and source not in rec.sources:
            rec.sources.append(source)

    def result(self) -> InequalitySet:
        recs = [self.by_vec[v] for v in sorted(self.by_vec)]
        for r in recs:
            r.provenance.sort()
            r.sources.sort()
        return InequalitySet(self.n, self.family, recs)


# --------------------------------------------------------------------------
# classical Horn


def horn_triples(n: int, positive: Callable | None = None) -> list[HornTriple]:
    """All (I, J, K), |I| = |J| = |K| = d < n, with c^{tau(K)}_{tau(I),tau(J)} > 0.

    ``positive(a, b, c)`` decides ``c^c_{a,b} > 0``; the default is the
    tableau engine.
    """
    if positive is None:
        positive = lr_positive
    out = []
    for d in range(1, n):
        subsets = list(itertools.combinations(range(1, n + 1), d))
        for I in subsets:
            tI = _tau(I)
            for J in subsets:
                tJ = _tau(J)
                for K in subsets:
                    tK = _tau(K)
                    if tK.size != tI.size + tJ.size:
                        continue
                    if positive(tI, tJ, tK):
                        out.append(HornTriple(IndexSet(I, n), IndexSet(J, n), IndexSet(K, n), n, d))
    return out


# --------------------------------------------------------------------------
# embeddings of the named subfamilies


def embed_subfamily(instance) -> ExtHornInequality:
    """The extended-Horn tuple and witness realizing a named inequality.

    Horn triples come back in the orientation where the mu block carries the
    big set: ``(0, K, I, 0, J, 0)`` with witness ``(J, I, 0, 0, 0, 0)``.
    """
    if isinstance(instance, HornTriple):
        X, Y, Z = instance.K.elems, instance.I.elems, instance.J.elems
        sets = ((), X, Y, (), Z, ())
        witness = (Z, Y, (), (), (), ())
    elif isinstance(instance, WeylInstance):
        w = instance
        if not 1 <= w.k <= w.i < w.j <= w.l <= w.n or not 0 <= w.p <= w.small:
            raise ValueError(f"bad Weyl indices {w}")
        sets = ((w.j,), (w.i,), w.nu_indices, (), (w.k,), (w.l,))
        witness = ((w.k,), (w.i - w.k + 1,), (), (), (w.l - w.j + 1,), (w.j,))
    elif isinstance(instance, SubsetSumInstance):
        X, Y = tuple(sorted(instance.X)), tuple(sorted(instance.Y))
        top = tuple(range(1, len(X) + len(Y) + 1))
        sets = (X, Y, Y, X, top, ())
        witness = (tuple(range(1, len(Y) + 1)), Y, X, tuple(range(1, len(X) + 1)), (), ())
    else:
        raise TypeError(f"cannot embed {type(instance).__name__}")
    ineq = ExtHornInequality.build(instance.n, sets, witness)
    ineq.validate()
    return ineq


def _family_from_instances(n: int, family: str, instances: Iterable) -> InequalitySet:
    col = _Collector(n, family)
    for inst in instances:
        base = embed_subfamily(inst)
        for g in S3:
            sets, wit = act(g, base.sets, base.witness_sets)
            col.add(coeff_vector(n, sets), sets, wit, str(inst))
    return col.result()


def horn_family(n: int) -> InequalitySet:
    return _family_from_instances(n, "horn", horn_triples(n))


def weyl_instances(n: int) -> list[WeylInstance]:
    out = []
    for k, i, j, l in itertools.combinations_with_replacement(range(1, n + 1), 4):
        if not (k <= i < j <= l):
            continue
        m, M = min(i - k, l - j), max(i - k, l - j)
        for p in range(m + 1):
            if M + p + 2 <= n:
                out.append(WeylInstance(n, k, i, j, l, p))
    return out


def extended_weyl(n: int) -> InequalitySet:
    return _family_from_instances(n, "weyl", weyl_instances(n))


def subset_sum_instances(n: int) -> list[SubsetSumInstance]:
    out = []
    for labels in itertools.product((0, 1, 2), repeat=n):
        X = tuple(i for i, t in enumerate(labels, 1) if t == 1)
        Y = tuple(i for i, t in enumerate(labels, 1) if t == 2)
        out.append(SubsetSumInstance(n, X, Y))
    return out


def subset_sum(n: int) -> InequalitySet:
    return _family_from_instances(n, "subset-sum", subset_sum_instances(n))


# --------------------------------------------------------------------------
# the extended family


@lru_cache(maxsize=None)
def _disjoint_pairs(n: int) -> dict[tuple[int, int], list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """All (S, S') disjoint in [n], grouped by (|S|, |S'|)."""
    groups: dict = {}
    for labels in itertools.product((0, 1, 2), repeat=n):
        S = tuple(i for i, t in enumerate(labels, 1) if t == 1)
        Sp = tuple(i for i, t in enumerate(labels, 1) if t == 2)
        groups.setdefault((len(S), len(Sp)), []).append((S, Sp))
    return groups


@lru_cache(maxsize=None)
def _witness_pairs(n: int, Sp: tuple[int, ...]) -> tuple:
    """Pairs (X1, X2) of |Sp|-subsets of [n] with c^{tau(Sp)}_{tau(X1),tau(X2)} > 0."""
    subs = list(itertools.combinations(range(1, n + 1), len(Sp)))
    return tuple((X1, X2) for X1 in subs for X2 in subs if _pos(Sp, X1, X2))


def _tuples_ii(n: int, first: tuple | None = None):
    """Tuples meeting (I) and (II); ``first`` pins the (A, A') pair."""
    groups = _disjoint_pairs(n)
    for (a, ap) in sorted(groups):
        if first is not None and (len(first[0]), len(first[1])) != (a, ap):
            continue
        a_pairs = groups[(a, ap)] if first is None else [first]
        for (b, bp) in sorted(groups):
            c, cp = ap + bp, a - bp
            if cp < 0 or b != ap + cp or (c, cp) not in groups:
                continue
            for A, Ap in a_pairs:
                for B, Bp in groups[(b, bp)]:
                    for C, Cp in groups[(c, cp)]:
                        yield (A, Ap, B, Bp, C, Cp)


def _tuples_ii_prime(n: int):
    groups = _disjoint_pairs(n)
    pairs = [pair for key in sorted(groups) for pair in groups[key]]
    for (A, Ap), (B, Bp), (C, Cp) in itertools.product(pairs, repeat=3):
        sets = (A, Ap, B, Bp, C, Cp)
        if condition_ii_prime(sets):
            yield sets


def find_witness(n: int, sets: Sets6) -> Sets6 | None:
    """First witness satisfying (III) for a tuple already meeting (I) and (II)."""
    A, Ap, B, Bp, C, Cp = sets
    for A1, A2 in _witness_pairs(n, Ap):
        for B1, B2 in _witness_pairs(n, Bp):
            if not _pos(C, A1, B2):
                continue
            for C1, C2 in _witness_pairs(n, Cp):
                if _pos(A, B1, C2) and _pos(B, C1, A2):
                    return (A1, A2, B1, B2, C1, C2)
    return None


def _find_witness_prime(n: int, sets: Sets6) -> Sets6 | None:
    _, Ap, _, Bp, _, Cp = sets
    for A1, A2 in _witness_pairs(n, Ap):
        for B1, B2 in _witness_pairs(n, Bp):
            for C1, C2 in _witness_pairs(n, Cp):
                wit = (A1, A2, B1, B2, C1, C2)
                if condition_iii3_prime(sets, wit, n):
                    return wit
    return None


def candidate_witnesses(n: int, sets: Sets6):
    """Every witness meeting (III)(1) and (III)(2) for ``sets``."""
    _, Ap, _, Bp, _, Cp = sets
    for (A1, A2), (B1, B2), (C1, C2) in itertools.product(
        _witness_pairs(n, Ap), _witness_pairs(n, Bp), _witness_pairs(n, Cp)
    ):
        yield (A1, A2, B1, B2, C1, C2)


def _extended_shard(args):
    n, first = args
    out = []
    for sets in _tuples_ii(n, first):
        wit = find_witness(n, sets)
        if wit is not None:
            out.append((coeff_vector(n, sets), sets, wit))
    return out


def enumerate_extended(
    n: int,
    *,
    jobs: int = 1,
    audit: Callable[[Sets6, Sets6, bool, bool], None] | None = None,
) -> InequalitySet:
    """Every (A, A', B, B', C, C') over [n] meeting (I)-(III), deduplicated by vector.

    With ``audit`` set, every candidate witness of every tuple is examined
    (no early exit) and ``audit(sets, witness, iii3, iii3_prime)`` is called
    on each, which is how the complemented reformulation gets cross-checked.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    col = _Collector(n, "extended")
    if audit is not None:
        for sets in _tuples_ii(n):
            first = None
            for wit in candidate_witnesses(n, sets):
                plain = condition_iii3(sets, wit)
                audit(sets, wit, plain, condition_iii3_prime(sets, wit, n))
                if plain and first is None:
                    first = wit
            if first is not None:
                col.add(coeff_vector(n, sets), sets, first)
        return col.result()

    shards = [pair for key in sorted(_disjoint_pairs(n)) for pair in _disjoint_pairs(n)[key]]
    for chunk in ordered_map(_extended_shard, [(n, s) for s in shards], jobs):
        for vec, sets, wit in chunk:
            col.add(vec, sets, wit)
    return col.result()


def enumerate_variant(n: int) -> InequalitySet:
    """Tuples meeting (I), the relaxed cardinality bounds (II)', (III)(1)-(2) and
    the complemented (III)(3).  These are valid necessary inequalities that
    are not themselves extended Horn tuples in general."""
    col = _Collector(n, "variant")
    for sets in _tuples_ii_prime(n):
        wit = _find_witness_prime(n, sets)
        if wit is not None:
            col.add(coeff_vector(n, sets), sets, wit)
    return col.result()


def generate(n: int, family: str, *, jobs: int = 1) -> InequalitySet:
    if family == "horn":
        return horn_family(n)
    if family == "extended":
        return enumerate_extended(n, jobs=jobs)
    if family == "weyl":
        return extended_weyl(n)
    if family == "subset-sum":
        return subset_sum(n)
    if family == "variant":
        return enumerate_variant(n)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
