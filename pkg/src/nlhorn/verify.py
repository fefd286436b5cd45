"""Exhaustive desk-scale sweeps over triples of partitions.

Three sweeps are provided: the inequality classification in both
directions, the saturation implication under dilation, and the row/column
slice where the Pieri constructions give an independent decision path.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from ._parallel import ordered_map
from .errors import ScaleGuardError
from .inequalities import InequalitySet, enumerate_extended
from .nl import (
    certify_col_witness,
    certify_row_witness,
    nl_positive,
    parity_ok,
    pieri_col_positive,
    pieri_col_witness,
    pieri_row_positive,
    pieri_row_witness,
)
from .partitions import Partition, partitions_of, partitions_up_to, scale  # noqa: F401 (re-export)

log = logging.getLogger(__name__)

MAX_N = 4
MAX_SIZE = 20
CONVENTION = "partitions with at most n parts (fewer allowed), each of size <= max_size"


@dataclass
class TripleVerdict:
    mu: Partition
    nu: Partition
    lam: Partition
    parity: bool
    nl_pos: bool
    violated: list[tuple[int, ...]] = field(default_factory=list)
    note: str = ""

    def sort_key(self):
        return (self.mu.size, self.nu.size, self.lam.size, self.mu, self.nu, self.lam, self.note)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mu"], d["nu"], d["lam"] = list(self.mu), list(self.nu), list(self.lam)
        d["violated"] = [list(v) for v in self.violated]
        return d


@dataclass
class ScanReport:
    kind: str
    n: int
    max_size: int
    family: str
    counts: dict[str, int] = field(default_factory=dict)
    counterexamples: list[TripleVerdict] = field(default_factory=list)
    breaches: list[TripleVerdict] = field(default_factory=list)
    discrepancies: list[TripleVerdict] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    wall_time: float = 0.0
    convention: str = CONVENTION

    @property
    def clean(self) -> bool:
        return not (self.counterexamples or self.breaches or self.discrepancies)

    def payload(self) -> dict:
        """Everything except timing; equal for equal inputs regardless of jobs."""
        return {
            "kind": self.kind,
            "n": self.n,
            "max_size": self.max_size,
            "family": self.family,
            "counts": dict(sorted(self.counts.items())),
            "params": dict(sorted(self.params.items())),
            "convention": self.convention,
            "counterexamples": [v.to_dict() for v in self.counterexamples],
            "breaches": [v.to_dict() for v in self.breaches],
            "discrepancies": [v.to_dict() for v in self.discrepancies],
        }

    def summary(self) -> str:
        c = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return (
            f"{self.kind} n={self.n} max_size={self.max_size} family={self.family}: {c}; "
            f"counterexamples={len(self.counterexamples)} breaches={len(self.breaches)} "
            f"discrepancies={len(self.discrepancies)} ({self.wall_time:.2f}s)"
        )


def check_guard(n: int, max_size: int, *, force: bool = False) -> None:
    if force:
        return
    if n > MAX_N or max_size > MAX_SIZE:
        raise ScaleGuardError(
            f"n={n}, max_size={max_size} exceeds the default guard (n <= {MAX_N}, "
            f"size <= {MAX_SIZE}); pass force=True / --force to run anyway"
        )


def _points(triples, n):
    arr = np.zeros((len(triples), 3 * n), dtype=np.int64)
    for r, (mu, nu, lam) in enumerate(triples):
        arr[r, : len(mu)] = mu
        arr[r, n: n + len(nu)] = nu
        arr[r, 2 * n: 2 * n + len(lam)] = lam
    return arr


def _violated(matrix: np.ndarray, point: np.ndarray) -> list[tuple[int, ...]]:
    vals = matrix @ point
    return [tuple(int(x) for x in matrix[q]) for q in np.flatnonzero(vals < 0)]


def check_triple(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int], ineqs: InequalitySet) -> TripleVerdict:
    """Parity, NL positivity and the list of violated vectors for one triple."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    n = ineqs.n
    if max(len(mu), len(nu), len(lam)) > n:
        raise ValueError(f"partitions must have at most {n} parts")
    point = _points([(mu, nu, lam)], n)[0]
    return TripleVerdict(mu, nu, lam, parity_ok(mu, nu, lam), nl_positive(mu, nu, lam), _violated(ineqs.matrix(), point))


def _signatures(max_size: int):
    return list(itertools.product(range(max_size + 1), repeat=3))


def _conjecture_shard(args):
    n, sig, matrix = args
    by_size = [list(partitions_of(s, n)) for s in sig]
    triples = list(itertools.product(*by_size))
    counts = {"triples": len(triples), "parity": 0, "nl_positive": 0, "parity_and_inequalities": 0}
    found, breaches = [], []
    if sum(sig) % 2:
        return counts, found, breaches
    counts["parity"] = len(triples)
    slack = _kernels.min_slack(matrix, _points(triples, n))
    for (mu, nu, lam), s in zip(triples, slack):
        ok = bool(s >= 0)
        pos = nl_positive(mu, nu, lam)
        counts["nl_positive"] += pos
        counts["parity_and_inequalities"] += ok
        if pos and not ok:
            point = _points([(mu, nu, lam)], n)[0]
            breaches.append(TripleVerdict(mu, nu, lam, True, True, _violated(matrix, point)))
        elif ok and not pos:
            found.append(TripleVerdict(mu, nu, lam, True, False))
    return counts, found, breaches


def _merge(report: ScanReport, results) -> None:
    for counts, found, breaches, *rest in results:
        for key, v in counts.items():
            report.counts[key] = report.counts.get(key, 0) + int(v)
        report.counterexamples.extend(found)
        report.breaches.extend(breaches)
        if rest:
            report.discrepancies.extend(rest[0])
    report.counterexamples.sort(key=TripleVerdict.sort_key)
    report.breaches.sort(key=TripleVerdict.sort_key)
    report.discrepancies.sort(key=TripleVerdict.sort_key)


def _run_shards(fn, shards, jobs, label):
    """Run shards in chunks so progress can be logged during long sweeps."""
    results = []
    step = max(1, len(shards) // 20)
    for start in range(0, len(shards), step):
        results.extend(ordered_map(fn, shards[start:start + step], jobs))
        log.info("%s: %d/%d shards", label, min(start + step, len(shards)), len(shards))
    return results


def scan_conjecture(
    n: int,
    max_size: int,
    ineqs: InequalitySet | None = None,
    *,
    jobs: int = 1,
    force: bool = False,
) -> ScanReport:
    """Sweep every triple in Par_n with part sizes <= max_size.

    Reports necessity breaches (NL-positive yet some inequality fails) and
    sufficiency counterexamples (parity and every inequality hold, NL = 0).
    """
    check_guard(n, max_size, force=force)
    t0 = time.perf_counter()
    if ineqs is None:
        ineqs = enumerate_extended(n, jobs=jobs)
    if ineqs.n != n:
        raise ValueError(f"inequality set is for n={ineqs.n}, scan requested n={n}")
    matrix = ineqs.matrix()
    report = ScanReport("conjecture", n, max_size, ineqs.family)
    shards = [(n, sig, matrix) for sig in _signatures(max_size)]
    _merge(report, _run_shards(_conjecture_shard, shards, jobs, "conjecture"))
    report.wall_time = time.perf_counter() - t0
    return report


def _saturation_shard(args):
    n, sig, t_max = args
    by_size = [list(partitions_of(s, n)) for s in sig]
    triples = list(itertools.product(*by_size))
    counts = {"triples": len(triples), "parity": 0, "nl_positive": 0, "dilated_positive": 0}
    found = []
    if sum(sig) % 2:
        return counts, found, []
    counts["parity"] = len(triples)
    for mu, nu, lam in triples:
        if nl_positive(mu, nu, lam):
            counts["nl_positive"] += 1
            continue
        for t in range(2, t_max + 1):
            if nl_positive(scale(mu, t), scale(nu, t), scale(lam, t)):
                counts["dilated_positive"] += 1
                found.append(TripleVerdict(mu, nu, lam, True, False, note=f"t={t}"))
                break
    return counts, found, []


def scan_saturation(n: int, max_size: int, t_max: int, *, jobs: int = 1, force: bool = False) -> ScanReport:
    """Look for parity triples with N(t.mu, t.nu, t.lam) > 0 but N(mu, nu, lam) = 0."""
    if t_max < 2:
        raise ValueError("t_max must be >= 2")
    check_guard(n, max_size, force=force)
    t0 = time.perf_counter()
    report = ScanReport("saturation", n, max_size, "none", params={"t_max": t_max})
    shards = [(n, sig, t_max) for sig in _signatures(max_size)]
    _merge(report, _run_shards(_saturation_shard, shards, jobs, "saturation"))
    report.wall_time = time.perf_counter() - t0
    return report


def _row_or_column(lam: Partition):
    kinds = []
    if len(lam) <= 1:
        kinds.append(("row", lam.size))
    if all(x == 1 for x in lam):
        kinds.append(("column", lam.size))
    return kinds


def _pieri_checks(triple, hypothesis_holds, nl_pos):
    """Compare the Pieri decision and construction against NL positivity."""
    issues = []
    for pos in range(3):
        special = triple[pos]
        a, b = (triple[(pos + 1) % 3], triple[(pos + 2) % 3])
        for kind, p in _row_or_column(special):
            if kind == "row":
                decided = pieri_row_positive(a, b, p)
                alpha = pieri_row_witness(a, b, p)
                certify = certify_row_witness
            else:
                decided = pieri_col_positive(a, b, p)
                alpha = pieri_col_witness(a, b, p)
                certify = certify_col_witness
            tag = f"{kind} in position {pos}"
            if decided != nl_pos:
                issues.append(f"{tag}: pieri decision {decided} != nl_positive {nl_pos}")
            if alpha is not None and not certify(a, b, p, alpha):
                issues.append(f"{tag}: witness {tuple(alpha)} fails its certificate")
            if hypothesis_holds and alpha is None:
                issues.append(f"{tag}: construction returned no witness")
    return issues


def _rowcol_shard(args):
    n, sig, matrix = args
    by_size = [list(partitions_of(s, n)) for s in sig]
    triples = [
        t for t in itertools.product(*by_size)
        if any(_row_or_column(x) for x in t)
    ]
    counts = {"triples": len(triples), "parity": 0, "nl_positive": 0, "parity_and_inequalities": 0}
    found, breaches, issues = [], [], []
    if sum(sig) % 2 or not triples:
        return counts, found, breaches, issues
    counts["parity"] = len(triples)
    slack = _kernels.min_slack(matrix, _points(triples, n))
    for (mu, nu, lam), s in zip(triples, slack):
        ok = bool(s >= 0)
        pos = nl_positive(mu, nu, lam)
        counts["nl_positive"] += pos
        counts["parity_and_inequalities"] += ok
        if pos and not ok:
            point = _points([(mu, nu, lam)], n)[0]
            breaches.append(TripleVerdict(mu, nu, lam, True, True, _violated(matrix, point)))
        elif ok and not pos:
            found.append(TripleVerdict(mu, nu, lam, True, False))
        for msg in _pieri_checks((mu, nu, lam), ok, pos):
            issues.append(TripleVerdict(mu, nu, lam, True, pos, note=msg))
    return counts, found, breaches, issues


def scan_rowcol(
    n: int,
    max_size: int,
    ineqs: InequalitySet | None = None,
    *,
    jobs: int = 1,
    force: bool = False,
) -> ScanReport:
    """The classification sweep restricted to triples containing a row or a column.

    On top of the usual counterexample search every triple is decided a
    second time through the Pieri criteria, and whenever parity and all
    inequalities hold the explicit strip construction must produce a
    certified alpha.
    """
    check_guard(n, max_size, force=force)
    t0 = time.perf_counter()
    if ineqs is None:
        ineqs = enumerate_extended(n, jobs=jobs)
    matrix = ineqs.matrix()
    report = ScanReport("rowcol", n, max_size, ineqs.family)
    shards = [(n, sig, matrix) for sig in _signatures(max_size)]
    _merge(report, _run_shards(_rowcol_shard, shards, jobs, "rowcol"))
    report.wall_time = time.perf_counter() - t0
    return report

