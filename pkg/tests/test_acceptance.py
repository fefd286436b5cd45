"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly as ``python3 tests/test_acceptance.py``.
"""

import itertools
import time

import pytest

from nlhorn.cli import main as cli_main
from nlhorn.inequalities import (
    enumerate_extended,
    extended_weyl,
    horn_family,
    s3_orbit,
    subset_sum,
)
from nlhorn.lr import lr_coefficient, lr_positive, lr_positive_horn
from nlhorn.nl import (
    certify_col_witness,
    certify_row_witness,
    newell_littlewood,
    nl_positive,
    pieri_col_positive,
    pieri_col_witness,
    pieri_row_positive,
    pieri_row_witness,
)
from nlhorn.partitions import box_complement, column, conjugate, partitions_inside, partitions_up_to, row
from nlhorn.records import load_inequalities
from nlhorn.redundancy import filter_redundant
from nlhorn.verify import scan_conjecture, scan_saturation

RESULTS: list[str] = []

G3_FIRST = (-1, 1, 1, 1, -1, 1, 1, 1, -1)
G3_SECOND = (1, -1, 1, 1, -1, 1, 1, -1, 1)
G3_THIRD = (1, -1, 0, 1, -1, 0, 0, 1, 1)
G3_FOURTH = (0, 1, -1, 0, 1, -1, 0, 1, 1)
N2_REPS = [(1, 0, 1, 0, -1, 0), (1, 0, 0, 1, 0, -1), (1, 1, 1, 1, -1, -1), (1, -1, -1, 1, 1, 1)]


def record(num, title, ok, elapsed, limit=None, detail=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"[{status}] criterion {num:>2}: {title}; {detail}; {elapsed:.2f}s{budget}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_c01_n2_list(tmp_path):
    t0 = time.perf_counter()
    out = tmp_path / "g2.jsonl"
    code = cli_main(["gen", "--n", "2", "--family", "extended", "--regen", "-q",
                     "--cache", str(tmp_path / "c"), "--out", str(out)])
    got = load_inequalities(out).vectors()
    want = set().union(*(s3_orbit(v) for v in N2_REPS))
    elapsed = time.perf_counter() - t0
    record(1, "n=2 extended list equals the four S3 orbits", code == 0 and got == want, elapsed, 1.0,
           f"{len(got)} vectors, expected {len(want)}")


def test_c02_n3_inclusion():
    t0 = time.perf_counter()
    g3 = enumerate_extended(3).vectors()
    subs = horn_family(3).vectors() | extended_weyl(3).vectors() | subset_sum(3).vectors()
    closure = set().union(*(s3_orbit(v) for v in subs))
    missing = ({G3_FIRST, G3_SECOND, G3_THIRD, G3_FOURTH} | closure) - g3
    elapsed = time.perf_counter() - t0
    record(2, "n=3 set contains the listed examples and all subfamily orbits", not missing, elapsed, 120.0,
           f"|G3|={len(g3)}, subfamily orbit vectors={len(closure)}, missing={len(missing)}")


def test_c03_necessity():
    t0 = time.perf_counter()
    rep = scan_conjecture(3, 8)
    elapsed = time.perf_counter() - t0
    record(3, "no NL-positive triple (<=3 parts, sizes <=8) violates G3", not rep.breaches, elapsed, 600.0,
           f"{rep.counts['nl_positive']} positive triples, breaches={len(rep.breaches)}")


def test_c04_conjecture_desk_scale():
    t0 = time.perf_counter()
    reps = [scan_conjecture(2, 10), scan_conjecture(3, 8)]
    elapsed = time.perf_counter() - t0
    found = sum(len(r.counterexamples) for r in reps)
    record(4, "classification sweep n=2 size<=10 and n=3 size<=8", found == 0, elapsed, 900.0,
           f"triples={sum(r.counts['triples'] for r in reps)}, counterexamples={found}")


def test_c05_pieri():
    t0 = time.perf_counter()
    shapes = list(partitions_up_to(3, 7))
    bad = 0
    checked = 0
    for mu, nu in itertools.product(shapes, repeat=2):
        for p in range(10):
            checked += 1
            r = nl_positive(mu, nu, row(p))
            c = nl_positive(mu, nu, column(p))
            bad += pieri_row_positive(mu, nu, p) != r
            bad += pieri_col_positive(mu, nu, p) != c
            a = pieri_row_witness(mu, nu, p)
            b = pieri_col_witness(mu, nu, p)
            bad += (a is not None and not certify_row_witness(mu, nu, p, a)) or (r and a is None)
            bad += (b is not None and not certify_col_witness(mu, nu, p, b)) or (c and b is None)
    elapsed = time.perf_counter() - t0
    record(5, "Pieri row/column criteria match NL positivity, witnesses certify", bad == 0, elapsed, None,
           f"{checked} (mu, nu, p) cases, discrepancies={bad}")


def test_c06_reformulation():
    t0 = time.perf_counter()
    seen = bad = 0
    for n in (1, 2, 3):
        def audit(sets, wit, plain, prime):
            nonlocal seen, bad
            seen += 1
            bad += plain != prime
        enumerate_extended(n, audit=audit)
    elapsed = time.perf_counter() - t0
    record(6, "complemented condition agrees with the original on every candidate", bad == 0 and seen > 0,
           elapsed, None, f"{seen} (tuple, witness) pairs, discrepancies={bad}")


def test_c07_lr_engine():
    t0 = time.perf_counter()
    shapes = list(partitions_inside((6, 6, 6, 6)))
    by_size = {}
    for s in shapes:
        by_size.setdefault(sum(s), []).append(s)
    horn_bad = horn_n = 0
    for mu, nu in itertools.product(shapes, repeat=2):
        for lam in by_size.get(sum(mu) + sum(nu), ()):
            horn_n += 1
            horn_bad += lr_positive(mu, nu, lam) != lr_positive_horn(mu, nu, lam)

    sym_bad = sym_n = 0
    small = list(partitions_inside((4, 4, 4, 4)))
    small_by = {}
    for s in small:
        small_by.setdefault(sum(s), []).append(s)
    for mu, nu in itertools.product(small, repeat=2):
        for lam in small_by.get(sum(mu) + sum(nu), ()):
            sym_n += 1
            sym_bad += lr_coefficient(mu, nu, lam) != lr_coefficient(conjugate(mu), conjugate(nu), conjugate(lam))
    for w, k, l in itertools.product(range(1, 4), repeat=3):
        lams = list(partitions_inside((w,) * (k + l)))
        for mu in partitions_inside((w,) * k):
            for nu in partitions_inside((w,) * l):
                for lam in lams:
                    if sum(lam) != sum(mu) + sum(nu):
                        continue
                    sym_n += 1
                    sym_bad += lr_coefficient(mu, nu, lam) != lr_coefficient(
                        box_complement(mu, w, k), box_complement(nu, w, l), box_complement(lam, w, k + l))
    c321 = lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    elapsed = time.perf_counter() - t0
    record(7, "tableau engine vs Horn recursion, transpose and box-complement symmetry",
           horn_bad == 0 and sym_bad == 0 and c321 == 2, elapsed, None,
           f"horn {horn_n} triples/{horn_bad} bad, symmetry {sym_n} checks/{sym_bad} bad, c(21,21;321)={c321}")


def test_c08_saturation():
    t0 = time.perf_counter()
    rep = scan_saturation(2, 5, 3)
    elapsed = time.perf_counter() - t0
    record(8, "saturation sweep n=2 size<=5 t in {2,3}", not rep.counterexamples, elapsed, 300.0,
           f"{rep.counts['parity']} parity triples, counterexamples={len(rep.counterexamples)}")


def test_c09_redundancy():
    t0 = time.perf_counter()
    g3 = enumerate_extended(3)
    kept = filter_redundant(g3).vectors()
    removed = {v for v in (G3_FIRST, G3_SECOND, G3_THIRD, G3_FOURTH) if v not in kept}
    orbit_kept = s3_orbit(G3_FIRST) <= kept
    elapsed = time.perf_counter() - t0
    record(9, "exact redundancy filter drops the three listed vectors, keeps the orbit of the first",
           removed == {G3_SECOND, G3_THIRD, G3_FOURTH} and orbit_kept, elapsed, 120.0,
           f"kept {len(kept)} of {len(g3)}")


def test_c10_symmetry():
    t0 = time.perf_counter()
    shapes = list(partitions_up_to(3, 6))
    bad = 0
    for t in itertools.product(shapes, repeat=3):
        base = newell_littlewood(*t)
        bad += any(newell_littlewood(*p) != base for p in itertools.permutations(t))
    elapsed = time.perf_counter() - t0
    record(10, "NL numbers invariant under all argument permutations", bad == 0, elapsed, None,
           f"{len(shapes) ** 3} triples, discrepancies={bad}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
