"""Line-oriented persistence for inequality sets and scan reports.

Both file kinds are JSON Lines: a header object carrying the format version
and tool version, then one canonical record per line (sorted keys, compact
separators), so regenerated files diff cleanly.
"""

from __future__ import annotations

import csv
import io
import json
import os
from pathlib import Path
from typing import IO, Iterable

from . import __version__ as TOOL_VERSION
from .inequalities import InequalityRecord, InequalitySet, generate

FORMAT_VERSION = 1
CACHE_ENV = "NLHORN_CACHE"


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _record_dict(ineqs: InequalitySet, rec: InequalityRecord) -> dict:
    return {
        "n": ineqs.n,
        "family": ineqs.family,
        "coeffs": list(rec.coeffs),
        "provenance": [[list(s) for s in sets] for sets in rec.provenance],
        "sources": list(rec.sources),
        "witness": None if rec.witness is None else [list(s) for s in rec.witness],
        "trivial": rec.trivial,
    }


def header(file_kind: str, **extra) -> dict:
    return {"format": file_kind, "format_version": FORMAT_VERSION, "tool_version": TOOL_VERSION, **extra}


def inequality_lines(ineqs: InequalitySet) -> list[str]:
    """Record lines (no header) in canonical vector order."""
    recs = sorted(ineqs.records, key=lambda r: tuple(r.coeffs))
    return [_dumps(_record_dict(ineqs, r)) for r in recs]


def write_inequalities(ineqs: InequalitySet, fh: IO[str], fmt: str = "jsonl") -> None:
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "family", "coeffs", "trivial", "witness"])
        for line in inequality_lines(ineqs):
            d = json.loads(line)
            wit = "" if d["witness"] is None else "|".join(",".join(map(str, s)) for s in d["witness"])
            writer.writerow([d["n"], d["family"], " ".join(map(str, d["coeffs"])), int(d["trivial"]), wit])
        return
    if fmt != "jsonl":
        raise ValueError(f"unknown format {fmt!r}")
    fh.write(_dumps(header("nlhorn-inequalities", n=ineqs.n, family=ineqs.family, count=len(ineqs))) + "\n")
    for line in inequality_lines(ineqs):
        fh.write(line + "\n")


def dump_inequalities(ineqs: InequalitySet, fmt: str = "jsonl") -> str:
    buf = io.StringIO()
    write_inequalities(ineqs, buf, fmt)
    return buf.getvalue()


def _tuple6(x):
    return tuple(tuple(s) for s in x)


def read_inequalities(lines: Iterable[str]) -> InequalitySet:
    it = iter(lines)
    head = json.loads(next(it))
    if head.get("format") != "nlhorn-inequalities":
        raise ValueError("not an inequality-set file")
    if head.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {head.get('format_version')}")
    ineqs = InequalitySet(head["n"], head["family"])
    for line in it:
        if not line.strip():
            continue
        d = json.loads(line)
        ineqs.records.append(
            InequalityRecord(
                tuple(d["coeffs"]),
                None if d["witness"] is None else _tuple6(d["witness"]),
                [_tuple6(p) for p in d["provenance"]],
                list(d["sources"]),
            )
        )
    return ineqs


def load_inequalities(path: str | os.PathLike) -> InequalitySet:
    with open(path) as fh:
        return read_inequalities(fh)


def save_inequalities(ineqs: InequalitySet, path: str | os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w") as fh:
        write_inequalities(ineqs, fh)
    os.replace(tmp, path)


def default_cache_dir() -> Path:
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "nlhorn"


def cache_file(cache_dir: str | os.PathLike, n: int, family: str) -> Path:
    return Path(cache_dir) / f"{family}-n{n}-v{FORMAT_VERSION}.jsonl"


def cached_inequalities(
    n: int,
    family: str,
    cache_dir: str | os.PathLike | None = None,
    *,
    regen: bool = False,
    jobs: int = 1,
) -> InequalitySet:
    """Load (n, family) from the cache, generating and storing it when missing."""
    path = cache_file(cache_dir or default_cache_dir(), n, family)
    if path.exists() and not regen:
        return load_inequalities(path)
    ineqs = generate(n, family, jobs=jobs)
    save_inequalities(ineqs, path)
    return ineqs


_SINGULAR = {"breaches": "breach", "counterexamples": "counterexample", "discrepancies": "discrepancy"}


def write_report(report, fh: IO[str], fmt: str = "jsonl") -> None:
    """Scan report: header with counts and timing, then one line per finding."""
    payload = report.payload()
    findings = [
        (kind, v)
        for kind in ("breaches", "counterexamples", "discrepancies")
        for v in payload[kind]
    ]
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["kind", "mu", "nu", "lam", "parity", "nl_pos", "violated", "note"])
        for kind, v in findings:
            writer.writerow([
                _SINGULAR[kind],
                ",".join(map(str, v["mu"])),
                ",".join(map(str, v["nu"])),
                ",".join(map(str, v["lam"])),
                int(v["parity"]),
                int(v["nl_pos"]),
                len(v["violated"]),
                v["note"],
            ])
        return
    head = header(
        "nlhorn-report",
        kind=payload["kind"],
        n=payload["n"],
        max_size=payload["max_size"],
        family=payload["family"],
        counts=payload["counts"],
        params=payload["params"],
        convention=payload["convention"],
        wall_time=round(report.wall_time, 3),
    )
    fh.write(_dumps(head) + "\n")
    for kind, v in findings:
        fh.write(_dumps({"finding": _SINGULAR[kind], **v}) + "\n")
