"""Command-line entry point: ``nlhorn <command> ...``.

Exit codes: 0 clean, 1 counterexample or breach found, 2 usage error,
3 scale guard tripped.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from ._kernels import BACKEND
from .errors import ScaleGuardError
from .inequalities import FAMILIES, InequalitySet, _Collector
from .lr import lr_coefficient
from .nl import newell_littlewood
from .partitions import format_partition, parse_index_set, parse_partition, tau
from .records import (
    FORMAT_VERSION,
    cached_inequalities,
    default_cache_dir,
    write_inequalities,
    write_report,
)
from .redundancy import filter_redundant
from .verify import check_triple, scan_conjecture, scan_rowcol, scan_saturation

log = logging.getLogger("nlhorn.cli")

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
MAX_GEN_N = 4


@dataclass
class Config:
    n: int = 2
    max_size: int = 8
    t_max: int = 2
    families: list[str] = field(default_factory=lambda: ["extended"])
    jobs: int = 1
    cache_path: Path | None = None
    output: str | None = None
    format: str = "jsonl"
    regen: bool = False
    rowcol: bool = False
    force: bool = False

    def __post_init__(self):
        if self.n < 1 or self.max_size < 0 or self.jobs < 1:
            raise ValueError("need n >= 1, max_size >= 0, jobs >= 1")
        fams = []
        for f in self.families:
            for g in FAMILIES if f == "all" else [f]:
                if g not in fams:
                    fams.append(g)
        self.families = fams

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Config:
        return cls(
            n=args.n,
            max_size=getattr(args, "max_size", 8),
            t_max=getattr(args, "t_max", None) or 2,
            families=getattr(args, "family", None) or ["extended"],
            jobs=args.jobs,
            cache_path=Path(args.cache) if args.cache else default_cache_dir(),
            output=args.out,
            format=args.format,
            regen=args.regen,
            rowcol=getattr(args, "rowcol", False),
            force=args.force,
        )


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_set_arg(text: str):
    try:
        return parse_index_set(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


@contextmanager
def _open_out(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as fh:
            yield fh


def _load(cfg: Config, family: str) -> InequalitySet:
    if family == "extended" and cfg.n > MAX_GEN_N and not cfg.force:
        raise ScaleGuardError(f"extended generation is limited to n <= {MAX_GEN_N} without --force")
    return cached_inequalities(cfg.n, family, cfg.cache_path, regen=cfg.regen, jobs=cfg.jobs)


def _union(cfg: Config) -> InequalitySet:
    sets = [_load(cfg, f) for f in cfg.families]
    if len(sets) == 1:
        return sets[0]
    col = _Collector(cfg.n, "+".join(cfg.families))
    for s in sets:
        for rec in s.records:
            for i, prov in enumerate(rec.provenance or [None]):
                col.add(rec.coeffs, prov, rec.witness, None)
            for src in rec.sources:
                col.add(rec.coeffs, None, rec.witness, src)
    return col.result()


def cmd_lr(args) -> int:
    print(lr_coefficient(args.mu, args.nu, args.lam))
    return EXIT_OK


def cmd_nl(args) -> int:
    print(newell_littlewood(args.mu, args.nu, args.lam))
    return EXIT_OK


def cmd_tau(args) -> int:
    print(format_partition(tau(args.index_set)))
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = Config.from_args(args)
    many = len(cfg.families) > 1
    for family in cfg.families:
        ineqs = _load(cfg, family)
        log.info("generated %s n=%d: %d vectors", family, cfg.n, len(ineqs))
        out = cfg.output
        if many and out not in (None, "-"):
            suffix = "csv" if cfg.format == "csv" else "jsonl"
            out = str(Path(out) / f"{family}-n{cfg.n}-v{FORMAT_VERSION}.{suffix}")
        with _open_out(out) as fh:
            write_inequalities(ineqs, fh, cfg.format)
    return EXIT_OK


def cmd_check(args) -> int:
    n = args.n or max(len(args.mu), len(args.nu), len(args.lam), 1)
    args.n = n
    cfg = Config.from_args(args)
    verdict = check_triple(args.mu, args.nu, args.lam, _union(cfg))
    print(json.dumps(verdict.to_dict(), sort_keys=True))
    return EXIT_OK


def _emit(report, cfg: Config) -> None:
    log.info("%s", report.summary())
    with _open_out(cfg.output) as fh:
        write_report(report, fh, cfg.format)


def cmd_verify(args) -> int:
    cfg = Config.from_args(args)
    ineqs = _union(cfg)
    reports = [scan_conjecture(cfg.n, cfg.max_size, ineqs, jobs=cfg.jobs, force=cfg.force)]
    if cfg.rowcol:
        reports.append(scan_rowcol(cfg.n, cfg.max_size, ineqs, jobs=cfg.jobs, force=cfg.force))
    if args.t_max:
        reports.append(scan_saturation(cfg.n, cfg.max_size, cfg.t_max, jobs=cfg.jobs, force=cfg.force))
    if cfg.output in (None, "-"):
        for r in reports:
            _emit(r, cfg)
    else:
        with _open_out(cfg.output) as fh:
            for r in reports:
                log.info("%s", r.summary())
                write_report(r, fh, cfg.format)
    return EXIT_OK if all(r.clean for r in reports) else EXIT_FOUND


def cmd_saturate(args) -> int:
    cfg = Config.from_args(args)
    report = scan_saturation(cfg.n, cfg.max_size, cfg.t_max, jobs=cfg.jobs, force=cfg.force)
    _emit(report, cfg)
    return EXIT_OK if report.clean else EXIT_FOUND


def cmd_redundant(args) -> int:
    cfg = Config.from_args(args)
    ineqs = _union(cfg)
    kept = filter_redundant(ineqs, max_n=cfg.n if cfg.force else 3)
    log.info("redundancy filter n=%d: kept %d of %d", cfg.n, len(kept), len(ineqs))
    with _open_out(cfg.output) as fh:
        write_inequalities(kept, fh, cfg.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlhorn",
        description="Newell-Littlewood numbers and extended Horn inequalities.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"nlhorn {__version__} (file format {FORMAT_VERSION}, kernels: {BACKEND})",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def quiet(p):
        p.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS)

    def triple(p):
        quiet(p)
        for name in ("mu", "nu", "lam"):
            p.add_argument(name, type=_partition_arg, help='partition, e.g. "3,1,1"; "" or "0" for empty')

    def common(p, *, n_default=2, sizes=False, with_quiet=True):
        if with_quiet:
            quiet(p)
        p.add_argument("--n", type=int, default=n_default, help="number of parts / level of the family")
        p.add_argument(
            "--family",
            action="append",
            choices=FAMILIES + ("all",),
            help="inequality family (repeatable; default: extended)",
        )
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--cache", help="cache directory (default: $NLHORN_CACHE or ~/.cache/nlhorn)")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
        p.add_argument("--regen", action="store_true", help="ignore cached inequality files")
        p.add_argument("--force", action="store_true", help="override the scale guards")
        if sizes:
            p.add_argument("--max-size", type=int, default=8)
            p.add_argument("--t-max", type=int, default=None)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    triple(p)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("nl", help="Newell-Littlewood number N_{mu,nu,lam}")
    triple(p)
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("tau", help="tau of an index set, e.g. {2,4}")
    p.add_argument("index_set", type=_index_set_arg)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("gen", help="generate inequality families")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="check one triple against an inequality set")
    triple(p)
    common(p, n_default=None, with_quiet=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="exhaustive classification sweep")
    common(p, sizes=True)
    p.add_argument("--rowcol", action="store_true", help="also run the row/column slice with Pieri checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("saturate", help="saturation sweep under dilation")
    common(p, sizes=True)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("redundant", help="exact redundancy filter (n <= 3)")
    common(p, n_default=3)
    p.set_defaults(func=cmd_redundant)
    return parser


def _setup_logging(quiet: bool) -> None:
    logger = logging.getLogger("nlhorn")
    for h in list(logger.handlers):
        if getattr(h, "_nlhorn_cli", False):
            logger.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler._nlhorn_cli = True
    logger.addHandler(handler)
    logger.setLevel(logging.WARNING if quiet else logging.INFO)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.quiet)
    try:
        return args.func(args)
    except ScaleGuardError as exc:
        print(f"nlhorn: scale guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"nlhorn: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
