"""Batch driver.

Exit codes: 0 ok, 1 reproduction mismatch, 2 parse error, 3 computation
error, 4 I/O error, 5 no quasi-polynomial fit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .catalog import EXAMPLES
from .config import ConfigError, RunConfig, loads_config
from .filtration import (
    SeriesError,
    defect_series,
    growth_csv,
    growth_json,
    growth_report,
    read_series_csv,
)
from .quasipoly import FitError, coefficient_report, qp_detect

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_COMPUTE = 3
EXIT_IO = 4
EXIT_NOFIT = 5

log = logging.getLogger("monodefect")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(directory: Path, name: str, text: str) -> Path:
    try:
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / name
        path.write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {directory / name}: {exc.strerror}") from None
    return path


def _load(args) -> tuple[RunConfig, Path]:
    try:
        cfg = loads_config(_read(args.config))
    except ConfigError as exc:
        raise CliError(EXIT_PARSE, f"config error: {exc}") from None
    out = args.out or cfg.outputs or "."
    return cfg, Path(out)


def cmd_compute(args) -> int:
    cfg, out = _load(args)
    results = []
    for pair in cfg.pairs:
        log.info("computing %s for n = %d..%d", pair.name, pair.n_min, pair.n_max)
        try:
            series = defect_series(pair.spec_i, pair.spec_j, pair.n_min, pair.n_max, jobs=args.jobs)
        except SeriesError as exc:
            raise CliError(EXIT_COMPUTE, f"pair {pair.name!r}, {exc}") from None
        for n, t in zip(series.ns, series.timings):
            log.debug("%s n=%d %.3fs", pair.name, n, t)
        results.append((pair.name, series))
    # all writes happen after every pair is computed
    for name, series in results:
        _write(out, f"{name}.series.csv", series.to_csv())
        _write(out, f"{name}.series.json", json.dumps(series.to_dict(), indent=2) + "\n")
        print(f"{name}: wrote {out / (name + '.series.csv')}")
    return EXIT_OK


def cmd_growth(args) -> int:
    cfg, out = _load(args)
    results = []
    for pair in cfg.pairs:
        log.info("growth report for %s", pair.name)
        try:
            rows = growth_report(pair.spec_i, pair.spec_j, pair.n_min, pair.n_max, jobs=args.jobs)
        except SeriesError as exc:
            raise CliError(EXIT_COMPUTE, f"pair {pair.name!r}, {exc}") from None
        results.append((pair.name, rows))
    for name, rows in results:
        _write(out, f"{name}.growth.csv", growth_csv(rows))
        _write(out, f"{name}.growth.json", growth_json(rows))
        print(f"{name}: wrote {out / (name + '.growth.csv')}")
    return EXIT_OK


def cmd_fit(args) -> int:
    path = Path(args.series)
    text = _read(args.series)
    try:
        n_start, values = read_series_csv(text)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None
    n_end = n_start + len(values) - 1
    try:
        qp = qp_detect(values, n_start, args.p_max, args.d_max, args.margin)
    except FitError:
        raise CliError(
            EXIT_NOFIT,
            f"no fit with period <= {args.p_max}, degree <= {args.d_max}; "
            f"largest window examined: n = {n_start}..{n_end}",
        ) from None
    name = path.name
    for suffix in (".series.csv", ".csv"):
        if name.endswith(suffix):
            name = name[: -len(suffix)]
            break
    out = Path(args.out) if args.out else path.parent
    target = _write(out, f"{name}.qp.json", qp.to_json())
    print(f"period {qp.period}, degree {qp.degree}, valid from n = {qp.valid_from}")
    print(qp.format())
    if not qp.is_zero():
        print(coefficient_report(qp).format())
    print(f"wrote {target}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ex = EXAMPLES[args.example]
    n_max = args.n_max or ex.n_max
    print(f"{ex.key}: {ex.description}")
    series = defect_series(ex.spec_i, ex.spec_j, ex.n_min, n_max, jobs=args.jobs)
    first_fail = None
    for n, got in zip(series.ns, series.values):
        want = ex.closed_form(n)
        ok = got == want
        print(f"n = {n:3d}  def = {got:6d}  expected = {str(want):>6}  {'PASS' if ok else 'FAIL'}")
        if not ok and first_fail is None:
            first_fail = (n, got, want)
    if first_fail:
        n, got, want = first_fail
        print(f"mismatch at n = {n}: computed {got}, closed form {want}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monodefect", description=__doc__.splitlines()[0])
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def jobs(p):
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="parallel workers over n (default: CPU count)")

    p = sub.add_parser("compute", help="defect series for every configured pair")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    jobs(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("growth", help="integral-closure comparison tables")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    jobs(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("fit", help="detect the eventual quasi-polynomial of a series CSV")
    p.add_argument("series")
    p.add_argument("--p-max", type=int, default=6)
    p.add_argument("--d-max", type=int, default=5)
    p.add_argument("--margin", type=int, default=2, help="extra exact matches per class")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("reproduce", help="check a worked example against its closed form")
    p.add_argument("example", choices=sorted(EXAMPLES))
    p.add_argument("--n-max", type=int)
    jobs(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
