"""Command-line front end.

Exit codes: 0 success, 2 invalid input (bad spec, cap exceeded, bad cache
file), 3 an ``--oracle`` or ``--check`` mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass

from .commvar import PoincareResult, closed_form_n1, poincare_polynomial
from .oracle import DEFAULT_ORACLE_CAP, molien_degrees_check, poincare_brute
from .polyalg import IntPolynomial, to_latex, to_text
from .rootdata import GroupSpec, SpecError, parse_spec
from .weylclasses import (
    DEFAULT_ELEMENT_CAP,
    CapExceeded,
    CharPolyClass,
    distribution,
    distribution_from_data,
    distribution_to_data,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3

RECORD_FIELDS = (
    "spec",
    "n",
    "rank",
    "dim_group",
    "manifold_dim",
    "weyl_order",
    "poincare",
    "poincare_coeffs",
    "betti",
    "euler",
    "total",
    "palindromic",
    "time_ms",
)


class UsageError(Exception):
    pass


class Mismatch(Exception):
    pass


@dataclass
class OutputRecord:
    spec: str
    n: int
    rank: int
    dim_group: int
    manifold_dim: int
    weyl_order: int
    poincare: str
    poincare_coeffs: list[int]
    betti: list[int]
    euler: int
    total: int
    palindromic: bool
    time_ms: float

    @classmethod
    def from_result(cls, result: PoincareResult, time_ms: float) -> "OutputRecord":
        spec = result.spec
        return cls(
            spec=str(spec),
            n=result.n,
            rank=spec.rank,
            dim_group=spec.dim_group,
            manifold_dim=result.manifold_dim,
            weyl_order=spec.weyl_order,
            poincare=to_text(result.poincare),
            poincare_coeffs=list(result.poincare.coeffs),
            betti=list(result.betti),
            euler=result.euler,
            total=result.total,
            palindromic=result.palindromic,
            time_ms=round(time_ms, 3),
        )

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in RECORD_FIELDS}


def render_json(record: OutputRecord | dict) -> str:
    data = record.as_dict() if isinstance(record, OutputRecord) else record
    return json.dumps({k: data[k] for k in RECORD_FIELDS}, separators=(",", ":"))


def parse_json_record(text: str) -> dict:
    data = json.loads(text)
    missing = [k for k in RECORD_FIELDS if k not in data]
    if missing:
        raise ValueError(f"record is missing fields {missing}")
    return data


def render_table(records: list[OutputRecord]) -> str:
    header = ("spec", "n", "dim", "|W|", "euler", "total", "P(q)")
    rows = [
        (r.spec, str(r.n), str(r.manifold_dim), str(r.weyl_order), str(r.euler), str(r.total), r.poincare)
        for r in records
    ]
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header) - 1)]
    lines = []
    for row in [header, *rows]:
        cells = [cell.ljust(w) for cell, w in zip(row, widths)] + [row[-1]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_latex(records: list[OutputRecord]) -> str:
    return "\n".join(
        f"{r.spec} & {r.n} & ${to_latex(IntPolynomial(r.poincare_coeffs))}$ \\\\" for r in records
    )


def render_csv(records: list[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["spec", "n", "dim", "euler", "total", "poincare"])
    for r in records:
        w.writerow([r.spec, r.n, r.manifold_dim, r.euler, r.total, r.poincare])
    return buf.getvalue().rstrip("\n")


RENDERERS = {
    "table": render_table,
    "json": lambda records: "\n".join(render_json(r) for r in records),
    "latex": render_latex,
    "csv": render_csv,
}


def _parse_range(text: str) -> list[int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--n-range expects <a>..<b>, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--n-range {text!r} must satisfy 0 <= a <= b")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="commcohom",
        description="Rational Poincaré polynomials of commuting varieties of compact Lie groups.",
    )
    p.add_argument("--spec", help='group spec such as "A2", "B3xT1", "E6"')
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, help="number of commuting elements (default 1)")
    g.add_argument("--n-range", metavar="A..B", help="inclusive range of n")
    p.add_argument("--format", choices=sorted(RENDERERS), default="table")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force Weyl summation")
    p.add_argument("--check", action="store_true", help="run the invariant suite for each spec")
    p.add_argument("--cap", type=int, help="element cap for enumeration (E8 needs an explicit raise)")
    p.add_argument("--cache", metavar="PATH", help="JSON file caching Weyl distributions")
    p.add_argument("--batch", metavar="PATH", help="file with one spec per line")
    return p


class DistributionCache:
    def __init__(self, path: str | None):
        self.path = path
        self.entries: dict[str, list[CharPolyClass]] = {}
        self.dirty = False
        if path and os.path.exists(path):
            try:
                with open(path) as fh:
                    raw = json.load(fh)
                if not isinstance(raw, dict):
                    raise ValueError("top level must be an object keyed by spec")
                for key, data in raw.items():
                    spec = parse_spec(key)
                    self.entries[str(spec)] = distribution_from_data(spec, data)
            except (OSError, ValueError, SpecError) as exc:
                raise UsageError(f"--cache {path}: invalid distribution cache: {exc}") from None

    def get(self, spec: GroupSpec, cap: int) -> list[CharPolyClass]:
        key = str(spec)
        if key not in self.entries:
            self.entries[key] = distribution(spec, cap)
            self.dirty = True
        return self.entries[key]

    def save(self):
        if self.path and self.dirty:
            data = {k: distribution_to_data(v) for k, v in sorted(self.entries.items())}
            with open(self.path, "w") as fh:
                json.dump(data, fh, separators=(",", ":"))


def _specs_from_args(args) -> list[GroupSpec]:
    if args.batch:
        try:
            with open(args.batch) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"--batch {args.batch}: {exc}") from None
        specs = []
        for lineno, line in enumerate(lines, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                specs.append(parse_spec(text))
            except SpecError as exc:
                raise UsageError(f"--batch {args.batch}:{lineno}: {exc}") from None
        return specs
    if not args.spec:
        raise UsageError("--spec is required unless --batch is given")
    try:
        return [parse_spec(args.spec)]
    except SpecError as exc:
        raise UsageError(f"--spec: {exc}") from None


def _check_spec(spec: GroupSpec, results: list[PoincareResult], classes, oracle_cap: int) -> list[str]:
    failures = []
    total = sum(c.count for c in classes)
    if total != spec.weyl_order:
        failures.append(f"{spec}: class counts sum to {total}, expected {spec.weyl_order}")
    n0 = poincare_polynomial(spec, 0, classes=classes).poincare
    if n0 != IntPolynomial([1]):
        failures.append(f"{spec}, n=0: expected 1, got {n0}")
    n1 = poincare_polynomial(spec, 1, classes=classes).poincare
    expected = closed_form_n1(spec)
    if n1 != expected:
        failures.append(f"{spec}, n=1: expected {expected}, got {n1}")
    for res in results:
        n, P, D = res.n, res.poincare, res.manifold_dim
        tag = f"{spec}, n={n}"
        if res.total != 2 ** (spec.rank * n):
            failures.append(f"{tag}: P(1) = {res.total}, expected {2 ** (spec.rank * n)}")
        want_euler = 1 if n == 0 else 0
        if res.euler != want_euler:
            failures.append(f"{tag}: P(-1) = {res.euler}, expected {want_euler}")
        if P.degree > D:
            failures.append(f"{tag}: degree {P.degree} exceeds manifold dimension {D}")
        if n % 2 == 1:
            if not res.palindromic or P[D] != 1:
                failures.append(f"{tag}: {P} is not palindromic of degree {D}")
        elif n >= 2 and spec.weyl_order > 1 and P.degree >= D:
            failures.append(f"{tag}: degree {P.degree} should be below {D}")
    if spec.weyl_order <= oracle_cap and not molien_degrees_check(spec, oracle_cap):
        failures.append(f"{spec}: Molien series disagrees with the degree table {spec.factors}")
    return failures


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK

    try:
        specs = _specs_from_args(args)
        if args.n_range:
            ns = _parse_range(args.n_range)
        else:
            ns = [1 if args.n is None else args.n]
            if ns[0] < 0:
                raise UsageError(f"--n must be nonnegative, got {ns[0]}")
        if args.cap is not None and args.cap <= 0:
            raise UsageError("--cap must be positive")
        cap = args.cap if args.cap is not None else DEFAULT_ELEMENT_CAP
        oracle_cap = args.cap if args.cap is not None else DEFAULT_ORACLE_CAP
        cache = DistributionCache(args.cache)

        records: list[OutputRecord] = []
        mismatches: list[str] = []
        for spec in specs:
            t0 = time.perf_counter()
            try:
                classes = cache.get(spec, cap)
            except CapExceeded as exc:
                raise UsageError(f"--spec {spec}: {exc} (e.g. --cap {spec.weyl_order})") from None
            setup_ms = (time.perf_counter() - t0) * 1000
            results = []
            for n in ns:
                t1 = time.perf_counter()
                res = poincare_polynomial(spec, n, classes=classes)
                elapsed = (time.perf_counter() - t1) * 1000 + (setup_ms if n == ns[0] else 0.0)
                results.append(res)
                records.append(OutputRecord.from_result(res, elapsed))
                if args.oracle:
                    try:
                        brute = poincare_brute(spec, n, oracle_cap)
                    except CapExceeded as exc:
                        raise UsageError(f"--oracle on {spec}: {exc}; raise --cap") from None
                    if brute != res.poincare:
                        mismatches.append(
                            f"--oracle mismatch for {spec}, n={n}:\n  engine: {res.poincare}\n  brute:  {brute}"
                        )
            if args.check:
                mismatches.extend(f"--check failed: {msg}" for msg in _check_spec(spec, results, classes, oracle_cap))
        cache.save()
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID

    print(RENDERERS[args.format](records), file=stdout)
    if mismatches:
        for msg in mismatches:
            print(msg, file=stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
