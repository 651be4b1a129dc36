"""Operational shell: prime sieving, sweep scheduling, reporting, CLI.

A run is an immutable list of (id, arg, a) work units fanned out over a
worker pool and merged deterministically: records are sorted by catalog
order before anything is written, so identical configs produce
byte-identical reports regardless of worker count.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from .registry import core as _core
from .registry import (
    CheckResult,
    check_congruence,
    list_entries,
    lookup,
    oracle_check,
)

WORKERS_ENV = "CONGRKIT_WORKERS"

# exponent schedule for entries quantified over all a in Z+: a=1 everywhere,
# a=2 for small primes only (sums of length p^2 bound the budget)
A2_PRIME_MAX = 43
QUADRATIC_PRIME_MAX = 97

_SCAN_KINDS = (
    "Integrality",
    "IntegralityScan",
    "ValuationBound",
    "DivisibilityScan",
    "DenominatorScan",
    "ResidueScan",
    "StabilityScan",
    "PrimalityScan",
    "PrimalityCharacterization",
    "QCongruenceScan",
    "IdentityScan",
    "ExistenceScan",
)


def sieve_primes(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi (plain Eratosthenes)."""
    if hi < 2:
        return []
    flags = bytearray([1]) * (hi + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(hi ** 0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [n for n in range(max(lo, 2), hi + 1) if flags[n]]


@dataclass(frozen=True)
class RunConfig:
    ids: tuple[str, ...] = ()           # empty = all entries
    status: str | None = None           # "open" | "confirmed"
    kind: str | None = None
    cost: str | None = None
    prime_min: int = 3
    prime_max: int = 199
    quad_prime_max: int = QUADRATIC_PRIME_MAX
    exponents: tuple[int, ...] = (1, 2)
    a2_prime_max: int = A2_PRIME_MAX
    scan_max: int | None = None         # override for integer-scan entries
    series_terms: int | None = None
    series_tol: float | None = None
    workers: int = 1
    jsonl_path: str = "reports/report.jsonl"
    csv_path: str = "reports/summary.csv"
    guard: int | None = None            # precision guard override
    seed: int = 0                       # oracle-sampling seed
    resume: bool = False

    def __post_init__(self):
        if self.prime_max < self.prime_min:
            raise ValueError("prime range is empty")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")

    @staticmethod
    def from_json(path: str) -> "RunConfig":
        with open(path) as fh:
            data = json.load(fh)
        for key in ("ids", "exponents"):
            if key in data:
                data[key] = tuple(data[key])
        return RunConfig(**data)


@dataclass
class ReportRecord:
    id: str
    arg: int
    a: int | None
    outcome: str
    witness: dict | None
    ms: float

    def to_json(self) -> str:
        payload = {
            "id": self.id,
            "arg": self.arg,
            "a": self.a,
            "outcome": self.outcome,
            "witness": _json_safe(self.witness),
            "ms": round(self.ms, 3),
        }
        return json.dumps(payload, separators=(",", ":"))


def _json_safe(obj):
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, float, str)):
        return obj
    return str(obj)


def _select(config: RunConfig):
    if config.ids:
        return [lookup(i) for i in config.ids]
    return list_entries(status=config.status, kind=config.kind, cost=config.cost)


def build_tasks(config: RunConfig) -> list[tuple[str, int, int | None]]:
    """Deterministic work-unit list: one (id, arg, a) tuple per check."""
    primes = sieve_primes(config.prime_min, config.prime_max)
    tasks: list[tuple[str, int, int | None]] = []
    for spec in _select(config):
        if spec.kind == "SumCongruence":
            cap = (
                min(config.prime_max, config.quad_prime_max)
                if spec.cost == "quadratic"
                else config.prime_max
            )
            for p in primes:
                if p > cap or not spec.applicable(p):
                    continue
                for a in config.exponents:
                    if a > 1 and (not spec.powers or p > config.a2_prime_max):
                        continue
                    tasks.append((spec.id, p, a))
        elif spec.kind == "SeriesSmoke":
            terms = config.series_terms or spec.scan_max
            tasks.append((spec.id, terms, None))
        elif spec.kind in _SCAN_KINDS:
            bound = config.scan_max or spec.scan_max
            tasks.append((spec.id, bound, None))
        else:  # pragma: no cover - catalog kinds are closed
            raise ValueError(f"unknown kind {spec.kind!r} on {spec.id}")
    return tasks


def execute(task: tuple[str, int, int | None], series_tol: float | None = None) -> ReportRecord:
    """Run one work unit and wrap the outcome in a ReportRecord."""
    id, arg, a = task
    spec = lookup(id)
    started = time.perf_counter()
    try:
        if spec.kind == "SumCongruence":
            result = check_congruence(id, arg, a)
        elif spec.kind == "SeriesSmoke":
            result = spec.checker(terms=arg, tol=series_tol)
        else:
            result = spec.checker(arg)
    except Exception as exc:  # noqa: BLE001 - any checker fault becomes Error
        result = CheckResult.error(f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - started) * 1000.0

    witness = result.witness
    if result.reason is not None:
        witness = dict(witness or {})
        witness["reason"] = result.reason

    if result.outcome == "fail" and spec.status == "open" and spec.kind == "SumCongruence":
        # counterexample-candidate quarantine: re-run through the oracle path
        # and keep its verdict alongside the original witness
        confirm = oracle_check(id, arg, a)
        witness = dict(witness or {})
        witness["oracle_recheck"] = confirm.outcome
        witness["oracle_witness"] = confirm.witness

    return ReportRecord(id, arg, a, result.outcome, witness, elapsed)


def _execute_for_pool(item):
    task, tol = item
    return execute(task, tol)


@dataclass
class RunSummary:
    counts: dict[str, dict[str, int]] = field(default_factory=dict)

    def add(self, record: ReportRecord) -> None:
        row = self.counts.setdefault(
            record.id,
            {"pass": 0, "fail": 0, "inapplicable": 0, "skipped": 0, "error": 0},
        )
        row[record.outcome] += 1

    def total(self, outcome: str) -> int:
        return sum(row[outcome] for row in self.counts.values())

    def confirmed_clean(self) -> bool:
        for id, row in self.counts.items():
            if lookup(id).status != "confirmed":
                continue
            if row["fail"] or row["error"]:
                return False
        return True

    def csv_lines(self):
        yield "id,pass,fail,inapplicable,skipped,error"
        for id in sorted(self.counts, key=_core._id_key):
            row = self.counts[id]
            yield (
                f"{id},{row['pass']},{row['fail']},{row['inapplicable']},"
                f"{row['skipped']},{row['error']}"
            )


def _load_done(path: Path) -> set[tuple]:
    done = set()
    if path.exists():
        with path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                done.add((rec["id"], rec["arg"], rec["a"]))
    return done


def run(config: RunConfig, quiet: bool = False) -> tuple[RunSummary, list[ReportRecord]]:
    """Execute a sweep: fan tasks out, merge deterministically, write reports.

    Returns the summary and the sorted record list; exit-status policy
    (0 iff no Fail/Error on confirmed entries) is applied by the CLI.
    """
    if config.guard is not None:
        _core.GUARD = config.guard

    tasks = build_tasks(config)
    jsonl_path = Path(config.jsonl_path)
    kept: list[ReportRecord] = []
    if config.resume:
        done = _load_done(jsonl_path)
        fresh = [t for t in tasks if t not in done]
        if jsonl_path.exists():
            with jsonl_path.open() as fh:
                for line in fh:
                    if line.strip():
                        rec = json.loads(line)
                        kept.append(
                            ReportRecord(
                                rec["id"], rec["arg"], rec["a"],
                                rec["outcome"], rec["witness"], rec["ms"],
                            )
                        )
        tasks = fresh

    workers = int(os.environ.get(WORKERS_ENV, config.workers))
    if workers > 1 and tasks:
        payload = [(t, config.series_tol) for t in tasks]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_execute_for_pool, payload, chunksize=8))
    else:
        records = [execute(t, config.series_tol) for t in tasks]

    records.extend(kept)
    records.sort(key=lambda r: (_core._id_key(r.id), r.arg, r.a if r.a else 0))

    summary = RunSummary()
    for rec in records:
        summary.add(rec)

    jsonl_path.parent.mkdir(parents=True, exist_ok=True)
    with jsonl_path.open("w") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")
    csv_path = Path(config.csv_path)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    with csv_path.open("w") as fh:
        for line in summary.csv_lines():
            fh.write(line + "\n")

    if not quiet:
        print(
            f"{len(records)} checks: "
            f"{summary.total('pass')} pass, {summary.total('fail')} fail, "
            f"{summary.total('inapplicable')} inapplicable, "
            f"{summary.total('skipped')} skipped, {summary.total('error')} error"
        )
    return summary, records


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def _cmd_list(args) -> int:
    entries = list_entries(status=args.status, kind=args.kind, cost=args.cost)
    for spec in entries:
        print(f"{spec.id:<16} {spec.status:<10} {spec.kind:<26} {spec.cost}")
    print(f"{len(entries)} entries")
    return 0


def _cmd_check(args) -> int:
    spec = lookup(args.id)
    bad = 0
    for p in sieve_primes(args.prime_min, args.prime_max):
        res = check_congruence(args.id, p, args.exponent)
        print(f"{spec.id} p={p} a={args.exponent or 1}: {res.outcome}")
        if res.outcome in ("fail", "error"):
            bad += 1
            if res.witness:
                print(f"  witness: {_json_safe(res.witness)}")
            if res.reason:
                print(f"  reason: {res.reason}")
    return 1 if bad else 0


def _cmd_check_all(args) -> int:
    if args.config:
        config = RunConfig.from_json(args.config)
    else:
        config = RunConfig()
    config = replace(
        config,
        status=args.status or config.status,
        cost=args.cost or config.cost,
        workers=args.workers or config.workers,
        resume=args.resume or config.resume,
    )
    summary, _ = run(config)
    return 0 if summary.confirmed_clean() else 1


def _cmd_scan(args) -> int:
    spec = lookup(args.id)
    if spec.kind not in _SCAN_KINDS:
        print(f"{spec.id} is not an integer-scan entry ({spec.kind})", file=sys.stderr)
        return 2
    res = spec.checker(args.max or spec.scan_max)
    print(f"{spec.id} max={args.max or spec.scan_max}: {res.outcome}")
    if res.witness:
        print(f"  witness: {_json_safe(res.witness)}")
    if res.reason:
        print(f"  reason: {res.reason}")
    return 0 if res.outcome == "pass" else 1


def _cmd_series(args) -> int:
    spec = lookup(args.id)
    if spec.kind != "SeriesSmoke":
        print(f"{spec.id} is not a series entry ({spec.kind})", file=sys.stderr)
        return 2
    res = spec.checker(terms=args.terms, tol=args.tol)
    print(f"{spec.id}: {res.outcome}")
    if res.witness:
        print(f"  witness: {_json_safe(res.witness)}")
    return 0 if res.outcome == "pass" else 1


def _cmd_oracle_compare(args) -> int:
    res = oracle_check(args.id, args.prime)
    print(f"{args.id} p={args.prime}: {res.outcome}")
    if res.witness:
        print(f"  witness: {_json_safe(res.witness)}")
    if res.reason:
        print(f"  reason: {res.reason}")
    return 0 if res.outcome in ("pass", "inapplicable") else 1


def _cmd_report(args) -> int:
    path = Path(args.input)
    if not path.exists():
        print(f"no report at {path}", file=sys.stderr)
        return 2
    if args.format == "jsonl":
        sys.stdout.write(path.read_text())
        return 0
    summary = RunSummary()
    with path.open() as fh:
        for line in fh:
            if line.strip():
                rec = json.loads(line)
                summary.add(
                    ReportRecord(
                        rec["id"], rec["arg"], rec["a"],
                        rec["outcome"], rec["witness"], rec["ms"],
                    )
                )
    for line in summary.csv_lines():
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="congrkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list catalog entries")
    p.add_argument("--status", choices=["open", "confirmed"])
    p.add_argument("--kind")
    p.add_argument("--cost", choices=["linear", "quadratic"])
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("check", help="check one congruence entry over a prime range")
    p.add_argument("--id", required=True)
    p.add_argument("--prime-min", type=int, required=True)
    p.add_argument("--prime-max", type=int, required=True)
    p.add_argument("--exponent", type=int, default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("check-all", help="full sweep with report files")
    p.add_argument("--status", choices=["open", "confirmed"])
    p.add_argument("--cost", choices=["linear", "quadratic"])
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--config", help="JSON file with RunConfig fields")
    p.add_argument("--resume", action="store_true")
    p.set_defaults(func=_cmd_check_all)

    p = sub.add_parser("scan", help="run an integer-scan entry")
    p.add_argument("--id", required=True)
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("series", help="run a series smoke entry")
    p.add_argument("--id", required=True)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("oracle-compare", help="dual-route check at one prime")
    p.add_argument("--id", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_oracle_compare)

    p = sub.add_parser("report", help="re-emit an existing report")
    p.add_argument("--format", choices=["jsonl", "csv"], required=True)
    p.add_argument("--input", default="reports/report.jsonl")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
