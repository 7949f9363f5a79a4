"""Command-line front end (``opnlab``).

Every command produces self-describing records carrying ``schema_version``
and ``command``.  ``--format jsonl`` (one JSON object per line) is the
canonical machine format; ``table`` and ``csv`` are renderings of the same
records.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 a resource budget was exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from decimal import Context
from fractions import Fraction
from typing import Iterable, TextIO

from . import bounds, euler_form, formal_opn
from .arith import Factorization, abundancy, classify, deficiency, sigma
from .errors import BudgetExceeded, StructuralError, VerificationError
from .factorizer import DEFAULT_RHO_BUDGET, factor
from .sieve import DEFAULT_SEGMENT_SIZE, Predicate, search
from .workers import ordered_map, worker_count

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def render_ratio(r: Fraction) -> dict:
    """Exact ``p/q`` plus a 12-significant-digit decimal labelled approximate."""
    exact = str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    approx = Context(prec=12).divide(r.numerator, r.denominator)
    return {"exact": exact, "approx": str(approx)}


def _record(command: str, **payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, (list, tuple)):
            flat[name] = json.dumps(value, separators=(",", ":"))
        else:
            flat[name] = value
    return flat


class Emitter:
    """Single serialized writer for all output."""

    def __init__(self, fmt: str, stream: TextIO):
        self.fmt = fmt
        self.stream = stream
        self._keys: tuple[str, ...] | None = None

    def emit(self, record: dict) -> None:
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(record, separators=(",", ":")) + "\n")
            return
        flat = _flatten(record)
        keys = tuple(flat)
        if self.fmt == "csv":
            writer = csv.writer(self.stream, lineterminator="\n")
            if keys != self._keys:
                if self._keys is not None:
                    self.stream.write("\n")
                writer.writerow(keys)
                self._keys = keys
            writer.writerow(["" if v is None else v for v in flat.values()])
            return
        # table
        if record.get("record") == "row":
            if keys != self._keys:
                self.stream.write("\t".join(keys) + "\n")
                self._keys = keys
            self.stream.write("\t".join(str(v) for v in flat.values()) + "\n")
            return
        self._keys = None
        width = max(map(len, keys))
        for key, value in flat.items():
            self.stream.write(f"{key.ljust(width)}  {value}\n")


def _decomposition(f: Factorization) -> dict:
    try:
        if f.value % 2:
            form = euler_form.euler_decompose(f)
            return {"form": "euler", "q": form.q, "k": form.k, "n": form.n}
        form = euler_form.euclid_decompose(f)
        return {"form": "euclid", "p": form.p, "mersenne": form.mersenne}
    except StructuralError as exc:
        return {"form": None, "error": type(exc).__name__, "message": str(exc)}


def cmd_analyze(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> dict:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    f = factor(n, budget=rho_budget)
    c = classify(f)
    return _record(
        "analyze",
        n=n,
        factorization=str(f),
        factors=[list(pe) for pe in f.factors],
        sigma=sigma(f),
        abundancy=render_ratio(abundancy(f)),
        deficiency=deficiency(f),
        kind=c.kind.value,
        deficient_perfect=c.deficient_perfect,
        decomposition=_decomposition(f),
    )


def cmd_decompose(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> dict:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    f = factor(n, budget=rho_budget)
    return _record("decompose", n=n, factorization=str(f), decomposition=_decomposition(f))


def _grid_rows_for_q(job: tuple[int, tuple[int, ...], int, int]) -> list[dict]:
    q, kset, tmax, t_min = job
    rows = []
    for k in kset:
        for t in range(1, tmax + 1, 2):
            if t < t_min:
                continue
            F = formal_opn.FormalOPN(q, k, t)
            report = formal_opn.check_identity_chain(F)
            slowak = formal_opn.slowak_decompose(F)
            rows.append(
                _record(
                    "grid",
                    record="row",
                    q=q,
                    k=k,
                    t=t,
                    chain=dict(report.chain_values),
                    all_equal=report.all_equal,
                    lemma1_holds=report.lemma1_holds,
                    lemma1_agrees=report.lemma1_holds == (k == 1),
                    lemma3_holds=report.lemma3_holds,
                    lemma3_agrees=report.lemma3_holds == (k == 1),
                    slowak_ok=slowak.product == F.N,
                    d_exceeds_one=slowak.d_exceeds_one,
                    remark2_ok=formal_opn.remark2_check(F),
                )
            )
    return rows


_GRID_FLAGS = ("all_equal", "lemma1_agrees", "lemma3_agrees", "slowak_ok", "remark2_ok")


def cmd_grid(qmax: int, kset: Iterable[int], tmax: int, strict_t_min: int | None = None, workers: int = 1):
    """Yield one row per (q, k, t) and a final summary record."""
    if qmax < 5:
        raise ValueError(f"qmax must be >= 5, got {qmax}")
    kset = tuple(sorted(set(kset)))
    for k in kset:
        if k < 1 or k % 4 != 1:
            raise ValueError(f"k={k} must satisfy k = 1 (mod 4)")
    t_min = strict_t_min or 1
    jobs = [(q, kset, tmax, t_min) for q in bounds.euler_primes(qmax)]
    rows = violations = 0
    for batch in ordered_map(_grid_rows_for_q, jobs, workers):
        for row in batch:
            rows += 1
            violations += sum(not row[flag] for flag in _GRID_FLAGS)
            yield row
    yield _record("grid", record="summary", rows=rows, violations=violations)


def cmd_bounds(qmax: int, kset: Iterable[int], permissive: bool = False):
    if qmax < 5:
        raise ValueError(f"qmax must be >= 5, got {qmax}")
    kset = tuple(sorted(set(kset)))
    equal_at, above = [], 0
    rows = 0
    for q in bounds.euler_primes(qmax):
        for k in kset:
            v = bounds.compare_to_threshold(q, k, permissive)
            rows += 1
            if v.relation is bounds.Relation.EQUAL:
                equal_at.append([q, k])
            elif v.relation is bounds.Relation.ABOVE:
                above += 1
            yield _record(
                "bounds",
                record="row",
                q=q,
                k=k,
                abundancy_n2=render_ratio(v.lhs),
                threshold=render_ratio(v.rhs),
                relation=v.relation.value,
                sign_poly=v.sign_poly,
            )
    includes_equality_point = 1 in kset
    consistent = above == 0 and equal_at == ([[5, 1]] if includes_equality_point else [])
    yield _record(
        "bounds",
        record="summary",
        rows=rows,
        equal_count=len(equal_at),
        equal_at=equal_at,
        above_count=above,
        consistent=consistent,
    )


def cmd_sieve(bound: int, predicate: str, segment_size: int = DEFAULT_SEGMENT_SIZE, workers: int = 1) -> dict:
    cert = search(bound, predicate, segment_size=segment_size, workers=workers)
    return _record("sieve", **{k: v for k, v in cert.to_record().items() if k != "schema_version"})


def cmd_spoof(spec: str) -> dict:
    sf = euler_form.parse_spoof(spec)
    n = sf.value
    s = euler_form.spoof_sigma(sf)
    return _record(
        "spoof",
        spec=str(sf),
        n=n,
        spoof_sigma=s,
        spoof_perfect=s == 2 * n,
        pseudo_bases=[b for b, _, ps in sf.factors if ps],
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opnlab", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("table", "jsonl", "csv"), default="table")
    parser.add_argument("--rho-budget", type=int, default=DEFAULT_RHO_BUDGET,
                        help="Pollard rho iteration budget for analyze/decompose")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="sigma, abundancy, deficiency, classification, decomposition")
    p.add_argument("n", type=int)

    p = sub.add_parser("decompose", help="Euler form (odd) or Euclid form (even)")
    p.add_argument("n", type=int)

    p = sub.add_parser("grid", help="verify the formal odd perfect number model over a grid")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--kset", type=_int_list, required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--strict-t-min", type=int, default=None)

    p = sub.add_parser("bounds", help="compare I(n^2) with 2 - 5/(3q)")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--kset", type=_int_list, required=True)
    p.add_argument("--permissive", action="store_true", help="accept any k >= 1")

    p = sub.add_parser("sieve", help="exhaustive sigma-sieve search")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--predicate", choices=[x.value for x in Predicate], required=True)
    p.add_argument("--segment-size", type=int, default=DEFAULT_SEGMENT_SIZE)

    p = sub.add_parser("spoof", help="evaluate spoof sigma, e.g. 3^2,7^2,11^2,13^2,22021*")
    p.add_argument("spec")
    return parser


def main(argv: list[str] | None = None, stream: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Emitter(args.format, stream or sys.stdout)
    workers = worker_count()
    try:
        if args.command == "analyze":
            out.emit(cmd_analyze(args.n, args.rho_budget))
        elif args.command == "decompose":
            out.emit(cmd_decompose(args.n, args.rho_budget))
        elif args.command == "grid":
            summary = None
            for rec in cmd_grid(args.qmax, args.kset, args.tmax, args.strict_t_min, workers):
                out.emit(rec)
                summary = rec
            if summary["violations"]:
                return EXIT_VIOLATION
        elif args.command == "bounds":
            summary = None
            for rec in cmd_bounds(args.qmax, args.kset, args.permissive):
                out.emit(rec)
                summary = rec
            if not summary["consistent"]:
                return EXIT_VIOLATION
        elif args.command == "sieve":
            out.emit(cmd_sieve(args.bound, args.predicate, args.segment_size, workers))
        elif args.command == "spoof":
            out.emit(cmd_spoof(args.spec))
    except BudgetExceeded as exc:
        print(f"opnlab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"opnlab: verification failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"opnlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
