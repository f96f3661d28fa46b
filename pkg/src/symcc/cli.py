"""``symcc`` command line: compute, verify, bench, examples.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from .algebra import FactoredGF, MultiGF, series_expand
from .closed_forms import ExampleParams, example_vector, family_series
from .constraint import ConstraintVector, ValidationError
from .general import (
    DEFAULT_POINT_CAP,
    generator_matrix_t2,
    gf_multi_general,
    gf_q_general,
    validate_general,
)
from .oracle import DEFAULT_ORACLE_GUARD, count_by_weight
from .sampling import random_sum_one_vector
from .sum_one import gf_multi_t1, gf_q_t1

log = logging.getLogger("symcc")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
DEFAULT_ORACLE_SERIES = 10


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, token: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.token = token


def parse_vector(text: str, line: int | None = None) -> list[int]:
    """Parse comma- and/or whitespace-separated integers."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty vector", line=line)
    out = []
    for i, tok in enumerate(tokens, start=1):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"malformed integer {tok!r}", line=line, token=i) from None
    return out


def parse_batch(text: str) -> list[list[int]]:
    """One vector per line; blank lines and ``#`` comments are skipped."""
    vectors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        vectors.append(parse_vector(stripped, line=lineno))
    return vectors


@dataclass
class JobSpec:
    vectors: list[list[int]]
    command: str
    engine: str = "auto"
    series: int | None = None
    multi: bool = False
    fmt: str = "json"
    reduce: bool = True
    max_multi_n: int = 6
    max_oracle_weight: int = DEFAULT_ORACLE_GUARD
    max_points: int = DEFAULT_POINT_CAP
    seed: int = 0
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.series is not None and self.series < 0:
            raise ValueError("series order must be nonnegative")
        if min(self.max_multi_n, self.max_oracle_weight, self.max_points, self.jobs) < 1:
            raise ValueError("guards must be positive")


# --- engine dispatch --------------------------------------------------


def select_engine(cv: ConstraintVector, engine: str) -> str:
    if engine != "auto":
        return engine
    if cv.s == 1:
        return "t1"
    try:
        validate_general(cv)
    except ValidationError:
        return "oracle"
    return "t2"


def engine_gf(cv: ConstraintVector, engine: str, reduce: bool = True, cap: int = DEFAULT_POINT_CAP) -> FactoredGF:
    if engine == "t1":
        return gf_q_t1(cv)
    if engine == "t2":
        return gf_q_general(cv, reduce=reduce, cap=cap)
    raise ValueError(f"engine {engine!r} has no factored form")


def _multi_record(gf: MultiGF) -> list[dict]:
    return [
        {
            "numerator": [[list(m), str(c)] for m, c in t.numerator],
            "denominators": [list(v) for v in t.denominators],
        }
        for t in gf.terms
    ]


def compute_record(raw: Sequence[int], job: JobSpec) -> dict[str, Any]:
    """Everything ``compute`` reports for a single vector; raises ValidationError."""
    cv = ConstraintVector.from_raw(raw)
    engine = select_engine(cv, job.engine)
    rec: dict[str, Any] = {
        "input": list(cv.original),
        "sorted": list(cv.a),
        "s": cv.s,
        "engine": engine,
        "oracle_only": engine == "oracle",
    }
    if engine == "oracle":
        M = job.series if job.series is not None else DEFAULT_ORACLE_SERIES
        if M > job.max_oracle_weight:
            raise ValidationError(f"oracle series order {M} exceeds guard {job.max_oracle_weight}")
        rec.update(denominators=None, numerator=None, series=count_by_weight(cv, M))
        return rec
    gf = engine_gf(cv, engine, job.reduce, job.max_points)
    rec["denominators"] = list(gf.denominators)
    rec["numerator"] = [[e, str(c)] for e, c in gf.numerator.terms()]
    if job.series is not None:
        rec["series"] = series_expand(gf, job.series)
    if engine == "t2":
        M = generator_matrix_t2(cv, reduce=job.reduce)
        rec["lattice_points"] = M.det
        rec["generators"] = [list(c) for c in M.columns]
        rec["column_divisors"] = list(M.column_divisors)
    if job.multi:
        if cv.n > job.max_multi_n:
            raise ValidationError(f"n={cv.n} exceeds multivariate guard {job.max_multi_n}")
        if engine == "t1":
            mgf = gf_multi_t1(cv, n_guard=job.max_multi_n)
        else:
            mgf = gf_multi_general(cv, n_guard=job.max_multi_n, reduce=job.reduce, cap=job.max_points)
        rec["multi"] = _multi_record(mgf)
    return rec


def _safe_compute(args: tuple[Sequence[int], JobSpec]) -> dict[str, Any]:
    raw, job = args
    try:
        return compute_record(raw, job)
    except ValidationError as exc:
        return {"input": list(raw), "error": str(exc)}


def _map_ordered(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _format_text(rec: dict[str, Any]) -> str:
    if "error" in rec:
        return f"{rec['input']}: ERROR {rec['error']}"
    lines = [f"a = {rec['sorted']} (input {rec['input']}), s = {rec['s']}, engine = {rec['engine']}"]
    if rec["numerator"] is not None:
        num = " + ".join(f"{c}*q^{e}" for e, c in rec["numerator"])
        den = "".join(f"(1-q^{e})" for e in rec["denominators"])
        lines.append(f"  F(q) = ({num}) / {den}")
    if "lattice_points" in rec:
        lines.append(f"  lattice points: {rec['lattice_points']}, generators: {rec['generators']}")
    if "series" in rec:
        lines.append(f"  series: {rec['series']}")
    if "multi" in rec:
        lines.append(f"  multivariate terms: {len(rec['multi'])}")
    return "\n".join(lines)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(job: JobSpec) -> int:
    records = _map_ordered(_safe_compute, [(v, job) for v in job.vectors], job.jobs)
    if job.fmt == "json":
        text = json.dumps({"results": records}, indent=2) + "\n"
    else:
        text = "\n".join(_format_text(r) for r in records) + "\n"
    _emit(text, job.out)
    return EXIT_USAGE if any("error" in r for r in records) else EXIT_OK


def _verify_one(args: tuple[Sequence[int], JobSpec, int]) -> dict[str, Any]:
    raw, job, M = args
    cv = ConstraintVector.from_raw(raw)
    engine = select_engine(cv, job.engine)
    if engine == "oracle":
        return {"vector": list(raw), "status": "skipped", "engine": engine}
    got = series_expand(engine_gf(cv, engine, job.reduce, job.max_points), M)
    expected = count_by_weight(cv, M)
    for w, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            return {"vector": list(raw), "status": "mismatch", "engine": engine,
                    "weight": w, "expected": e, "got": g}
    return {"vector": list(raw), "status": "ok", "engine": engine}


def cmd_verify(job: JobSpec, M: int) -> int:
    """Compare engine series with the oracle; exit 1 on the first-weight mismatch of any vector."""
    if M > job.max_oracle_weight:
        log.error("max weight %d exceeds oracle guard %d", M, job.max_oracle_weight)
        return EXIT_USAGE
    try:
        reports = _map_ordered(_verify_one, [(v, job, M) for v in job.vectors], job.jobs)
    except ValidationError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    lines = []
    for r in reports:
        if r["status"] == "mismatch":
            lines.append(f"MISMATCH vector={r['vector']} engine={r['engine']} weight={r['weight']} "
                         f"expected={r['expected']} got={r['got']}")
        else:
            lines.append(f"{r['status']} vector={r['vector']} engine={r['engine']}")
    checked = sum(r["status"] != "skipped" for r in reports)
    bad = sum(r["status"] == "mismatch" for r in reports)
    skipped = len(reports) - checked
    lines.append(f"checked {checked} vectors to weight {M}: {bad} mismatches, {skipped} skipped")
    if job.fmt == "json":
        text = json.dumps({"max_weight": M, "reports": reports, "mismatches": bad}, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _emit(text, job.out)
    return EXIT_MISMATCH if bad else EXIT_OK


def bench_rows(lo: int, hi: int, seed: int, band: int = 5) -> list[tuple[int, float, int, list[int]]]:
    """Time ``gf_q_t1`` once per n on a seeded random sum-one vector (no warmup)."""
    rng = random.Random(seed)
    rows = []
    for n in range(lo, hi + 1):
        vec = random_sum_one_vector(n, rng, band)
        start = time.perf_counter()
        gf = gf_q_t1(ConstraintVector.from_raw(vec))
        millis = (time.perf_counter() - start) * 1000.0
        terms = len(gf.numerator)
        if terms > 2 ** (n - 1):
            raise AssertionError(f"n={n}: {terms} numerator terms exceed 2^(n-1)")
        rows.append((n, millis, terms, vec))
    return rows


def cmd_bench(lo: int, hi: int, seed: int, band: int, out: str | None) -> int:
    rows = bench_rows(lo, hi, seed, band)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "millis", "terms"])
    for n, millis, terms, vec in rows:
        log.info("n=%d vector=%s", n, vec)
        writer.writerow([n, f"{millis:.3f}", terms])
    _emit(buf.getvalue(), out)
    return EXIT_OK


def cmd_examples(p: ExampleParams, M: int, fmt: str, out: str | None) -> int:
    cv = example_vector(p)
    closed = family_series(p, M)
    engine = series_expand(gf_q_t1(cv), M)
    rec = {
        "family": p.family,
        "params": {k: v for k, v in (("n", p.n), ("b", p.b), ("k", p.k), ("l", p.l)) if v is not None},
        "vector": list(cv.a),
        "closed_form_series": closed,
        "engine_series": engine,
        "match": closed == engine,
    }
    if fmt == "json":
        text = json.dumps(rec, indent=2) + "\n"
    else:
        text = (f"family {p.family} {rec['params']}: a = {rec['vector']}\n"
                f"  closed form: {closed}\n  engine:      {engine}\n  match: {rec['match']}\n")
    _emit(text, out)
    return EXIT_OK if rec["match"] else EXIT_MISMATCH


# --- argument parsing -------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if not 1 <= lo_i <= hi_i:
        raise argparse.ArgumentTypeError(f"need 1 <= LO <= HI, got {text!r}")
    return lo_i, hi_i


def _glue_vector_args(argv: list[str]) -> list[str]:
    # "--a -1,1,1" would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--a" and i + 1 < len(argv):
            out.append(f"--a={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symcc", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a", action="append", default=[], metavar="INTS",
                       help="constraint vector, e.g. --a=-1,1,1 (repeatable)")
        p.add_argument("--input", help="batch file, one vector per line, '#' comments")
        p.add_argument("--engine", choices=["auto", "t1", "t2", "oracle"], default="auto")
        p.add_argument("--format", dest="fmt", choices=["json", "text"], default="json")
        p.add_argument("--no-reduce", dest="reduce", action="store_false",
                       help="skip gcd reduction of the generator columns")
        p.add_argument("--max-oracle-weight", type=int, default=DEFAULT_ORACLE_GUARD)
        p.add_argument("--max-points", type=int, default=DEFAULT_POINT_CAP)
        p.add_argument("--jobs", type=int, default=1, help="worker processes for batches")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("compute", help="generating functions for constraint vectors")
    add_common(p)
    p.add_argument("--series", type=int, metavar="M", help="also expand the series to q^M")
    p.add_argument("--multi", action="store_true", help="include the multivariate term list")
    p.add_argument("--max-multi-n", type=int, default=6)

    p = sub.add_parser("verify", help="check engine series against brute force")
    add_common(p)
    p.add_argument("--max-weight", type=int, required=True, metavar="M")
    p.set_defaults(fmt="text")

    p = sub.add_parser("bench", help="time the sum-one engine over a range of n")
    p.add_argument("--n-range", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--band", type=int, default=5, help="entries drawn from [-band, band]")
    p.add_argument("--out", help="CSV path (stdout if omitted)")

    p = sub.add_parser("examples", help="closed-form families against the engine")
    p.add_argument("--family", type=int, choices=[1, 2, 3, 4], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--series", type=int, default=20, metavar="M")
    p.add_argument("--format", dest="fmt", choices=["json", "text"], default="json")
    p.add_argument("--out")
    return parser


def _collect_vectors(args: argparse.Namespace) -> list[list[int]]:
    vectors = [parse_vector(t) for t in args.a]
    if args.input:
        vectors += parse_batch(Path(args.input).read_text())
    return vectors


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_vector_args(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "bench":
            lo, hi = args.n_range
            return cmd_bench(lo, hi, args.seed, args.band, args.out)
        if args.command == "examples":
            p = ExampleParams(args.family, args.n, args.b, args.k, args.l)
            return cmd_examples(p, args.series, args.fmt, args.out)
        job = JobSpec(
            vectors=_collect_vectors(args),
            command=args.command,
            engine=args.engine,
            series=getattr(args, "series", None),
            multi=getattr(args, "multi", False),
            fmt=args.fmt,
            reduce=args.reduce,
            max_multi_n=getattr(args, "max_multi_n", 6),
            max_oracle_weight=args.max_oracle_weight,
            max_points=args.max_points,
            out=args.out,
            jobs=args.jobs,
        )
        if args.command == "compute":
            if not job.vectors:
                log.error("no vectors given (use --a or --input)")
                return EXIT_USAGE
            return cmd_compute(job)
        return cmd_verify(job, args.max_weight)
    except (ParseError, ValueError, OSError) as exc:
        print(f"symcc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
