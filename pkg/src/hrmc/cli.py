"""Command line front end.

Subcommands:

* count       -- enumerate Hermitian matrices, census by rank, compare to
                 the closed form
* eigen       -- print the eigenvalue table, cross-checking both routes
* wd          -- rank-weight distribution of a code given as JSON
* dual        -- all dual-distribution routes for a code, plus moments
* macwilliams -- transform a raw distribution by both routes
* mhrd        -- closed-form distribution of a maximal code
* verify      -- run the identity suites and report per-suite counts

Exit codes: 0 on success, 1 when independently computed routes disagree
(or a verification suite fails), 2 on unusable input or an enumeration
that would exceed the guard. JSON output is canonical (sorted keys, no
whitespace) with every integer rendered as a decimal string, so repeated
runs and different worker counts produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .codes import (
    code_from_jsonable,
    dual_code,
    codeword_from_index,
    weight_distribution,
)
from .errors import (
    EnumerationTooLarge,
    EvenMinimumDistance,
    HrmcError,
    NonPrimeModulus,
    ParseError,
    ReducibleModulus,
    RouteMismatch,
    UnsupportedField,
    UnsupportedSize,
)
from .fields import Field, make_field
from .hermitian import (
    DEFAULT_GUARD,
    hermitian_from_index,
    rank,
    total_hermitian,
)
from .macwilliams import (
    build_eigen_table,
    full_space_distribution,
    krawtchouk_C,
    macwilliams_eigen,
    macwilliams_transform,
    mhrd_distribution,
    moment_q,
    moment_qinv,
)
from .negq import NegQContext, _prime_power_parts
from .verify import run_verification

USAGE_ERRORS = (ParseError, EnumerationTooLarge, UnsupportedField,
                UnsupportedSize, NonPrimeModulus, ReducibleModulus,
                EvenMinimumDistance)


@dataclass
class RunConfig:
    enumeration_guard: int = DEFAULT_GUARD
    rng_seed: int = 0
    worker_count: int = 1
    output_format: str = "table"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        if getattr(args, "guard", None) is not None:
            guard = args.guard
        else:
            guard = int(os.environ.get("HRMC_GUARD") or DEFAULT_GUARD)
        return cls(
            enumeration_guard=guard,
            rng_seed=getattr(args, "seed", 0) or 0,
            worker_count=max(1, getattr(args, "workers", 1) or 1),
            output_format=getattr(args, "format", "table") or "table",
        )


def _field_for_q(q: int) -> Field:
    parts = _prime_power_parts(q)
    if parts is None:
        raise UnsupportedField(f"q={q} is not a prime power")
    try:
        return make_field(*parts)
    except UnsupportedSize as exc:
        raise UnsupportedField(str(exc)) from exc


# ------------------------------------------------------------- output

def _stringify(obj):
    """Render every integer (however large) as a decimal string."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)  # "p/q" for the rare legitimately rational value
    if isinstance(obj, (list, tuple)):
        return [_stringify(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    return obj


def emit(payload: dict, config: RunConfig, table_lines) -> None:
    if config.output_format == "json":
        print(json.dumps(_stringify(payload), sort_keys=True,
                         separators=(",", ":")))
    else:
        for line in table_lines:
            print(line)


# ------------------------------------------------------------- workers

def _census_chunk(task: tuple) -> list[int]:
    p, m, modulus, t, start, stop = task
    field = make_field(p, m, modulus)
    counts = [0] * (t + 1)
    for index in range(start, stop):
        counts[rank(hermitian_from_index(field, t, index))] += 1
    return counts


def _wd_chunk(task: tuple) -> list[int]:
    code_json, start, stop = task
    code = code_from_jsonable(code_json)
    counts = [0] * (code.t + 1)
    for index in range(start, stop):
        counts[rank(codeword_from_index(code, index))] += 1
    return counts


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    step = (total + workers - 1) // workers
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_partitioned(worker, tasks: list[tuple], workers: int,
                     width: int) -> list[int]:
    if workers <= 1 or len(tasks) <= 1:
        results = [worker(t) for t in tasks]
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            results = pool.map(worker, tasks)
    combined = [0] * width
    for part in results:
        for i, c in enumerate(part):
            combined[i] += c
    return combined


# ------------------------------------------------------------- commands

def cmd_count(args, config: RunConfig) -> int:
    field = _field_for_q(args.q)
    t = args.t
    total = total_hermitian(field, t)
    if total > config.enumeration_guard:
        raise EnumerationTooLarge(
            f"{total} matrices exceed the enumeration guard "
            f"{config.enumeration_guard}")
    tasks = [(field.p, field.m, field.modulus_poly, t, lo, hi)
             for lo, hi in _chunks(total, config.worker_count)]
    counts = _run_partitioned(_census_chunk, tasks, config.worker_count, t + 1)
    closed = list(full_space_distribution(NegQContext(field.q), t))
    match = counts == closed
    payload = {"q": field.q, "t": t, "counts": counts,
               "closed_form": closed, "match": match}
    lines = [f"rank census, q={field.q} t={t} ({total} matrices)"]
    lines += [f"  rank {r}: {c}" for r, c in enumerate(counts)]
    lines.append(f"closed form: {closed}")
    lines.append("MATCH" if match else "MISMATCH")
    emit(payload, config, lines)
    return 0 if match else 1


def cmd_eigen(args, config: RunConfig) -> int:
    ctx = NegQContext(args.q)
    table = build_eigen_table(ctx, args.t)
    for x in range(args.t + 1):
        for k in range(args.t + 1):
            alt = krawtchouk_C(ctx, k, x, args.t)
            if table.values[x][k] != alt:
                raise RouteMismatch(
                    f"eigen routes differ at x={x} k={k}: "
                    f"{table.values[x][k]} vs {alt}")
    payload = table.to_jsonable()
    lines = [f"eigenvalue table, q={args.q} t={args.t} (both routes agree)"]
    lines += ["  " + " ".join(f"{v:>10}" for v in row) for row in table.values]
    emit(payload, config, lines)
    return 0


def _load_code(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        return code_from_jsonable(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, HrmcError):
            raise
        raise ParseError(f"cannot read code from {path}: {exc}") from exc


def cmd_wd(args, config: RunConfig) -> int:
    code = _load_code(args.input)
    if code.size > config.enumeration_guard:
        raise EnumerationTooLarge(
            f"{code.size} codewords exceed the enumeration guard "
            f"{config.enumeration_guard}")
    if config.worker_count > 1 and code.k > 0:
        tasks = [(code.to_jsonable(), lo, hi)
                 for lo, hi in _chunks(code.size, config.worker_count)]
        counts = _run_partitioned(_wd_chunk, tasks, config.worker_count,
                                  code.t + 1)
        wd = {"q": code.field.q, "t": code.t, "k": code.k,
              "counts": [str(c) for c in counts]}
    else:
        wd = weight_distribution(code, config.enumeration_guard).to_jsonable()
    lines = [f"weight distribution, q={wd['q']} t={wd['t']} k={wd['k']}",
             "  " + " ".join(str(c) for c in wd["counts"])]
    emit(wd, config, lines)
    return 0


def cmd_dual(args, config: RunConfig) -> int:
    code = _load_code(args.input)
    guard = config.enumeration_guard
    ctx = NegQContext(code.field.q)
    t = code.t
    primal = weight_distribution(code, guard)
    dual = dual_code(code)
    brute = weight_distribution(dual, guard)
    eigen = macwilliams_eigen(ctx, primal.counts, code.size, t)
    transform = macwilliams_transform(ctx, primal.counts, code.size, t)
    match = eigen == brute.counts == transform
    phis = [args.phi] if args.phi is not None else list(range(t + 1))
    moments = []
    moments_ok = True
    for phi in phis:
        m1 = moment_q(ctx, primal.counts, brute.counts,
                      (code.size, dual.size), t, phi)
        m2 = moment_qinv(ctx, primal.counts, brute.counts,
                         (code.size, dual.size), t, phi)
        ok = m1["lhs"] == m1["rhs"] and m2["lhs"] == m2["rhs"]
        moments_ok = moments_ok and ok
        moments.append({"phi": phi, "q_lhs": m1["lhs"], "q_rhs": m1["rhs"],
                        "qinv_lhs": m2["lhs"], "qinv_rhs": m2["rhs"],
                        "match": ok})
    payload = {
        "code": primal.to_jsonable(),
        "dual_brute": brute.to_jsonable(),
        "dual_eigen": list(eigen),
        "dual_transform": list(transform),
        "match": match,
        "moments": moments,
    }
    lines = [
        f"code: q={ctx.q} t={t} k={code.k} counts={list(primal.counts)}",
        f"dual (enumerated): k={dual.k} counts={list(brute.counts)}",
        f"dual (eigen route): {list(eigen)}",
        f"dual (transform route): {list(transform)}",
        "PASS" if match else "FAIL",
    ]
    for m in moments:
        lines.append(
            f"moment phi={m['phi']}: q {m['q_lhs']} = {m['q_rhs']}, "
            f"reciprocal {m['qinv_lhs']} = {m['qinv_rhs']} "
            f"[{'ok' if m['match'] else 'MISMATCH'}]")
    emit(payload, config, lines)
    return 0 if match and moments_ok else 1


def _parse_dist(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad distribution {text!r}: {exc}") from exc


def cmd_macwilliams(args, config: RunConfig) -> int:
    ctx = NegQContext(args.q)
    counts = _parse_dist(args.dist)
    if len(counts) != args.t + 1:
        raise ParseError(
            f"need {args.t + 1} comma-separated counts, got {len(counts)}")
    eigen = macwilliams_eigen(ctx, counts, args.size, args.t)
    transform = macwilliams_transform(ctx, counts, args.size, args.t)
    if eigen != transform:
        raise RouteMismatch(f"routes disagree: {eigen} vs {transform}")
    payload = {"q": args.q, "t": args.t, "size": args.size,
               "input": counts, "dual": list(eigen)}
    lines = [f"dual distribution, q={args.q} t={args.t} |C|={args.size}",
             f"  {list(eigen)} (both routes agree)"]
    emit(payload, config, lines)
    return 0


def cmd_mhrd(args, config: RunConfig) -> int:
    ctx = NegQContext(args.q)
    dual_size = args.q ** (args.t * (args.d - 1))
    counts = mhrd_distribution(ctx, args.t, args.d, dual_size)
    payload = {"q": args.q, "t": args.t, "d": args.d,
               "dual_size": dual_size, "counts": list(counts)}
    lines = [f"maximal-code distribution, q={args.q} t={args.t} d={args.d}",
             f"  {list(counts)}"]
    emit(payload, config, lines)
    return 0


def cmd_verify(args, config: RunConfig) -> int:
    field = _field_for_q(args.q)
    results = run_verification(field, args.t, args.trials, config.rng_seed,
                               config.enumeration_guard)
    all_ok = all(r.ok for r in results)
    payload = {
        "q": args.q, "t": args.t, "trials": args.trials,
        "seed": config.rng_seed,
        "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                    "failures": r.failures} for r in results],
        "ok": all_ok,
    }
    lines = []
    for r in results:
        status = "ok" if r.ok else "FAIL"
        lines.append(f"{r.name:<22} {r.passed:>6} passed {r.failed:>4} failed  {status}")
        for f in r.failures:
            lines.append(f"    {f}")
    lines.append("ALL SUITES PASSED" if all_ok else "SUITE FAILURES")
    emit(payload, config, lines)
    return 0 if all_ok else 1


# ------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrmc",
        description="Exact computations for Hermitian rank-metric codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, seed=False, workers=True):
        p.add_argument("--guard", type=int, default=None,
                       help="enumeration guard (default: HRMC_GUARD or 2^24)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        if workers:
            p.add_argument("--workers", type=int, default=1)
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", help="rank census of all Hermitian matrices")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    common(p)

    p = sub.add_parser("eigen", help="eigenvalue table by two routes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    common(p, workers=False)

    p = sub.add_parser("wd", help="weight distribution of a code")
    p.add_argument("--input", required=True, help="code JSON file")
    common(p)

    p = sub.add_parser("dual", help="dual distribution by three routes")
    p.add_argument("--input", required=True, help="code JSON file")
    p.add_argument("--phi", type=int, default=None,
                   help="restrict the moment table to one phi")
    common(p, workers=False)

    p = sub.add_parser("macwilliams", help="transform a raw distribution")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--dist", required=True, help="comma-separated counts")
    p.add_argument("--size", type=int, required=True, help="code size")
    common(p, workers=False)

    p = sub.add_parser("mhrd", help="closed-form maximal-code distribution")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="minimum distance (odd)")
    common(p, workers=False)

    p = sub.add_parser("verify", help="run the identity suites")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    common(p, seed=True)

    return parser


_COMMANDS = {
    "count": cmd_count,
    "eigen": cmd_eigen,
    "wd": cmd_wd,
    "dual": cmd_dual,
    "macwilliams": cmd_macwilliams,
    "mhrd": cmd_mhrd,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig.from_args(args)
    try:
        return _COMMANDS[args.command](args, config)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HrmcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
