"""Command line front end: witness, verify, sweep and classify."""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from contextlib import nullcontext
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .numtheory import primes_upto
from .oracle import OracleBoundError, typeA_qprime
from .partitions import degree, format_exponential, parse_exponential
from .symbols import Symbol, symbol_degree_qprime
from .witness_lie import (
    TypeAContext,
    TypeBCContext,
    typeA_primes,
    typeBC_primes,
    witness_typeA,
    witness_typeBC,
)
from .witness_sn import (
    Smallness,
    VerificationError,
    classify_small_intersection,
    linear_only_triples,
    witness_alternating,
    witness_symmetric,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3
FAMILIES = ("sym", "alt", "typea", "typebc")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def witness_record(family: str, n: int, p: int, q: int, Q: int | None = None,
                   epsilon: int = 1) -> dict:
    """Build and verify one witness; returns a JSON-ready dict."""
    if family == "sym":
        w = witness_symmetric(n, p, q)
        return {"group": "S", "n": n, "p": p, "q": q,
                "partition": format_exponential(w.partition), "case": w.case_tag,
                "primes_swapped": w.primes_swapped, "degree": str(degree(w.partition))}
    if family == "alt":
        w = witness_alternating(n, p, q)
        return {"group": "A", "n": n, "p": p, "q": q,
                "partition": format_exponential(w.partition), "case": w.case_tag,
                "constituent": w.constituent.value, "degree": str(w.degree)}
    if Q is None:
        raise ValueError("--field is required for Lie type families")
    if family == "typea":
        ctx = TypeAContext.make(n, Q, epsilon, p, q)
        w = witness_typeA(ctx)
        return {"family": "A" if epsilon == 1 else "2A", "n": n, "Q": Q,
                "epsilon": epsilon, "p": p, "q": q,
                "label": format_exponential(w.partition), "case": w.case_tag,
                "subcase": "none",
                "degree_qprime": str(typeA_qprime(w.partition.parts, ctx.x))}
    if family == "typebc":
        ctx = TypeBCContext.make(n, Q, p, q)
        w = witness_typeBC(ctx)
        return {"family": "BC", "n": n, "Q": Q, "p": p, "q": q,
                "label": w.symbol.to_json(), "case": w.case_tag, "subcase": w.subcase,
                "degree_qprime": str(symbol_degree_qprime(w.symbol, Q))}
    raise ValueError(f"unknown family {family!r}")


def _witness_label(family: str, rec: dict) -> str:
    if family == "alt":
        return oracle.alt_label(parse_exponential(rec["partition"]))
    if family == "typebc":
        return str(Symbol(tuple(rec["label"]["top"]), tuple(rec["label"]["bottom"])))
    return rec.get("partition") or rec["label"]


def oracle_report(family, n, p, q, Q=None, epsilon=1):
    if family == "sym":
        return oracle.intersection_sym(n, p, q)
    if family == "alt":
        return oracle.intersection_alt(n, p, q)
    if family == "typea":
        return oracle.intersection_typeA(n, Q, epsilon, p, q)
    return oracle.intersection_typeBC(n, Q, p, q)


def _add_params(sp):
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("--field", type=int, help="the field size Q for Lie type families")
    sp.add_argument("--epsilon", type=int, default=1, choices=(1, -1))


def cmd_witness(args) -> int:
    try:
        rec = witness_record(args.family, args.n, args.p, args.q, args.field, args.epsilon)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(rec, indent=None if args.json else 2))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rec = witness_record(args.family, args.n, args.p, args.q, args.field, args.epsilon)
        report = oracle_report(args.family, args.n, args.p, args.q, args.field, args.epsilon)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (OracleBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = report.with_witness(_witness_label(args.family, rec))
    print(json.dumps(report.to_json()))
    ok = report.contains_witness and report.cardinality > 1
    return EXIT_OK if ok else EXIT_VERIFY


def sweep_tasks(family, n_min, n_max, fields=(), epsilons=(1,), prime_bound=None):
    """Parameter tuples in canonical order."""
    tasks = []
    for n in range(n_min, n_max + 1):
        if family in ("sym", "alt"):
            if n < (3 if family == "sym" else 4):
                continue
            ps = [p for p in primes_upto(n) if prime_bound is None or p <= prime_bound]
            tasks += [(family, n, p, q, None, 1) for p, q in itertools.combinations(ps, 2)]
        elif family == "typea":
            for Q in fields:
                for eps in epsilons:
                    ps = typeA_primes(n, Q, eps)
                    tasks += [(family, n, p, q, Q, eps) for p, q in itertools.combinations(ps, 2)
                              if prime_bound is None or q <= prime_bound]
        else:
            for Q in fields:
                ps = typeBC_primes(n, Q)
                tasks += [(family, n, p, q, Q, 1) for p, q in itertools.combinations(ps, 2)
                          if prime_bound is None or q <= prime_bound]
    return tasks


def run_task(task, with_oracle=False) -> dict:
    family, n, p, q, Q, eps = task
    try:
        rec = witness_record(family, n, p, q, Q, eps)
        rec["status"] = "pass"
    except (VerificationError, ValueError) as exc:
        return {"family": family, "n": n, "p": p, "q": q, "Q": Q, "epsilon": eps,
                "status": "fail", "error": str(exc)}
    if with_oracle:
        try:
            rep = oracle_report(family, n, p, q, Q, eps)
        except OracleBoundError:
            return rec
        rep = rep.with_witness(_witness_label(family, rec))
        rec["oracle_cardinality"] = rep.cardinality
        rec["oracle_contains"] = rep.contains_witness
        if not rep.contains_witness or rep.cardinality < 2:
            rec["status"] = "fail"
    return rec


def _run_oracle(task):
    return run_task(task, True)


def _run_plain(task):
    return run_task(task, False)


def run_sweep(tasks, jobs=1, with_oracle=False) -> list[dict]:
    fn = _run_oracle if with_oracle else _run_plain
    if jobs <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=8))


def _csv_row(rec):
    label = rec.get("partition", rec.get("label", ""))
    if isinstance(label, dict):
        label = json.dumps(label, separators=(",", ":"))
    group = rec.get("group", rec.get("family"))
    return [group, rec["n"], rec["p"], rec["q"], rec.get("oracle_cardinality", ""),
            rec["status"] == "pass", label]


def cmd_sweep(args) -> int:
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    fields = [int(v) for v in args.fields.split(",")] if args.fields else []
    epsilons = [int(v) for v in args.epsilons.split(",")]
    if args.family in ("typea", "typebc") and not fields:
        print("error: --fields is required for Lie type families", file=sys.stderr)
        return EXIT_USAGE
    tasks = sweep_tasks(args.family, args.n_min, args.n_max, fields, epsilons,
                        args.prime_bound)
    records = run_sweep(tasks, args.jobs, args.oracle)
    failures = sum(r["status"] != "pass" for r in records)
    summary = {"summary": True, "family": args.family, "records": len(records),
               "passed": len(records) - failures, "failed": failures}
    try:
        out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with out if args.out else nullcontext(out):
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        out.write(json.dumps(summary) + "\n")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["group", "n", "p", "q", "intersection_size",
                             "witness_found", "witness_label"])
            writer.writerows(_csv_row(r) for r in records)
    if args.out:
        print(json.dumps(summary))
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def classify_table(max_n: int, check_upto: int = 30) -> tuple[list[tuple[int, int, int]], list]:
    """LinearOnly triples up to max_n, plus any disagreement with the oracle."""
    triples = linear_only_triples(max_n)
    mismatches = []
    for n in range(4, min(max_n, check_upto) + 1):
        for p in primes_upto(n):
            for q in primes_upto(p - 1):
                predicted = classify_small_intersection(n, p, q) is Smallness.LINEAR_ONLY
                labels = set(oracle.intersection_sym(n, p, q).labels)
                actual = labels == {str(n), f"1^{n}"}
                if predicted != actual:
                    mismatches.append((n, p, q))
    return triples, mismatches


def cmd_classify(args) -> int:
    if not 4 <= args.max_n <= 60:
        print("error: --max-n must lie in [4, 60]", file=sys.stderr)
        return EXIT_USAGE
    triples, mismatches = classify_table(args.max_n, 0 if args.no_check else 30)
    for n, p, q in triples:
        print(json.dumps({"n": n, "p": p, "q": q, "class": "LinearOnly"}))
    if mismatches:
        print(f"oracle disagrees on {mismatches}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pqwitness", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("witness", help="construct and verify one witness")
    _add_params(w)
    w.add_argument("--json", action="store_true", help="compact single-line output")
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="compare a witness with the brute-force intersection")
    _add_params(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="run a constructor over a parameter grid")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--prime-bound", type=int, default=None)
    s.add_argument("--fields", default="", help="comma separated field sizes Q")
    s.add_argument("--epsilons", default="1,-1", help="comma separated signs for typea")
    s.add_argument("--oracle", action="store_true", help="also check oracle containment")
    s.add_argument("--out", help="JSON-lines output path (default stdout)")
    s.add_argument("--csv", help="optional CSV summary path")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("classify", help="list the triples with only linear characters")
    c.add_argument("--max-n", type=int, default=40)
    c.add_argument("--no-check", action="store_true", help="skip the oracle cross-check")
    c.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
