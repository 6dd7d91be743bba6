"""Command-line entry point: ``permpat <subcommand> ...``.

Exit status: 0 success, 1 computation error (or a failed verify check),
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import secrets
import sys
from dataclasses import dataclass

from . import asymptotics, counts, stochastic, structure
from .errors import PermPatError
from .perm import ContainmentKind, Permutation, count_occurrences, occurrences
from .perm import contains as perm_contains
from .series import FormalPowerSeries
from .verify import SUITES, verify_suite

KINDS = [k.value for k in ContainmentKind]


@dataclass
class CommandConfig:
    """Parsed invocation; built from argparse so unknown flags never get here."""

    subcommand: str
    args: argparse.Namespace

    @property
    def fmt(self) -> str:
        return getattr(self.args, "format", "json")


def _seed(text: str) -> int:
    if text == "random":
        return secrets.randbits(64)
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer or 'random', got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permpat", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write the report to this file instead of stdout")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def pattern_kind(p, pattern_required=True):
        p.add_argument("--pattern", type=_perm, required=pattern_required, help="e.g. 1342 or '1 3 4 2'")
        p.add_argument("--kind", choices=KINDS, default="classic", help="containment notion (default classic)")

    p = sub.add_parser("count", help="number of n-permutations avoiding a pattern")
    pattern_kind(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in counts.Method], default="brute",
                   help="formula, gf (generating function) or brute (default)")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("table", help="avoider counts for n = 1..n-max")
    pattern_kind(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in counts.Method] + ["best"], default="best",
                   help="best picks formula, then gf, then brute (default)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    for name, helptext in (("occurrences", "list occurrences of a pattern"),
                           ("contains", "does the permutation contain the pattern")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--perm", type=_perm, required=True)
        pattern_kind(p)
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("biject", help="apply the Simion-Schmidt map or its inverse")
    p.add_argument("--map", choices=["simion-schmidt", "simion-schmidt-inverse"], default="simion-schmidt")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("classify", help="rising / extendible classification of length-k patterns")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extendible", action="store_true", help="list only extendible patterns")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("normalize", help="swap special 1324 copies until the permutation avoids 1324")
    p.add_argument("--perm", type=_perm, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("simulate", help="Monte Carlo moments of copies of 12...k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="classic")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=_seed, default=0, help="integer (default 0) or 'random'")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dump", help="also write per-trial counts to this CSV file")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("poisson-check", help="succession count versus Poisson(1)")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated, e.g. 6,8,10")
    p.add_argument("--mode", choices=["exact", "monte-carlo"], default="exact")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("growth", help="n-th root growth sequence")
    pattern_kind(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("roots", help="growth constants by bisection")
    p.add_argument("--which", choices=[c.value for c in asymptotics.TightConstant] + ["omega"], required=True)
    p.add_argument("--k", type=int, default=3, help="for --which omega: root of f_k")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("--name", choices=["h1342", "fk", "tight-monotone", "tight132", "jackson"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--format", choices=["text", "csv", "json"], default="csv")

    p = sub.add_parser("verify", help="run the acceptance checks and print a PASS/FAIL ledger")
    p.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _series(args) -> tuple[FormalPowerSeries | None, list[int] | None]:
    N, k = args.order, args.k
    if args.name == "h1342":
        return counts.gf_1342(N), None
    if args.name == "fk":
        return counts.f_k_series(k, N), None
    if args.name == "tight-monotone":
        return None, counts.tight_monotone_counts(k, N)
    if args.name == "tight132":
        return None, counts.tight_132_counts(N)
    return None, counts.very_tight_monotone_counts(k, N)


def dispatch(config: CommandConfig) -> tuple[int, str]:
    """Run one subcommand; returns (exit status, report text)."""
    a, fmt = config.args, config.fmt
    cmd = config.subcommand
    if cmd == "count":
        rep = counts.count(a.n, a.pattern, a.kind, a.method)
        return 0, _json(rep.to_dict()) if fmt == "json" else f"{rep.count}\n"
    if cmd == "table":
        if a.method == "best":
            reps = [counts.best_count(n, a.pattern, a.kind) for n in range(1, a.n_max + 1)]
        else:
            reps = counts.count_sequence(a.pattern, a.kind, a.n_max, a.method)
        if fmt == "csv":
            return 0, _csv(["n", "pattern", "kind", "count", "method"],
                           [(r.n, str(r.pattern), r.kind.value, r.count, r.method.value) for r in reps])
        return 0, _json([r.to_dict() for r in reps])
    if cmd in ("occurrences", "contains"):
        kind = ContainmentKind.parse(a.kind)
        if cmd == "contains":
            value = perm_contains(a.perm, a.pattern, kind)
            report = {"perm": str(a.perm), "pattern": str(a.pattern), "kind": kind.value, "contains": value}
            return 0, _json(report) if fmt == "json" else f"{str(value).lower()}\n"
        occ = occurrences(a.perm, a.pattern, kind)
        report = {"perm": str(a.perm), "pattern": str(a.pattern), "kind": kind.value,
                  "count": count_occurrences(a.perm, a.pattern, kind), "positions": [list(o) for o in occ]}
        return 0, _json(report) if fmt == "json" else f"{report['count']}\n"
    if cmd == "biject":
        fn = structure.simion_schmidt if a.map == "simion-schmidt" else structure.simion_schmidt_inverse
        out = fn(a.perm)
        return 0, _json({"map": a.map, "input": str(a.perm), "output": str(out)}) if fmt == "json" else f"{out}\n"
    if cmd == "classify":
        rows = []
        for q in counts.all_patterns(a.k):
            if not structure.is_rising(q):
                continue
            s = structure.extendible_overlap(q)
            if a.extendible and s is None:
                continue
            rows.append({"pattern": str(q), "extendible": s is not None, "overlap": s})
        if fmt == "csv":
            return 0, _csv(["pattern", "extendible", "overlap"],
                           [(r["pattern"], r["extendible"], r["overlap"] or "") for r in rows])
        return 0, _json({"k": a.k, "extendible_only": a.extendible, "patterns": rows})
    if cmd == "normalize":
        trace: list = []
        out = structure.normalize_to_1324_avoider(a.perm, trace)
        report = {"input": str(a.perm), "output": str(out),
                  "signature": structure.class_signature(a.perm).pattern_string(),
                  "steps": [{"occurrence": list(occ), "after": str(p)} for occ, p in trace]}
        if fmt == "text":
            lines = [str(a.perm)] + [f"swap {occ[1]},{occ[2]} of {list(occ)} -> {p}" for occ, p in trace]
            return 0, "\n".join(lines) + "\n"
        return 0, _json(report)
    if cmd == "simulate":
        s = stochastic.copy_count_experiment(a.n, a.k, a.kind, a.trials, stochastic.RandomSource(a.seed),
                                             workers=a.workers, keep_counts=bool(a.dump))
        if a.dump:
            with open(a.dump, "w", newline="") as fh:
                fh.write(_csv(["trial", "copies"], enumerate(s.counts.tolist())))
        d = s.to_dict()
        if fmt == "text":
            return 0, "".join(f"{key}: {d[key]}\n" for key in sorted(d))
        return 0, _json(d)
    if cmd == "poisson-check":
        rep = stochastic.succession_poisson_check(a.n, a.mode, a.trials, stochastic.RandomSource(a.seed))
        return 0, _json(rep)
    if cmd == "growth":
        g = asymptotics.growth_sequence(a.pattern, a.kind, a.n_max)
        if fmt == "csv":
            return 0, _csv(["n", "count", "root", "method"],
                           [(n, c, repr(r), m) for (n, c, r), m in zip(g.values, g.methods)])
        return 0, _json(g.to_dict())
    if cmd == "roots":
        if a.which == "omega":
            r = asymptotics.smallest_positive_root_fk(a.k, a.tol)
        else:
            r = asymptotics.tight_constant_roots(a.which, a.tol)
        d = r.to_dict()
        d["which"] = a.which if a.which != "omega" else f"omega_{a.k}"
        d["method"] = "bisection"
        return 0, _json(d)
    if cmd == "series":
        series, seq = _series(a)
        if series is not None:
            if fmt == "text":
                return 0, str(series) + "\n"
            if fmt == "csv":
                return 0, _csv(["exponent", "numerator", "denominator"], series.csv_rows())
            return 0, _json({"name": a.name, "order": series.order,
                             "coefficients": [str(c) for c in series.coefficients]})
        # sequences are reported as the integer counts they encode
        if fmt == "csv":
            return 0, _csv(["n", "count"], enumerate(seq))
        if fmt == "text":
            return 0, " ".join(map(str, seq)) + "\n"
        return 0, _json({"name": a.name, "k": a.k, "counts": seq})
    if cmd == "verify":
        ledger = verify_suite(a.suite, a.seed)
        status = 0 if all(c.passed for c in ledger) else 1
        if fmt == "json":
            return status, _json([c.to_dict() for c in ledger])
        width = max(len(c.name) for c in ledger)
        lines = [f"{c.status}  {c.name:<{width}}  expected={c.expected}  actual={c.actual}" for c in ledger]
        passed = sum(c.passed for c in ledger)
        lines.append(f"{passed}/{len(ledger)} checks passed")
        return status, "\n".join(lines) + "\n"
    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CommandConfig(args.subcommand, args)
    try:
        status, text = dispatch(config)
    except PermPatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: ValueError: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
