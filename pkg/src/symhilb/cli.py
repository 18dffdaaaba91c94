"""Command-line front end.

Results go to stdout, progress and diagnostics to stderr.  Exit codes:
0 success, 1 verification or criterion failure, 2 usage error.  With a
fixed seed every subcommand's output is byte-identical across runs; the
`repro` report is the one exception since it embeds wall-clock timings.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .bounds import bound_scan, corollary_bound
from .elimination import QuadricSystem, check_pivots
from .hilbert import final_system_cached, hilbert_function, hilbert_table, pluecker_system
from .linalg import STREAM_PRIMES
from .partitions import lr_product, schur_dim
from .projector import generate_C
from .reducibility import (build_family_ideal, colength_check, family_dimension,
                           non_radical_check, random_family, recover_family,
                           reducibility_witness)
from .repro import run_all
from .symfun import SchurExpansion, sym_plethysm

DEFAULT_SEED = 1729


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
        raise argparse.ArgumentTypeError(f"parts must be weakly decreasing: {text!r}")
    return parts


def _print(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {out}")
    else:
        print(text)


def _expansion_json(expansion) -> dict:
    return {"schema": "symhilb-expansion/1", "d": expansion.d,
            "terms": expansion.to_json_dict()}


def _expansion_table(expansion) -> str:
    lines = [f"{','.join(map(str, lam)) or '0'}: {m}"
             for lam, m in sorted(expansion.terms.items(), reverse=True)]
    lines.append(f"dimension {expansion.dimension()}")
    return "\n".join(lines)


def cmd_dims(args) -> int:
    dim = schur_dim(args.lam, args.d)
    if args.format == "json":
        _print(json.dumps({"schema": "symhilb-dim/1", "lambda": list(args.lam),
                           "d": args.d, "dim": dim}), args.out)
    else:
        _print(str(dim), args.out)
    return 0


def cmd_lr(args) -> int:
    terms = lr_product(args.lam, args.mu, args.d)
    expansion = SchurExpansion(d=args.d, terms=terms)
    if args.format == "json":
        _print(json.dumps(_expansion_json(expansion)), args.out)
    else:
        _print(_expansion_table(expansion), args.out)
    return 0


def cmd_plethysm(args) -> int:
    expansion = sym_plethysm(args.r, args.lam, args.d)
    if args.format == "json":
        _print(json.dumps(_expansion_json(expansion)), args.out)
    else:
        _print(_expansion_table(expansion), args.out)
    return 0


def _terms_json(poly, index: dict) -> list:
    out = []
    for mon, coef in poly.terms.items():
        out.append({"vars": [index[v] for v in mon],
                    "num": str(coef.numerator), "den": str(coef.denominator)})
    out.sort(key=lambda t: (len(t["vars"]), t["vars"]))
    return out


def cmd_equations(args) -> int:
    gens = generate_C(args.d)
    variables = sorted({v for g in gens for v in g.poly.variables()})
    index = {v: i for i, v in enumerate(variables)}
    if args.format == "json":
        doc = {
            "schema": "symhilb-generators/1",
            "d": args.d,
            "variables": [v.to_json_dict() for v in variables],
            "generators": [{"label": g.label(),
                            "a": g.a, "j": g.j, "i": g.i, "k": g.k,
                            "terms": _terms_json(g.poly, index)}
                           for g in gens],
        }
        _print(json.dumps(doc, indent=1), args.out)
    else:
        lines = [g.label() for g in gens]
        lines.append(f"{len(gens)} generators in {len(variables)} variables")
        _print("\n".join(lines), args.out)
    return 0


def cmd_eliminate(args) -> int:
    if args.check_pivots:
        ok = check_pivots(3)
        print(f"pivot independence at d=3: {'ok' if ok else 'FAILED'}")
        if not ok:
            return 1
    system = final_system_cached(args.d)
    if args.format == "json" or args.out:
        text = json.dumps(system.to_json_dict(), indent=1)
        _print(text, args.out)
    else:
        print(f"d={system.d}: {len(system.quadrics)} quadrics "
              f"in {system.n_variables} variables")
    return 0


def _load_system(args) -> QuadricSystem:
    if args.system:
        return QuadricSystem.load(args.system)
    return final_system_cached(args.d)


def cmd_hilbert(args) -> int:
    system = _load_system(args)
    primes = STREAM_PRIMES if args.prime == "auto" else (int(args.prime),)
    if args.r is not None:
        values = {args.r: hilbert_function(system, args.r, mode=args.mode,
                                           primes=primes, force=args.force)}
    else:
        table = hilbert_table(system, args.rmax, mode=args.mode,
                              primes=primes, force=args.force)
        values = dict(enumerate(table))
    if args.format == "json":
        doc = {"schema": "symhilb-hilbert/1", "d": system.d,
               "n_variables": system.n_variables, "mode": args.mode,
               "values": {str(r): h for r, h in sorted(values.items())}}
        _print(json.dumps(doc), args.out)
    elif args.format == "csv":
        lines = ["r,h"] + [f"{r},{h}" for r, h in sorted(values.items())]
        _print("\n".join(lines), args.out)
    else:
        _print("\n".join(f"H({r}) = {h}" for r, h in sorted(values.items())), args.out)
    return 0


def cmd_bound(args) -> int:
    if args.k is not None:
        rep = corollary_bound(args.d, args.r, args.k)
        if args.format == "json":
            doc = {"schema": "symhilb-bound/1", "d": args.d, "r": args.r,
                   "bounds": {str(args.k): rep.value}, "best_k": args.k,
                   "best": rep.value,
                   "admitted": [{"lambda": list(lam), "mult": m, "dim": dim}
                                for lam, m, dim in rep.admitted]}
            _print(json.dumps(doc), args.out)
        else:
            _print(rep.summary(), args.out)
        return 0
    row = bound_scan(args.d, args.r)[-1]
    if args.format == "json":
        doc = {"schema": "symhilb-bound/1", "d": args.d, "r": args.r,
               "bounds": {str(k): v for k, v in sorted(row.bounds.items())},
               "best_k": row.best_k, "best": row.best}
        _print(json.dumps(doc), args.out)
    else:
        lines = [f"d={args.d} r={args.r} k={k}: bound {v}"
                 for k, v in sorted(row.bounds.items())]
        lines.append(f"best: k={row.best_k} -> {row.best}")
        _print("\n".join(lines), args.out)
    return 0


def cmd_reducibility(args) -> int:
    rng = random.Random(args.seed)
    witness = reducibility_witness(args.d, rng)
    c = args.c if args.c is not None else witness.c
    fdim = family_dimension(args.d, c)
    rdim = args.d * (args.d + 1)
    rel = ">" if fdim > rdim else ("=" if fdim == rdim else "<")
    verdict = witness.verdict if c == witness.c else \
        ("STRICT" if fdim > rdim else ("BOUNDARY" if fdim == rdim else "NONE"))
    family = random_family(args.d, c, rng)
    trials_ok = 0
    for _ in range(args.trials):
        spec = random_family(args.d, c, rng)
        ideal = build_family_ideal(spec)
        if (colength_check(ideal) == args.d + 1
                and recover_family(ideal, c) == spec
                and non_radical_check(ideal)):
            trials_ok += 1
    if args.format == "json":
        doc = {"schema": "symhilb-reducibility/1", "d": args.d, "c": c,
               "family_dim": fdim, "radical_dim": rdim, "verdict": verdict,
               "trials": {"count": args.trials, "ok": trials_ok},
               "family": family.to_json_dict()}
        _print(json.dumps(doc), args.out)
    else:
        lines = [f"{verdict}, {fdim} {rel} {rdim}"]
        if args.trials:
            lines.append(f"random members: {trials_ok}/{args.trials} verified")
        _print("\n".join(lines), args.out)
    return 0 if trials_ok == args.trials else 1


def cmd_pluecker(args) -> int:
    system = pluecker_system()
    if args.rmax is not None:
        table = hilbert_table(system, args.rmax)
        if args.format == "json":
            doc = {"schema": "symhilb-hilbert/1", "d": system.d,
                   "n_variables": system.n_variables, "mode": "modular",
                   "values": {str(r): h for r, h in enumerate(table)}}
            _print(json.dumps(doc), args.out)
        else:
            _print("\n".join(f"H({r}) = {h}" for r, h in enumerate(table)), args.out)
        return 0
    if args.format == "json" or args.out:
        _print(json.dumps(system.to_json_dict(), indent=1), args.out)
    else:
        print(f"{len(system.quadrics)} quadrics in {system.n_variables} variables")
    return 0


def cmd_repro(args) -> int:
    threads = args.threads or int(os.environ.get("SYMHILB_THREADS", "1"))
    results = run_all(args.seed, args.extended, threads=threads)
    ok = all(r.ok for r in results)
    if args.format == "json":
        doc = {
            "schema": "symhilb-report/1",
            "seed": args.seed,
            "extended": args.extended,
            "ok": ok,
            "criteria": [{"id": r.cid, "name": r.name, "ok": r.ok,
                          "seconds": round(r.seconds, 3), "detail": r.detail}
                         for r in results],
        }
        _print(json.dumps(doc, indent=1), args.out)
    else:
        lines = [f"| {'#':>2} | {'criterion':<24} | {'status':<6} | {'time':>8} |",
                 f"|{'-' * 4}|{'-' * 26}|{'-' * 8}|{'-' * 10}|"]
        for r in results:
            status = "pass" if r.ok else "FAIL"
            lines.append(f"| {r.cid:>2} | {r.name:<24} | {status:<6} "
                         f"| {r.seconds:>7.1f}s |")
        lines.append("")
        for r in results:
            lines.append(f"{r.cid}. {r.name}: {r.detail}")
        _print("\n".join(lines), args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symhilb",
        description="Symmetric subschemes of Hilbert schemes of points: "
                    "equations, Hilbert functions, bounds, and reducibility.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("table", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write the result to a file")

    p = sub.add_parser("dims", help="dimension of an irreducible GL(d) module")
    p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True,
                   metavar="L1,L2,...")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("lr", help="tensor product decomposition")
    p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True,
                   metavar="L1,L2,...")
    p.add_argument("--mu", type=_parse_partition, required=True, metavar="M1,M2,...")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_lr)

    p = sub.add_parser("plethysm", help="symmetric power decomposition")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True,
                   metavar="L1,L2,...")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_plethysm)

    p = sub.add_parser("equations", help="commutation generators of the ideal")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_equations)

    p = sub.add_parser("eliminate", help="eliminated diagonal-free quadric system")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--check-pivots", action="store_true",
                   help="verify pivot-choice independence (d=3)")
    common(p)
    p.set_defaults(fn=cmd_eliminate)

    p = sub.add_parser("hilbert", help="Hilbert function of a quadric system")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--system", help="QuadricSystem JSON file")
    src.add_argument("--d", type=int, default=3)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--r", type=int, help="single degree instead of a table")
    p.add_argument("--mode", choices=("modular", "exact"), default="modular")
    p.add_argument("--prime", default="auto",
                   help="'auto' for the built-in verified pair, or one prime")
    p.add_argument("--force", action="store_true", help="ignore the size budget")
    common(p, formats=("table", "json", "csv"))
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("bound", help="lower bound for the Hilbert function")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, help="tail length; default scans 0..d-1")
    common(p)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("reducibility", help="dimension comparison of ideal families")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, help="cut parameter; default maximizes dimension")
    p.add_argument("--trials", type=int, default=0,
                   help="verify this many random family members")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(fn=cmd_reducibility)

    p = sub.add_parser("pluecker", help="Grassmannian quadric system G(2,6)")
    p.add_argument("--rmax", type=int, help="emit a Hilbert table instead")
    common(p)
    p.set_defaults(fn=cmd_pluecker)

    p = sub.add_parser("repro", help="re-derive every headline value")
    p.add_argument("--extended", action="store_true",
                   help="include the d=5 rank and Hilbert computations")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int,
                   help="worker count (default: SYMHILB_THREADS or 1)")
    common(p, formats=("markdown", "json"))
    p.set_defaults(fn=cmd_repro)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, MemoryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
