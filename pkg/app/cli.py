# app/cli.py
"""Command-line front end: `python -m app.cli VERB --n N [options]`.

Exit codes: 0 on success, 1 when a verification report fails, 2 on usage,
parse and guard errors.
"""
import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from app.services.combinatorics import enumerate_labels
from app.services.engine_service import get_engine_service
from app.services.errors import EngineError, ExpressionSyntaxError
from logging_config import logger

VERBS = ("dim", "basis", "eval", "verify", "specht", "faithful", "gram", "moebius", "labels", "quotient", "form", "diagnostics")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidties", description="Exact computations in the algebra of braids and ties E_n(u).")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of strands")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--force", action="store_true", help="run past the size guards")

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None, help="seed for every randomized check")

    sub.add_parser("dim", parents=[common], help="dimension n! B_n")
    sub.add_parser("basis", parents=[common], help="list the basis E_A T_w")
    p = sub.add_parser("eval", parents=[common], help="normal form of an expression")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("form", parents=[common], help="bilinear form of two expressions")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = sub.add_parser("verify", parents=[common, seeded], help="defining relations and identities")
    p.add_argument("--tensor", action="store_true", help="check the relations as operators on tensor space")
    p = sub.add_parser("specht", parents=[common, seeded], help="Specht module dimensions")
    p.add_argument("--label", type=int, default=None, help="index into the label list")
    p.add_argument("--exact", action="store_true", default=None, help="ranks over Q(u)")
    p = sub.add_parser("faithful", parents=[common, seeded], help="faithfulness of the tensor representation")
    p.add_argument("--points", type=int, default=None, help="random specialization points")
    p.add_argument("--exact", action="store_true", help="rank over Q(u)")
    p = sub.add_parser("gram", parents=[common], help="rank of the Gram matrix of the form")
    at = p.add_mutually_exclusive_group()
    at.add_argument("--at", type=_rational, default=Fraction(1), help="specialize u to P/Q")
    at.add_argument("--u1", action="store_true", help="specialize u to 1 (the default)")
    sub.add_parser("moebius", parents=[common], help="Moebius coefficients of E_top")
    p = sub.add_parser("labels", parents=[common], help="enumerate Specht labels")
    p.add_argument("--dims", action="store_true", help="include module dimensions")
    sub.add_parser("quotient", parents=[common], help="Hecke and symmetric-group quotients in tensor space")
    sub.add_parser("diagnostics", parents=[common, seeded], help="E-action, projection, proportionality and tensor-form diagnostics")
    return parser


# -------------------------------
# human-readable output
# -------------------------------
def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _print_relations(relations: Dict[str, Any], indent: str = "") -> None:
    for name, g in relations["relations"].items():
        print(f"{indent}{name}: {g['instances']} instances {_mark(g['pass'])}")
        for label in g["failures"][:5]:
            print(f"{indent}  failing: {label}")


def _print_verify(report: Dict[str, Any]) -> None:
    if "runs" in report:
        print(f"tensor space n={report['n']} ({report['mode']}, {report['vectors']} pure tensors)")
        for field, run in zip(report["fields"], report["runs"]):
            print(f"over {field}:")
            _print_relations(run, "  ")
        for key in ("module_axiom", "projection_law"):
            if key in report:
                print(f"{key}: {_mark(report[key]['pass'])}")
    else:
        print(f"relations n={report['n']}:")
        _print_relations(report["relations"], "  ")
        print("identities:")
        for name, c in report["structure"]["checks"].items():
            print(f"  {name}: {c['instances']} instances {_mark(c['pass'])}")
    print(_mark(report["pass"]))


def _print_specht(report: Dict[str, Any]) -> None:
    n = report["n"]
    if "index" in report:
        label = enumerate_labels(n)[report["index"]]
        print(f"{report['index']}  {label}  dim {report['dim']}")
        return
    for k, (label, d) in enumerate(zip(enumerate_labels(n), report["dims"])):
        print(f"{k:>3}  {str(label):<40} {d}")
    print(f"sum of squares: {report['sumSquares']} (dim {report['dimAlgebra']})")
    print(f"semisimple count {'matches' if report['equal'] else 'does not match'}; labels distinct: {report['distinct']}")


def _print_moebius(report: Dict[str, Any]) -> None:
    for row in report["rows"]:
        print(f"{str(row['partition']):<24} k={row['blocks']}  coefficient {row['coefficient']}  mu {row['lattice_moebius']}")
    print(f"(-1)^(k-1)(k-1)! matches: {report['classical_matches']}; (-1)^(k-1)k! matches: {report['k_factorial_matches']}")
    print(_mark(report["pass"]))


def _print_diagnostics(report: Dict[str, Any]) -> None:
    for name, check in report["checks"].items():
        print(f"{name}: {_mark(check['pass'])}")
    print(_mark(report["pass"]))


PRINTERS: Dict[str, Callable[[Dict[str, Any]], None]] = {
    "dim": lambda r: print(r["dim"]),
    "basis": lambda r: print("\n".join(b["monomial"] for b in r["basis"])),
    "eval": lambda r: print(r["result"]),
    "form": lambda r: print(r["form"]),
    "verify": _print_verify,
    "specht": _print_specht,
    "faithful": lambda r: print(f"rank {r['rank']} of {r['expected']} ({r['vectors']} vectors) {_mark(r['pass'])}"),
    "gram": lambda r: print(f"rank {r['rank']} of {r['size']} at u={r['at']} {_mark(r['pass'])}"),
    "moebius": _print_moebius,
    "labels": lambda r: print("\n".join(f"{k:>3}  {lab}" for k, lab in enumerate(enumerate_labels(r["n"])))),
    "quotient": lambda r: print(
        f"M: rank {r['M']['rank']} of {r['M']['expected']} {_mark(r['M']['pass'])}\n"
        f"N: rank {r['N']['rank']} of {r['N']['expected']} {_mark(r['N']['pass'])}"
    ),
    "diagnostics": _print_diagnostics,
}


def dispatch(args: argparse.Namespace) -> Dict[str, Any]:
    svc = get_engine_service()
    n, force = args.n, args.force
    verb = args.verb
    if verb == "dim":
        return svc.dim(n, force=force)
    if verb == "basis":
        return svc.basis(n, force=force)
    if verb == "eval":
        return svc.eval(n, args.expr, force=force)
    if verb == "form":
        return svc.form(n, args.left, args.right, force=force)
    if verb == "verify":
        return svc.verify(n, tensor=args.tensor, seed=args.seed, force=force)
    if verb == "specht":
        return svc.specht(n, label=args.label, exact=args.exact, seed=args.seed, force=force)
    if verb == "faithful":
        return svc.faithful(n, points=args.points, seed=args.seed, exact=args.exact, force=force)
    if verb == "gram":
        return svc.gram(n, Fraction(1) if args.u1 else args.at, force=force)
    if verb == "moebius":
        return svc.moebius(n, force=force)
    if verb == "labels":
        return svc.labels(n, with_dims=args.dims, force=force)
    if verb == "quotient":
        return svc.quotient(n, force=force)
    return svc.diagnostics(n, seed=args.seed, force=force)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return 2
    try:
        report = dispatch(args)
    except ExpressionSyntaxError as e:
        expr = getattr(args, "expr", None) or ""
        print(f"error: {e}", file=sys.stderr)
        if expr and e.position is not None:
            print(f"  {expr}\n  {' ' * e.position}^", file=sys.stderr)
        return 2
    except EngineError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception("%s failed: %s", args.verb, e)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        PRINTERS[args.verb](report)
    return 0 if report.get("pass", True) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
