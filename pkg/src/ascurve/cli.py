"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure (a family
member missing the lower bound, or a search witness failing its recheck).
JSON/CSV goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import linalg
from .arith import PolyParseError, check_prime, parse_poly
from .bounds import lower_bound_multi, lower_bound_single, upper_bound_multi
from .cartier import cartier_matrix
from .curve import CurveError, curve_new
from .families import FAMILIES, FamilyError, FamilyId, family_verify
from .oracle import cartier_matrix_bruteforce
from .report import InvariantViolation, invariants, reports_to_csv
from .search import STRATEGIES, SearchConfig, search_minimal

log = logging.getLogger("ascurve")

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in str(text).split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_invariants(args) -> int:
    c = curve_new(args.p, parse_poly(check_prime(args.p), args.poly), normalize=not args.no_normalize)
    rep = invariants(c, backend=args.backend)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv([rep]))
    else:
        _dump(rep.to_dict())
    return EXIT_OK


def cmd_bounds(args) -> int:
    p = check_prime(args.p)
    if (args.d is None) == (args.multi is None):
        raise UsageError("bounds: give exactly one of --d or --multi")
    D = [args.d] if args.d is not None else args.multi
    if any(d < 1 for d in D):
        raise ValueError("ramification breaks must be positive")
    lower = lower_bound_single(p, D[0]) if len(D) == 1 else lower_bound_multi(p, D)
    _dump({"p": p, "D": D, "lower": lower, "upper": upper_bound_multi(p, D, args.a_base)})
    return EXIT_OK


def cmd_family(args) -> int:
    fid = FamilyId(args.name, check_prime(args.p), n=args.n, deg=args.deg)
    poly = parse_poly(args.p, args.poly) if args.poly else None
    rep = family_verify(fid, poly=poly, seed=args.seed, backend=args.backend)
    out = {"family": args.name, "n": args.n, **rep.to_dict(), "attained": rep.attains_lower}
    _dump(out)
    if not rep.attains_lower:
        log.error("%s at p=%d: a=%d but L=%d", args.name, rep.p, rep.a_number, rep.lower_bound)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_conjecture(args) -> int:
    p = check_prime(args.p)
    if args.n_max < 1:
        raise ValueError("--n-max must be at least 1")
    cells, ok = [], True
    for n in range(1, args.n_max + 1):
        rep = family_verify(FamilyId("experiment", p, n=n), backend=args.backend)
        cells.append({"n": n, "d": rep.d, "genus": rep.genus, "a_number": rep.a_number,
                      "lower_bound": rep.lower_bound, "attained": rep.attains_lower})
        log.info("p=%d n=%d d=%d a=%d L=%d", p, n, rep.d, rep.a_number, rep.lower_bound)
        ok &= rep.attains_lower
    _dump({"p": p, "n_max": args.n_max, "all_attained": ok, "cells": cells})
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_search(args) -> int:
    cfg = SearchConfig(check_prime(args.p), args.d, budget=args.budget, seed=args.seed,
                       threads=args.threads, strategy=args.strategy)
    res = search_minimal(cfg, backend=args.backend)
    if args.out == "csv":
        sys.stdout.write(res.to_csv())
    else:
        _dump(res.to_dict())
    if res.witness is None:
        log.warning("no witness within %d trials (min a = %s, L = %d)", res.trials, res.min_a, res.L)
        return EXIT_OK
    rep = invariants(res.witness.curve, backend=args.backend)
    if rep.a_number != res.L:
        log.error("witness recheck failed: a=%d, L=%d", rep.a_number, res.L)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_matrix(args) -> int:
    c = curve_new(args.p, parse_poly(check_prime(args.p), args.poly), normalize=not args.no_normalize)
    m = cartier_matrix(c)
    rows = cartier_matrix_bruteforce(c) if args.oracle else m.to_rows()
    out = {"p": c.p, "d": c.d, "f": c.f.to_text(), "g": m.g, "rows": rows}
    if args.basis:
        out["basis"] = [list(b) for b in m.basis]
    _dump(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ascurve", description="Invariants of Artin-Schreier curves y^p - y = f(x) over F_p.")
    ap.add_argument("--json-args", metavar="FILE",
                    help="JSON object of flags (plus \"command\"); explicit flags override it")
    ap.add_argument("--backend", choices=["compiled", "python"], default=None,
                    help=f"elimination backend (default: {linalg.BACKEND})")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("invariants", help="genus, a-number, p-rank and bounds of one curve")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--poly", required=True, help='e.g. "x^7 + x^5" or "[0,0,1]"')
    s.add_argument("--no-normalize", action="store_true")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("bounds", help="lower and upper a-number bounds")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--multi", type=_int_list, help="comma-separated breaks d1,d2,...")
    s.add_argument("--a-base", type=int, default=0)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("family", help="verify a minimal-a-number family member")
    s.add_argument("--name", choices=FAMILIES, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--deg", type=int)
    s.add_argument("--poly", help="farnell only: the degree p-1 polynomial to use")
    s.add_argument("--seed", type=int, default=0, help="farnell only: seed for a random polynomial")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("search", help="seeded search for curves attaining the lower bound")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--budget", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--strategy", choices=STRATEGIES, default="random")
    s.add_argument("--out", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("conjecture", help="check the experiment family for n = 1..n-max")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("matrix", help="dump the Cartier matrix (row-major residues)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--poly", required=True)
    s.add_argument("--no-normalize", action="store_true")
    s.add_argument("--basis", action="store_true", help="include the ordered basis")
    s.add_argument("--oracle", action="store_true", help="use the brute-force expansion")
    s.set_defaults(func=cmd_matrix)
    return ap


def _json_args_tokens(path: str) -> list[str]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "command" not in data:
        raise UsageError("--json-args file must be an object with a \"command\" key")
    tokens = [str(data.pop("command"))]
    for key, val in data.items():
        flag = "--" + key.replace("_", "-")
        if val is True:
            tokens.append(flag)
        elif val is False or val is None:
            continue
        elif isinstance(val, list):
            tokens += [flag, ",".join(str(v) for v in val)]
        else:
            tokens += [flag, str(val)]
    return tokens


def _expand_json_args(argv: list[str]) -> list[str]:
    # splice the file's flags in where the subcommand goes; later explicit
    # flags win because argparse keeps the last value
    if "--json-args" not in argv:
        return argv
    k = argv.index("--json-args")
    if k + 1 >= len(argv):
        raise UsageError("--json-args needs a file")
    file_tokens = _json_args_tokens(argv[k + 1])
    rest = argv[:k] + argv[k + 2 :]
    cmds = {"invariants", "bounds", "family", "search", "conjecture", "matrix"}
    if rest and rest[0] in cmds:
        rest = rest[1:]
    elif any(t in cmds for t in rest):
        raise UsageError("put the subcommand in the --json-args file or first on the line")
    globals_, local = [], []
    it = iter(rest)
    for t in it:
        if t in ("-v", "--verbose"):
            globals_.append(t)
        elif t == "--backend":
            globals_ += [t, next(it, "")]
        elif t.startswith("--backend="):
            globals_.append(t)
        else:
            local.append(t)
    return globals_ + file_tokens + local


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_expand_json_args(argv))
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s: %(message)s", stream=sys.stderr)
        if args.command is None:
            raise UsageError("a subcommand is required (see --help)")
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (CurveError, PolyParseError, FamilyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
