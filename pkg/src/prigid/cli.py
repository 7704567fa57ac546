"""Command-line front door.

Every subcommand builds an inputs dictionary, hands it to the report layer,
and prints the canonical JSON to stdout.  Timing goes to stderr so the
stdout bytes depend only on the inputs and the seed.  Exit codes: 0 for a
completed report, 1 when a verification or replay check fails, 2 for usage
errors, 3 when a resource or precision bound stops the computation.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

from .errors import ResourceBoundError, UsageError, VerificationError
from .reports import canonical_json, compute_report, load_report, reverify


def _parse_k(text: str) -> Optional[int]:
    if text == "inf":
        return None
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"--k expects an integer or 'inf', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prigid",
        description="exact rigidity, tower, and radical-solve reports",
    )
    parser.add_argument("--reverify", metavar="IN.json",
                        help="replay all checks from a serialized report")
    sub = parser.add_subparsers(dest="command")

    def common(sp: argparse.ArgumentParser, field: bool = False) -> None:
        sp.add_argument("--json", metavar="OUT.json",
                        help="also write the report to this file")
        if field:
            sp.add_argument("--p", type=int, required=True,
                            help="odd prime of the Kummer layer")
            sp.add_argument("--seed", type=int, help="seed for sampled checks")
            sp.add_argument("--prec", type=int,
                            help="series precision override")

    group = sub.add_parser("group", help="finite p-group model reports")
    gsub = group.add_subparsers(dest="subcommand")
    for name in ("series", "dimension", "powerful", "theoremA", "jmodule",
                 "maximal"):
        sp = gsub.add_parser(name)
        sp.add_argument("descriptor",
                        help="theta(p,k,nI,m), ut(n,p,bound), or cyclic(p,m)")
        sp.add_argument("--bound", type=int, help="element-count ceiling")
        if name == "dimension":
            sp.add_argument("--nmax", type=int, help="last dimension index")
        common(sp)
    gtower = gsub.add_parser("tower", help="tower Galois group model")
    gtower.add_argument("--p", type=int, required=True)
    gtower.add_argument("--k", type=_parse_k, default=1,
                        help="depth of p-power roots of unity, or 'inf'")
    gtower.add_argument("--n", type=int, required=True, help="tower height")
    common(gtower)

    rigidity = sub.add_parser("rigidity", help="field rigidity verdicts")
    rsub = rigidity.add_subparsers(dest="subcommand")
    for name in ("check", "element", "hereditary", "steinberg"):
        sp = rsub.add_parser(name)
        sp.add_argument("descriptor", help="gf(q), laurent(q[,prec]), ratfunc(q)")
        if name == "element":
            sp.add_argument("--a", required=True, help="element expression")
        if name == "hereditary":
            sp.add_argument("--depth", type=int,
                            help="levels of radical steps, base included")
        common(sp, field=True)

    tower = sub.add_parser("tower", help="Kummer tower and its Galois group")
    tower.add_argument("descriptor")
    tower.add_argument("--n", type=int, required=True, help="tower height")
    common(tower, field=True)

    witness = sub.add_parser("witness", help="norm witness with certificate")
    witness.add_argument("descriptor")
    common(witness, field=True)

    solve = sub.add_parser("solve", help="radical roots of a polynomial")
    solve.add_argument("descriptor")
    solve.add_argument("--poly", required=True,
                       help='polynomial in x over the field, e.g. "x^3-(1+t)"')
    solve.add_argument("--tame-bound", type=int, dest="tame_bound",
                       help="largest ramification index attempted")
    common(solve, field=True)

    accept = sub.add_parser("accept", help="run the acceptance suite")
    accept.add_argument("--quick", action="store_true",
                        help="trimmed sample sizes and tree depth")
    accept.add_argument("--seed", type=int, help="seed for sampled checks")
    common(accept)

    return parser


def _inputs_for(args: argparse.Namespace) -> tuple[str, dict]:
    cmd = args.command
    sub = getattr(args, "subcommand", None)
    if cmd == "group":
        if sub is None:
            raise UsageError("group needs a subcommand")
        if sub == "tower":
            return "group.tower", {"p": args.p, "k": args.k, "n": args.n}
        inputs = {"descriptor": args.descriptor}
        if args.bound is not None:
            inputs["bound"] = args.bound
        if sub == "dimension" and args.nmax is not None:
            inputs["nmax"] = args.nmax
        return f"group.{sub}", inputs
    if cmd == "rigidity":
        if sub is None:
            raise UsageError("rigidity needs a subcommand")
        inputs = {"descriptor": args.descriptor, "p": args.p}
        if args.seed is not None:
            inputs["seed"] = args.seed
        if args.prec is not None:
            inputs["prec"] = args.prec
        if sub == "element":
            inputs["a"] = args.a
        if sub == "hereditary" and args.depth is not None:
            inputs["depth"] = args.depth
        return f"rigidity.{sub}", inputs
    if cmd == "tower":
        inputs = {"descriptor": args.descriptor, "p": args.p, "n": args.n}
        if args.prec is not None:
            inputs["prec"] = args.prec
        return "tower", inputs
    if cmd == "witness":
        inputs = {"descriptor": args.descriptor, "p": args.p}
        if args.seed is not None:
            inputs["seed"] = args.seed
        return "witness", inputs
    if cmd == "solve":
        inputs = {"descriptor": args.descriptor, "p": args.p,
                  "poly": args.poly}
        if args.prec is not None:
            inputs["solve_prec"] = args.prec
        if args.tame_bound is not None:
            inputs["tame_bound"] = args.tame_bound
        return "solve", inputs
    if cmd == "accept":
        inputs = {"quick": bool(args.quick)}
        if args.seed is not None:
            inputs["seed"] = args.seed
        return "accept", inputs
    raise UsageError("no command given; see --help")


def _emit(report: dict, json_path: Optional[str]) -> None:
    text = canonical_json(report)
    sys.stdout.write(text)
    if json_path:
        with open(json_path, "w", encoding="ascii") as fh:
            fh.write(text)


def _print_accept_summary(report: dict) -> bool:
    body = report["body"]
    for crit in body["criteria"]:
        status = "PASS" if crit["passed"] else "FAIL"
        if crit.get("within_budget") is False:
            status += " (over budget)"
        print(f"[{crit['id']}] {status} {crit['title']}", file=sys.stderr)
    for note in report.get("notes", []):
        print(f"[{note['level']}] {note['topic']}: stated "
              f"{note.get('stated_bound', note.get('stated_rank'))} vs computed "
              f"{note.get('computed_bound', note.get('computed_rank'))}",
              file=sys.stderr)
    return bool(body["all_passed"] and body["all_within_budget"])


def _run(args: argparse.Namespace) -> int:
    if args.reverify:
        report = load_report(args.reverify)
        outcome = reverify(report)
        for check in outcome["checks"]:
            print(f"[reverify] {check}", file=sys.stderr)
        sys.stdout.write(canonical_json(outcome))
        return 0
    kind, inputs = _inputs_for(args)
    t0 = time.monotonic()
    report = compute_report(kind, inputs)
    print(f"[{kind}] computed in {time.monotonic() - t0:.2f}s",
          file=sys.stderr)
    _emit(report, getattr(args, "json", None))
    if kind == "accept":
        return 0 if _print_accept_summary(report) else 1
    return 0


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ResourceBoundError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
