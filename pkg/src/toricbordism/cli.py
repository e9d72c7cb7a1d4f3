"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 violated precondition,
4 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from . import library
from .action import analyze_action
from .errors import InputError, PreconditionError, VerificationError
from .geometry.polytope import GeometryError, fmt
from .io import dumps, parse_rational, parse_vector, write_text
from .pruning import prune, verify_pruning_theorem
from .quotients import chamber_decomposition, quotient_chain
from .realization import realize, verify_realization
from .report import envelope, render_text
from .suites import SUITES, verify_fixtures

EXIT_INPUT, EXIT_PRECONDITION, EXIT_VERIFY = 2, 3, 4


def _polytope_fixture(args):
    fx = library.load(args.file)
    if fx.kind != "polytope":
        raise InputError(f"{args.file}: expected a polytope, got an MDP input")
    v = parse_vector(args.v) if args.v is not None else fx.v
    if v is None:
        raise InputError("no one-parameter subgroup: pass --v")
    return fx, v


def _mdp_fixture(args):
    fx = library.load(args.file)
    if fx.kind != "mdp":
        raise InputError(f"{args.file}: expected an MDP input")
    return fx


def _alpha(args, fx):
    if args.alpha is not None:
        a = parse_vector(args.alpha)
        if len(a) != 2:
            raise InputError("--alpha takes two integers a,b")
        return a
    return fx.alphas[0] if fx.alphas else (1, 1)


def cmd_analyze(args):
    fx, v = _polytope_fixture(args)
    a = analyze_action(fx.polytope, v)
    return envelope("analyze", {"fixture": fx.name, "v": list(v)}, a.to_json()), 0


def cmd_prune(args):
    fx, v = _polytope_fixture(args)
    if args.rho_minus is None or args.rho_plus is None:
        if not fx.prune or args.rho_minus is not None or args.rho_plus is not None:
            raise InputError("pass both --rho-minus and --rho-plus")
        rm, rp = fx.prune[0]
    else:
        rm, rp = parse_rational(args.rho_minus), parse_rational(args.rho_plus)
    pr = prune(fx.polytope, v, rm, rp)
    result = pr.to_json()
    code = 0
    if args.verify:
        rep = verify_pruning_theorem(fx.polytope, v, pr, args.m_max)
        result["theorem"] = rep.to_json()
        code = 0 if rep.passed else EXIT_VERIFY
    inputs = {"fixture": fx.name, "v": list(v), "rho_minus": fmt(rm), "rho_plus": fmt(rp)}
    return envelope("prune", inputs, result), code


def cmd_quotients(args):
    fx, v = _polytope_fixture(args)
    chain = quotient_chain(fx.polytope, v)
    return envelope("quotients", {"fixture": fx.name, "v": list(v)},
                    {"chain": chain.to_json(), "rendered": chain.render()}), 0


def cmd_chambers(args):
    fx, v = _polytope_fixture(args)
    rep = chamber_decomposition(fx.polytope, v, args.samples)
    inputs = {"fixture": fx.name, "v": list(v), "samples": args.samples}
    return envelope("chambers", inputs, rep.to_json()), 0 if rep.passed else EXIT_VERIFY


def cmd_realize(args):
    fx = _mdp_fixture(args)
    al = _alpha(args, fx)
    rb = realize(fx.mdp, al)
    result = {"realization": rb.to_json(), "validation": rb.validation.to_json()}
    code = 0
    if args.verify:
        rep = verify_realization(rb)
        result["verification"] = rep
        code = 0 if rep["passed"] else EXIT_VERIFY
    return envelope("realize", {"fixture": fx.name, "alpha": list(al)}, result), code


def cmd_verify(args):
    fixtures = [library.load(args.file)] if args.file else library.library()
    suites = SUITES if args.suite == "all" else (args.suite,)
    alphas = [parse_vector(args.alpha)] if args.alpha else None
    if alphas and len(alphas[0]) != 2:
        raise InputError("--alpha takes two integers a,b")
    rep = verify_fixtures(fixtures, suites, args.m_max, args.samples, alphas)
    inputs = {"fixtures": [f.name for f in fixtures], "suite": args.suite,
              "m_max": args.m_max, "samples": args.samples,
              "alpha": list(alphas[0]) if alphas else None}
    if args.file:
        failed = rep["summary"]["fail"] > 0
    else:
        failed = bool(rep["summary"]["unexpected"])
    return envelope("verify", inputs, rep), EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricbordism",
                                description="Toric C*-action bordisms and Mori dream pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, file_required=True):
        if file_required:
            sp.add_argument("file", help="fixture or input JSON (shipped fixtures resolve by name)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", help="write the report here instead of standard output")

    for name, fn in (("analyze", cmd_analyze), ("quotients", cmd_quotients)):
        sp = sub.add_parser(name)
        common(sp)
        sp.add_argument("--v", help="one-parameter subgroup, e.g. 0,1,1")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("prune")
    common(sp)
    sp.add_argument("--v")
    sp.add_argument("--rho-minus")
    sp.add_argument("--rho-plus")
    sp.add_argument("--verify", action="store_true", help="also run the pruning theorem steps")
    sp.add_argument("--m-max", type=int, default=4)
    sp.set_defaults(func=cmd_prune)
    sp = sub.add_parser("chambers")
    common(sp)
    sp.add_argument("--v")
    sp.add_argument("--samples", type=int, default=3)
    sp.set_defaults(func=cmd_chambers)
    sp = sub.add_parser("realize")
    common(sp)
    sp.add_argument("--alpha", help="coprime pair a,b")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_realize)
    sp = sub.add_parser("verify")
    sp.add_argument("file", nargs="?", help="one fixture; default is the whole library")
    common(sp, file_required=False)
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--alpha")
    sp.add_argument("--m-max", type=int, default=4)
    sp.add_argument("--samples", type=int, default=3)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except GeometryError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = render_text(report) if args.format == "text" else dumps(report)
    write_text(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
