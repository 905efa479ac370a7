"""Batch front end: parse tensor spec files, run checks, emit reports.

Exit codes separate mathematical outcomes from operational problems:
0 means the check passed or the property holds, 1 means it fails
mathematically, 2 means the invocation or input was unusable.  JSON
output is canonical and, for a fixed seed, byte-identical across runs;
wall-clock timing appears only in the human-readable form.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .compat import delta, gradient_contraction, is_compatible
from .fields import MultivectorField, jacobi_identity_holds
from .grassmann import NotDecomposableError, factorize, sharp_profile
from .poisson import classify, default_sample_points, is_nambu_algebraic
from .polynomial import Polynomial
from .specio import SpecError, parse_spec, to_field
from .suites import run_all


def _point_str(point) -> list[str]:
    return [str(Fraction(c)) for c in point]


def _emit(report: dict, as_json: bool, elapsed: float) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for key, value in report.items():
        if key == "rank_at_samples":
            print("rank_at_samples:")
            for entry in value:
                print(f"  point ({', '.join(entry['point'])}) -> rank {entry['rank']}")
        elif key == "suites":
            for suite in value:
                status = "PASS" if suite["passed"] else "FAIL"
                print(f"{status}  {suite['name']}  ({suite['cases']} cases)")
                for failure in suite["failures"]:
                    print(f"      {failure}")
        else:
            print(f"{key}: {value}")
    print(f"completed in {elapsed:.2f}s")


def _load_field(path: str) -> MultivectorField:
    spec = parse_spec(path)
    return to_field(spec)


def _cmd_check(field: MultivectorField, args) -> tuple[dict, int]:
    verdict = classify(field, seed=args.seed)
    report = {
        "command": "check",
        "seed": args.seed,
        "parity": verdict.parity,
        "is_poisson": verdict.is_poisson,
        "algebraic_condition": {
            "holds": verdict.algebraic_holds,
            "witness": list(verdict.algebraic_witness) if verdict.algebraic_witness else None,
        },
        "differential_condition": verdict.differential_holds,
        "pointwise_decomposable": verdict.pointwise_decomposable,
        "nambu_algebraic": verdict.nambu_algebraic,
        "rank_at_samples": [
            {"point": _point_str(pt), "rank": r} for pt, r in verdict.rank_at_samples
        ],
    }
    return report, 0 if verdict.is_poisson else 1


def _cmd_rank(field: MultivectorField, args) -> tuple[dict, int]:
    points = default_sample_points(field.dim, args.seed, extra=args.samples)
    entries = []
    for pt in points:
        profile = sharp_profile(field.evaluate(pt))
        entries.append(
            {
                "point": _point_str(pt),
                "rank": profile.rank,
                "annihilator_dim": profile.annihilator.dim,
            }
        )
    report = {"command": "rank", "seed": args.seed, "rank_at_samples": entries}
    return report, 0


def _cmd_factorize(field: MultivectorField, args) -> tuple[dict, int]:
    if not field.is_constant():
        raise SpecError("factorize requires a constant tensor spec")
    value = field.evaluate([0] * field.dim)
    try:
        factorization = factorize(value)
    except NotDecomposableError:
        return {"command": "factorize", "error": "not decomposable"}, 1
    except ValueError as exc:
        return {"command": "factorize", "error": str(exc)}, 1
    factors = [
        [str(c) for c in f.vector_components()] for f in factorization.factors
    ]
    return {"command": "factorize", "factors": factors}, 0


def _cmd_nambu(field: MultivectorField, args) -> tuple[dict, int]:
    verdict = is_nambu_algebraic(field)
    return {"command": "nambu", "nambu_algebraic": verdict}, 0 if verdict else 1


def _cmd_jacobi(field: MultivectorField, args) -> tuple[dict, int]:
    verdict = jacobi_identity_holds(field)
    return {"command": "jacobi", "jacobi_identity_holds": verdict}, 0 if verdict else 1


def _cmd_sigma_delta(field: MultivectorField, args) -> tuple[dict, int]:
    membership = is_compatible(field, field)
    report: dict = {
        "command": "sigma-delta",
        "seed": args.seed,
        "structure_compatible": membership.holds,
        "witness": list(membership.witness) if membership.witness else None,
    }
    annihilates = False
    if membership.holds:
        image = delta(field, field)
        annihilates = image.is_zero()
        report["operator_annihilates_structure"] = annihilates
        f = Polynomial.variable(1, field.dim)
        lifted = delta(field, MultivectorField(field.dim, 0, {(): f}))
        report["gradient_action_matches"] = lifted == gradient_contraction(field, f)
        if is_compatible(field, lifted).holds:
            report["operator_square_on_x1"] = repr(delta(field, lifted))
    ok = membership.holds and annihilates
    return report, 0 if ok else 1


def _cmd_suite(args) -> tuple[dict, int]:
    results = run_all(args.seed)
    report = {
        "command": "suite",
        "seed": args.seed,
        "passed": all(r.passed for r in results),
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "cases": r.cases,
                "failures": r.failures,
                "info": r.info,
            }
            for r in results
        ],
    }
    return report, 0 if report["passed"] else 1


_COMMANDS = {
    "check": _cmd_check,
    "rank": _cmd_rank,
    "factorize": _cmd_factorize,
    "nambu": _cmd_nambu,
    "jacobi": _cmd_jacobi,
    "sigma-delta": _cmd_sigma_delta,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npk",
        description="Exact checks for n-ary Poisson structures given as tensor spec files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "full Poisson classification",
        "rank": "rank of the sharp map at sample points",
        "factorize": "factor a constant decomposable tensor",
        "nambu": "algebraic Nambu condition",
        "jacobi": "generalized Jacobi identity",
        "sigma-delta": "compatibility family and the induced operator",
    }
    for name, help_text in helps.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec", help="path to a tensor spec JSON file")
        p.add_argument("--seed", type=int, default=0, help="seed for sample points")
        p.add_argument("--json", action="store_true", help="canonical JSON output")
        p.add_argument("--samples", type=int, default=8, help="extra random sample points")
    p = sub.add_parser("suite", help="run all seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--samples", type=int, default=8)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        if args.command == "suite":
            report, code = _cmd_suite(args)
        else:
            field = _load_field(args.spec)
            report, code = _COMMANDS[args.command](field, args)
    except (SpecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json, time.monotonic() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
