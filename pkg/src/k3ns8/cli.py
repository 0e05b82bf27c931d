"""Command-line front end.

Subcommands:
  classify    print the order-8 classification (optionally cross-checked
              against the brute-force oracle)
  fibration   singular-fiber configuration of a Weierstrass model file
  auto-check  preservation / multiplier / base-action report for a
              monomial automorphism against a model
  involution  fixed locus of a non-symplectic involution from (r, a, delta)
  tables      dump the embedded order-2 / order-4 data

Exit codes: 0 success, 1 input or validation failure, 2 internal
invariant violation. All rationals in files are strings "p/q" (or "p").
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automorphism, enumerator, kodaira
from .automorphism import MonomialAutomorphism
from .kodaira import K3BudgetError, WeierstrassModel, ZeroDiscriminantError


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _fail(message: str, code: int = 1) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def cmd_classify(args) -> int:
    profiles = enumerator.classify_order8()
    if args.oracle:
        oracle = enumerator.brute_force_classify()
        if set(profiles) != set(oracle) or len(profiles) != len(oracle):
            print("oracle disagreement between structured derivation and "
                  "brute-force scan", file=sys.stderr)
            return 2
        print("consistent: structured derivation matches brute-force scan "
              f"({len(profiles)} profiles)")
    if args.format == "json":
        _emit([p.to_json() for p in profiles])
    else:
        header = ("m1", "m", "r", "l", "N", "k", "a")
        widths = [3, 3, 3, 3, 3, 3, 3]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "  existence")
        for p in profiles:
            row = p.as_row()
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths))
                  + f"  {p.existence}")
    return 0


def cmd_fibration(args) -> int:
    try:
        model = WeierstrassModel.from_json(_load_json(args.model))
    except (OSError, ValueError, KeyError) as exc:
        return _fail(f"cannot read model: {exc}")
    try:
        config = kodaira.configuration(model)
    except ZeroDiscriminantError as exc:
        return _fail(str(exc))
    except K3BudgetError as exc:
        if args.format == "json":
            _emit({
                "model": model.to_json(),
                "entries": [e.to_json() for e in exc.entries],
                "euler_sum": exc.euler_sum,
                "euler_check": False,
            })
        else:
            for entry in exc.entries:
                print(f"{str(entry.place):<24} {entry.fiber.label:<5} "
                      f"orbit {entry.orbit_size}  euler {entry.fiber.euler_number}")
            print(f"euler sum: {exc.euler_sum} (expected {kodaira.K3_EULER_NUMBER})")
        return _fail(str(exc))
    shioda_tate = kodaira.shioda_tate_contribution(config)
    if args.format == "json":
        _emit({
            "model": model.to_json(),
            "entries": config.to_json(),
            "euler_sum": config.euler_sum(),
            "euler_check": True,
            "shioda_tate": shioda_tate,
        })
    else:
        for entry in config.entries:
            fiber = entry.fiber
            print(f"{str(entry.place):<24} {fiber.label:<5} "
                  f"orbit {entry.orbit_size}  euler {fiber.euler_number}  "
                  f"components {fiber.component_count}")
        print(f"euler sum: {config.euler_sum()} (expected {kodaira.K3_EULER_NUMBER})")
        print(f"shioda-tate contribution: {shioda_tate}")
    return 0


def cmd_auto_check(args) -> int:
    try:
        model = WeierstrassModel.from_json(_load_json(args.model))
        auto = MonomialAutomorphism.from_json(_load_json(args.auto))
    except (OSError, ValueError, KeyError) as exc:
        return _fail(f"cannot read input: {exc}")

    certificate = automorphism.check_preserves(model, auto)
    if not certificate.preserved:
        for name in certificate.failed_conditions:
            print(f"condition failed: {name}", file=sys.stderr)
        return 1

    multiplier = automorphism.form_multiplier(auto)
    try:
        config = kodaira.configuration(model)
        base = automorphism.base_action(auto, config)
    except (ZeroDiscriminantError, K3BudgetError, ValueError) as exc:
        return _fail(str(exc))

    payload = {
        "model": model.to_json(),
        "automorphism": auto.to_json(),
        "preservation": certificate.to_json(),
        "form_multiplier": {
            "value": multiplier.to_strings(),
            "pretty": str(multiplier),
            "unit_order": multiplier.unit_order(),
        },
        "base_action": base.to_json(),
    }
    if model.B.is_zero:
        report = automorphism.two_torsion_translate(
            model, seed=args.seed, modulus=args.modulus)
        payload["two_torsion"] = report.to_json()
    _emit(payload)
    return 0


def cmd_involution(args) -> int:
    if args.delta is not None:
        try:
            entries = [enumerator.InvolutionData(args.r, args.a, args.delta)]
        except ValueError as exc:
            return _fail(str(exc))
    else:
        entries = enumerator.InvolutionData.admissible(args.r, args.a)
        if not entries:
            return _fail(f"(r, a) = ({args.r}, {args.a}) admits no delta")
    results = []
    for data in entries:
        descriptor = enumerator.involution_fixed_locus(data)
        results.append({"r": data.r, "a": data.a, "delta": data.delta,
                        "fixed_locus": descriptor.to_json()})
    _emit(results)
    return 0


def cmd_tables(args) -> int:
    out = {}
    if args.which in (None, "order2"):
        out["order2"] = enumerator._load_data("order2_lattices.json")
    if args.which in (None, "order4"):
        out["order4"] = enumerator._load_data("order4_invariants.json")
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3ns8",
        description="Exact analysis of elliptic K3 fibrations and their "
                    "order-8 purely non-symplectic automorphisms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="order-8 classification table")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the brute-force scan")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fibration", help="singular fibers of a model")
    p.add_argument("model", help="model JSON file {\"A\": [...], \"B\": [...]}")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("auto-check", help="check an automorphism against a model")
    p.add_argument("model")
    p.add_argument("auto", help="automorphism JSON file with lambda_x/y/t")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--modulus", type=int, default=10007)
    p.set_defaults(func=cmd_auto_check)

    p = sub.add_parser("involution", help="fixed locus of an involution")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--delta", type=int, choices=(0, 1))
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("tables", help="dump the embedded data tables")
    p.add_argument("which", nargs="?", choices=("order2", "order4"))
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
