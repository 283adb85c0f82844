"""Command-line verification harness.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 usage or
I/O error.  JSON output is deterministic: identical flags produce identical
bytes.  Set TWISTKIT_THREADS to parallelize independent sub-checks; results
are always reported in canonical (name-sorted) order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dehn import contradiction_residual, solve_coefficients, table2
from .expansion import (
    BoundaryStatus,
    check_boundary,
    check_magnus_degree_one,
    load_table,
    massuyeau_theta0,
)
from .harness import (
    CheckResult,
    RunConfig,
    check_lemma_suite,
    config_from_run,
    verify_all,
)
from .series import is_lie_element
from .words import GroupWord, parse_group_word, zeta

SCHEMA_VERSION = "1"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistkit",
        description="Exact verification harness for the truncated tensor algebra "
        "and generalized Dehn twist computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--g", type=int, default=None, help="genus")
        p.add_argument("--h", type=int, default=None, help="handle parameter")
        p.add_argument("--k1", type=int, default=None)
        p.add_argument("--k2", type=int, default=None)
        p.add_argument("--trunc", type=int, default=8, help="truncation degree (default 8)")
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--trials", type=int, default=100, help="trials per property (default 100)")
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument(
            "--pairing-sign",
            dest="pairing_sign",
            choices=("+", "-"),
            default="+",
            help="sign convention of the intersection pairing (A_i.B_i)",
        )
        p.add_argument(
            "--expansion",
            default="builtin:massuyeau",
            help="expansion table: builtin:massuyeau or a JSON file path",
        )

    for name, help_text in (
        ("verify-all", "run every check battery"),
        ("table2", "the degree-4 row of a separating configuration"),
        ("coeffs", "solve the twist exponents for a configuration"),
        ("residual", "the contradiction residual of a configuration"),
        ("lemmas", "the degree 2/4/6/8 composition laws on random pairs"),
        ("expansion-check", "validate an expansion table"),
    ):
        p = sub.add_parser(name, help=help_text)
        add_common(p)
        if name in ("table2", "coeffs", "residual"):
            p.add_argument(
                "--config",
                required=True,
                choices=("I", "II-a", "II-b", "III-a", "III-b", "IV-a", "IV-b"),
            )
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        config=getattr(args, "config", None),
        g=args.g,
        h=args.h,
        k1=args.k1,
        k2=args.k2,
        trunc=args.trunc,
        seed=args.seed,
        trials=args.trials,
        fmt=args.fmt,
        out=args.out,
        pairing_sign=1 if args.pairing_sign == "+" else -1,
        expansion=args.expansion,
    )


def _report(rc: RunConfig, checks: list[CheckResult], payload: dict | None) -> dict:
    passed = sum(1 for c in checks if c.passed)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": rc.command,
        "params": rc.params_json(),
        "checks": [c.to_json() for c in checks],
        "summary": {
            "total": len(checks),
            "passed": passed,
            "failed": len(checks) - passed,
            "verdict": "pass" if passed == len(checks) else "fail",
        },
    }
    if payload is not None:
        report["payload"] = payload
    return report


def _emit(rc: RunConfig, report: dict, checks: list[CheckResult]) -> None:
    if rc.fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"twistkit {rc.command} (seed={rc.seed}, trunc={rc.trunc}, expansion={rc.expansion})"]
        for check in checks:
            mark = "PASS" if check.passed else "FAIL"
            lines.append(f"  {mark} {check.name} ({check.duration:.2f}s)")
            if not check.passed:
                lines.append(f"       {json.dumps(check.details, sort_keys=True, default=str)}")
        if "payload" in report:
            lines.append(json.dumps(report["payload"], indent=2, sort_keys=True))
        lines.append(f"summary: {report['summary']['verdict']} "
                     f"({report['summary']['passed']}/{report['summary']['total']} checks)")
        text = "\n".join(lines) + "\n"
    if rc.out:
        with open(rc.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify_all(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    return verify_all(rc), None


def cmd_table2(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    config = config_from_run(rc)
    table = rc.load_expansion(config.g)
    row = table2(config, table)
    check = CheckResult(
        f"table2[{config.label()}]",
        True,
        {"basis": list(row.basis_labels)},
    )
    return [check], row.to_json()


def cmd_coeffs(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    config = config_from_run(rc)
    table = rc.load_expansion(config.g)
    solution = solve_coefficients(config, table)
    check = CheckResult(
        f"coeffs[{config.label()}]",
        solution.consistent and solution.m == (2, 2, -1),
        {"constraints": list(solution.constraints)},
    )
    return [check], solution.to_json()


def cmd_residual(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    config = config_from_run(rc)
    table = rc.load_expansion(config.g)
    report = contradiction_residual(config, table)
    check = CheckResult(
        f"residual[{config.label()}]",
        report.verdict == "not a mapping class",
        {"nonzero_degree": report.nonzero_degree},
    )
    return [check], report.to_json()


def cmd_lemmas(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    return [check_lemma_suite(rc)], None


def cmd_expansion_check(rc: RunConfig) -> tuple[list[CheckResult], dict | None]:
    genus = rc.g if rc.g is not None else 2
    table = rc.load_expansion(genus)
    claim = min(3, table.valid_degree)
    boundary = check_boundary(table, claim)
    rng_words = [zeta(genus), parse_group_word("a1 b1", genus)]
    for code in range(2 * genus):
        rng_words.append(GroupWord(genus, ((code, 1),)))
    checks = [
        CheckResult(
            "check_boundary",
            boundary == BoundaryStatus.HOLDS,
            {"claim_degree": claim, "status": boundary.value},
        ),
        CheckResult(
            "magnus_condition",
            check_magnus_degree_one(table, rng_words),
            {"words": len(rng_words)},
        ),
        CheckResult(
            "log_primitivity",
            all(is_lie_element(s) for s in table.ell_values.values()),
            {"valid_degree": table.valid_degree},
        ),
    ]
    payload = {
        "genus": table.genus,
        "valid_degree": table.valid_degree,
        "name": table.name,
    }
    return sorted(checks, key=lambda c: c.name), payload


COMMANDS = {
    "verify-all": cmd_verify_all,
    "table2": cmd_table2,
    "coeffs": cmd_coeffs,
    "residual": cmd_residual,
    "lemmas": cmd_lemmas,
    "expansion-check": cmd_expansion_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rc = run_config_from_args(args)
    if rc.expansion != "builtin:massuyeau":
        try:
            load_table(rc.expansion)  # unreadable or malformed files are usage errors
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            print(f"twistkit: cannot load expansion {rc.expansion!r}: {exc}", file=sys.stderr)
            return 2
    try:
        checks, payload = COMMANDS[rc.command](rc)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"twistkit: i/o error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"twistkit: {exc}", file=sys.stderr)
        return 2
    report = _report(rc, checks, payload)
    try:
        _emit(rc, report, checks)
    except OSError as exc:
        print(f"twistkit: i/o error: {exc}", file=sys.stderr)
        return 2
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    raise SystemExit(main())
