#!/usr/bin/env python3
"""Run the full verification battery and archive the JSON report.

Usage:
    python scripts/reproduce_all.py [--out reports/verify_all.json] [--seed 0]

Equivalent to `twistkit verify-all --format json`, plus a short console
digest.  The report is byte-reproducible for a fixed seed/trials/trunc.
"""

import argparse
import json
import pathlib
import sys

from twistkit.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports/verify_all.json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--trunc", type=int, default=8)
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    code = cli_main(
        [
            "verify-all",
            "--seed", str(args.seed),
            "--trials", str(args.trials),
            "--trunc", str(args.trunc),
            "--format", "json",
            "--out", str(out),
        ]
    )
    report = json.loads(out.read_text())
    for check in report["checks"]:
        mark = "PASS" if check["passed"] else "FAIL"
        print(f"{mark} {check['name']}")
    summary = report["summary"]
    print(f"-> {summary['verdict']} ({summary['passed']}/{summary['total']}), report at {out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
