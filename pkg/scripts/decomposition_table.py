"""Tabulate Eisenstein decompositions of the single-chain series.

For each supported shift parameter and each exponent k up to the configured
cap, computes the decomposition, re-expands it as a q-series, and compares
against the direct sum.  One line per entry; --json dumps the expressions
instead.

Run:  python3 scripts/decomposition_table.py [--k-max 6] [--order 60] [--json]
"""

import argparse
import json
from dataclasses import dataclass

from macmahon.decompose import decompose_ukk, verify_decomposition


@dataclass
class TableConfig:
    k_max: int = 6
    order: int = 60
    as_json: bool = False


def rows(config):
    for a in (0, 2, 1, -1):
        for k in range(1, config.k_max + 1):
            expr = decompose_ukk(a, k)
            report = verify_decomposition(expr, a, k, order=config.order)
            yield a, k, expr, report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = TableConfig()
    parser.add_argument("--k-max", type=int, default=defaults.k_max)
    parser.add_argument("--order", type=int, default=defaults.order)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()
    config = TableConfig(k_max=args.k_max, order=args.order, as_json=args.json)

    if config.as_json:
        payload = [
            {
                "a": a,
                "k": k,
                "expression": expr.to_json_dict(),
                "report": report.to_json_dict(),
            }
            for a, k, expr, report in rows(config)
        ]
        print(json.dumps(payload, indent=2))
        return

    bad = 0
    for a, k, expr, report in rows(config):
        inner = repr(expr).removeprefix("QmfExpression<").removesuffix(">")
        status = "ok" if report.equal else f"MISMATCH at q^{report.first_discrepancy}"
        print(f"a={a:>2} k={k}  [{status} through q^{config.order - 1}]")
        print(f"        {inner}")
        if not report.equal:
            bad += 1
    if bad:
        raise SystemExit(f"{bad} decompositions failed verification")


if __name__ == "__main__":
    main()
