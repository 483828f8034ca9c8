#!/usr/bin/env python3
"""Survey a range of orders: classify each k and verify the admissible ones.

For every admissible k the full chain is built and the key residuals are
tabulated, so a clean run prints a table of numbers near machine epsilon.

    python3 scripts/survey_orders.py --k-min 3 --k-max 51
"""

from __future__ import annotations

import argparse
import time

from isoclinic import (
    build_conference,
    build_seidel,
    classify_order,
    conference_residual,
    critical_omega,
    double,
    hadamard_residual,
    isoclinic_residual,
    make_field,
    orthonormality_residual,
    planes_from_seidel,
    seidel_square_residual,
    verify_counts,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=51)
    ap.add_argument("--skip-open", action="store_true", help="do not list open/excluded orders")
    args = ap.parse_args()

    header = f"{'k':>3} {'q':>4} {'status':<10} {'counts':<6} {'|CC*-(q-1)I|':>12} {'|S^2-(q-1)I|':>12} {'orth':>9} {'iso':>9} {'hadamard':>9}"
    print(header)
    print("-" * len(header))
    start = time.perf_counter()
    for k in range(args.k_min, args.k_max + 1):
        info = classify_order(k)
        if info.status != "admissible":
            if not args.skip_open:
                print(f"{k:>3} {info.q:>4} {info.status:<10} {info.reason}")
            continue
        field = make_field(info.p, info.alpha)
        C = build_conference(field, critical_omega(k))
        counts_ok = verify_counts(C)
        S = build_seidel(field)
        pt = planes_from_seidel(S)
        print(
            f"{k:>3} {info.q:>4} {info.status:<10} {'exact' if counts_ok else 'FAIL':<6} "
            f"{conference_residual(C):>12.2e} {seidel_square_residual(S):>12.2e} "
            f"{orthonormality_residual(pt):>9.2e} {isoclinic_residual(pt):>9.2e} "
            f"{hadamard_residual(double(C)):>9.2e}"
        )
    print(f"total {time.perf_counter() - start:.2f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
