#!/usr/bin/env python3
"""Scan the bounded center over roots of unity and compare with generic q.

For each order N the center is searched up to size bound ``--degree`` (default N),
which is the smallest bound that can see x^N.
"""

import argparse
import time

from expoweyl.config import SessionConfig


def scan(orders, degree=None):
    rows = []
    for mode in ["generic"] + [f"root:{n}" for n in orders]:
        d = degree or (int(mode.split(":")[1]) if ":" in mode else max(orders))
        algebra = SessionConfig(q_mode=mode).build().algebra
        t0 = time.perf_counter()
        basis = algebra.center_up_to_degree(d)
        rows.append((mode, d, [str(z) for z in basis], time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--degree", type=int, help="fixed size bound for every mode")
    args = ap.parse_args()
    print(f"{'mode':<10} {'D':>2} {'dim':>3}  {'seconds':>7}  basis")
    for mode, d, basis, secs in scan(args.orders, args.degree):
        print(f"{mode:<10} {d:>2} {len(basis):>3}  {secs:7.2f}  {', '.join(basis)}")


if __name__ == "__main__":
    main()
