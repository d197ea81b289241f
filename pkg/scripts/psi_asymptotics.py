#!/usr/bin/env python3
"""Track the growth rate of the packing lower bound max_k psi(d, k).

Prints, for a range of dimensions, the maximizing distance class k*, the
ratio k*/d (which drifts toward 0.4), and log2(max psi)/d (which drifts
toward log2 2.5). Uses the log-space evaluator so large d is cheap.
"""
import argparse
import math

from hublab.bounds import psi_argmax_log


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-values", type=int, nargs="+",
                    default=[10, 100, 1000, 10000, 100000])
    args = ap.parse_args()
    target = math.log2(2.5)
    print(f"{'d':>8} {'k*':>8} {'k*/d':>8} {'log2(psi*)/d':>14} {'gap':>10}")
    for d in args.d_values:
        k, v = psi_argmax_log(d)
        print(f"{d:>8} {k:>8} {k / d:>8.4f} {v / d:>14.6f} {v / d - target:>10.2e}")
    print(f"limit: k*/d -> 0.4, log2(psi*)/d -> log2 2.5 = {target:.6f}")


if __name__ == "__main__":
    main()
