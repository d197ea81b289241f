#!/usr/bin/env python3
"""Solve the exact-rational covering/packing programs for small hypercubes.

For each dimension prints the combinatorial lower bound max_k psi(k), the
symmetrized LP optimum ROPT, the pair-packing optimum LOPT when the builder
supports the dimension, and the brute-force optimum when the graph is tiny.
"""
import argparse

from hublab.bounds import bound_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=4)
    ap.add_argument("--no-self-pairs", action="store_true")
    args = ap.parse_args()
    print(f"{'d':>3} {'max psi':>12} {'ROPT':>12} {'LOPT':>12} {'OPT':>6}")
    for d in range(args.d_max + 1):
        rep = bound_report(
            d, with_lp=True, with_oracle=(d <= 2),
            self_pairs=not args.no_self_pairs,
        )
        def fmt(x):
            return "-" if x is None else str(x)
        print(f"{d:>3} {fmt(rep.max_psi):>12} {fmt(rep.ropt):>12} "
              f"{fmt(rep.lopt):>12} {fmt(rep.opt):>6}")


if __name__ == "__main__":
    main()
