#!/usr/bin/env python3
"""Tabulate hierarchical vs half-split labeling sizes on hypercubes.

Materializes and verifies both labelings up to --verify-max and falls back
to the closed-form sizes beyond that. Thin wrapper over `hublab gap-report`.
"""
import sys

from hublab.cli import main

if __name__ == "__main__":
    sys.exit(main(["gap-report"] + sys.argv[1:]))
