#!/usr/bin/env python3
"""Label the (a, b) plane by asymptotic regime and write plot-ready CSV.

Usage: python scripts/bifurcation_sweep.py [out.csv]
"""

import sys

from avgsfde.cli import main

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "bifurcation.csv"
    sys.exit(main(["sweep", "--a-range", "-2:2:0.05",
                   "--b-range", "-2:2:0.05", "--out", out]))
