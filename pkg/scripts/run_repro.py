#!/usr/bin/env python3
"""Re-derive every headline value and print the verification report.

Thin wrapper over `symhilb repro` so the report can be produced without
installing the console script.  Typical runs:

    python scripts/run_repro.py
    python scripts/run_repro.py --extended --format json --out report.json

The Hilbert-value criterion recomputes the d=3 table through r=6 and
dominates the runtime (tens of minutes); the rest finish in seconds.
"""

import sys

from symhilb.cli import main

if __name__ == "__main__":
    sys.exit(main(["repro", *sys.argv[1:]]))
