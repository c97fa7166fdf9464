#!/usr/bin/env python3
"""Sweep dimension formulas over a grid of ranks and genera.

Prints, for each (rank, genus): the oper-space dimension, the
destabilization threshold C(r, g), the expected Quot dimension, and the
degree of the canonical oper quotient.  Output is CSV so the sweep can
be piped into further analysis.
"""

import argparse
import csv
import sys

from opercalc import expected_dimensions, oper_space_dimensions, threshold_C


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=8)
    parser.add_argument("--max-genus", type=int, default=5)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout)
    writer.writerow(
        ["rank", "genus", "oper_space_dim", "threshold_C",
         "destabilized_locus_dim", "quot_expected", "oper_quot_degree"]
    )
    for r in range(2, args.max_rank + 1):
        for g in range(2, args.max_genus + 1):
            dims = expected_dimensions(r, g)
            writer.writerow([
                r,
                g,
                oper_space_dimensions(r, g)[0],
                threshold_C(r, g),
                "" if dims.destabilized_locus_dim is None else dims.destabilized_locus_dim,
                dims.quot_expected,
                dims.oper_quot_degree,
            ])
    return 0


if __name__ == "__main__":
    sys.exit(main())
