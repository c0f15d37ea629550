"""Interpolate the S_n-equivariant counts of M_{1,n} and check them at a held-out field.

Prints each polynomial and flags the ones with negative coefficients.

    python3 scripts/genus1_polynomiality.py --max-n 6
"""

import argparse
import sys
import time

from _common import add_census_args, census_config
from gkcount.gkpipeline import GENUS1_HOLDOUT, GENUS1_SAMPLES, genus1_entries
from gkcount.symcore import format_partition


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=lambda s: tuple(int(x) for x in s.split(",")), default=GENUS1_SAMPLES)
    p.add_argument("--holdout", type=int, default=GENUS1_HOLDOUT)
    add_census_args(p)
    args = p.parse_args()
    cache = census_config(args).cache()
    t0 = time.perf_counter()
    polys = genus1_entries(cache, args.samples, args.holdout, max_n=args.max_n)
    cache.flush()
    negative = 0
    for n, row in polys.items():
        for lam, poly in sorted(row.items()):
            flag = "  (negative coefficient)" if any(c < 0 for c in poly.coeffs) else ""
            negative += bool(flag)
            print(f"M1,{n} {format_partition(lam)}: {poly}{flag}")
    print(f"# holdout q={args.holdout} agrees everywhere; {negative} polynomials have a negative coefficient; "
          f"{time.perf_counter() - t0:.0f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
