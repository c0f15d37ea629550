"""Inclusion-exclusion count of plane quartics smooth at one marked point, against brute force.

q=2 takes seconds; q=3 takes several minutes for the brute force.

    python3 scripts/sieve_check.py --q 2
"""

import argparse
import sys
import time

from gkcount.curvecount.quartic import sieve_s2p_bruteforce, sieve_s2p_point


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--q", type=int, nargs="+", default=[2])
    p.add_argument("--skip-bruteforce", action="store_true")
    args = p.parse_args()
    bad = 0
    for q in args.q:
        t0 = time.perf_counter()
        sieve = sieve_s2p_point(q)
        if args.skip_bruteforce:
            print(f"q={q}: sieve {sieve}")
            continue
        brute = sieve_s2p_bruteforce(q)
        bad += sieve != brute
        print(f"q={q}: sieve {sieve}, brute force {brute}, {time.perf_counter() - t0:.0f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
