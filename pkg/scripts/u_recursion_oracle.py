"""Compare the recursive character sums u_g with direct summation over all squarefree polynomials.

    python3 scripts/u_recursion_oracle.py --q 3 5 --max-genus 3 --max-weight 4
"""

import argparse
import sys
import time

from gkcount.curvecount.hyperelliptic import orbit_representatives, u_direct, u_recursive

ZERO_INF = (((1, -1), 1), ((1, 0), 1))


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--q", type=int, nargs="+", default=[3, 5])
    p.add_argument("--max-genus", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--zero-inf-genus", type=int, default=4)
    args = p.parse_args()
    bad = 0
    for q in args.q:
        t0 = time.perf_counter()
        reps = orbit_representatives(q, args.max_weight)
        for g in range(args.max_genus + 1):
            for sig in reps:
                r, d = u_recursive(g, q, sig), u_direct(g, q, sig)
                if r != d:
                    bad += 1
                    print(f"q={q} g={g} {sig}: recursive {r}, direct {d}")
        zi = [u_recursive(g, q, ZERO_INF) for g in range(args.zero_inf_genus + 1)]
        ok = all(v == -(q - 1) ** 2 for v in zi)
        bad += not ok
        print(f"q={q}: {len(reps)} orbit reps, g<={args.max_genus}; u_g(0,inf) = {zi} "
              f"({'ok' if ok else 'unexpected'}); {time.perf_counter() - t0:.0f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
