#!/usr/bin/env python3
"""Run the falsification sweep over small bridgeless multigraphs.

Audits every bridgeless connected multigraph within the bounds: sign
patterns and root-one multiplicity everywhere, leading coefficients on the
3-edge-connected ones, root locations on the real-rooted ones, and the
survivors of the strict structural class.  Any nonempty failure list in the
output would be a counterexample to published claims, so the interesting
result is the boring one.
"""

import argparse
import json
import sys
import time

from flowpoly.search import expected_g0_codes, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--max-edges", type=int, default=12)
    ap.add_argument("--max-multiplicity", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args()

    t0 = time.time()

    def progress(count, elapsed):
        print(f"  {count} graphs audited, {elapsed:.0f}s", file=sys.stderr, flush=True)

    res = run_sweep(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_multiplicity=args.max_multiplicity,
        progress=progress,
    )
    if args.json:
        print(json.dumps(res.to_dict(), indent=2))
    else:
        print(f"graphs audited:        {res.graphs}")
        print(f"sign-pattern checks:   {res.wakelin_checked} "
              f"({len(res.wakelin_failures)} failures)")
        print(f"coefficient checks:    {res.le00_checked} "
              f"({len(res.le00_failures)} failures)")
        print(f"real-rooted graphs:    {res.real_rooted} "
              f"({len(res.bad_real_rooted)} with roots outside {{1,2,3}})")
        expected = {c.hex() for c in expected_g0_codes()}
        got = set(res.g0_survivors)
        verdict = "all known members" if got <= expected else "UNEXPECTED MEMBER"
        print(f"strict-class survivors: {sorted(got)} ({verdict})")
        for code in res.candidates_problem1:
            print(f"CANDIDATE problem1: {code}")
        for code in res.candidates_problem2:
            print(f"CANDIDATE problem2: {code}")
        print(f"elapsed: {time.time() - t0:.1f}s")
    bad = (
        res.wakelin_failures
        or res.le00_failures
        or res.bad_real_rooted
        or not set(res.g0_survivors) <= {c.hex() for c in expected_g0_codes()}
    )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
