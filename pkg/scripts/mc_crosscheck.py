#!/usr/bin/env python3
"""Monte-Carlo cross-check sweep: every low-degree entry moment vs theory.

Runs the full degree-(2,2) unitary grid and the degree-4 orthogonal grid at
several seeds, printing the max |z| for each run.  Useful for eyeballing the
statistical margin behind the frozen acceptance seed.
"""

import argparse
import json
import time

from weingarten.haarmc import grid_crosscheck


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("--threshold", type=float, default=4.0)
    parser.add_argument("--json", action="store_true", help="emit one JSON line per run")
    args = parser.parse_args()

    runs = [("unitary", 2, 3), ("orthogonal", 2, 4)]
    worst = 0.0
    for seed in args.seeds:
        for group, n, tau in runs:
            started = time.time()
            report = grid_crosscheck(group, n, tau, args.samples, seed, args.threshold)
            worst = max(worst, report.max_abs_z)
            if args.json:
                print(json.dumps(report.to_json_dict()))
            else:
                verdict = "ok" if report.ok else f"{len(report.failures)} FAILURES"
                print(
                    f"seed={seed} {group:>10} n={n} tau={tau}: "
                    f"max|z|={report.max_abs_z:.3f} over {report.moment_count} moments "
                    f"[{verdict}] ({time.time() - started:.1f}s)"
                )
    print(f"worst |z| across runs: {worst:.3f}")


if __name__ == "__main__":
    main()
