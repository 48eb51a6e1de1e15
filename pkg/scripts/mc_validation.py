"""Compare Monte-Carlo estimates of v_d^(s) with the exact values.

    python scripts/mc_validation.py --degrees 2 3 4 5 --samples 1000000 --seed 7
"""

import argparse
import time

from schurcohn.oracle import mc_estimate
from schurcohn.volumes import ratio, v_full, v_real


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--samples", type=int, default=10**6)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--threads", type=int, default=0)
    args = parser.parse_args()

    for d in args.degrees:
        t0 = time.perf_counter()
        report = mc_estimate(d, args.samples, args.seed, threads=args.threads)
        elapsed = time.perf_counter() - t0
        print(f"d={d}  box={report.box_volume}  degenerate={report.degenerate_count}  ({elapsed:.1f}s)")
        for tally in report.per_s:
            exact = v_real(d) * ratio(d, tally.s)
            z = (tally.estimate - float(exact)) / tally.stderr if tally.stderr else float("nan")
            print(f"  s={tally.s}  hits={tally.hits:8d}  est={tally.estimate:.5f}  exact={float(exact):.5f}  z={z:+.2f}")
        z = (report.total_estimate - float(v_full(d))) / report.total_stderr
        print(f"  total      est={report.total_estimate:.5f}  exact={float(v_full(d)):.5f}  z={z:+.2f}")


if __name__ == "__main__":
    main()
