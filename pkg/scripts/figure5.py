"""Compare the random and small-distance sampling schemes for every catalog function.

For each of the nine fanout-free functions this runs both schemes at
n=10, m=20, prints mean internal distance and mean number of minsets, and
writes one CSV and one SVG per function.
"""

import argparse
import pathlib

from wiringdesign.booleanlib import table2_catalog
from wiringdesign.cli import main as cli_main
from wiringdesign.experiments import mean, run_trials


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--m", type=int, default=20)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).parent / "out"))
    ap.add_argument("--no-files", action="store_true", help="only print the summary table")
    args = ap.parse_args()
    out = pathlib.Path(args.out)

    print(f"{'f':>2}  {'mean d small':>12}  {'mean d rand':>11}  {'#M small':>8}  {'#M rand':>8}")
    for f in table2_catalog():
        small = run_trials(f, "small_distance", args.n, args.m, args.trials, args.seed)
        rand = run_trials(f, "random", args.n, args.m, args.trials, args.seed)
        print(
            f"{f.id:>2}  {float(mean(r.d for r in small)):>12.4f}  {float(mean(r.d for r in rand)):>11.4f}"
            f"  {float(mean(r.num_minsets for r in small)):>8.3f}  {float(mean(r.num_minsets for r in rand)):>8.3f}"
        )
        if not args.no_files:
            out.mkdir(parents=True, exist_ok=True)
            cli_main([
                "experiment", "--function", str(f.id), "--scheme", "both",
                "--n", str(args.n), "--m", str(args.m), "--trials", str(args.trials),
                "--seed", str(args.seed),
                "--csv", str(out / f"figure5_f{f.id}.csv"), "--svg", str(out / f"figure5_f{f.id}.svg"),
            ])


if __name__ == "__main__":
    main()
