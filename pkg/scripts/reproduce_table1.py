"""Group all 4-point input sets in F_2^3 by internal distance and minset count.

Uses f = 1 + x2 + x2x3 and writes table1.csv and table1.svg next to this
script unless --out is given.
"""

import argparse
import pathlib

from wiringdesign.booleanlib import EXAMPLE_FUNCTION
from wiringdesign.cli import main as cli_main
from wiringdesign.experiments import exhaustive_enumeration


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).parent / "out"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    groups = exhaustive_enumeration(EXAMPLE_FUNCTION, 3, 4)
    print(f"{'d(V)':>6}  {'#M(V)':>5}  {'count':>5}")
    for g in groups:
        print(f"{str(g.d):>6}  {g.num_minsets:>5}  {g.count:>5}")
    print(f"total {sum(g.count for g in groups)}")

    cli_main(["exhaustive", "--function", "10", "--n", "3", "--m", "4",
              "--csv", str(out / "table1.csv"), "--svg", str(out / "table1.svg")])
    print(f"wrote {out / 'table1.csv'} and {out / 'table1.svg'}")


if __name__ == "__main__":
    main()
