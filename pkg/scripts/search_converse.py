"""Search for input sets whose minset is always unique but whose ideal has several reduced Groebner bases.

Such sets show that a unique Groebner basis is sufficient but not necessary
for a guaranteed unique minimal wiring diagram.
"""

import argparse
import itertools

from wiringdesign.design import InputSet, guaranteed_unique_minset
from wiringdesign.gf import format_point
from wiringdesign.pointsideal import all_staircases


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=5)
    ap.add_argument("--limit", type=int, default=5, help="stop after this many examples")
    args = ap.parse_args()

    universe = list(itertools.product(range(args.p), repeat=args.n))
    found = 0
    for m in range(2, args.max_m + 1):
        for pts in itertools.combinations(universe, m):
            V = InputSet(pts, args.p)
            if not guaranteed_unique_minset(V).guaranteed_unique:
                continue
            bases = all_staircases(V)
            if len(bases) < 2:
                continue
            found += 1
            print("V = {" + ", ".join(format_point(s, args.p) for s in pts) + f"}}: {len(bases)} bases")
            for _, gb in bases:
                print("   ", ", ".join(gb.format()))
            if found >= args.limit:
                return
    print(f"{found} example(s) found")


if __name__ == "__main__":
    main()
