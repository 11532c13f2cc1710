"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
input error, 3 resource guard hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import booleanlib, design, experiments, plots, pointsideal
from .gf import ResourceLimitError, format_point
from .monomials import minimal_generators

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _read_lines(path):
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def _emit(args, lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _minset_json(ms):
    return [list(m.vars) for m in ms]


def cmd_minsets(args) -> int:
    D = design.read_data(_read_lines(args.data_file), args.p)
    ideal = minimal_generators(design.nondisposable_ideal(D))
    ms = design.minsets(D)
    lines = [f"ideal: {ideal}", f"minsets ({len(ms)}):"] + [f"  {m}" for m in ms]
    _emit(args, lines, {
        "generators": [list(g.vars) for g in ideal.generators()],
        "minsets": _minset_json(ms),
    })
    return EXIT_OK


def _parse_outputs(text, p, m):
    vals = [int(v) for v in text.replace(" ", "").split(",")] if "," in text else [int(c) for c in text]
    if len(vals) != m or any(not 0 <= v < p for v in vals):
        raise ValueError(f"witness must list {m} values in 0..{p - 1}")
    return tuple(vals)


def cmd_unique_input(args) -> int:
    V = design.read_points(_read_lines(args.points_file), args.p)
    if len(V) < 2:
        raise ValueError("need at least two points")
    verdict = design.guaranteed_unique_minset(V)
    payload = {"guaranteed_unique": verdict.guaranteed_unique}
    lines = []
    if verdict.guaranteed_unique:
        lines.append("GUARANTEED UNIQUE")
    else:
        a, b = verdict.pair
        ms = design.minsets(design.DataSet(V, verdict.witness))
        lines += [
            "NOT GUARANTEED UNIQUE",
            f"triggering monomial: {verdict.monomial} from points {a + 1} and {b + 1}",
            "system: " + ", ".join(
                [f"t{a + 1} != t{b + 1}"] + [f"t{i + 1} = t{j + 1}" for i, j in verdict.equalities]
            ),
            "witness T: " + ",".join(map(str, verdict.witness)),
            "minsets: " + " ".join(str(m) for m in ms),
        ]
        payload.update(
            witness=list(verdict.witness),
            monomial=list(verdict.monomial.vars),
            pair=[a + 1, b + 1],
            minsets=_minset_json(ms),
        )
    if args.check_witness:
        T = _parse_outputs(args.check_witness, V.p, len(V))
        ms = design.minsets(design.DataSet(V, T))
        accepted = len(ms) >= 2
        lines.append(
            f"{'WITNESS ACCEPTED' if accepted else 'WITNESS REJECTED'}: T={','.join(map(str, T))} "
            f"gives {len(ms)} minset(s): " + " ".join(str(m) for m in ms)
        )
        payload["check_witness"] = {"T": list(T), "accepted": accepted, "minsets": _minset_json(ms)}
    _emit(args, lines, payload)
    return EXIT_OK if verdict.guaranteed_unique else EXIT_NEGATIVE


def _parse_order(args):
    perm = tuple(int(i) - 1 for i in args.perm.split(",")) if args.perm else None
    if args.weight:
        weight = tuple(Fraction(w) for w in args.weight.split(","))
        return pointsideal.MonomialOrder.weighted(weight, perm)
    return pointsideal.MonomialOrder(args.order, perm)


def _gb_lines(gb, index=None):
    head = "staircase" if index is None else f"[{index}] staircase"
    lines = [f"{head}: {pointsideal.format_staircase(gb.staircase)}"]
    lines += [f"  {g}" for g in gb.format()]
    return lines


def _gb_json(gb):
    return {
        "staircase": [list(m) for m in gb.staircase],
        "generators": gb.format(),
        "leads": [list(m) for m in gb.leads],
    }


def cmd_groebner(args) -> int:
    V = design.read_points(_read_lines(args.points_file), args.p)
    if args.all:
        items = pointsideal.all_staircases(V)
        lines = [f"{len(items)} reduced Groebner basis(es)"]
        for k, (_, gb) in enumerate(items, 1):
            lines += _gb_lines(gb, k)
        _emit(args, lines, {"bases": [_gb_json(gb) for _, gb in items]})
        return EXIT_OK
    gb = pointsideal.buchberger_moller(V, _parse_order(args))
    _emit(args, _gb_lines(gb), _gb_json(gb))
    return EXIT_OK


def cmd_nf(args) -> int:
    D = design.read_data(_read_lines(args.data_file), args.p)
    unique, nf = pointsideal.unique_normal_form(D.inputs, D.outputs)
    forms = pointsideal.distinct_normal_forms(D)
    if unique:
        lines = [f"UNIQUE NF: {nf}"]
    else:
        lines = ["NOT UNIQUE"] + [f"  {f}" for f in forms]
    _emit(args, lines, {"unique": unique, "normal_forms": [str(f) for f in forms]})
    return EXIT_OK if unique else EXIT_NEGATIVE


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


SCHEME_LABELS = {
    experiments.SchemeKind.SMALL_DISTANCE: "small-distance scheme",
    experiments.SchemeKind.RANDOM: "random scheme",
}
SCHEME_COLORS = {
    experiments.SchemeKind.SMALL_DISTANCE: "#1f77b4",
    experiments.SchemeKind.RANDOM: "#e6b800",
}


def _figure(series_groups, hist_series, colors, title):
    scatter = plots.PlotSpec(
        "scatter",
        [(label, [(g.d, g.num_minsets, g.count) for g in groups]) for label, groups in series_groups],
        xlabel="internal distance d(V)", ylabel="number of minsets", title=title, colors=colors,
    )
    hist = plots.PlotSpec(
        "histogram", hist_series, xlabel="number of minsets", ylabel="number of input sets",
        title="histogram", colors=colors,
    )
    return plots.render_svg([scatter, hist])


def cmd_experiment(args) -> int:
    f = booleanlib.get_function(args.function)
    if args.scheme == "both":
        schemes = [experiments.SchemeKind.SMALL_DISTANCE, experiments.SchemeKind.RANDOM]
    else:
        schemes = [experiments.SchemeKind(args.scheme)]
    records = []
    for s in schemes:
        records += experiments.run_trials(f, s, args.n, args.m, args.trials, args.seed)
    with _output(args.csv) as out:
        experiments.write_trials_csv(records, out)
    if args.svg:
        per = [(s, [r for r in records if r.scheme == s]) for s in schemes]
        svg = _figure(
            [(SCHEME_LABELS[s], experiments.group_records(rs)) for s, rs in per],
            [(SCHEME_LABELS[s], [r.num_minsets for r in rs]) for s, rs in per],
            [SCHEME_COLORS[s] for s in schemes],
            f"f = {f}, n={args.n}, m={args.m}",
        )
        with open(args.svg, "w") as fh:
            fh.write(svg)
    if args.csv not in (None, "-"):
        for s in schemes:
            rs = [r for r in records if r.scheme == s]
            if rs:
                print(
                    f"{s.value}: trials={len(rs)} mean_d={float(experiments.mean(r.d for r in rs)):.4f} "
                    f"mean_minsets={float(experiments.mean(r.num_minsets for r in rs)):.4f}"
                )
    return EXIT_OK


def cmd_exhaustive(args) -> int:
    f = booleanlib.get_function(args.function)
    groups = experiments.exhaustive_enumeration(f, args.n, args.m)
    with _output(args.csv) as out:
        experiments.write_groups_csv(groups, out)
    if args.svg:
        hist_values = [g.num_minsets for g in groups for _ in range(g.count)]
        svg = _figure([("", groups)], [("", hist_values)], ["#1f77b4"], f"all {args.m}-point input sets, f = {f}")
        with open(args.svg, "w") as fh:
            fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="field characteristic (default 2)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="wiringdesign", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minsets", parents=[common], help="minsets of a data file")
    p.add_argument("data_file")
    p.set_defaults(func=cmd_minsets)

    p = sub.add_parser("unique-input", parents=[common], help="is the minset unique for every output?")
    p.add_argument("points_file")
    p.add_argument("--check-witness", metavar="T", help="outputs to test, e.g. 0,2,0,0")
    p.set_defaults(func=cmd_unique_input)

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of I(V)")
    p.add_argument("points_file")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--order", choices=["lex", "deglex", "degrevlex"], default="lex")
    grp.add_argument("--all", action="store_true", help="every attainable staircase and basis")
    p.add_argument("--perm", help="variable priority, 1-based, e.g. 2,1,3")
    p.add_argument("--weight", help="weight vector, e.g. 1,3 (lex tie-break)")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("nf", parents=[common], help="is the normal form unique across all orders?")
    p.add_argument("data_file")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("experiment", parents=[common], help="sampling-scheme trials")
    p.add_argument("--function", required=True, help="catalog id (1-10) or polynomial in x1..xk")
    p.add_argument("--scheme", choices=["random", "small_distance", "both"], default="both")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--m", type=int, default=20)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="trial CSV path (default stdout)")
    p.add_argument("--svg", help="write scatter + histogram SVG here")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("exhaustive", parents=[common], help="all m-subsets of F_2^n, grouped")
    p.add_argument("--function", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--csv", help="grouped CSV path (default stdout)")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_exhaustive)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
