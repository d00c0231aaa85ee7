"""Batch command line interface with JSON input and output.

Subcommands: gen, delta, charts, flip, transport, act, verify-axioms,
verify-cactus, dim.  Data travels as UTF-8 JSON on files or stdin ("-");
output is emitted with sorted keys so identical invocations are byte
identical.  Exit codes: 0 success or all checks passed, 1 verification
failure (report with counterexamples still emitted), 2 usage error.
"""

import argparse
import json
import math
import sys

from .flags import Configuration, FlagError
from .polygon import Triangulation, ChartPoint, chart_dimension, PolygonError
from .mutation import flip_transport, transport, MutationError
from .reconstruct import (flags_to_charts, charts_to_flags, random_positive,
                          ChartValueError)
from .rational import scalar_str
from .cactus import word_from_json, act_word, verify_relations, CactusError
from .axioms import check_axiom, check_glue


class UsageError(ValueError):
    pass


def _read_json(source):
    text = sys.stdin.read() if source == "-" else open(source).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed JSON in %r: %s" % (source, exc))


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _parse_diagonals(text, n):
    """Diagonal list from "a-b,c-d" syntax; empty string means none."""
    diags = []
    if text:
        for part in text.split(","):
            try:
                a, b = (int(x) for x in part.split("-"))
            except ValueError:
                raise UsageError("bad diagonal %r, expected 'a-b'" % part)
            diags.append((a, b))
    return Triangulation(n, diags)


def _load_configuration(data):
    try:
        return Configuration.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("not a configuration: %s" % exc)


def _load_chart(data):
    try:
        return ChartPoint.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("not a chart point: %s" % exc)


def _svg(t, m, path):
    """Static diagram: the polygon with its diagonals and a bullet at the
    location of every chart coordinate."""
    n = t.n
    size, r = 400, 170
    cx = cy = size // 2

    def pos(v):
        a = -math.pi / 2 + 2 * math.pi * (v - 1) / n
        return (cx + r * math.cos(a), cy + r * math.sin(a))

    lines = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">'
             % (size, size)]
    for a, b in t.edges():
        (x1, y1), (x2, y2) = pos(a), pos(b)
        lines.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" '
                     'stroke="black"/>' % (x1, y1, x2, y2))
    for v in range(1, n + 1):
        x, y = pos(v)
        lines.append('<text x="%.1f" y="%.1f" font-size="14">%d</text>'
                     % (1.08 * (x - cx) + cx, 1.08 * (y - cy) + cy, v))
    # bullets: edge coordinates spaced along each edge, triangle interiors
    # at barycentric positions
    for a, b in t.edges():
        (x1, y1), (x2, y2) = pos(a), pos(b)
        for i in range(1, m):
            s = i / m
            lines.append('<circle cx="%.1f" cy="%.1f" r="3"/>'
                         % (x1 + s * (x2 - x1), y1 + s * (y2 - y1)))
    for a, b, c in t.triangles():
        (x1, y1), (x2, y2), (x3, y3) = pos(a), pos(b), pos(c)
        for i in range(1, m - 1):
            for j in range(1, m - i):
                k = m - i - j
                lines.append('<circle cx="%.1f" cy="%.1f" r="3"/>'
                             % ((i * x1 + j * x2 + k * x3) / m,
                                (i * y1 + j * y2 + k * y3) / m))
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="totpos",
        description="exact charts, flips, and reversals for positive flag "
                    "configurations of the n-gon")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="random positive configuration")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20)

    p = sub.add_parser("delta", help="one coordinate of a configuration")
    p.add_argument("config", help="configuration JSON file, or - for stdin")
    p.add_argument("--index", required=True, help="comma-separated weights")

    p = sub.add_parser("charts", help="all chart coordinates on a triangulation")
    p.add_argument("config")
    p.add_argument("--diagonals", default=None,
                   help="e.g. '1-3,1-4'; default: the fan at vertex 1")
    p.add_argument("--svg", default=None, help="also write a diagram here")

    p = sub.add_parser("flip", help="transport a chart point across one flip")
    p.add_argument("chart")
    p.add_argument("--diagonal", required=True, help="e.g. '1-3'")
    p.add_argument("--svg", default=None, help="diagram of the new triangulation")

    p = sub.add_parser("transport", help="transport a chart point to a triangulation")
    p.add_argument("chart")
    p.add_argument("--diagonals", required=True)

    p = sub.add_parser("act", help="apply a word of interval reversals")
    p.add_argument("input", help="configuration or chart point JSON")
    p.add_argument("--word", required=True,
                   help="JSON like [[1,3],[2,4]], inline or a file path")

    p = sub.add_parser("verify-axioms", help="run the axiom harness")
    p.add_argument("config", nargs="?", default=None,
                   help="optional configuration; its m overrides --m")
    p.add_argument("--axiom", default="all", help="1..8, 'glue', or 'all'")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify-cactus", help="run the relation harness")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dim", help="number of chart coordinates")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    return ap


def _cmd_gen(args):
    _emit(random_positive(args.n, args.m, args.seed, args.bound).to_json())
    return 0


def _cmd_delta(args):
    c = _load_configuration(_read_json(args.config))
    try:
        idx = tuple(int(x) for x in args.index.split(","))
    except ValueError:
        raise UsageError("bad index %r" % args.index)
    sys.stdout.write(scalar_str(c.delta(idx)) + "\n")
    return 0


def _cmd_charts(args):
    c = _load_configuration(_read_json(args.config))
    if args.diagonals is None:
        t = Triangulation.fan(c.n)
    else:
        t = _parse_diagonals(args.diagonals, c.n)
    p = flags_to_charts(c, t)
    if args.svg:
        _svg(t, c.m, args.svg)
    _emit(p.to_json())
    return 0


def _cmd_flip(args):
    p = _load_chart(_read_json(args.chart))
    try:
        a, b = (int(x) for x in args.diagonal.split("-"))
    except ValueError:
        raise UsageError("bad diagonal %r, expected 'a-b'" % args.diagonal)
    q = flip_transport(p, (a, b))
    if args.svg:
        _svg(q.triangulation, q.m, args.svg)
    _emit(q.to_json())
    return 0


def _cmd_transport(args):
    p = _load_chart(_read_json(args.chart))
    t = _parse_diagonals(args.diagonals, p.triangulation.n)
    _emit(transport(p, t).to_json())
    return 0


def _cmd_act(args):
    data = _read_json(args.input)
    word_text = args.word
    try:
        word_data = json.loads(word_text)
    except json.JSONDecodeError:
        word_data = _read_json(word_text)
    word = word_from_json(word_data)
    if "flags" in data:
        _emit(act_word(_load_configuration(data), word).to_json())
    else:
        p = _load_chart(data)
        c = act_word(charts_to_flags(p), word)
        _emit(flags_to_charts(c, p.triangulation).to_json())
    return 0


def _cmd_verify_axioms(args):
    m = args.m
    if args.config is not None:
        m = _load_configuration(_read_json(args.config)).m
    if args.axiom == "all":
        ids = list(range(1, 9)) + ["glue"]
    elif args.axiom == "glue":
        ids = ["glue"]
    else:
        try:
            ids = [int(args.axiom)]
        except ValueError:
            raise UsageError("--axiom must be 1..8, 'glue', or 'all'")
        if not 1 <= ids[0] <= 8:
            raise UsageError("--axiom must be 1..8, 'glue', or 'all'")
    reports = []
    for k in ids:
        if k == "glue":
            reports.append(check_glue(m, args.trials, args.seed))
        else:
            reports.append(check_axiom(k, m, args.trials, args.seed))
    _emit(reports)
    return 0 if all(r["passes"] == r["trials"] for r in reports) else 1


def _cmd_verify_cactus(args):
    reports = verify_relations(args.n, args.m, args.trials, args.seed)
    _emit(reports)
    return 0 if all(r["passes"] == r["trials"] for r in reports) else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "delta": _cmd_delta,
    "charts": _cmd_charts,
    "flip": _cmd_flip,
    "transport": _cmd_transport,
    "act": _cmd_act,
    "verify-axioms": _cmd_verify_axioms,
    "verify-cactus": _cmd_verify_cactus,
    "dim": lambda args: (sys.stdout.write("%d\n" % chart_dimension(args.n, args.m)), 0)[1],
}


def run(argv):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, PolygonError, FlagError, MutationError,
            ChartValueError, CactusError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
