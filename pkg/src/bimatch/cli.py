"""`bimatch` command-line tool.

Exit codes: 0 success, 1 the queried property does not hold, 2 input
error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import io
from .classify import (Circular, CutAdmitting, Linear, census_sidedness_relations, classify,
                       is_unique)
from .construct import (alternative_matching_via_balanced_line, alternative_matchings_circular,
                        build_matching)
from .cuts import balanced_line_for_matching, chromatic_cut_from_pair, crossed_segments
from .geom import InputError, InternalInvariantError
from .svg import render_svg
from . import testlab

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror)) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load(args):
    ps = io.parse_pointset(_read(args.points))
    m = io.parse_matching(_read(args.matching), ps) if getattr(args, "matching", None) else None
    return ps, m


def _verdict_record(v) -> dict:
    rec = {"verdict": v.kind}
    if isinstance(v, Linear):
        rec["order"] = list(v.order)
    elif isinstance(v, Circular):
        rec["cycle"] = list(v.cycle)
    else:
        rec["witness"] = list(v.witness)
    return rec


def _emit(args, rec: dict) -> None:
    sys.stdout.write(io.format_record(rec, as_json=getattr(args, "json", False)))


def _line_points(line):
    p, q = line.points()
    return [io.format_point(p), io.format_point(q)]


# -- commands ------------------------------------------------------------------

def cmd_build(args) -> int:
    ps, _ = _load(args)
    m = build_matching(ps)
    _write(args.output, io.format_matching(m))
    if args.svg:
        _write(args.svg, render_svg(ps, m))
    return EXIT_OK


def cmd_unique(args) -> int:
    ps, _ = _load(args)
    res = is_unique(ps)
    rec = {"unique": str(res.unique).lower()}
    rec.update(_verdict_record(res.verdict))
    _emit(args, rec)
    if not res.unique and isinstance(res.verdict, CutAdmitting):
        print("incomparable pair: %d %d" % res.verdict.witness, file=sys.stderr)
    return EXIT_OK if res.unique else EXIT_FALSE


def cmd_classify(args) -> int:
    _, m = _load(args)
    _emit(args, _verdict_record(classify(m)))
    return EXIT_OK


def _no_cut(args, v) -> int:
    rec = _verdict_record(v)
    rec["cut"] = "none"
    _emit(args, rec)
    return EXIT_FALSE


def cmd_cut(args) -> int:
    ps, m = _load(args)
    v = classify(m)
    if not isinstance(v, CutAdmitting):
        return _no_cut(args, v)
    i, j = v.witness
    w = chromatic_cut_from_pair(ps, m.segments[i], m.segments[j])
    a, b = m.segments.index(w.seg_a), m.segments.index(w.seg_b)
    rec = {"verdict": v.kind, "witness": [a, b], "line": _line_points(w.line)}
    _emit(args, rec)
    print("chromatic cut through segments %d and %d: %s" % (a, b, "; ".join(rec["line"])),
          file=sys.stderr)
    if args.svg:
        _write(args.svg, render_svg(ps, m, lines=[w.line], title="chromatic cut"))
    return EXIT_OK


def cmd_balanced_line(args) -> int:
    ps, m = _load(args)
    v = classify(m)
    if not isinstance(v, CutAdmitting):
        return _no_cut(args, v)
    bl = balanced_line_for_matching(m, v.witness)
    rec = {"verdict": v.kind, "witness": list(v.witness), "line": _line_points(bl.line),
           "crossed": crossed_segments(m, bl.line)}
    _emit(args, rec)
    print("balanced line: %s" % "; ".join(rec["line"]), file=sys.stderr)
    if args.svg:
        _write(args.svg, render_svg(ps, m, lines=[bl.line], title="balanced line"))
    return EXIT_OK


def cmd_alternatives(args) -> int:
    ps, m = _load(args)
    v = classify(m)
    if isinstance(v, Linear):
        _emit(args, _verdict_record(v) | {"alternatives": 0})
        return EXIT_FALSE
    if isinstance(v, Circular):
        alts = list(alternative_matchings_circular(m, v.cycle))
    else:
        bl = balanced_line_for_matching(m, v.witness)
        alts = [alternative_matching_via_balanced_line(m, bl.line)]
    outs = args.output or []
    for k, alt in enumerate(alts):
        if k < len(outs):
            _write(outs[k], io.format_matching(alt))
        else:
            sys.stdout.write(io.format_matching(alt))
    _emit(args, _verdict_record(v) | {"alternatives": len(alts)})
    return EXIT_OK


def cmd_census(args) -> int:
    if not 3 <= args.n <= 20:
        raise InputError("census needs 3 <= n <= 20")
    print(census_sidedness_relations(args.n))
    return EXIT_OK


def _parse_occupancy(s: str) -> list[bool]:
    if not s or set(s) - {"0", "1"}:
        raise InputError("occupancy must be a string of 0/1 characters")
    return [c == "1" for c in s]


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "parallel":
        inst = testlab.gen_parallel(args.n)
    elif kind == "radial":
        occ = _parse_occupancy(args.occupancy) if args.occupancy else None
        inst = testlab.gen_radial(args.n, occ)
    elif kind == "random":
        ps = testlab.gen_random(args.n, args.seed, args.bound)
        _write(args.output, io.format_pointset(ps))
        return EXIT_OK
    elif kind == "duplicate":
        if not args.input:
            raise InputError("gen duplicate needs --input")
        src = io.parse_pointset(_read(args.input))
        inst = testlab.gen_duplication(src, _parse_vec(args.direction), io.parse_number(args.distance))
    else:
        inst = testlab.gen_nonparallelizable()
    _write(args.output, io.format_pointset(inst.points))
    if args.matching_out:
        _write(args.matching_out, io.format_matching(inst.matching))
    return EXIT_OK


def _parse_vec(s: str) -> tuple[Fraction, Fraction]:
    parts = s.split(",")
    if len(parts) != 2:
        raise InputError("direction must be 'dx,dy'")
    return io.parse_number(parts[0].strip()), io.parse_number(parts[1].strip())


def cmd_render(args) -> int:
    ps, m = _load(args)
    lines, labels, title = [], None, None
    if args.overlay:
        if m is None:
            raise InputError("--overlay needs a matching (-m)")
        v = classify(m)
        title = v.kind
        if args.overlay == "cycle" and isinstance(v, Circular):
            labels = {s: str(k) for k, s in enumerate(v.cycle)}
        elif args.overlay == "order" and isinstance(v, Linear):
            labels = {s: str(k) for k, s in enumerate(v.order)}
        elif args.overlay == "cut" and isinstance(v, CutAdmitting):
            i, j = v.witness
            lines = [chromatic_cut_from_pair(ps, m.segments[i], m.segments[j]).line]
        elif args.overlay == "balanced" and isinstance(v, CutAdmitting):
            lines = [balanced_line_for_matching(m, v.witness).line]
        else:
            print("overlay %s not available for a %s matching" % (args.overlay, v.kind),
                  file=sys.stderr)
            return EXIT_FALSE
    _write(args.output, render_svg(ps, m, lines=lines, labels=labels, title=title))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bimatch", description="Bichromatic non-crossing matchings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, fn, matching=False, help=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("points", help="point-set file ('-' for stdin)")
        if matching:
            p.add_argument("matching", help="matching file")
        p.add_argument("--json", action="store_true", help="JSON verdict record")
        p.set_defaults(func=fn)
        return p

    p = cmd("build", cmd_build, help="construct a matching")
    p.add_argument("-o", "--output")
    p.add_argument("--svg")
    cmd("unique", cmd_unique, help="decide whether the matching is unique")
    cmd("classify", cmd_classify, True, help="linear / circular / cut-admitting")
    p = cmd("cut", cmd_cut, True, help="chromatic cut witness line")
    p.add_argument("--svg")
    p = cmd("balanced-line", cmd_balanced_line, True, help="balanced line crossing a segment")
    p.add_argument("--svg")
    p = cmd("alternatives", cmd_alternatives, True, help="other matchings of the same points")
    p.add_argument("-o", "--output", nargs="+")

    p = sub.add_parser("census", help="count circular sidedness relations")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("gen", help="instance generators")
    p.add_argument("kind", choices=["parallel", "radial", "random", "duplicate", "nonpar"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--occupancy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--input")
    p.add_argument("--direction", default="0,1")
    p.add_argument("--distance", default="1/1000")
    p.add_argument("-o", "--output")
    p.add_argument("-m", "--matching-out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="SVG drawing")
    p.add_argument("points")
    p.add_argument("-m", "--matching")
    p.add_argument("--overlay", choices=["cycle", "order", "cut", "balanced"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # generator argument checks
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
