"""Text formats for point sets, matchings and verdict records."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .geom import Color, InputError, Point, PointSet
from .matching import BRMatching, MatchingError

_NUM = re.compile(r"^-?\d+(/\d+)?$")


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(lines, what) -> int:
    if not lines:
        raise InputError("empty %s" % what)
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError("first line must be the count n, got %r" % lines[0]) from None
    if n < 1:
        raise InputError("n must be positive")
    return n


def parse_number(tok: str) -> Fraction:
    if not _NUM.match(tok):
        raise InputError("not an integer or p/q fraction: %r" % tok)
    if "/" in tok and int(tok.split("/")[1]) == 0:
        raise InputError("zero denominator in %r" % tok)
    return Fraction(tok)


def parse_pointset(text: str) -> PointSet:
    """`n` then 2n lines `x y c` with c in {W, B}."""
    lines = _lines(text)
    n = _header(lines, "point set")
    rows = lines[1:]
    if len(rows) != 2 * n:
        raise InputError("expected %d point lines, got %d" % (2 * n, len(rows)))
    pts = []
    for k, row in enumerate(rows):
        parts = row.split()
        if len(parts) != 3:
            raise InputError("point line %d: expected 'x y c', got %r" % (k, row))
        x, y, c = parts
        if c not in ("W", "B"):
            raise InputError("point line %d: color must be W or B" % k)
        pts.append(Point(parse_number(x), parse_number(y), Color(c)))
    whites = sum(1 for p in pts if p.color is Color.WHITE)
    if whites != n:
        raise InputError("expected %d white and %d black points, got %d and %d"
                         % (n, n, whites, 2 * n - whites))
    return PointSet(pts)


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)


def format_point(p) -> str:
    return "%s %s" % (_fmt(Fraction(p[0])), _fmt(Fraction(p[1])))


def format_pointset(ps: PointSet) -> str:
    out = [str(ps.n)]
    out += ["%s %s %s" % (_fmt(p.x), _fmt(p.y), p.color.value) for p in ps.points]
    return "\n".join(out) + "\n"


def parse_matching(text: str, ps: PointSet) -> BRMatching:
    """`n` then n lines `w b` (white index first)."""
    lines = _lines(text)
    n = _header(lines, "matching")
    if n != ps.n:
        raise MatchingError("matching has %d segments, point set needs %d" % (n, ps.n))
    rows = lines[1:]
    if len(rows) != n:
        raise InputError("expected %d segment lines, got %d" % (n, len(rows)))
    segs = []
    for k, row in enumerate(rows):
        parts = row.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InputError("segment line %d: expected 'w b', got %r" % (k, row))
        segs.append((int(parts[0]), int(parts[1])))
    return BRMatching(ps, segs)


def format_matching(m: BRMatching) -> str:
    return "\n".join([str(len(m))] + ["%d %d" % tuple(s) for s in m.segments]) + "\n"


def format_record(rec: dict, as_json: bool = False) -> str:
    """Line-oriented `key: value` text, or JSON."""
    if as_json:
        return json.dumps(rec, sort_keys=False, default=str) + "\n"
    out = []
    for k, v in rec.items():
        if isinstance(v, (list, tuple)):
            items = [" ".join(map(str, x)) if isinstance(x, (list, tuple)) else str(x) for x in v]
            v = ("; " if any(" " in x for x in items) else " ").join(items)
        out.append("%s: %s" % (k, v))
    return "\n".join(out) + "\n"
