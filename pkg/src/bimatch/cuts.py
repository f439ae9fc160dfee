"""Witness lines: chromatic cuts, balanced lines, and the lowest-crossing
probes used to find interior points of a segment in general position.

A probe is a directed segment lo -> hi given by coordinates; positions on
it are parameters t (0 at lo, 1 at hi). "Lowest" means the smallest t > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import count
from typing import NamedTuple

from .geom import (BLACK, WHITE, DirectedLine, InternalInvariantError, PointSet, Segment,
                   convex_hull_xy, cross, sub)
from .matching import BRMatching, PairGeometry, _line_param, has_chromatic_cut, pair_geometry


class Crossing(NamedTuple):
    t: Fraction
    point: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class BalancedLine:
    line: DirectedLine
    crossed: Segment


@dataclass(frozen=True)
class ChromaticCutWitness:
    """`line.origin` lies inside seg_a, origin + direction inside seg_b."""
    line: DirectedLine
    seg_a: Segment
    seg_b: Segment


def _at(lo, hi, t):
    return (lo[0] + t * (hi[0] - lo[0]), lo[1] + t * (hi[1] - lo[1]))


def _param(lo, d, p, q):
    """Parameter of line(p, q) ∩ line(lo, lo + d); None when parallel."""
    den = cross(d, sub(q, p))
    if den == 0:
        return None
    return Fraction(cross(sub(p, lo), sub(q, p))) / den


def _split(lo, hi, pts):
    d = sub(hi, lo)
    left, right = [], []
    for p in pts:
        s = cross(d, sub(p, lo))
        if s > 0:
            left.append(p)
        elif s < 0:
            right.append(p)
    return left, right


def _min_positive(vals):
    best = None
    for t in vals:
        if t is not None and t > 0 and (best is None or t < best):
            best = t
    return best


def _as_crossing(lo, hi, t):
    if t is None or t >= 1:
        return None
    return Crossing(t, _at(lo, hi, t))


def _radial(lo, pts, d=None):
    """Angular order around lo of points in one open half-plane through lo.

    Points on a common ray from lo are ordered as seen from a point just
    past lo in direction d.
    """
    def cmp(p, q):
        c = cross(sub(p, lo), sub(q, lo))
        if c == 0 and d is not None:
            c = cross(d, sub(p, lo)) - cross(d, sub(q, lo))
        return -1 if c > 0 else (1 if c < 0 else 0)
    return sorted(pts, key=cmp_to_key(cmp))


def _one_sided_t(lo, hi, pts):
    d = sub(hi, lo)
    order = _radial(lo, pts, d)
    return _min_positive(_param(lo, d, p, q) for p, q in zip(order, order[1:]))


def lowest_crossing_one_sided(lo, hi, pts) -> Crossing | None:
    """Lowest point of the probe on a line through two of `pts`, all of
    which lie strictly on one side of the probe's line.

    The minimising pair is adjacent in the radial order around lo, so a
    sort plus one pass over neighbours suffices.
    """
    return _as_crossing(lo, hi, _one_sided_t(lo, hi, list(pts)))


def lowest_crossing_one_sided_bruteforce(lo, hi, pts) -> Crossing | None:
    pts = list(pts)
    d = sub(hi, lo)
    return _as_crossing(lo, hi, _min_positive(
        _param(lo, d, pts[i], pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))))


def _spanning_t(lo, hi, left, right):
    d = sub(hi, lo)
    if not left or not right:
        return None
    if len(left) * len(right) <= 16:
        return _min_positive(_param(lo, d, p, q) for p in left for q in right)
    big, small = (left, right) if len(left) >= len(right) else (right, left)
    order = _radial(lo, big)
    m = order[len(order) // 2]
    k = sub(m, lo)
    up_sign = cross(k, d) > 0

    def up(p):
        s = cross(k, sub(p, lo))
        return s == 0 or (s > 0) == up_sign

    big_up = [p for p in big if up(p)]
    big_low = [p for p in big if not up(p)]
    small_up = [p for p in small if up(p)]
    small_low = [p for p in small if not up(p)]
    cands = []
    # both on the upper side of k: the answer is a hull edge crossing the probe line
    if big_up and small_up:
        hull = convex_hull_xy(big_up + small_up)
        side = {p: cross(d, sub(p, lo)) > 0 for p in hull}
        for x in range(len(hull)):
            p, q = hull[x], hull[(x + 1) % len(hull)]
            if side[p] != side[q]:
                cands.append(_param(lo, d, p, q))
    # both below k meet the probe line below lo; mixed pairs recurse
    cands.append(_spanning_t(lo, hi, big_up, small_low))
    cands.append(_spanning_t(lo, hi, big_low, small_up))
    return _min_positive(cands)


def lowest_crossing_spanning(lo, hi, pts) -> Crossing | None:
    """Lowest point of the probe crossed by a segment between two of `pts`
    lying on opposite sides of the probe's line.

    Divide and conquer on the radial median of the larger side; the
    same-side-of-median case is answered by a convex hull edge.
    """
    left, right = _split(lo, hi, pts)
    return _as_crossing(lo, hi, _spanning_t(lo, hi, left, right))


def lowest_crossing_spanning_bruteforce(lo, hi, pts) -> Crossing | None:
    left, right = _split(lo, hi, pts)
    d = sub(hi, lo)
    return _as_crossing(lo, hi, _min_positive(_param(lo, d, p, q) for p in left for q in right))


def _lowest_line_t(lo, hi, pts):
    left, right = _split(lo, hi, pts)
    return _min_positive([_one_sided_t(lo, hi, left), _one_sided_t(lo, hi, right),
                          _spanning_t(lo, hi, left, right)])


def lowest_line_crossing(lo, hi, pts) -> Crossing | None:
    """Lowest point of the probe on any line through two of `pts`."""
    return _as_crossing(lo, hi, _lowest_line_t(lo, hi, list(pts)))


def _others(ps: PointSet, seg: Segment):
    return [p.xy for i, p in enumerate(ps.points) if i not in seg]


def general_position_point(ps: PointSet, seg: Segment, from_end: str = "white"):
    """Interior point of `seg` on no line through two other points of the set.

    Halfway between the chosen end and the lowest crossing seen from it,
    or the midpoint when nothing crosses the segment.
    """
    a, b = ps[seg.white].xy, ps[seg.black].xy
    lo, hi = (a, b) if from_end == "white" else (b, a)
    t = _lowest_line_t(lo, hi, _others(ps, seg))
    if t is None or t >= 1:
        return _at(lo, hi, Fraction(1, 2))
    return _at(lo, hi, t / 2)


def on_no_line(ps: PointSet, x, exclude=()) -> bool:
    """O(n^2) check that x lies on no line through two points (outside `exclude`)."""
    pts = [p.xy for i, p in enumerate(ps.points) if i not in exclude]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if cross(sub(pts[j], pts[i]), sub(x, pts[i])) == 0:
                return False
    return True


def _sides(ps: PointSet, line: DirectedLine):
    return [line.side(p.xy) for p in ps.points]


def is_chromatic_cut(ps: PointSet, line: DirectedLine, a: Segment, b: Segment) -> bool:
    """The line avoids every point, crosses both segments and separates
    their black ends."""
    s = _sides(ps, line)
    if 0 in s:
        return False
    return (s[a.white] != s[a.black] and s[b.white] != s[b.black]
            and s[a.black] != s[b.black])


def is_balanced(ps: PointSet, line: DirectedLine) -> bool:
    """Each open side has as many white as black points, none on the line."""
    bal = {1: 0, -1: 0}
    for p, c in zip(ps.points, ps.colors):
        s = line.side(p.xy)
        if s == 0:
            return False
        bal[s] += 1 if c is WHITE else -1
    return bal[1] == 0 and bal[-1] == 0


def crossed_segments(m: BRMatching, line: DirectedLine) -> list[int]:
    ps = m.base
    return [k for k, s in enumerate(m.segments)
            if line.side(ps[s.white].xy) * line.side(ps[s.black].xy) < 0]


def _fractions_in_unit():
    for k in count(2):
        for j in range(1, k):
            if Fraction(j, k).denominator == k:
                yield Fraction(j, k)


def chromatic_cut_from_pair(ps: PointSet, a: Segment, b: Segment,
                            geo: PairGeometry | None = None) -> ChromaticCutWitness:
    """Explicit chromatic cut through interior points of two segments whose
    pair geometry certifies one.

    For antiparallel pairs and outer rays of different colors any line
    through interior points works; we start at the midpoints and move the
    second point until the line avoids every point of the set. When an
    outer ray of one segment crosses the other, the line is that ray's
    supporting line turned slightly about the owner's midpoint, which we
    get by picking the second point next to the crossing on either side.
    """
    if geo is None:
        geo = pair_geometry(ps, a, b)
    if not geo.certifies_cut:
        raise ValueError("pair geometry %s does not certify a chromatic cut" % geo.value)
    near = None
    if geo is PairGeometry.RAY_CROSSES_SEGMENT:
        ta = _line_param(ps, a, b)
        if 0 < ta < 1:
            a, b = b, a          # the ray of the first segment crosses the second
            near = ta
        else:
            near = _line_param(ps, b, a)
    pa, pb = ps[a.white].xy, ps[a.black].xy
    qa, qb = ps[b.white].xy, ps[b.black].xy
    p = _at(pa, pb, Fraction(1, 2))
    if near is None:
        cands = _fractions_in_unit()
    else:
        gap = min(near, 1 - near)

        def shrink():
            for k in count(1):
                d = gap / 2 ** k
                yield near + d
                yield near - d
        cands = shrink()
    for _, t in zip(range(100000), cands):
        q = _at(qa, qb, t)
        if q == p:
            continue
        line = DirectedLine.through(p, q)
        if is_chromatic_cut(ps, line, a, b):
            return ChromaticCutWitness(line, a, b)
    raise InternalInvariantError("no chromatic cut found for %s, %s" % (a, b))


def _nudge(ps: PointSet, seg: Segment, start, accept):
    """A point of `seg` close to `start` on no line through two other
    points, satisfying `accept`."""
    others = _others(ps, seg)
    for end in (seg.black, seg.white):
        hi = ps[end].xy
        t = _lowest_line_t(start, hi, others)
        s = Fraction(1, 2) if t is None or t >= 1 else t / 2
        for _ in range(200):
            x = _at(start, hi, s)
            if accept(x):
                return x
            s /= 2
    raise InternalInvariantError("could not move %s off all point-pair lines" % (start,))


def _direction_candidates():
    yield (1, 0)
    yield (0, 1)
    for k in count(1):
        yield (1, k)
        yield (k, 1)
        yield (-1, k)


def rotate_for_balance(ps: PointSet, p) -> DirectedLine | None:
    """Rotate a directed line half a turn about p, tracking
    #black - #white on its right; return the first balanced position.

    p must lie on no line through two points of the set except possibly
    one segment's supporting line; points on a common line through p
    change sides together.
    """
    vs = [(sub(pt.xy, p), c) for pt, c in zip(ps.points, ps.colors)]
    if any(v == (0, 0) for v, _ in vs):
        raise ValueError("rotation centre coincides with a point")
    u0 = next(u for u in _direction_candidates() if all(cross(u, v) != 0 for v, _ in vs))
    bal = 0
    events = []
    for v, c in vs:
        w = 1 if c is BLACK else -1
        if cross(u0, v) < 0:
            bal += w
        if cross(u0, v) > 0:
            events.append(((v[0], v[1]), w))       # left -> right
        else:
            events.append(((-v[0], -v[1]), -w))    # right -> left
    if bal == 0:
        return DirectedLine(p, u0)
    events.sort(key=cmp_to_key(lambda x, y: -1 if cross(x[0], y[0]) > 0 else
                               (1 if cross(x[0], y[0]) < 0 else 0)))
    k = 0
    while k < len(events):
        e = events[k][0]
        while k < len(events) and cross(e, events[k][0]) == 0:
            bal += events[k][1]
            k += 1
        if bal == 0:
            nxt = events[k][0] if k < len(events) else (-u0[0], -u0[1])
            u = (e[0] + nxt[0], e[1] + nxt[1])
            return DirectedLine(p, u)
    return None


def balanced_line_for_matching(m: BRMatching, witness: tuple[int, int] | None = None) -> BalancedLine:
    """Balanced line crossing one of the two segments of an incomparable pair.

    Both rotation centres are interior points of the pair's segments in
    general position and on a common chromatic cut; a half-turn about one
    of them always hits a balanced position off the segment's own line.
    """
    ps, segs = m.base, m.segments
    if witness is None:
        witness = has_chromatic_cut(m)
        if witness is None:
            raise ValueError("matching has no chromatic cut")
    a, b = segs[witness[0]], segs[witness[1]]
    cut = chromatic_cut_from_pair(ps, a, b)
    a, b = cut.seg_a, cut.seg_b
    p0, q0 = cut.line.points()

    def cuts_with(x, y):
        return x != y and is_chromatic_cut(ps, DirectedLine.through(x, y), a, b)

    p = _nudge(ps, a, p0, lambda x: cuts_with(x, q0))
    q = _nudge(ps, b, q0, lambda y: cuts_with(p, y))
    for centre, seg in ((p, a), (q, b)):
        line = rotate_for_balance(ps, centre)
        if line is not None:
            if not is_balanced(ps, line):
                raise InternalInvariantError("rotation produced an unbalanced line")
            return BalancedLine(line, seg)
    raise InternalInvariantError("no balanced line through either cut point")


def balanced_partitions_bruteforce(m: BRMatching):
    """Every combinatorially distinct balanced line crossing a segment.

    A line can be moved until it touches two points without changing the
    partition of the rest; conversely both touching points can be pushed
    to either side. Returns (i, j, side_i, side_j, crossed) tuples.
    """
    ps, segs = m.base, m.segments
    N = len(ps)
    out = []
    for i in range(N):
        for j in range(i + 1, N):
            base = [ps.orient(i, j, k) for k in range(N)]
            for si in (1, -1):
                for sj in (1, -1):
                    side = list(base)
                    side[i], side[j] = si, sj
                    bal = {1: 0, -1: 0}
                    for k in range(N):
                        bal[side[k]] += 1 if ps.colors[k] is WHITE else -1
                    if bal[1] or bal[-1]:
                        continue
                    crossed = [x for x, s in enumerate(segs) if side[s.white] != side[s.black]]
                    if crossed:
                        out.append((i, j, si, sj, tuple(crossed)))
    return out
