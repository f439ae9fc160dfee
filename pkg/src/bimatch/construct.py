"""Building matchings: recursive ham-sandwich construction, alternating
paths of linear matchings and the alternative matchings that witness
non-uniqueness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .geom import (BLACK, WHITE, DirectedLine, InternalInvariantError, PointSet, Segment,
                   segments_cross)
from .matching import BRMatching, MatchingError, precedes


@dataclass(frozen=True)
class HamSandwichCut:
    """Line through two points of the set; `left`/`right` hold the
    off-line points after the on-line ones were pushed to a side, and
    `matched` is the on-line pair when it gets matched directly (odd case)."""
    line: DirectedLine
    on_line: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    matched: Segment | None


@dataclass(frozen=True)
class AlternatingPath:
    vertices: tuple[int, ...]
    in_matching: tuple[bool, ...]    # one flag per edge

    def edges(self):
        v = self.vertices
        return [(v[k], v[k + 1]) for k in range(len(v) - 1)]


def _angle_cmp(ps: PointSet, pivot: int):
    px, py = ps.icoord(pivot)

    def half(i):
        dx, dy = ps.xs[i] - px, ps.ys[i] - py
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def cmp(i, j):
        hi, hj = half(i), half(j)
        if hi != hj:
            return hi - hj
        return -ps.orient(pivot, i, j)
    return cmp


def _finish_cut(ps: PointSet, p: int, q: int, left, right, on, k: int) -> HamSandwichCut:
    line = DirectedLine.through(ps[p].xy, ps[q].xy)
    left, right = list(left), list(right)
    if k % 2 == 1:
        w = p if ps.colors[p] is WHITE else q
        b = q if w == p else p
        if ps.colors[w] is not WHITE or ps.colors[b] is not BLACK:
            raise InternalInvariantError("odd ham-sandwich cut through two points of one color")
        return HamSandwichCut(line, tuple(on), tuple(left), tuple(right), Segment(w, b))
    half = k // 2
    for v in on:
        c = ps.colors[v]
        if sum(1 for x in left if ps.colors[x] is c) < half:
            left.append(v)
        else:
            right.append(v)
    for side in (left, right):
        if sum(1 for x in side if ps.colors[x] is WHITE) != half or len(side) != 2 * half:
            raise InternalInvariantError("unbalanced sides after shifting the cut")
    return HamSandwichCut(line, tuple(on), tuple(left), tuple(right), None)


def ham_sandwich(ps: PointSet, idx: Sequence[int] | None = None) -> HamSandwichCut:
    """Ham-sandwich cut of the points `idx` (default: all).

    Candidates are lines through two of the points; among the valid ones
    (each open side has at most floor(k/2) points of each color) the
    lexicographically smallest index pair wins. Counting is done with a
    rotational sweep around each pivot, O(m^2 log m) overall.
    """
    idx = sorted(range(len(ps)) if idx is None else idx)
    k = sum(1 for i in idx if ps.colors[i] is WHITE)
    if 2 * k != len(idx) or k == 0:
        raise ValueError("subset is not balanced")
    if k == 1:
        p, q = idx
        return _finish_cut(ps, p, q, (), (), (p, q), 1)
    lim = k // 2
    tot_w = k
    for p in idx:
        others = [i for i in idx if i != p]
        others.sort(key=cmp_to_key(_angle_cmp(ps, p)))
        m = len(others)
        ext = others + others
        pw = [0]
        for v in ext:
            pw.append(pw[-1] + (ps.colors[v] is WHITE))
        best = None
        e = 1
        for a in range(m):
            q = others[a]
            if e < a + 1:
                e = a + 1
            while e < a + m and ps.orient(p, q, ext[e]) > 0:
                e += 1
            if q < p:
                continue
            lw = pw[e] - pw[a + 1]
            lb = (e - a - 1) - lw
            on_w = (ps.colors[p] is WHITE) + (ps.colors[q] is WHITE)
            rw = tot_w - lw - on_w
            rb = (m - 1 - (e - a - 1)) - rw
            if max(lw, lb, rw, rb) <= lim and (best is None or q < best[0]):
                best = (q, a, e)
        if best is not None:
            q, a, e = best
            left = [ext[x] for x in range(a + 1, e)]
            ls = set(left)
            right = [v for v in others if v != q and v not in ls]
            return _finish_cut(ps, p, q, left, right, (p, q), k)
    raise InternalInvariantError("no ham-sandwich cut among point-pair lines")


def ham_sandwich_bruteforce(ps: PointSet, idx: Sequence[int] | None = None) -> HamSandwichCut:
    """O(m^3) reference with the same tie-breaking."""
    idx = sorted(range(len(ps)) if idx is None else idx)
    k = sum(1 for i in idx if ps.colors[i] is WHITE)
    lim = k // 2
    for x, p in enumerate(idx):
        for q in idx[x + 1:]:
            left, right = [], []
            for v in idx:
                if v in (p, q):
                    continue
                (left if ps.orient(p, q, v) > 0 else right).append(v)
            ok = True
            for side in (left, right):
                w = sum(1 for v in side if ps.colors[v] is WHITE)
                if w > lim or len(side) - w > lim:
                    ok = False
            if ok:
                return _finish_cut(ps, p, q, left, right, (p, q), k)
    raise InternalInvariantError("no ham-sandwich cut")


def _balanced_blocks(ps: PointSet, idx: list[int]) -> list[list[int]]:
    """Split at every balanced prefix of the lexicographic order; such
    prefixes are separated by a line of direction (1, epsilon)."""
    idx = sorted(idx, key=lambda i: (ps.xs[i], ps.ys[i]))
    blocks, cur, bal = [], [], 0
    for i in idx:
        cur.append(i)
        bal += 1 if ps.colors[i] is WHITE else -1
        if bal == 0:
            blocks.append(cur)
            cur = []
    return blocks


def build_matching(ps: PointSet, idx: Sequence[int] | None = None, *,
                   validate: bool | None = None) -> BRMatching:
    """Some BR-matching of the point set by recursive balanced splitting.

    Blocks that admit a balanced split in lexicographic order are split
    there (cheap); the rest are split by a ham-sandwich cut.
    `validate` defaults to an O(n^2) non-crossing check for n <= 2000.
    """
    idx = list(range(len(ps)) if idx is None else idx)
    segs: list[Segment] = []
    work = [idx]
    while work:
        cur = work.pop()
        for block in _balanced_blocks(ps, cur):
            if len(block) == 2:
                a, b = block
                segs.append(Segment(a, b) if ps.colors[a] is WHITE else Segment(b, a))
                continue
            cut = ham_sandwich(ps, block)
            if cut.matched is not None:
                segs.append(cut.matched)
            for side in (cut.left, cut.right):
                if side:
                    work.append(list(side))
    if validate is None:
        validate = len(ps) <= 4000
    if len(idx) == len(ps):
        return BRMatching(ps, segs, validate=validate)
    return segs


def build_alternating_paths(m: BRMatching, order: Sequence[int]) -> tuple[AlternatingPath, AlternatingPath]:
    """Two alternating paths through all segments of a linear matching in
    ⊴ order: one starting at the white end of the first segment, one at
    its black end. Consecutive segments are joined by a color-conforming
    non-matching edge."""
    ps, segs = m.base, m.segments
    order = list(order)
    if sorted(order) != list(range(len(segs))):
        raise ValueError("order must be a permutation of the segments")
    for i, j in zip(order, order[1:]):
        if not precedes(ps, segs[i], segs[j]):
            raise ValueError("segments %d, %d are not consecutive in ⊴" % (i, j))
    return _paths(segs, order)


def _paths(segs, order):
    from_white, from_black = [], []
    for i in order:
        w, b = segs[i]
        from_white += [w, b]
        from_black += [b, w]
    flags = tuple(k % 2 == 0 for k in range(2 * len(order) - 1))
    return AlternatingPath(tuple(from_white), flags), AlternatingPath(tuple(from_black), flags)


def path_self_crossing(ps: PointSet, path: AlternatingPath) -> bool:
    es = path.edges()
    for x in range(len(es)):
        for y in range(x + 2, len(es)):
            if segments_cross(ps, Segment(*es[x]), Segment(*es[y])):
                return True
    return False


def compatible(a: BRMatching, b: BRMatching) -> bool:
    """True if the union of the two matchings is non-crossing (shared
    endpoints allowed)."""
    ps = a.base
    for s in a.segments:
        for t in b.segments:
            if set(s) & set(t):
                continue
            if segments_cross(ps, s, t):
                return False
    return True


def three_star_for(m: BRMatching, cycle: Sequence[int]) -> tuple[int, int, int]:
    """The star (B, Z, A) with B the minimum-index segment, Z the ⊴-maximum
    of the segments right of B and A the ⊴-minimum of those left of B."""
    n = len(cycle)
    b = min(cycle)
    pos = list(cycle).index(b)
    rot = list(cycle[pos:]) + list(cycle[:pos])
    ps, segs = m.base, m.segments
    right = [x for x in rot[1:] if precedes(ps, segs[b], segs[x])]
    if rot[1:1 + len(right)] != right or not right or len(right) == n - 1:
        raise ValueError("cycle does not have the circular structure")
    return b, right[-1], rot[1 + len(right)]


def alternative_matchings_circular(m: BRMatching, cycle: Sequence[int]) -> tuple[BRMatching, BRMatching]:
    """Two further matchings of a circular matching's point set, disjoint
    from it and from each other, and compatible with it.

    A 3-star splits the cyclic order into three arcs; each arc together
    with its bounding star segments is linear, and its alternating path
    runs between the bounding segments. Glued together the paths form one
    alternating polygon, traversed in either orientation.
    """
    ps, segs = m.base, m.segments
    n = len(segs)
    cycle = list(cycle)
    if n < 3 or sorted(cycle) != list(range(n)):
        raise ValueError("not a cyclic order of the matching")
    for k in range(n):
        if not precedes(ps, segs[cycle[k]], segs[cycle[(k + 1) % n]]):
            raise ValueError("not a circular matching: %d then %d" % (cycle[k], cycle[(k + 1) % n]))
    b, z, a = three_star_for(m, cycle)
    pos = {s: k for k, s in enumerate(cycle)}

    def arc(s, t):
        out = [s]
        k = pos[s]
        while out[-1] != t:
            k = (k + 1) % n
            out.append(cycle[k])
        return out

    first, second = [], []
    for lo, hi in ((b, z), (z, a), (a, b)):
        region = arc(lo, hi)
        for i, j in zip(region, region[1:]):
            if not precedes(ps, segs[i], segs[j]):
                raise InternalInvariantError("region %s is not linear" % region)
        # white-start path: non-matching edges b_i -> w_{i+1}; black-start: w_i -> b_{i+1}
        p_white, p_black = _paths(segs, region)
        first += [Segment(e[0], e[1]) for e, f in zip(p_black.edges(), p_black.in_matching) if not f]
        second += [Segment(e[1], e[0]) for e, f in zip(p_white.edges(), p_white.in_matching) if not f]
    out = []
    for cand in (first, second):
        try:
            alt = BRMatching(ps, cand)
        except MatchingError as exc:
            raise InternalInvariantError("alternative matching invalid: %s" % exc) from exc
        if set(alt.key()) & set(m.key()) or not compatible(m, alt):
            raise InternalInvariantError("alternative matching not disjoint/compatible")
        out.append(alt)
    if set(out[0].key()) & set(out[1].key()):
        raise InternalInvariantError("alternatives intersect")
    return out[0], out[1]


def alternative_matching_via_balanced_line(m: BRMatching, line: DirectedLine) -> BRMatching:
    """Match both sides of a balanced line separately; the result avoids
    every segment the line crosses."""
    ps = m.base
    left, right = [], []
    for i, p in enumerate(ps.points):
        s = line.side(p.xy)
        if s == 0:
            raise ValueError("balanced line passes through point %d" % i)
        (left if s > 0 else right).append(i)
    segs = []
    for side in (left, right):
        w = sum(1 for i in side if ps.colors[i] is WHITE)
        if 2 * w != len(side):
            raise ValueError("line is not balanced")
        if side:
            segs += build_matching(ps, side)
    alt = BRMatching(ps, segs)
    if alt.same_as(m):
        raise InternalInvariantError("balanced-line alternative equals the input matching")
    return alt
