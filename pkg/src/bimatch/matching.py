"""BR-matchings and the sidedness relation between their segments."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence

from .geom import (BLACK, WHITE, Color, InputError, InternalInvariantError, PointSet,
                   Segment, hull_indices, segments_cross)


class MatchingError(InputError):
    pass


class BRMatching:
    """Perfect, color-conforming, non-crossing matching of a PointSet.

    Segments are addressed by their position in `segments`.
    """

    def __init__(self, base: PointSet, segments: Iterable, *, validate: bool = True):
        self.base = base
        self.segments: tuple[Segment, ...] = tuple(Segment(*s) for s in segments)
        if validate:
            self._validate()
        self.owner = {}
        for k, s in enumerate(self.segments):
            self.owner[s.white] = k
            self.owner[s.black] = k

    def _validate(self):
        ps = self.base
        if len(self.segments) != ps.n:
            raise MatchingError("expected %d segments, got %d" % (ps.n, len(self.segments)))
        used = set()
        for s in self.segments:
            for i in s:
                if not 0 <= i < len(ps):
                    raise MatchingError("point index %d out of range" % i)
            if ps.colors[s.white] is not WHITE or ps.colors[s.black] is not BLACK:
                raise MatchingError("segment %s is not white->black" % (tuple(s),))
            used.update(s)
        if len(used) != len(ps):
            raise MatchingError("matching is not perfect")
        segs = self.segments
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                if segments_cross(ps, segs[i], segs[j]):
                    raise MatchingError("segments %d and %d cross" % (i, j))

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __repr__(self):
        return "BRMatching(%s)" % (list(map(tuple, self.segments)),)

    def key(self) -> tuple:
        """Order-independent identity (sorted index pairs)."""
        return tuple(sorted(map(tuple, self.segments)))

    def same_as(self, other: "BRMatching") -> bool:
        return self.key() == other.key()

    def sub(self, idx: Sequence[int]) -> list[Segment]:
        return [self.segments[i] for i in idx]


class Sidedness(enum.Enum):
    BEFORE = "A<B"          # A ⊴ B
    AFTER = "B<A"           # B ⊴ A
    PATTERN_A = "pattern-a"
    PATTERN_B = "pattern-b"

    @property
    def comparable(self) -> bool:
        return self in (Sidedness.BEFORE, Sidedness.AFTER)


class PairGeometry(enum.Enum):
    PARALLEL = "parallel"
    ANTIPARALLEL = "antiparallel"
    CROSS_SAME_COLOR_WHITE = "cross-same-color-W"
    CROSS_SAME_COLOR_BLACK = "cross-same-color-B"
    CROSS_DIFFERENT_COLOR = "cross-different-color"
    RAY_CROSSES_SEGMENT = "ray-crosses-segment"

    @property
    def certifies_cut(self) -> bool:
        return self in (PairGeometry.ANTIPARALLEL, PairGeometry.CROSS_DIFFERENT_COLOR,
                        PairGeometry.RAY_CROSSES_SEGMENT)


class TriplePattern(enum.Enum):
    LINEAR = "linear"
    THREE_STAR = "3-star"
    HAS_CUT = "has-cut"


def sidedness(ps: PointSet, a: Segment, b: Segment) -> Sidedness:
    """Full four-test comparison of two segments."""
    o = ps.orient
    bw, bb = o(a[0], a[1], b[0]), o(a[0], a[1], b[1])
    aw, ab = o(b[0], b[1], a[0]), o(b[0], b[1], a[1])
    if 0 in (bw, bb, aw, ab):
        raise InternalInvariantError("zero orientation between segments %s, %s" % (a, b))
    if bw < 0 and bb < 0 and aw > 0 and ab > 0:
        return Sidedness.BEFORE
    if bw > 0 and bb > 0 and aw < 0 and ab < 0:
        return Sidedness.AFTER
    g = pair_geometry(ps, a, b)
    if g is PairGeometry.CROSS_DIFFERENT_COLOR:
        return Sidedness.PATTERN_A
    if g.certifies_cut:
        return Sidedness.PATTERN_B
    raise InternalInvariantError("incomparable pair %s, %s with geometry %s" % (a, b, g))


def precedes(ps: PointSet, a: Segment, b: Segment) -> bool:
    """A ⊴ B."""
    o = ps.orient
    return (o(a[0], a[1], b[0]) < 0 and o(a[0], a[1], b[1]) < 0
            and o(b[0], b[1], a[0]) > 0 and o(b[0], b[1], a[1]) > 0)


def sidedness_one_sided(ps: PointSet, a: Segment, b: Segment) -> Sidedness:
    """Decide A ⊴ B from one half-plane test.

    Only valid when the matching containing A and B has no chromatic
    cut; otherwise the answer is meaningless.
    """
    return Sidedness.BEFORE if ps.orient(a[0], a[1], b[0]) < 0 else Sidedness.AFTER


def _line_param(ps: PointSet, a: Segment, b: Segment) -> Fraction:
    """Parameter t of g(a) ∩ g(b) along a (0 at the white end, 1 at the black end)."""
    ax, ay = ps.icoord(a[0])
    dax, day = ps.xs[a[1]] - ax, ps.ys[a[1]] - ay
    bx, by = ps.icoord(b[0])
    dbx, dby = ps.xs[b[1]] - bx, ps.ys[b[1]] - by
    den = dax * dby - day * dbx
    num = (bx - ax) * dby - (by - ay) * dbx
    return Fraction(num, den)


def pair_geometry(ps: PointSet, a: Segment, b: Segment) -> PairGeometry:
    dax, day = ps.xs[a[1]] - ps.xs[a[0]], ps.ys[a[1]] - ps.ys[a[0]]
    dbx, dby = ps.xs[b[1]] - ps.xs[b[0]], ps.ys[b[1]] - ps.ys[b[0]]
    if dax * dby - day * dbx == 0:
        if dax * dbx + day * dby > 0:
            return PairGeometry.PARALLEL
        return PairGeometry.ANTIPARALLEL
    ta = _line_param(ps, a, b)
    tb = _line_param(ps, b, a)
    inside_a = 0 < ta < 1
    inside_b = 0 < tb < 1
    if inside_a and inside_b:
        raise InternalInvariantError("segments %s and %s cross" % (a, b))
    if inside_a or inside_b:
        return PairGeometry.RAY_CROSSES_SEGMENT
    if (ta < 0) == (tb < 0):
        return (PairGeometry.CROSS_SAME_COLOR_WHITE if ta < 0
                else PairGeometry.CROSS_SAME_COLOR_BLACK)
    return PairGeometry.CROSS_DIFFERENT_COLOR


def has_chromatic_cut(m: BRMatching, idx: Sequence[int] | None = None):
    """O(n^2) reference scan; returns the first incomparable pair or None."""
    ps, segs = m.base, m.segments
    idx = range(len(segs)) if idx is None else list(idx)
    idx = list(idx)
    for x in range(len(idx)):
        for y in range(x + 1, len(idx)):
            i, j = idx[x], idx[y]
            if not sidedness(ps, segs[i], segs[j]).comparable:
                return (i, j)
    return None


def triple_pattern(ps: PointSet, a: Segment, b: Segment, c: Segment) -> TriplePattern:
    rel = {}
    trio = (a, b, c)
    for x in range(3):
        for y in range(x + 1, 3):
            s = sidedness(ps, trio[x], trio[y])
            if not s.comparable:
                return TriplePattern.HAS_CUT
            rel[(x, y)] = s is Sidedness.BEFORE
    # orient each pair as an edge x -> y; a cycle means every vertex has out-degree 1
    out = [0, 0, 0]
    for (x, y), fwd in rel.items():
        out[x if fwd else y] += 1
    return TriplePattern.THREE_STAR if out == [1, 1, 1] else TriplePattern.LINEAR


def color_intervals(ps: PointSet, idx: Sequence[int] | None = None) -> list[tuple[Color, int]]:
    """Circular run-length encoding of hull colors, CCW from the
    lexicographically smallest hull vertex; a run wrapping past the start
    is merged into the first run."""
    hull = hull_indices(ps, idx)
    runs: list[list] = []
    for v in hull:
        c = ps.colors[v]
        if runs and runs[-1][0] is c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    if len(runs) > 1 and runs[0][0] is runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    return [(c, k) for c, k in runs]
