"""Exact planar primitives: points, point sets, orientation, hulls.

Every decision in the package goes through `orient` (or the integer
fast path on `PointSet`), so nothing here ever touches floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class InputError(ValueError):
    """Malformed or degenerate user input."""


class GeneralPositionError(InputError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__("collinear points %s" % (self.triple,))


class DuplicatePointError(InputError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__("duplicate points %s" % (self.pair,))


class InternalInvariantError(RuntimeError):
    """A proven property failed to hold; always a bug."""


class HullPreconditionError(ValueError):
    pass


class Color(enum.Enum):
    WHITE = "W"
    BLACK = "B"

    @property
    def other(self) -> "Color":
        return Color.BLACK if self is Color.WHITE else Color.WHITE


WHITE = Color.WHITE
BLACK = Color.BLACK


def as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floats are not accepted; use int, Fraction or 'p/q' strings")
    return Fraction(v)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction
    color: Color | None = None

    def __post_init__(self):
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


class Segment(NamedTuple):
    """Matching segment by point indices; directed white -> black."""
    white: int
    black: int


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orient_xy(a, b, c) -> int:
    """Sign of det(b - a, c - a) for coordinate pairs."""
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if c is strictly left of the directed line a->b, -1 if right, 0 if on it."""
    return orient_xy(a.xy, b.xy, c.xy)


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


@dataclass(frozen=True)
class DirectedLine:
    origin: tuple[Fraction, Fraction]
    direction: tuple[Fraction, Fraction]

    def __post_init__(self):
        o = tuple(as_fraction(v) for v in self.origin)
        d = tuple(as_fraction(v) for v in self.direction)
        if d == (0, 0):
            raise ValueError("zero direction")
        object.__setattr__(self, "origin", o)
        object.__setattr__(self, "direction", d)

    @classmethod
    def through(cls, p, q) -> "DirectedLine":
        return cls(tuple(p), sub(q, p))

    def side(self, p) -> int:
        """+1 left, -1 right, 0 on the line."""
        return _sign(cross(self.direction, sub(p, self.origin)))

    def points(self):
        o = self.origin
        return o, (o[0] + self.direction[0], o[1] + self.direction[1])


class PointSet:
    """Bichromatic point set with validated general position.

    Predicates between members go through `orient(i, j, k)`, which works
    on integer coordinates obtained by scaling with the common
    denominator; positive scaling does not change any sign.
    """

    def __init__(self, points: Iterable[Point], *, check: bool = True):
        self.points: tuple[Point, ...] = tuple(points)
        if any(p.color is None for p in self.points):
            raise InputError("every point needs a color")
        self.n = sum(1 for p in self.points if p.color is WHITE)
        if 2 * self.n != len(self.points) or self.n < 1:
            raise InputError(
                "need n >= 1 white and n black points, got %d white and %d black"
                % (self.n, len(self.points) - self.n))
        den = 1
        for p in self.points:
            den = math.lcm(den, p.x.denominator, p.y.denominator)
        self.scale = den
        self.xs = [int(p.x * den) for p in self.points]
        self.ys = [int(p.y * den) for p in self.points]
        self.colors = [p.color for p in self.points]
        if check:
            check_general_position(self)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "PointSet(n=%d)" % self.n

    def whites(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c is WHITE]

    def blacks(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c is BLACK]

    def orient(self, i: int, j: int, k: int) -> int:
        xs, ys = self.xs, self.ys
        v = (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])
        return (v > 0) - (v < 0)

    def icoord(self, i: int) -> tuple[int, int]:
        return (self.xs[i], self.ys[i])


def check_general_position(ps: PointSet) -> None:
    """Raise on duplicate points or collinear triples.

    For each pivot the directions to all other points are reduced to a
    canonical primitive vector; a repeated direction is a collinear triple.
    O(n^2) with hashing.
    """
    xs, ys = ps.xs, ps.ys
    m = len(xs)
    for i in range(m):
        seen: dict[tuple[int, int], int] = {}
        for j in range(m):
            if j == i:
                continue
            dx, dy = xs[j] - xs[i], ys[j] - ys[i]
            if dx == 0 and dy == 0:
                raise DuplicatePointError(sorted((i, j)))
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dy < 0 or (dy == 0 and dx < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                raise GeneralPositionError(sorted((i, seen[(dx, dy)], j)))
            seen[(dx, dy)] = j


def collinear_triples_bruteforce(ps: PointSet) -> list[tuple[int, int, int]]:
    m = len(ps)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if ps.orient(i, j, k) == 0:
                    out.append((i, j, k))
    return out


def segments_cross_xy(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test."""
    d1 = orient_xy(p1, p2, q1)
    d2 = orient_xy(p1, p2, q2)
    d3 = orient_xy(q1, q2, p1)
    d4 = orient_xy(q1, q2, p2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on(a, b, c):
        return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and \
            min(a[1], b[1]) <= c[1] <= max(a[1], b[1])

    return ((d1 == 0 and on(p1, p2, q1)) or (d2 == 0 and on(p1, p2, q2))
            or (d3 == 0 and on(q1, q2, p1)) or (d4 == 0 and on(q1, q2, p2)))


def segments_cross(ps: PointSet, s: Segment, t: Segment) -> bool:
    c = ps.icoord
    return segments_cross_xy(c(s[0]), c(s[1]), c(t[0]), c(t[1]))


def convex_hull_xy(pts: Sequence, keys: Sequence | None = None) -> list:
    """Andrew's monotone chain; returns keys (default: the points) of hull
    vertices in CCW order starting at the lexicographically smallest one."""
    if keys is None:
        keys = list(pts)
    order = sorted(range(len(pts)), key=lambda i: (pts[i][0], pts[i][1]))
    if len(order) <= 2:
        return [keys[i] for i in order]

    def half(seq):
        chain = []
        for i in seq:
            while len(chain) >= 2 and orient_xy(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return [keys[i] for i in lower[:-1] + upper[:-1]]


def convex_hull(points: Sequence[Point]) -> list[Point]:
    return convex_hull_xy([p.xy for p in points], list(points))


def hull_indices(ps: PointSet, idx: Sequence[int] | None = None) -> list[int]:
    if idx is None:
        idx = range(len(ps))
    idx = list(idx)
    return convex_hull_xy([ps.icoord(i) for i in idx], idx)


class IncrementalHull:
    """Convex hull over PointSet indices as a CCW doubly-linked cycle.

    Built for the drum scan: extending by a point that sees a given hint
    vertex costs O(1) plus the number of vertices removed. The walk is
    the usual tangent search from a visible vertex in both directions.
    """

    def __init__(self, ps: PointSet, vertices: Sequence[int]):
        self.ps = ps
        vs = list(vertices)
        if len(vs) < 2:
            raise ValueError("need at least two vertices")
        self.nxt = {v: vs[(k + 1) % len(vs)] for k, v in enumerate(vs)}
        self.prv = {v: vs[k - 1] for k, v in enumerate(vs)}

    @classmethod
    def from_segment(cls, ps: PointSet, seg: Segment) -> "IncrementalHull":
        return cls(ps, [seg[0], seg[1]])

    def copy(self) -> "IncrementalHull":
        h = object.__new__(IncrementalHull)
        h.ps, h.nxt, h.prv = self.ps, dict(self.nxt), dict(self.prv)
        return h

    def __contains__(self, v):
        return v in self.nxt

    def __len__(self):
        return len(self.nxt)

    def vertices(self, start=None) -> list[int]:
        if start is None:
            start = min(self.nxt, key=lambda v: self.ps.icoord(v))
        out = [start]
        v = self.nxt[start]
        while v != start:
            out.append(v)
            v = self.nxt[v]
        return out

    def is_edge(self, u: int, v: int) -> bool:
        return u in self.nxt and v in self.nxt and (self.nxt[u] == v or self.nxt[v] == u)

    def sees(self, p: int, q: int) -> bool:
        """True if p sees one of the hull edges incident to vertex q."""
        o = self.ps.orient
        return o(q, self.nxt[q], p) < 0 or o(self.prv[q], q, p) < 0

    def insert(self, p: int, hint: int) -> None:
        """Add point p outside the hull; `hint` must be a vertex with an
        incident edge visible from p."""
        if hint not in self.nxt or not self.sees(p, hint):
            raise HullPreconditionError("hint vertex %r not visible from %r" % (hint, p))
        o = self.ps.orient
        nxt, prv = self.nxt, self.prv
        hi = hint
        while o(hi, nxt[hi], p) < 0:
            hi = nxt[hi]
            if hi == hint:
                raise HullPreconditionError("walked all the way round")
        lo = hint
        while o(prv[lo], lo, p) < 0:
            lo = prv[lo]
        v = nxt[lo]
        while v != hi:
            w = nxt[v]
            del nxt[v], prv[v]
            v = w
        nxt[lo], prv[p] = p, lo
        nxt[p], prv[hi] = hi, p


def incremental_hull_extend(hull: IncrementalHull, a: int, b: int, hint: int) -> IncrementalHull:
    """Return the hull of hull + {a, b}; both must lie outside and `hint`
    (a hull vertex) must be visible from a. The input is not modified."""
    h = hull.copy()
    for p in (a, b):
        if p in h.nxt:
            raise HullPreconditionError("point %r already a hull vertex" % p)
    for p, q in ((a, hint), (b, a)):
        if q not in h.nxt or not h.sees(p, q):
            # slow path, only hit when the caller's hint is stale
            q = next((v for v in h.nxt if h.sees(p, v)), None)
            if q is None:
                raise HullPreconditionError("point %r lies inside the hull" % p)
        h.insert(p, q)
    return h
