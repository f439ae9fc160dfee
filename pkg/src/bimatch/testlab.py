"""Brute-force oracle, fixtures and instance generators."""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .geom import (BLACK, WHITE, Color, GeneralPositionError, InputError, Point, PointSet,
                   Segment, orient_xy, segments_cross)
from .matching import BRMatching, precedes


@dataclass(frozen=True)
class OracleResult:
    matchings: tuple[BRMatching, ...]
    count: int


@dataclass(frozen=True)
class Instance:
    """A point set with a designated matching."""
    points: PointSet
    matching: BRMatching


def _pts(rows) -> PointSet:
    return PointSet([Point(x, y, Color(c)) for x, y, c in rows])


# -- fixtures -----------------------------------------------------------------

def fixture_f1() -> Instance:
    """Two parallel segments, white ends below: the unique matching."""
    ps = _pts([(0, 0, "W"), (0, 2, "B"), (3, 0, "W"), (3, 2, "B")])
    return Instance(ps, BRMatching(ps, [(0, 1), (2, 3)]))


def fixture_f2() -> Instance:
    """Two antiparallel segments: admits a chromatic cut."""
    ps = _pts([(0, 0, "W"), (0, 2, "B"), (3, 2, "W"), (3, 0, "B")])
    return Instance(ps, BRMatching(ps, [(0, 1), (2, 3)]))


def fixture_f3() -> Instance:
    """A 3-star: whites inside the triangle of the blacks."""
    ps = _pts([(0, 1, "W"), (0, 3, "B"), (1, -1, "W"), (3, -3, "B"),
               (-1, -1, "W"), (-3, -3, "B")])
    return Instance(ps, BRMatching(ps, [(0, 1), (2, 3), (4, 5)]))


# -- oracle -----------------------------------------------------------------------

def enumerate_all_matchings(ps: PointSet) -> OracleResult:
    """Every non-crossing perfect white-black matching, by backtracking
    over the white points with crossing pruning."""
    if ps.n > 8:
        raise ValueError("oracle limited to n <= 8")
    whites, blacks = ps.whites(), ps.blacks()
    found = []
    used = [False] * len(blacks)
    chosen: list[Segment] = []

    def rec(k):
        if k == len(whites):
            found.append(BRMatching(ps, list(chosen), validate=False))
            return
        w = whites[k]
        for x, b in enumerate(blacks):
            if used[x]:
                continue
            s = Segment(w, b)
            if any(segments_cross(ps, s, t) for t in chosen):
                continue
            used[x] = True
            chosen.append(s)
            rec(k + 1)
            chosen.pop()
            used[x] = False

    rec(0)
    found.sort(key=BRMatching.key)
    return OracleResult(tuple(found), len(found))


# -- generators ---------------------------------------------------------------------

def gen_parallel(n: int, spacing=1) -> Instance:
    """n vertical segments at x = 0, s, 2s, ... with whites below.

    The endpoints lie on two parabolas bending towards each other, so all
    points are in convex position (hence in general position) and the
    segments get shorter from left to right.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = Fraction(spacing)
    if s <= 0:
        raise ValueError("spacing must be positive")
    h = n * n
    pts = []
    for i in range(n):
        pts.append(Point(i * s, i * i - h, WHITE))
        pts.append(Point(i * s, h - i * i, BLACK))
    ps = PointSet(pts, check=n <= 200)
    m = BRMatching(ps, [(2 * i, 2 * i + 1) for i in range(n)], validate=n <= 200)
    return Instance(ps, m)


def _rational_unit(phi: float, den: int) -> tuple[Fraction, Fraction]:
    """Rational point on the unit circle near angle phi (half-angle substitution)."""
    t = Fraction(math.tan(phi / 2)).limit_denominator(den)
    q = 1 + t * t
    return ((1 - t * t) / q, 2 * t / q)


@functools.lru_cache(maxsize=None)
def radial_directions(n: int, den: int = 1000) -> tuple[tuple[Fraction, Fraction], ...]:
    """n rational unit vectors with angles close to pi*i/n, chosen so that
    no three of the 4n candidate radial points (two radii, both rays of
    every line) on three distinct lines are collinear."""
    while True:
        us = [_rational_unit(math.pi * i / n, den) for i in range(n)]
        if len(set(us)) == n and _radial_ok(us):
            return tuple(us)
        den *= 10


_RADII = (Fraction(1), Fraction(2))


def _radial_ok(us) -> bool:
    cand = []
    for i, u in enumerate(us):
        for sgn in (1, -1):
            for r in _RADII:
                cand.append((i, (sgn * r * u[0], sgn * r * u[1])))
    for x in range(len(cand)):
        for y in range(x + 1, len(cand)):
            if cand[x][0] == cand[y][0]:
                continue
            for z in range(y + 1, len(cand)):
                if cand[z][0] in (cand[x][0], cand[y][0]):
                    continue
                if orient_xy(cand[x][1], cand[y][1], cand[z][1]) == 0:
                    return False
    return True


def _radial_points(us, occupancy, inner, outer):
    pts = []
    for i, (u, occ) in enumerate(zip(us, occupancy)):
        sgn = (-1) ** i if occ else -((-1) ** i)
        pts.append(Point(sgn * inner * u[0], sgn * inner * u[1], WHITE))
        pts.append(Point(sgn * outer * u[0], sgn * outer * u[1], BLACK))
    return pts


def gen_radial(n: int, occupancy: Sequence[bool] | None = None, inner=1, outer=2) -> Instance:
    """Segments on n lines through the origin, pointing outward.

    Line i has angle close to pi*i/n; `occupancy[i]` selects which of its
    two rays carries segment i. True everywhere alternates the rays, which
    for odd n is the twin-free circular configuration.
    """
    if n < 3:
        raise ValueError("radial matchings need n >= 3")
    occupancy = [True] * n if occupancy is None else [bool(x) for x in occupancy]
    if len(occupancy) != n:
        raise ValueError("occupancy must have length n")
    inner, outer = Fraction(inner), Fraction(outer)
    if not 0 < inner < outer:
        raise ValueError("need 0 < inner < outer")
    den = 1000
    while True:
        us = radial_directions(n, den)
        try:
            ps = PointSet(_radial_points(us, occupancy, inner, outer))
            break
        except GeneralPositionError:
            den *= 10
    return Instance(ps, BRMatching(ps, [(2 * i, 2 * i + 1) for i in range(n)]))


def radial_relations(n: int):
    """Sidedness matrices rel[i][j] = (A_i ⊴ A_j) of all 2^(n-1) radial
    matchings on n lines with segment 0 fixed."""
    us = radial_directions(n)
    for bits in product((True, False), repeat=n - 1):
        occ = (True,) + bits
        ps = PointSet(_radial_points(us, occ, *_RADII), check=False)
        segs = [Segment(2 * i, 2 * i + 1) for i in range(n)]
        yield [[i != j and precedes(ps, segs[i], segs[j]) for j in range(n)] for i in range(n)]


def gen_duplication(ps: PointSet, direction=(0, 1), distance=Fraction(1, 1000)) -> Instance:
    """Give every point a partner of the other color at offset
    distance * direction (white gets a black partner ahead, black a white
    partner behind). Partner of point i has index len(ps) + i. On a
    collinearity the distance is halved; if that does not help (the
    direction itself is degenerate) the direction is tilted slightly."""
    ux, uy = Fraction(direction[0]), Fraction(direction[1])
    if (ux, uy) == (0, 0):
        raise ValueError("zero direction")
    for attempt in range(64):
        tilt, halvings = divmod(attempt, 8)
        dx, dy = ux - tilt * uy / 97, uy + tilt * ux / 97
        d = Fraction(distance) / 2 ** halvings
        pts = list(ps.points)
        for p in ps.points:
            if p.color is WHITE:
                pts.append(Point(p.x + d * dx, p.y + d * dy, BLACK))
            else:
                pts.append(Point(p.x - d * dx, p.y - d * dy, WHITE))
        try:
            out = PointSet(pts)
        except InputError:
            continue
        N = len(ps)
        segs = []
        for i in range(N):
            segs.append(Segment(i, N + i) if ps.colors[i] is WHITE else Segment(N + i, i))
        return Instance(out, BRMatching(out, segs))
    raise InputError("could not avoid collinearities while duplicating")


# Frozen output of scripts/search_nonparallelizable.py (seed 0): a linear
# 6-segment matching; A, B, C are the first three segments.
_NONPAR = [
    (-1, -14, "W"), (3, 15, "B"),
    (17, 0, "W"), (17, 3, "B"),
    (37, -5, "W"), (41, 9, "B"),
    (52, 33, "W"), (51, 41, "B"),
    (-9, 40, "W"), (-7, 57, "B"),
    (33, 24, "W"), (33, 28, "B"),
]


def gen_nonparallelizable() -> Instance:
    """Six segments: A, B, C (indices 0-2) and three auxiliary ones."""
    ps = _pts(_NONPAR)
    return Instance(ps, BRMatching(ps, [(2 * i, 2 * i + 1) for i in range(len(_NONPAR) // 2)]))


def nonpar_orientation_pattern(inst: Instance) -> list[bool]:
    """For (X, Y, Z) in the three rotations of (A, B, C) with upper (black)
    ends x1 and lower (white) ends x2: [x1, y1, z2] is counterclockwise
    and [x2, y2, z1] clockwise."""
    ps, segs = inst.points, inst.matching.segments
    out = []
    abc = segs[:3]
    for r in range(3):
        x, y, z = abc[r], abc[(r + 1) % 3], abc[(r + 2) % 3]
        out.append(ps.orient(x.black, y.black, z.white) > 0)
        out.append(ps.orient(x.white, y.white, z.black) < 0)
    return out


def gen_random(n: int, seed: int = 0, coord_bound: int = 100) -> PointSet:
    """n white and n black integer points in [-bound, bound]^2, in general
    position; reproducible from the seed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if (2 * coord_bound + 1) ** 2 < 4 * n:
        raise ValueError("coordinate box too small")
    rng = random.Random(seed)
    pts: list[tuple[int, int]] = []
    while len(pts) < 2 * n:
        p = (rng.randint(-coord_bound, coord_bound), rng.randint(-coord_bound, coord_bound))
        if p in pts:
            continue
        if any(orient_xy(pts[i], pts[j], p) == 0
               for i in range(len(pts)) for j in range(i + 1, len(pts))):
            continue
        pts.append(p)
    colors = [WHITE] * n + [BLACK] * n
    rng.shuffle(colors)
    return PointSet([Point(x, y, c) for (x, y), c in zip(pts, colors)])


def random_matching(n: int, seed: int = 0, coord_bound: int = 100) -> BRMatching:
    """A uniformly chosen matching of a random set (via the oracle)."""
    ps = gen_random(n, seed, coord_bound)
    res = enumerate_all_matchings(ps)
    return random.Random(seed).choice(res.matchings)
