"""Deciding uniqueness and the linear / circular / cut-admitting type of a
matching, plus the structure of circular matchings (canonical cycle,
antipodal pairs, T-sets) and the census of circular sidedness relations."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .geom import (InternalInvariantError, IncrementalHull, PointSet,
                   Segment, cross, dot, hull_indices)
from .matching import (BRMatching, Sidedness, color_intervals, has_chromatic_cut, precedes,
                       sidedness)


@dataclass(frozen=True)
class Linear:
    order: tuple[int, ...]
    kind: str = field(default="linear", init=False)


@dataclass(frozen=True)
class Circular:
    cycle: tuple[int, ...]
    kind: str = field(default="circular", init=False)


@dataclass(frozen=True)
class CutAdmitting:
    witness: tuple[int, int]
    kind: str = field(default="cut-admitting", init=False)


Verdict = Linear | Circular | CutAdmitting


class IncomparableError(Exception):
    def __init__(self, pair, outcome: Sidedness):
        self.pair = tuple(sorted(pair))
        self.outcome = outcome
        super().__init__("segments %d and %d are incomparable (%s)" % (*self.pair, outcome.value))


# -- sorting -----------------------------------------------------------------

class _Comparator:
    """Inlined four-orientation test on integer coordinates."""

    def __init__(self, m: BRMatching):
        ps = m.base
        self.m = m
        self.w = [(ps.xs[s.white], ps.ys[s.white]) for s in m.segments]
        self.d = [(ps.xs[s.black] - ps.xs[s.white], ps.ys[s.black] - ps.ys[s.white])
                  for s in m.segments]

    def before(self, i: int, j: int) -> bool:
        """Segment i ⊴ segment j; raises IncomparableError if neither way."""
        (ax, ay), (adx, ady) = self.w[i], self.d[i]
        (bx, by), (bdx, bdy) = self.w[j], self.d[j]
        ex, ey = bx - ax, by - ay
        s1 = adx * ey - ady * ex           # b.white vs g(a)
        s2 = s1 + adx * bdy - ady * bdx    # b.black vs g(a)
        s3 = bdy * ex - bdx * ey           # a.white vs g(b)
        s4 = s3 + bdx * ady - bdy * adx    # a.black vs g(b)
        if s1 < 0 and s2 < 0 and s3 > 0 and s4 > 0:
            return True
        if s1 > 0 and s2 > 0 and s3 < 0 and s4 < 0:
            return False
        segs = self.m.segments
        raise IncomparableError((i, j), sidedness(self.m.base, segs[i], segs[j]))


def _merge_sort(items: list[int], before) -> list[int]:
    """Bottom-up merge sort; every adjacent pair of the output was compared."""
    runs = [[x] for x in items]
    while len(runs) > 1:
        nxt = []
        for k in range(0, len(runs) - 1, 2):
            a, b = runs[k], runs[k + 1]
            out = []
            i = j = 0
            while i < len(a) and j < len(b):
                if before(a[i], b[j]):
                    out.append(a[i])
                    i += 1
                else:
                    out.append(b[j])
                    j += 1
            out.extend(a[i:])
            out.extend(b[j:])
            nxt.append(out)
        if len(runs) % 2:
            nxt.append(runs[-1])
        runs = nxt
    return runs[0] if runs else []


def sort_by_sidedness(m: BRMatching, idx: Sequence[int] | None = None) -> list[int]:
    """Sort segments by ⊴; raises IncomparableError on the first
    incomparable comparison.

    The stdlib sort runs first (linear on presorted input). A cyclic
    relation can leave it with an adjacent pair that was never compared;
    then the merge sort, whose adjacent output pairs were all compared,
    takes over.
    """
    cmp = _Comparator(m)
    idx = list(range(len(m)) if idx is None else idx)
    order = sorted(idx, key=cmp_to_key(lambda i, j: -1 if cmp.before(i, j) else 1))
    if all(cmp.before(i, j) for i, j in zip(order, order[1:])):
        return order
    order = _merge_sort(idx, cmp.before)
    ps, segs = m.base, m.segments
    for i, j in zip(order, order[1:]):
        if not precedes(ps, segs[i], segs[j]):
            raise InternalInvariantError("merge sort left %d, %d unordered" % (i, j))
    return order


# -- drum property ------------------------------------------------------------

@dataclass(frozen=True)
class DrumResult:
    ok: bool
    phase: str | None = None     # "forward" / "backward" where it failed
    index: int | None = None     # position in the scanned order

    def __bool__(self):
        return self.ok


def _drum_pass(ps: PointSet, segs, order) -> int | None:
    """Grow the hull segment by segment; return the failing position."""
    first = segs[order[0]]
    h = IncrementalHull.from_segment(ps, first)
    for j in range(1, len(order)):
        cur, prev = segs[order[j]], segs[order[j - 1]]
        placed = False
        for p, other in ((cur.white, cur.black), (cur.black, cur.white)):
            hint = next((q for q in prev if h.sees(p, q)), None)
            if hint is None:
                continue
            h.insert(p, hint)
            if not h.sees(other, p):
                return j
            h.insert(other, p)
            placed = True
            break
        if not placed:
            return j
        if not h.is_edge(*cur) or not h.is_edge(*first):
            return j
        if j >= 2 and h.is_edge(*prev):
            return j
    return None


def drum_property_check(m: BRMatching, order: Sequence[int]) -> DrumResult:
    """Every prefix and every suffix of the order has exactly its two end
    segments as hull edges. Linear time given the order."""
    order = list(order)
    ps, segs = m.base, m.segments
    if len(order) <= 1:
        return DrumResult(True)
    bad = _drum_pass(ps, segs, order)
    if bad is not None:
        return DrumResult(False, "forward", bad)
    bad = _drum_pass(ps, segs, order[::-1])
    if bad is not None:
        return DrumResult(False, "backward", len(order) - 1 - bad)
    return DrumResult(True)


def _hull_edge_segments(ps: PointSet, segs, sub) -> set[int]:
    pts = [p for k in sub for p in segs[k]]
    hull = hull_indices(ps, pts)
    owner = {p: k for k in sub for p in segs[k]}
    edges = set()
    for x in range(len(hull)):
        u, v = hull[x], hull[(x + 1) % len(hull)]
        if owner[u] == owner[v]:
            edges.add(owner[u])
    return edges


def drum_property_bruteforce(m: BRMatching, order: Sequence[int]) -> bool:
    """Definition-based check: recompute every prefix and suffix hull."""
    order = list(order)
    ps, segs = m.base, m.segments
    for j in range(1, len(order)):
        pre = order[:j + 1]
        if _hull_edge_segments(ps, segs, pre) != {order[0], order[j]}:
            return False
        suf = order[len(order) - 1 - j:]
        if _hull_edge_segments(ps, segs, suf) != {suf[0], order[-1]}:
            return False
    return True


def _is_linear_in_order(m: BRMatching, order: Sequence[int]) -> bool:
    ps, segs = m.base, m.segments
    for i, j in zip(order, order[1:]):
        if not precedes(ps, segs[i], segs[j]):
            return False
    return bool(drum_property_check(m, order))


# -- top-level decisions --------------------------------------------------------

@dataclass(frozen=True)
class UniquenessResult:
    unique: bool
    verdict: Verdict
    matching: BRMatching
    timings: dict = field(default_factory=dict, compare=False)


def is_unique(ps: PointSet) -> UniquenessResult:
    """Build some matching, sort it by ⊴ and run the drum scan; the set has
    a unique matching exactly when both succeed."""
    from .construct import build_matching  # construct imports this module

    t0 = time.perf_counter()
    m = build_matching(ps)
    t1 = time.perf_counter()
    try:
        order = sort_by_sidedness(m)
    except IncomparableError as exc:
        return UniquenessResult(False, CutAdmitting(exc.pair), m,
                                {"build": t1 - t0, "decide": time.perf_counter() - t1})
    drum = drum_property_check(m, order)
    t2 = time.perf_counter()
    if drum:
        return UniquenessResult(True, Linear(tuple(order)), m, {"build": t1 - t0, "decide": t2 - t1})
    verdict = classify(m)
    if isinstance(verdict, Linear):
        raise InternalInvariantError("drum scan failed on a linear matching")
    return UniquenessResult(False, verdict, m, {"build": t1 - t0, "decide": t2 - t1})


def _check_linear_hull(m: BRMatching) -> None:
    if len(m) == 1:
        return
    runs = color_intervals(m.base)
    if len(runs) != 2 or min(k for _, k in runs) < 2:
        raise InternalInvariantError("linear matching with hull color intervals %s" % runs)


def _witness_scan(m: BRMatching, idx=None) -> tuple[int, int]:
    w = has_chromatic_cut(m, idx)
    if w is None and idx is not None:
        w = has_chromatic_cut(m)
    if w is None:
        raise InternalInvariantError("type test failed but no incomparable pair exists")
    return w


def classify(m: BRMatching) -> Verdict:
    """Linear, Circular or CutAdmitting, with an order, cycle or witness pair."""
    try:
        order = sort_by_sidedness(m)
    except IncomparableError as exc:
        return CutAdmitting(exc.pair)
    if drum_property_check(m, order):
        _check_linear_hull(m)
        return Linear(tuple(order))
    runs = color_intervals(m.base)
    if len(runs) == 1:
        res = is_circular(m)
        if res is None:
            raise InternalInvariantError("monochrome hull rejected by the circular test")
        return res
    # mixed hull but not linear: some pair must be incomparable
    return CutAdmitting(_witness_scan(m))


# -- circular matchings ------------------------------------------------------------

def _side(ps: PointSet, a: Segment, x: Segment) -> int:
    """+1 if x lies left of g(a), -1 if right, 0 if g(a) separates its ends."""
    o1 = ps.orient(a.white, a.black, x.white)
    o2 = ps.orient(a.white, a.black, x.black)
    return o1 if o1 == o2 else 0


def is_circular(m: BRMatching) -> Verdict | None:
    """Circular(cycle) or CutAdmitting(witness) for a matching whose hull
    is monochrome; None if the hull has both colors.

    The candidate cycle comes from splitting along one segment's line and
    sorting both sides. Cut-freeness is then verified divide-and-conquer:
    for a segment A and the median B of the larger side of A, the four
    one-sided submatchings are checked for linearity against the cycle
    and the two mixed unions are handled recursively.
    """
    ps, segs = m.base, m.segments
    n = len(segs)
    if len(color_intervals(ps)) != 1:
        return None
    if n < 3:
        return CutAdmitting(_witness_scan(m))
    a0 = 0
    left, right = [], []
    for k in range(1, n):
        s = _side(ps, segs[a0], segs[k])
        if s == 0:
            return CutAdmitting(_witness_for(m, a0, k))
        (left if s > 0 else right).append(k)
    try:
        right = sort_by_sidedness(m, right)
        left = sort_by_sidedness(m, left)
    except IncomparableError as exc:
        return CutAdmitting(exc.pair)
    cycle = [a0] + right + left
    for k in range(n):
        i, j = cycle[k], cycle[(k + 1) % n]
        if not precedes(ps, segs[i], segs[j]):
            return CutAdmitting(_witness_scan(m))
    w = _verify_cut_free(m, cycle)
    if w is not None:
        return CutAdmitting(w)
    return Circular(tuple(cycle))


def _witness_for(m: BRMatching, i: int, j: int) -> tuple[int, int]:
    ps, segs = m.base, m.segments
    if not sidedness(ps, segs[i], segs[j]).comparable:
        return (i, j)
    return _witness_scan(m)


def _verify_cut_free(m: BRMatching, cycle: list[int]):
    ps, segs = m.base, m.segments
    pos = {s: k for k, s in enumerate(cycle)}
    stack = [list(cycle)]
    while stack:
        S = stack.pop()
        if len(S) <= 6:
            w = has_chromatic_cut(m, S)
            if w is not None:
                return w
            continue
        a = S[0]
        m1, m2 = _split_around(ps, segs, S, 0)
        if m1 is None:
            return _witness_for(m, a, m2)
        for part in (m1, m2):
            if not _is_linear_in_order(m, part):
                return _witness_scan(m, part)
        big = m1 if len(m1) >= len(m2) else m2
        b = big[len(big) // 2]
        k = S.index(b)
        n1, n2 = _split_around(ps, segs, S, k)
        if n1 is None:
            return _witness_for(m, b, n2)
        for part in (n1, n2):
            if not _is_linear_in_order(m, part):
                return _witness_scan(m, part)
        s1, s2, t1, t2 = set(m1), set(m2), set(n1), set(n2)
        q1 = (s2 & t2) | (s1 & t1)
        q2 = (s1 & t2) | (s2 & t1)
        for q in (q1, q2):
            q = sorted(q, key=pos.__getitem__)
            if len(q) >= len(S):
                w = has_chromatic_cut(m, q)
                if w is not None:
                    return w
            else:
                stack.append(q)
    return None


def _split_around(ps, segs, S, k):
    """(L+, R+) of S[k] within S, in cycle order with S[k] last / first.
    On a straddling segment returns (None, its index)."""
    a = S[k]
    rot = S[k + 1:] + S[:k]
    lft, rgt = [], []
    for x in rot:
        s = _side(ps, segs[a], segs[x])
        if s == 0:
            return None, x
        (lft if s > 0 else rgt).append(x)
    return lft + [a], [a] + rgt


# -- reference direction ------------------------------------------------------------

def _full_angle_key(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def find_reference_direction(m: BRMatching):
    """A direction with positive dot product against every segment and for
    which no supporting-line intersection projects into the span of its
    two segments; None if there is none.

    The admissible directions for a segment form an open half-circle;
    all of them intersect iff the segment directions fit in an open
    half-plane, and the intersection is bounded by the perpendiculars of
    the two extreme segment directions.
    """
    ps, segs = m.base, m.segments
    dirs = [(ps.xs[s.black] - ps.xs[s.white], ps.ys[s.black] - ps.ys[s.white]) for s in segs]

    def cmp(u, v):
        hu, hv = _full_angle_key(u), _full_angle_key(v)
        if hu != hv:
            return hu - hv
        c = cross(u, v)
        return -1 if c > 0 else (1 if c < 0 else 0)

    ds = sorted(dirs, key=cmp_to_key(cmp))
    k = len(ds)
    gap_at = []
    for x in range(k):
        u, v = ds[x], ds[(x + 1) % k]
        c = cross(u, v)
        if c < 0 or (c == 0 and dot(u, v) < 0):
            gap_at.append(x)
    if k == 1 or (not gap_at and all(cross(ds[0], d) == 0 for d in ds)):
        u = ds[0]
    else:
        if len(gap_at) != 1:
            return None
        x = gap_at[0]
        dmax, dmin = ds[x], ds[(x + 1) % k]
        b1 = (dmax[1], -dmax[0])
        b2 = (-dmin[1], dmin[0])
        u = (b1[0] + b2[0], b1[1] + b2[1])
        if u == (0, 0):
            u = dmin
    if not is_reference_direction(m, u):
        return None
    return u


def is_reference_direction(m: BRMatching, u) -> bool:
    """Exact check of the three reference-line conditions for direction u."""
    ps, segs = m.base, m.segments
    P = [(Fraction(ps.xs[i], ps.scale), Fraction(ps.ys[i], ps.scale)) for i in range(len(ps))]
    for s in segs:
        d = (P[s.black][0] - P[s.white][0], P[s.black][1] - P[s.white][1])
        if dot(d, u) <= 0:
            return False
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            a, b = segs[i], segs[j]
            da = (P[a.black][0] - P[a.white][0], P[a.black][1] - P[a.white][1])
            db = (P[b.black][0] - P[b.white][0], P[b.black][1] - P[b.white][1])
            den = cross(da, db)
            if den == 0:
                continue
            e = (P[b.white][0] - P[a.white][0], P[b.white][1] - P[a.white][1])
            t = cross(e, db) / den
            x = (P[a.white][0] + t * da[0], P[a.white][1] + t * da[1])
            proj = [dot(P[p], u) for p in (*a, *b)]
            px = dot(x, u)
            if min(proj) <= px <= max(proj):
                return False
    return True


def reference_direction(m: BRMatching):
    """Reference direction of a linear matching."""
    if not isinstance(classify(m), Linear):
        raise ValueError("reference directions exist only for linear matchings")
    u = find_reference_direction(m)
    if u is None:
        raise InternalInvariantError("linear matching without a reference direction")
    return u


# -- structure of circular matchings ------------------------------------------------------

@dataclass(frozen=True)
class TSetPartition:
    blocks: tuple[tuple[int, ...], ...]
    antipodal: dict


def _check_cycle(m: BRMatching, cycle):
    ps, segs = m.base, m.segments
    n = len(cycle)
    if n < 3 or sorted(cycle) != list(range(len(segs))):
        raise ValueError("not a cyclic order of the matching")
    for k in range(n):
        if not precedes(ps, segs[cycle[k]], segs[cycle[(k + 1) % n]]):
            raise ValueError("not a circular order: %d then %d" % (cycle[k], cycle[(k + 1) % n]))


def antipodal_pair(m: BRMatching, cycle: Sequence[int], i: int) -> tuple[int, int]:
    """The cyclically adjacent pair split by g(A_i), by binary search: in
    cycle order after A_i come first the segments right of it, then the
    ones left of it."""
    ps, segs = m.base, m.segments
    n = len(cycle)
    p = list(cycle).index(i)
    a = segs[i]

    def right(k):
        return _side(ps, a, segs[cycle[(p + k) % n]]) < 0

    lo, hi = 1, n - 1          # right(lo) holds, right(hi) fails
    if not right(lo) or right(hi):
        raise InternalInvariantError("segment %d has an empty side" % i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if right(mid):
            lo = mid
        else:
            hi = mid
    return cycle[(p + lo) % n], cycle[(p + hi) % n]


def tset_partition(m: BRMatching, cycle: Sequence[int]) -> TSetPartition:
    """Group segments by antipodal pair; each group is contiguous in the cycle."""
    cycle = list(cycle)
    _check_cycle(m, cycle)
    ps, segs = m.base, m.segments
    n = len(cycle)
    anti = {s: antipodal_pair(m, cycle, s) for s in cycle}
    for s, (x, y) in anti.items():
        if ps.orient(*segs[s], segs[x].white) * ps.orient(*segs[s], segs[y].white) >= 0:
            raise InternalInvariantError("antipodal pair of %d not separated" % s)
    start = 0
    while start > -n and anti[cycle[start - 1]] == anti[cycle[start]]:
        start -= 1
    rot = [cycle[(start + k) % n] for k in range(n)]
    blocks, seen = [], set()
    for s in rot:
        key = anti[s]
        if blocks and anti[blocks[-1][-1]] == key:
            blocks[-1].append(s)
        else:
            if key in seen:
                raise InternalInvariantError("T-set with antipodal pair %s is not contiguous" % (key,))
            seen.add(key)
            blocks.append([s])
    return TSetPartition(tuple(tuple(b) for b in blocks), anti)


def circular_triple(m: BRMatching, cycle: Sequence[int], x: int, y: int, z: int) -> bool:
    """[X, Y, Z]: at least two of X ⊴ Y, Y ⊴ Z, Z ⊴ X."""
    ps, segs = m.base, m.segments
    votes = (precedes(ps, segs[x], segs[y]) + precedes(ps, segs[y], segs[z])
             + precedes(ps, segs[z], segs[x]))
    res = votes >= 2
    n = len(cycle)
    pos = {s: k for k, s in enumerate(cycle)}
    positional = (pos[y] - pos[x]) % n < (pos[z] - pos[x]) % n
    if res != positional:
        raise InternalInvariantError("triple (%d, %d, %d) disagrees with the cycle" % (x, y, z))
    return res


def right_set(m: BRMatching, b: int) -> list[int]:
    ps, segs = m.base, m.segments
    return [x for x in range(len(segs)) if x != b and precedes(ps, segs[b], segs[x])]


def left_set(m: BRMatching, b: int) -> list[int]:
    ps, segs = m.base, m.segments
    return [x for x in range(len(segs)) if x != b and precedes(ps, segs[x], segs[b])]


def census_sidedness_relations(n: int) -> int:
    """Number of distinct sidedness relations of circular radial matchings
    on n lines, with segments labelled by their canonical cycle position."""
    from .testlab import radial_relations

    if not 3 <= n <= 20:
        raise ValueError("census needs 3 <= n <= 20")
    keys = set()
    circular = 0
    for rel in radial_relations(n):
        has_min = any(not any(rel[j][i] for j in range(n)) for i in range(n))
        if has_min:
            continue
        circular += 1
        # canonical cycle from segment 0: successor = ⊴-minimum of its right set
        cyc = [0]
        while len(cyc) < n:
            x = cyc[-1]
            rs = [y for y in range(n) if rel[x][y]]
            succ = next(y for y in rs if not any(rel[z][y] for z in rs))
            cyc.append(succ)
        pos = {s: k for k, s in enumerate(cyc)}
        keys.add(frozenset((pos[i], pos[j]) for i in range(n) for j in range(n) if rel[i][j]))
    if circular != len(keys):
        raise InternalInvariantError("distinct occupancies gave equal relations")
    if len(keys) != 2 ** (n - 1) - n:
        raise InternalInvariantError("census for n=%d gave %d" % (n, len(keys)))
    return len(keys)
