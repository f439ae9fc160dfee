"""Shared checks for the classifier tests and the acceptance suite."""

from itertools import combinations

from bimatch.classify import (Circular, Linear, classify, find_reference_direction,
                              is_reference_direction, left_set, right_set)
from bimatch.geom import PointSet
from bimatch.matching import BRMatching, TriplePattern, precedes, sidedness, triple_pattern


def sub_matching(m: BRMatching, idx) -> BRMatching:
    """The segments `idx` of m as a matching of their own endpoints."""
    idx = list(idx)
    pts = [m.base[p] for k in idx for p in m.segments[k]]
    return BRMatching(PointSet(pts, check=False), [(2 * j, 2 * j + 1) for j in range(len(idx))])


def total_order(m: BRMatching) -> bool:
    """⊴ is a strict linear order: all pairs comparable and the number of
    successors takes every value 0..n-1 exactly once."""
    ps, segs = m.base, m.segments
    n = len(segs)
    succ = [0] * n
    for i, j in combinations(range(n), 2):
        if not sidedness(ps, segs[i], segs[j]).comparable:
            return False
        if precedes(ps, segs[i], segs[j]):
            succ[i] += 1
        else:
            succ[j] += 1
    return sorted(succ) == list(range(n))


def all_comparable(m: BRMatching) -> bool:
    ps, segs = m.base, m.segments
    return all(sidedness(ps, a, b).comparable for a, b in combinations(segs, 2))


def triple_patterns(m: BRMatching) -> set:
    ps, segs = m.base, m.segments
    return {triple_pattern(ps, *t) for t in combinations(segs, 3)}


def characterization(m: BRMatching) -> tuple[bool, bool, bool, bool]:
    """Linear verdict, ⊴ linear, no forbidden triple, reference direction."""
    linear = isinstance(classify(m), Linear)
    pats = triple_patterns(m)
    no_forbidden = all_comparable(m) and pats <= {TriplePattern.LINEAR}
    u = find_reference_direction(m)
    ref = u is not None and is_reference_direction(m, u)
    return linear, total_order(m), no_forbidden, ref


def circular_by_patterns(m: BRMatching) -> bool:
    return all_comparable(m) and TriplePattern.THREE_STAR in triple_patterns(m)


def _same_cycle(a, b) -> bool:
    k = b.index(a[0])
    return list(a) == list(b[k:]) + list(b[:k])


def circular_suite(m: BRMatching, cycle) -> None:
    """Four linear submatchings per segment, no extremes, successor is the
    minimum of the right set, and the cycle does not depend on the start."""
    ps, segs = m.base, m.segments
    n = len(segs)
    for b in range(n):
        L, R = left_set(m, b), right_set(m, b)
        assert L and R, "segment %d is extreme" % b
        for part in (L, R, L + [b], R + [b]):
            assert isinstance(classify(sub_matching(m, part)), Linear)
        nxt = cycle[(list(cycle).index(b) + 1) % n]
        # minimum of the right set (the set with b added has b as its minimum)
        mins = [x for x in R if not any(precedes(ps, segs[y], segs[x]) for y in R if y != x)]
        assert mins == [nxt]
    for s in range(1, n):
        perm = list(range(s, n)) + list(range(s))      # segment perm[k] becomes k
        mm = BRMatching(ps, [segs[k] for k in perm], validate=False)
        v = classify(mm)
        assert isinstance(v, Circular)
        assert _same_cycle([perm[k] for k in v.cycle], list(cycle))
