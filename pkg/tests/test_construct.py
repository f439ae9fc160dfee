from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bimatch.classify import Linear, classify
from bimatch.construct import (alternative_matching_via_balanced_line,
                               alternative_matchings_circular, build_alternating_paths,
                               build_matching, compatible, ham_sandwich, ham_sandwich_bruteforce,
                               path_self_crossing, three_star_for)
from bimatch.cuts import balanced_line_for_matching
from bimatch.geom import BLACK, WHITE, Point, PointSet, orient_xy
from bimatch.matching import BRMatching, has_chromatic_cut
from bimatch.testlab import (enumerate_all_matchings, fixture_f1, fixture_f2, fixture_f3,
                             gen_parallel, gen_radial, gen_random, random_matching)


def _cut_ok(ps, cut):
    n = ps.n
    for side in (cut.left, cut.right):
        w = sum(1 for i in side if ps.colors[i] is WHITE)
        assert w <= n // 2 and len(side) - w <= n // 2


def test_ham_sandwich_f1():
    ps = fixture_f1().points
    cut = ham_sandwich(ps)
    _cut_ok(ps, cut)
    assert len(cut.left) == len(cut.right) == 2


def test_ham_sandwich_one_pair():
    ps = PointSet([Point(0, 0, WHITE), Point(1, 1, BLACK)])
    cut = ham_sandwich(ps)
    assert cut.matched == (0, 1)


@given(st.integers(0, 10 ** 6), st.integers(1, 8))
def test_ham_sandwich_random(seed, n):
    ps = gen_random(n, seed, 60)
    fast, slow = ham_sandwich(ps), ham_sandwich_bruteforce(ps)
    _cut_ok(ps, fast)
    # same tie-breaking: the same cut
    assert fast.on_line == slow.on_line and fast.matched == slow.matched
    assert set(fast.left) == set(slow.left) and set(fast.right) == set(slow.right)


def test_build_examples():
    f1 = fixture_f1()
    assert build_matching(f1.points).same_as(f1.matching)
    f3 = fixture_f3()
    keys = {m.key() for m in enumerate_all_matchings(f3.points).matchings}
    assert build_matching(f3.points).key() in keys
    ps = PointSet([Point(0, 0, WHITE), Point(1, 1, BLACK)])
    assert build_matching(ps).segments == ((0, 1),)


@given(st.integers(0, 10 ** 6), st.integers(1, 30))
def test_build_is_valid(seed, n):
    ps = gen_random(n, seed, 200)
    m = build_matching(ps)
    BRMatching(ps, m.segments)          # full validation


def test_build_equals_oracle_for_linear():
    for seed in range(80):
        ps = gen_random(1 + seed % 5, seed, 30)
        res = enumerate_all_matchings(ps)
        if res.count == 1:
            assert build_matching(ps).same_as(res.matchings[0])


def _check_paths(m, order):
    pw, pb = build_alternating_paths(m, order)
    ps = m.base
    for path, start in ((pw, WHITE), (pb, BLACK)):
        vs = path.vertices
        assert sorted(vs) == list(range(len(ps)))
        assert ps.colors[vs[0]] is start
        assert all(ps.colors[vs[k]] is not ps.colors[vs[k + 1]] for k in range(len(vs) - 1))
        assert path.in_matching == tuple(k % 2 == 0 for k in range(len(vs) - 1))
        assert not path_self_crossing(ps, path)
        # matching segments appear in ⊴ order
        assert [m.owner[vs[k]] for k in range(0, len(vs), 2)] == list(order)


def test_alternating_paths_examples():
    f1 = fixture_f1().matching
    _check_paths(f1, [0, 1])
    pw, pb = build_alternating_paths(f1, [0, 1])
    assert len(pw.vertices) == len(pb.vertices) == 4
    par = gen_parallel(5).matching
    _check_paths(par, list(range(5)))


def test_alternating_paths_reject_bad_order():
    with pytest.raises(ValueError):
        build_alternating_paths(fixture_f1().matching, [1, 0])


@given(st.integers(0, 10 ** 6), st.integers(2, 5))
def test_alternating_paths_random_linear(seed, n):
    m = random_matching(n, seed, 30)
    v = classify(m)
    if isinstance(v, Linear):
        _check_paths(m, v.order)


def _alternatives_ok(m, cycle):
    a1, a2 = alternative_matchings_circular(m, cycle)
    keys = {x.key() for x in enumerate_all_matchings(m.base).matchings} if len(m) <= 8 else None
    for alt in (a1, a2):
        assert not set(alt.key()) & set(m.key())
        assert compatible(m, alt)
        if keys is not None:
            assert alt.key() in keys
    assert not set(a1.key()) & set(a2.key())
    return a1, a2


def test_alternatives_f3():
    m = fixture_f3().matching
    a1, a2 = _alternatives_ok(m, (0, 1, 2))
    assert sorted(a1.segments) == [(0, 3), (2, 5), (4, 1)]
    assert sorted(a2.segments) == [(0, 5), (2, 1), (4, 3)]


def test_alternatives_basic_five():
    m = gen_radial(5).matching
    _alternatives_ok(m, classify(m).cycle)


def test_alternatives_reject_non_circular():
    with pytest.raises(ValueError):
        alternative_matchings_circular(fixture_f1().matching, (0, 1))


def _line_point(l1, l2):
    (o1, d1), (o2, d2) = l1, l2
    den = d1[0] * d2[1] - d1[1] * d2[0]
    t = Fraction((o2[0] - o1[0]) * d2[1] - (o2[1] - o1[1]) * d2[0], den)
    return (o1[0] + t * d1[0], o1[1] + t * d1[1])


def _empty_triangle(m, star):
    ps = m.base
    lines = []
    for s in star:
        w, b = ps[m.segments[s].white].xy, ps[m.segments[s].black].xy
        lines.append((w, (b[0] - w[0], b[1] - w[1])))
    tri = [_line_point(lines[0], lines[1]), _line_point(lines[1], lines[2]),
           _line_point(lines[2], lines[0])]
    if orient_xy(*tri) < 0:
        tri.reverse()
    for s in m.segments:
        p, q = ps[s.white].xy, ps[s.black].xy
        for x in (p, q):
            assert not all(orient_xy(tri[k - 1], tri[k], x) > 0 for k in range(3))
        for k in range(3):
            e0, e1 = tri[k - 1], tri[k]
            if orient_xy(e0, e1, p) * orient_xy(e0, e1, q) < 0 and \
                    orient_xy(p, q, e0) * orient_xy(p, q, e1) < 0:
                pytest.fail("segment %s crosses the star triangle" % (s,))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_star_triangle_empty(n):
    m = gen_radial(n).matching
    v = classify(m)
    _empty_triangle(m, three_star_for(m, v.cycle))


def test_alternative_via_balanced_line_f2():
    m = fixture_f2().matching
    bl = balanced_line_for_matching(m, (0, 1))
    alt = alternative_matching_via_balanced_line(m, bl.line)
    assert sorted(alt.segments) == [(0, 3), (2, 1)]
    assert bl.crossed not in alt.segments


def test_alternative_via_balanced_line_three_pairs():
    found = 0
    for seed in range(60):
        m = random_matching(3, seed, 30)
        w = has_chromatic_cut(m)
        if w is None:
            continue
        bl = balanced_line_for_matching(m, w)
        alt = alternative_matching_via_balanced_line(m, bl.line)
        keys = {x.key() for x in enumerate_all_matchings(m.base).matchings}
        assert alt.key() in keys and alt.key() != m.key()
        assert bl.crossed not in alt.segments
        found += 1
    assert found >= 10
