import random

import pytest
from hypothesis import given, strategies as st

from bimatch.classify import (Circular, CutAdmitting, IncomparableError, Linear, antipodal_pair,
                              census_sidedness_relations, circular_triple, classify,
                              drum_property_bruteforce, drum_property_check, is_circular,
                              is_reference_direction, is_unique, left_set, reference_direction,
                              right_set, sort_by_sidedness, tset_partition)
from bimatch.geom import Point, PointSet, WHITE, BLACK
from bimatch.matching import BRMatching, precedes
from bimatch.testlab import (enumerate_all_matchings, fixture_f1, fixture_f2, fixture_f3,
                             gen_parallel, gen_radial, random_matching)

from helpers import characterization, circular_by_patterns, circular_suite

# occupancy of a 10-line radial matching whose T-sets, numbered by cycle
# position, are {9,0,1}, {2}, {3,4,5}, {6,7}, {8}
TEN_LINES = "1001000011"


def shuffled_parallel(n, seed):
    inst = gen_parallel(n)
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return BRMatching(inst.points, [inst.matching.segments[k] for k in perm]), perm


def test_sort_parallel_shuffled():
    m, perm = shuffled_parallel(3, 1)
    order = sort_by_sidedness(m)
    # left to right = original index order
    assert [perm[k] for k in order] == [0, 1, 2]


def test_sort_f2_reports_pair():
    with pytest.raises(IncomparableError) as ei:
        sort_by_sidedness(fixture_f2().matching)
    assert set(ei.value.pair) == {0, 1}


def test_sort_f3_succeeds_but_drum_fails():
    m = fixture_f3().matching
    order = sort_by_sidedness(m)
    segs = m.segments
    assert all(precedes(m.base, segs[a], segs[b]) for a, b in zip(order, order[1:]))
    res = drum_property_check(m, order)
    assert not res and res.index is not None


def test_drum_examples():
    inst = gen_parallel(3)
    assert drum_property_check(inst.matching, [0, 1, 2])
    assert drum_property_check(fixture_f1().matching, [0, 1])
    one = PointSet([Point(0, 0, WHITE), Point(1, 1, BLACK)])
    assert drum_property_check(BRMatching(one, [(0, 1)]), [0])


def test_is_unique_examples():
    r = is_unique(fixture_f1().points)
    assert r.unique and isinstance(r.verdict, Linear)
    assert not is_unique(fixture_f3().points).unique
    r = is_unique(fixture_f2().points)
    assert not r.unique and isinstance(r.verdict, CutAdmitting)


def test_classify_examples():
    assert classify(fixture_f1().matching) == Linear((0, 1))
    assert classify(fixture_f3().matching) == Circular((0, 1, 2))
    v = classify(fixture_f2().matching)
    assert isinstance(v, CutAdmitting) and set(v.witness) == {0, 1}


def test_is_circular_examples():
    assert is_circular(fixture_f3().matching) == Circular((0, 1, 2))
    # mixed hull: not for this test to decide
    assert is_circular(fixture_f2().matching) is None
    assert is_circular(fixture_f1().matching) is None


def test_reference_direction_examples():
    par = gen_parallel(3)
    u = reference_direction(par.matching)
    assert u[1] > 0
    assert is_reference_direction(par.matching, (0, 1))
    assert is_reference_direction(fixture_f1().matching, reference_direction(fixture_f1().matching))
    with pytest.raises(ValueError):
        reference_direction(fixture_f3().matching)


def test_horizontal_reference_accepted():
    # quasi-parallel matching of rightward segments
    ps = PointSet([Point(0, 0, WHITE), Point(4, 1, BLACK), Point(1, 3, WHITE), Point(5, 3 + 0, BLACK),
                   Point(0, 6, WHITE), Point(4, 5, BLACK)])
    m = BRMatching(ps, [(0, 1), (2, 3), (4, 5)])
    assert isinstance(classify(m), Linear)
    assert is_reference_direction(m, (1, 0))


def test_tsets_f3():
    m = fixture_f3().matching
    tp = tset_partition(m, (0, 1, 2))
    assert tp.blocks == ((0,), (1,), (2,))
    assert antipodal_pair(m, (0, 1, 2), 0) == (1, 2)


def test_tsets_ten_lines():
    m = gen_radial(10, [c == "1" for c in TEN_LINES]).matching
    v = classify(m)
    assert isinstance(v, Circular)
    pos = {s: k for k, s in enumerate(v.cycle)}
    blocks = [[pos[s] for s in b] for b in tset_partition(m, v.cycle).blocks]
    assert blocks == [[9, 0, 1], [2], [3, 4, 5], [6, 7], [8]]


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_basic_matchings_balanced(n):
    m = gen_radial(n).matching
    v = classify(m)
    tp = tset_partition(m, v.cycle)
    assert all(len(b) == 1 for b in tp.blocks)
    for b in range(n):
        assert len(left_set(m, b)) == len(right_set(m, b)) == (n - 1) // 2


def test_twin_free_implies_odd():
    for n in (4, 6):
        for seed in range(20):
            occ = [True] + [random.Random(seed * 31 + n).random() < 0.5 for _ in range(n - 1)]
            m = gen_radial(n, occ).matching
            v = classify(m)
            if isinstance(v, Circular):
                assert any(len(b) > 1 for b in tset_partition(m, v.cycle).blocks)


def test_circular_triple_f3():
    m = fixture_f3().matching
    assert circular_triple(m, (0, 1, 2), 0, 1, 2)
    assert not circular_triple(m, (0, 1, 2), 0, 2, 1)


def test_circular_triple_four_segments():
    seen = 0
    for bits in range(8):
        occ = [True] + [bool(bits >> k & 1) for k in range(3)]
        m = gen_radial(4, occ).matching
        v = classify(m)
        if not isinstance(v, Circular):
            continue
        seen += 1
        for x in range(4):
            for y in range(4):
                for z in range(4):
                    if len({x, y, z}) == 3:
                        circular_triple(m, v.cycle, x, y, z)    # asserts positional agreement
    assert seen == 4


@pytest.mark.parametrize("n,count", [(3, 1), (4, 4), (5, 11)])
def test_census_examples(n, count):
    assert census_sidedness_relations(n) == count


def test_census_bounds():
    with pytest.raises(ValueError):
        census_sidedness_relations(2)
    with pytest.raises(ValueError):
        census_sidedness_relations(21)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_radial_linear_count(n):
    linear = 0
    for bits in range(2 ** (n - 1)):
        occ = [True] + [bool(bits >> k & 1) for k in range(n - 1)]
        if isinstance(classify(gen_radial(n, occ).matching), Linear):
            linear += 1
    assert linear == n


def test_circular_suite_fixtures():
    m = fixture_f3().matching
    circular_suite(m, classify(m).cycle)
    m = gen_radial(10, [c == "1" for c in TEN_LINES]).matching
    circular_suite(m, classify(m).cycle)


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_characterization_random(seed, n):
    m = random_matching(n, seed, 30)
    c = characterization(m)
    assert len(set(c)) == 1
    v = classify(m)
    assert isinstance(v, Circular) == circular_by_patterns(m)


@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_drum_matches_definition(seed, n):
    m = random_matching(n, seed, 30)
    try:
        order = sort_by_sidedness(m)
    except IncomparableError:
        return
    assert bool(drum_property_check(m, order)) == drum_property_bruteforce(m, order)


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_unique_matches_oracle(seed, n):
    from bimatch.testlab import gen_random
    ps = gen_random(n, seed, 25)
    assert is_unique(ps).unique == (enumerate_all_matchings(ps).count == 1)
