import pytest

from islandjohnson.errors import (CheckFailure, ParameterError,
                                  PreconditionViolation, VerificationFailure)
from islandjohnson.geometry import PointSet
from islandjohnson.horton import (HortonSet, deep_islands_exist, depth,
                                  depth_by_definition, depth_gap_bound,
                                  depth_gap_scan, generate_horton,
                                  is_high_above, lower_bound_experiment,
                                  point_depth, triangle_depth_count,
                                  verify_horton)
from islandjohnson.islands import is_island


def test_generate_and_verify_small_sizes():
    for n in range(1, 33):
        h = generate_horton(n)
        assert verify_horton(h)
        assert len(h) == n
        assert [p.x for p in h.ps.points] == list(range(n))


def test_generate_n6_split_sizes():
    h = generate_horton(6)
    pts = sorted(h.ps.points)
    even = pts[1::2]
    odd = pts[0::2]
    assert len(even) == 3 and len(odd) == 3
    assert is_high_above(even, odd)


def test_high_above_examples():
    assert is_high_above([(0, 10), (2, 11)], [(0, 0), (2, 1)])
    assert not is_high_above([(0, 10), (0, 20)], [(5, 0)])   # vertical pair
    pts = [(0, 5), (3, 6)]
    assert not is_high_above(pts, pts)


def test_verify_rejects_flat_and_duplicate_x():
    collinear = PointSet([(i, 0) for i in range(4)])
    assert not verify_horton(collinear)
    dup_x = PointSet([(0, 0), (0, 5), (1, 3), (2, 4)])
    assert not verify_horton(dup_x)


def test_point_depths_match_text():
    assert [point_depth(i) for i in (1, 2, 3, 4)] == [1, 2, 1, 3]
    assert point_depth(16) == 5


def test_depth_of_islands():
    h = generate_horton(16)
    assert depth(h, 16) == 5
    assert depth(h, (3, 11)) == 3        # labels 4 and 12
    assert depth_by_definition(h, (3, 11)) == 3
    with pytest.raises(ParameterError):
        depth(h, 0)


def test_depth_arithmetic_matches_literal_definition():
    h = generate_horton(64)
    for i in range(1, 65):
        assert point_depth(i) == depth_by_definition(h, i)


def test_even_refinements_are_islands():
    h = generate_horton(64)
    n = 64
    t = 1
    while True:
        members = tuple(i - 1 for i in range(1, n + 1) if i % (1 << (t - 1)) == 0)
        if len(members) < 1:
            break
        assert is_island(h.ps, members), t
        if len(members) == 1:
            break
        t += 1


def test_triangle_depth_count_cases():
    h = generate_horton(16)
    # r = 1: bound is zero, vacuous
    assert triangle_depth_count(h, 2, 6, 1) >= 0
    # x_4, x_12 have depth 3; z = x_1 depth 1 gives r = 2, count >= 1
    assert triangle_depth_count(h, 4, 12, 1) >= 1
    with pytest.raises(PreconditionViolation):
        triangle_depth_count(h, 12, 4, 1)
    with pytest.raises(PreconditionViolation):
        triangle_depth_count(h, 1, 3, 2)   # depth(z)=2 not below depth({x,y})=1


def test_triangle_depth_exhaustive_small():
    h = generate_horton(16)
    n = 16
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            dxy = min(point_depth(x), point_depth(y))
            for z in range(1, n + 1):
                if z in (x, y) or point_depth(z) >= dxy:
                    continue
                triangle_depth_count(h, x, y, z)  # raises CheckFailure on violation


def test_depth_gap_bound_values():
    assert depth_gap_bound(5, 4) == 2   # k-l = 1
    assert depth_gap_bound(4, 2) == 2
    assert depth_gap_bound(10, 2) == 4  # k-l = 8 -> floor(log2 9)+1


def test_depth_gap_scan_small():
    h = generate_horton(32)
    worst = depth_gap_scan(h, 4, 2)
    assert worst <= 2
    with pytest.raises(ParameterError):
        depth_gap_scan(h, 4, 1)


def test_lower_bound_experiment_small():
    h = generate_horton(32)
    rep = lower_bound_experiment(h, 4, 2)
    assert rep["bfs_distance"] >= rep["certified_floor"] >= 1
    assert rep["depth_max_observed"] >= rep["depth_max_formula"]
    assert not rep["depth_flag"]
    with pytest.raises(ParameterError):
        lower_bound_experiment(h, 3, 2)   # k - l < 2


def test_deep_islands_exist_matches_formula():
    h = generate_horton(32)
    # floor(log2(32/4)) + 1 = 4
    assert deep_islands_exist(h, 4, 4)
    assert not deep_islands_exist(h, 4, 5)


def test_lift_log_recorded():
    h = generate_horton(8)
    assert isinstance(h, HortonSet)
    assert h.lifts[-1][0] == 8
    assert all(lift > 0 for _, lift in h.lifts)
