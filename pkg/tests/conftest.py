import pytest
from hypothesis import settings

from islandjohnson.geometry import Point, PointSet, orientation
from islandjohnson.generate import random_disk_points

settings.register_profile("ci", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("ci")


# Triangle (0,0),(4,0),(2,4) with one interior point (2,1): the smallest
# set whose subsets are not all islands.
QUAD4 = [(0, 0), (4, 0), (2, 4), (2, 1)]

PENTAGON = [(0, 0), (10, 0), (13, 8), (5, 14), (-3, 8)]


@pytest.fixture
def quad4():
    return PointSet(QUAD4)


@pytest.fixture
def pentagon():
    return PointSet(PENTAGON)


def disk(n, seed):
    return random_disk_points(n, seed)


# ---------------------------------------------------------------------------
# Independent oracles.  Containment here goes through triangle/segment
# decomposition rather than hull edge signs, so the island test is a
# genuinely different route from the library's.

def oracle_in_closed_hull(points, members, q):
    mem = [points[i] for i in members]
    if q in mem:
        return True
    if len(mem) == 1:
        return q == mem[0]
    if len(mem) == 2:
        return _on_segment(mem[0], mem[1], q)
    for i in range(len(mem)):
        for j in range(i + 1, len(mem)):
            for t in range(j + 1, len(mem)):
                if _in_closed_triangle(mem[i], mem[j], mem[t], q):
                    return True
    return False


def _on_segment(a, b, q):
    if orientation(a, b, q) != 0:
        return False
    return (min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]))


def _in_closed_triangle(a, b, c, q):
    s = orientation(a, b, c)
    if s == 0:
        return _on_segment(a, b, q) or _on_segment(b, c, q) or _on_segment(a, c, q)
    if s < 0:
        b, c = c, b
    return (orientation(a, b, q) >= 0
            and orientation(b, c, q) >= 0
            and orientation(c, a, q) >= 0)


def oracle_is_island(ps, members):
    member_set = set(members)
    for q in range(len(ps)):
        if q in member_set:
            continue
        if oracle_in_closed_hull(ps.points, members, ps.points[q]):
            return False
    return True


def oracle_enumerate(ps, k):
    from itertools import combinations
    return [c for c in combinations(range(len(ps)), k) if oracle_is_island(ps, c)]
