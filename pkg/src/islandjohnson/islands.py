"""Island recognition, enumeration, weight and projectability.

An island is a subset equal to the point set's intersection with some
convex set; the convex hull of the subset is the canonical witness, so
the test is "no outside point in the closed hull".  Islands are stored
as sorted tuples of input-order indices.
"""

from itertools import combinations

from . import _kernel
from .errors import GeneralPositionViolation, ParameterError, WeightUndefined
from .geometry import PointSet, orientation


def _check_members(ps: PointSet, members) -> tuple[int, ...]:
    mem = tuple(sorted(int(i) for i in members))
    if not mem:
        raise ParameterError("empty index set")
    if len(set(mem)) != len(mem):
        raise ParameterError(f"duplicate indices in {mem}")
    if mem[0] < 0 or mem[-1] >= len(ps):
        raise ParameterError(f"index out of range in {mem}")
    return mem


def is_island(ps: PointSet, members) -> bool:
    """True iff no point outside ``members`` lies in their closed hull."""
    mem = _check_members(ps, members)
    xs, ys = ps.coords()
    return _kernel.is_island_members(xs, ys, mem)


def enumerate_islands(ps: PointSet, k: int) -> list[tuple[int, ...]]:
    """All k-islands in lexicographic order (a complete brute-force filter).

    Singletons are always islands; pairs are islands whenever the set is
    in general position, so k <= 2 short-circuits in that case.
    """
    n = len(ps)
    if not 1 <= k <= n:
        raise ParameterError(f"enumerate_islands: need 1 <= k <= {n}, got {k}")
    if k == 1 or (k == 2 and ps.is_general_position):
        return list(combinations(range(n), k))
    xs, ys = ps.coords()
    return _kernel.islands_of_size(xs, ys, k)


def count_empty_triangles(ps: PointSet) -> int:
    """Number of triangles with no point strictly inside.

    Independent of the island machinery: scans all triples and tests
    interior emptiness directly.  Under general position this equals the
    number of 3-islands.
    """
    n = len(ps)
    if n < 3:
        raise ParameterError("count_empty_triangles: need at least 3 points")
    ps.require_general_position()
    pts = ps.points
    count = 0
    for a, b, c in combinations(range(n), 3):
        if orientation(pts[a], pts[b], pts[c]) < 0:
            b, c = c, b
        empty = True
        for q in range(n):
            if q in (a, b, c):
                continue
            if (orientation(pts[a], pts[b], pts[q]) > 0
                    and orientation(pts[b], pts[c], pts[q]) > 0
                    and orientation(pts[c], pts[a], pts[q]) > 0):
                empty = False
                break
        count += empty
    return count


def island_weight(ps: PointSet, island) -> int:
    """Spread of the island's non-apex members in the radial order."""
    mem = _check_members(ps, island)
    apex = ps.apex
    positions = [ps.radial_position(i) for i in mem if i != apex]
    if len(positions) < 2:
        raise WeightUndefined(
            f"island {mem} has {len(positions)} non-apex points; weight needs 2")
    return max(positions) - min(positions)


def is_projectable(ps: PointSet, island) -> bool:
    """True iff the island's non-apex members occupy consecutive radial positions."""
    mem = _check_members(ps, island)
    apex = ps.apex
    positions = sorted(ps.radial_position(i) for i in mem if i != apex)
    if len(positions) <= 1:
        return True
    return positions[-1] - positions[0] == len(positions) - 1
