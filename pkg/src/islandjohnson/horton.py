"""Horton sets: generation, verification, and the depth machinery.

A Horton set splits by x-rank into its even-indexed half sitting "high
above" its odd-indexed half, recursively.  The generator interleaves the
two recursively built halves and lifts the even copy by
spread_low * (n + 1) + 1, which is comfortably more than any line
through the lifted copy can drop across the x-range; every level is
re-verified after construction.

Depth of point x_i (labels 1-based in x order) is one plus the 2-adic
valuation of i: the deepest all-even-refinement subset containing it.
Island depth is the depth of its shallowest point.
"""

from . import _kernel
from .errors import CheckFailure, ParameterError, PreconditionViolation, VerificationFailure
from .geometry import Point, PointSet, orientation
from .graph import bfs_distances, build_island_graph
from .islands import _check_members, enumerate_islands


class HortonSet:
    """A verified Horton set; points sit at x = 0..n-1 in label order."""

    def __init__(self, ps: PointSet, lifts):
        self.ps = ps
        self.lifts = tuple(lifts)

    def __len__(self):
        return len(self.ps)


def _horton_ys(m: int):
    """y values (x order) and the per-level lift log for an m-point set."""
    if m <= 1:
        return [0] * m, []
    odd_ys, odd_log = _horton_ys((m + 1) // 2)
    even_ys, even_log = _horton_ys(m // 2)
    lift = max(odd_ys) * (m + 1) + 1
    ys = []
    for pos in range(m):
        if pos % 2 == 0:  # 1-based label pos+1 is odd: low copy
            ys.append(odd_ys[pos // 2])
        else:
            ys.append(even_ys[pos // 2] + lift)
    return ys, odd_log + even_log + [(m, lift)]


def generate_horton(n: int) -> HortonSet:
    """Build and verify an n-point Horton set."""
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    ys, lifts = _horton_ys(n)
    ps = PointSet([Point(i, ys[i]) for i in range(n)])
    h = HortonSet(ps, lifts)
    if not verify_horton(h):
        raise VerificationFailure(f"lift rule failed to produce a Horton set for n={n}")
    return h


def is_high_above(upper, lower) -> bool:
    """Exact test that every line through two upper points passes strictly
    above all lower points, and symmetrically, with no vertical line in
    either set."""
    ux = [p[0] for p in upper]
    uy = [p[1] for p in upper]
    lx = [p[0] for p in lower]
    ly = [p[1] for p in lower]
    return _kernel.high_above(ux, uy, lx, ly)


def _verify_split(points) -> bool:
    if len(points) <= 1:
        return True
    pts = sorted(points)
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        return False
    odd = pts[0::2]
    even = pts[1::2]
    if not is_high_above(even, odd):
        return False
    return _verify_split(even) and _verify_split(odd)


def verify_horton(h) -> bool:
    """Recursive validation of the even-above-odd structure at every level."""
    ps = h.ps if isinstance(h, HortonSet) else h
    points = list(ps.points) if isinstance(ps, PointSet) else list(ps)
    return _verify_split(points)


def point_depth(label: int) -> int:
    """Depth of x_i: one plus the exponent of 2 in i."""
    if label < 1:
        raise ParameterError(f"labels are 1-based, got {label}")
    return (label & -label).bit_length()


def depth(h: HortonSet, target) -> int:
    """Depth of a point label (int) or an island (index iterable)."""
    if isinstance(target, int):
        if not 1 <= target <= len(h):
            raise ParameterError(f"label {target} out of range 1..{len(h)}")
        return point_depth(target)
    mem = _check_members(h.ps, target)
    return min(point_depth(i + 1) for i in mem)


def depth_by_definition(h: HortonSet, target) -> int:
    """Depth computed literally: the deepest all-even refinement (splitting
    off odd ranks each time) that still contains the whole target."""
    if isinstance(target, int):
        labels = [target]
    else:
        labels = [i + 1 for i in _check_members(h.ps, target)]
    d = 1
    while all(lab % (1 << d) == 0 for lab in labels):
        d += 1
    return d


def triangle_depth_count(h: HortonSet, x: int, y: int, z: int) -> int:
    """Points strictly between x and y, inside the closed triangle xyz, of
    depth greater than z's.  Checks the 2^(r-1)-1 lower bound (r the
    depth difference) and returns the exact count."""
    n = len(h)
    for lab in (x, y, z):
        if not 1 <= lab <= n:
            raise ParameterError(f"label {lab} out of range 1..{n}")
    if x >= y:
        raise PreconditionViolation("x must be left of y")
    dz = point_depth(z)
    dxy = min(point_depth(x), point_depth(y))
    if dz >= dxy:
        raise PreconditionViolation(f"need depth(z) < depth({{x,y}}), got {dz} >= {dxy}")
    pts = h.ps.points
    tri = [pts[x - 1], pts[y - 1], pts[z - 1]]
    if orientation(*tri) < 0:
        tri[1], tri[2] = tri[2], tri[1]
    count = 0
    for lab in range(x + 1, y):
        if lab == z or point_depth(lab) <= dz:
            continue
        q = pts[lab - 1]
        if (orientation(tri[0], tri[1], q) >= 0
                and orientation(tri[1], tri[2], q) >= 0
                and orientation(tri[2], tri[0], q) >= 0):
            count += 1
    r = dxy - dz
    bound = 2 ** (r - 1) - 1
    if count < bound:
        raise CheckFailure(
            f"triangle ({x},{y},{z}): found {count} deep points, bound is {bound}")
    return count


def depth_gap_bound(k: int, l: int) -> int:
    """Per-edge depth-gap bound: floor(log2(k-l+1)) + 1."""
    return (k - l + 1).bit_length() - 1 + 1


def depth_gap_scan(h: HortonSet, k: int, l: int) -> int:
    """Maximum |depth(A) - depth(B)| over the edges of the island graph;
    raises CheckFailure if any edge exceeds the bound."""
    if l < 2:
        raise ParameterError("depth-gap scan needs l >= 2")
    g = build_island_graph(h.ps, k, l)
    depths = [min(point_depth(i + 1) for i in lab) for lab in g.labels]
    bound = depth_gap_bound(k, l)
    worst = 0
    for i, lab in enumerate(g.labels):
        for j in g.adj[i]:
            if i < j:
                gap = abs(depths[i] - depths[j])
                if gap > worst:
                    worst = gap
                if gap > bound:
                    raise CheckFailure(
                        f"edge {lab} -- {g.labels[j]} has depth gap {gap} > {bound}")
    return worst


def lower_bound_experiment(h: HortonSet, k: int, l: int) -> dict:
    """Distance between a deepest island and a depth-1 island, against the
    certified floor ceil((depth_max - 1) / gap_bound)."""
    if l < 2:
        raise ParameterError("the lower-bound experiment needs l >= 2")
    if k - l < 2:
        raise ParameterError("the lower-bound experiment needs k - l >= 2")
    n = len(h)
    g = build_island_graph(h.ps, k, l)
    depths = [min(point_depth(i + 1) for i in lab) for lab in g.labels]
    delta_max = max(depths)
    src = depths.index(delta_max)
    try:
        dst = depths.index(1)
    except ValueError:
        raise CheckFailure("no depth-1 island found") from None
    dist = bfs_distances(g, src)[dst]
    gap = depth_gap_bound(k, l)
    floor = -(-(delta_max - 1) // gap)
    # smallest t with 2^t * k >= n, and floor(log2(n/k)) + 1, both exact
    formula_ceil = 0
    while (1 << formula_ceil) * k < n:
        formula_ceil += 1
    formula_floor_plus = (n // k).bit_length()
    return {
        "n": n,
        "k": k,
        "l": l,
        "vertices": len(g.labels),
        "depth_max_observed": delta_max,
        "depth_max_formula": formula_ceil,
        "depth_max_alternative": formula_floor_plus,
        "depth_flag": abs(delta_max - formula_ceil) > 1,
        "gap_bound": gap,
        "certified_floor": floor,
        "bfs_distance": dist,
        "deep_island": list(g.labels[src]),
        "shallow_island": list(g.labels[dst]),
    }


def deep_islands_exist(h: HortonSet, k: int, t: int) -> bool:
    """Whether some k-island of the set has depth >= t (by enumeration)."""
    for lab in enumerate_islands(h.ps, k):
        if min(point_depth(i + 1) for i in lab) >= t:
            return True
    return False
