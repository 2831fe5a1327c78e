"""Exact planar primitives on integer coordinates.

Everything here is exact: orientation is the sign of an integer
determinant, hulls and containment reduce to orientation tests, and the
ham-sandwich search counts points on closed sides of candidate lines.
Floats never appear.
"""

import functools
from typing import NamedTuple

from .errors import GeneralPositionViolation, ParameterError

CCW = 1
CW = -1
COLLINEAR = 0


class Point(NamedTuple):
    x: int
    y: int


def orientation(p, q, r) -> int:
    """Sign of the turn p -> q -> r: CCW (1), CW (-1) or COLLINEAR (0)."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def convex_hull(pts) -> list[Point]:
    """Hull vertices in CCW order, starting at the (x, y)-least point.

    Inputs of size one or two come back as-is (sorted); collinear input
    collapses to its two extreme points.
    """
    if not pts:
        raise ParameterError("convex_hull: empty input")
    pts = sorted(Point(int(x), int(y)) for x, y in pts)
    if len(set(pts)) != len(pts):
        raise ParameterError("convex_hull: duplicate points")
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_contains(hull, p, mode: str = "closed") -> bool:
    """Point-in-hull test against a CCW hull (possibly a segment or point).

    ``closed`` includes the boundary, ``open`` excludes it; degenerate
    hulls have empty interior, so open-mode containment is then False.
    """
    if mode not in ("closed", "open"):
        raise ParameterError(f"hull_contains: bad mode {mode!r}")
    closed = mode == "closed"
    p = Point(int(p[0]), int(p[1]))
    m = len(hull)
    if m == 0:
        raise ParameterError("hull_contains: empty hull")
    if m == 1:
        return closed and tuple(hull[0]) == p
    if m == 2:
        if not closed:
            return False
        a, b = hull
        return (orientation(a, b, p) == 0
                and min(a[0], b[0]) <= p.x <= max(a[0], b[0])
                and min(a[1], b[1]) <= p.y <= max(a[1], b[1]))
    lo = 0 if closed else 1
    for t in range(m):
        if orientation(hull[t], hull[(t + 1) % m], p) < lo:
            return False
    return True


class Halfplane(NamedTuple):
    """Closed region a*x + b*y <= c with integer coefficients."""

    a: int
    b: int
    c: int

    def value(self, p) -> int:
        return self.a * p[0] + self.b * p[1]

    def contains(self, p) -> bool:
        return self.value(p) <= self.c

    def complement(self) -> "Halfplane":
        """The other closed side of the same boundary line."""
        return Halfplane(-self.a, -self.b, -self.c)


class PointSet:
    """Distinct planar points in input order, with a canonical radial order.

    The radial order puts the topmost point (ties broken by larger x)
    first and sorts the rest counterclockwise by angle around it.  Radial
    positions 1..n-1 are what island weight and projectability refer to.
    """

    __slots__ = ("points", "_radial", "_radial_pos", "_gp")

    def __init__(self, points):
        pts = [Point(int(x), int(y)) for x, y in points]
        if len(set(pts)) != len(pts):
            raise ParameterError("PointSet: duplicate points")
        if not pts:
            raise ParameterError("PointSet: empty")
        self.points = tuple(pts)
        self._radial = None
        self._radial_pos = None
        self._gp = None

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def coords(self):
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return xs, ys

    @property
    def is_general_position(self) -> bool:
        """No three points collinear (all points are already distinct)."""
        if self._gp is None:
            self._gp = self._scan_general_position() is None
        return self._gp

    def _scan_general_position(self):
        pts = self.points
        n = len(pts)
        for i in range(n):
            for j in range(i + 1, n):
                for t in range(j + 1, n):
                    if orientation(pts[i], pts[j], pts[t]) == 0:
                        return (i, j, t)
        return None

    def require_general_position(self):
        bad = None if self.is_general_position else self._scan_general_position()
        if bad is not None:
            raise GeneralPositionViolation(
                f"collinear triple at indices {bad}: "
                f"{self.points[bad[0]]}, {self.points[bad[1]]}, {self.points[bad[2]]}")

    @property
    def radial(self) -> tuple[int, ...]:
        if self._radial is None:
            self._radial = tuple(canonical_radial_order(self.points))
            pos = [0] * len(self.points)
            for r, i in enumerate(self._radial):
                pos[i] = r
            self._radial_pos = tuple(pos)
        return self._radial

    @property
    def apex(self) -> int:
        return self.radial[0]

    def radial_position(self, i: int) -> int:
        self.radial
        return self._radial_pos[i]


def canonical_radial_order(points) -> list[int]:
    """Indices ordered: topmost point first, the rest CCW by angle around it.

    The apex is the maximum-y point (ties broken by maximum x), so every
    other point lies in the half-turn below it and the angular order is a
    strict total order under general position.
    """
    pts = [Point(int(x), int(y)) for x, y in points]
    n = len(pts)
    apex = max(range(n), key=lambda i: (pts[i].y, pts[i].x))
    rest = [i for i in range(n) if i != apex]

    def cmp(i, j):
        s = orientation(pts[apex], pts[i], pts[j])
        if s == CCW:
            return -1
        if s == CW:
            return 1
        return 0

    rest.sort(key=functools.cmp_to_key(cmp))
    for a, b in zip(rest, rest[1:]):
        if orientation(pts[apex], pts[a], pts[b]) == COLLINEAR:
            raise GeneralPositionViolation(
                f"points {pts[a]} and {pts[b]} are collinear with the apex {pts[apex]}")
    return [apex] + rest


def ham_sandwich_bisect(A, B) -> tuple[Halfplane, Halfplane]:
    """A line whose two closed sides each hold at least half of A and of B.

    Candidate lines run through pairs of A | B; a valid one always exists
    because any bisecting line can be translated and rotated onto two
    points without a closed side ever losing points.  The returned pair
    is the two closed halfplanes of the first valid candidate; the
    contract is re-checked by exact counting before returning.
    """
    if not A or not B:
        raise ParameterError("ham_sandwich_bisect: empty input set")
    A = [Point(int(x), int(y)) for x, y in A]
    B = [Point(int(x), int(y)) for x, y in B]
    need_a = (len(A) + 1) // 2
    need_b = (len(B) + 1) // 2
    pts = sorted(set(A) | set(B))
    if len(pts) == 1:
        p = pts[0]
        h = Halfplane(0, 1, p.y)
        return h, h.complement()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            a = q.y - p.y
            b = p.x - q.x
            c = a * p.x + b * p.y
            h = Halfplane(a, b, c)
            lo_a = sum(1 for t in A if h.value(t) <= c)
            hi_a = sum(1 for t in A if h.value(t) >= c)
            if lo_a < need_a or hi_a < need_a:
                continue
            lo_b = sum(1 for t in B if h.value(t) <= c)
            hi_b = sum(1 for t in B if h.value(t) >= c)
            if lo_b < need_b or hi_b < need_b:
                continue
            return h, h.complement()
    raise RuntimeError("ham_sandwich_bisect: no candidate line qualified")


def expand_halfplane(H: Halfplane, points, t: int) -> Halfplane:
    """Translate H's boundary outward minimally until it covers >= t points.

    Ties at the final boundary are included, so the count may exceed t by
    the tie multiplicity.  If H already covers t points it is returned
    unchanged.
    """
    pts = list(points)
    if t > len(pts):
        raise ParameterError(f"expand_halfplane: t={t} exceeds |P|={len(pts)}")
    if t <= 0:
        return H
    values = sorted(H.value(p) for p in pts)
    inside = sum(1 for v in values if v <= H.c)
    if inside >= t:
        return H
    return Halfplane(H.a, H.b, values[t - 1])
