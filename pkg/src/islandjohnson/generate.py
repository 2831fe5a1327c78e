"""Deterministic point-set generators for the three supported shapes."""

from .errors import GenerationFailure, ParameterError
from .geometry import Point, PointSet, orientation
from .horton import generate_horton
from .rng import SplitMix64

SHAPES = ("random-disk", "convex", "horton")


def random_disk_points(n: int, seed: int, radius: int = 1 << 20) -> PointSet:
    """n integer points in a disk, resampled until in general position."""
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    rng = SplitMix64(seed)
    pts: list[Point] = []
    attempts = 0
    budget = 2000 * n + 10000
    r2 = radius * radius
    while len(pts) < n:
        attempts += 1
        if attempts > budget:
            raise GenerationFailure(
                f"random-disk: {attempts} attempts exhausted at {len(pts)}/{n} points")
        x = rng.randint(-radius, radius)
        y = rng.randint(-radius, radius)
        if x * x + y * y > r2:
            continue
        cand = Point(x, y)
        if cand in pts:
            continue
        ok = True
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if orientation(pts[i], pts[j], cand) == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            pts.append(cand)
    return PointSet(pts)


def convex_points(n: int, seed: int) -> PointSet:
    """n points in strictly convex position: a jittered integer parabola.

    Base curve y = 4x^2 keeps consecutive slope gaps at least 8, so
    jitter in [0, 3] cannot create a collinear triple; the result is
    re-verified and the jitter resampled if needed.
    """
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    rng = SplitMix64(seed)
    span = max(4 * n, 16)
    for _ in range(64):
        xs = set()
        while len(xs) < n:
            xs.add(rng.randint(-span, span))
        xs = sorted(xs)
        pts = [Point(x, 4 * x * x + rng.randint(0, 3)) for x in xs]
        ps = PointSet(pts)
        if ps.is_general_position and _strictly_convex(pts):
            return ps
    raise GenerationFailure(f"convex: could not place {n} points")


def _strictly_convex(pts) -> bool:
    if len(pts) < 3:
        return True
    return all(orientation(pts[i], pts[i + 1], pts[i + 2]) > 0
               for i in range(len(pts) - 2))


def points_for_shape(shape: str, n: int, seed: int) -> PointSet:
    if shape == "random-disk":
        return random_disk_points(n, seed)
    if shape == "convex":
        return convex_points(n, seed)
    if shape == "horton":
        return generate_horton(n).ps
    raise ParameterError(f"unknown shape {shape!r}; choose from {SHAPES}")
