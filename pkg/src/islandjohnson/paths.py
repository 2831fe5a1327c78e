"""Explicit path constructions in the island graph.

Two routes are built here.  The weight-descent route repeatedly swaps a
non-projectable island for a neighbor of much smaller radial spread
until a projectable island is reached, then crosses the projectable
subgraph through the interval model.  The halving route cuts the point
set in half around both endpoints with a bisecting line until it is
small, then finishes with the descent route.

The descent and halving recipes are taken on trust only up to
verification: every candidate neighbor is checked for islandhood and
exact-l intersection before use, and a failed recipe falls back to
bounded exhaustive search, recording a divergence event in the trace.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import (ConstructionError, NotAnIsland, ParameterError,
                     PreconditionViolation)
from .geometry import Halfplane, PointSet, convex_hull, expand_halfplane
from .graph import build_island_graph, shortest_path
from .intervals import (LinearModel, _bfs_route, lift_interval, linear_path,
                        project_island)
from .islands import (_check_members, enumerate_islands, is_island,
                      is_projectable, island_weight)

_FALLBACK_TRIALS = 50_000


def descent_threshold(k: int, l: int) -> int:
    """Set size above which every island admits the weight-descent step."""
    d = k - l
    return d * (d + 1) + k


@dataclass
class PathTrace:
    """A walk in the island graph plus how each step was produced."""

    vertices: list
    moves: list = field(default_factory=list)
    divergences: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "vertices": [list(v) for v in self.vertices],
            "moves": list(self.moves),
            "divergences": list(self.divergences),
            "meta": dict(self.meta),
        }


class PathValidation:
    """Result of validate_path; truthy iff the trace is a valid walk."""

    def __init__(self, ok, index=None, reason=None):
        self.ok = ok
        self.index = index
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "PathValidation(ok)"
        return f"PathValidation(failed at {self.index}: {self.reason})"


def step_flags(ps: PointSet, trace, k: int, l: int) -> list[bool]:
    """Per-step validity: both endpoints are k-islands meeting in l points."""
    vertices = trace.vertices if isinstance(trace, PathTrace) else list(trace)
    ok_vertex = [len(v) == k and is_island(ps, v) for v in vertices]
    return [ok_vertex[i] and ok_vertex[i + 1]
            and len(set(vertices[i]) & set(vertices[i + 1])) == l
            for i in range(len(vertices) - 1)]


def validate_path(ps: PointSet, trace, k: int, l: int) -> PathValidation:
    """Check every vertex is a k-island and consecutive pairs meet in l points."""
    vertices = trace.vertices if isinstance(trace, PathTrace) else list(trace)
    if not vertices:
        return PathValidation(False, 0, "empty trace")
    for i, v in enumerate(vertices):
        if len(v) != k:
            return PathValidation(False, i, f"vertex {v} has size {len(v)}, not {k}")
        if not is_island(ps, v):
            return PathValidation(False, i, f"vertex {v} is not an island")
    for i in range(len(vertices) - 1):
        inter = len(set(vertices[i]) & set(vertices[i + 1]))
        if inter != l:
            return PathValidation(
                False, i, f"step {i} intersection has {inter} points, not {l}")
    return PathValidation(True)


@dataclass(frozen=True)
class RadialInterval:
    """A maximal radial run holding exactly l island members."""

    lo: int
    hi: int
    a_inside: tuple[int, ...]  # radial positions of members inside
    is_first: bool
    is_last: bool

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def non_a_count(self) -> int:
        return self.size - len(self.a_inside)


@dataclass(frozen=True)
class LIntervalCover:
    intervals: tuple[RadialInterval, ...]
    l: int


def l_interval_cover(ps: PointSet, island, l: int) -> LIntervalCover:
    """Maximal radial intervals of the non-apex points containing exactly l
    island members; end intervals are the ones touching position 1 or n-1."""
    mem = _check_members(ps, island)
    n = len(ps)
    apex = ps.apex
    positions = sorted(ps.radial_position(i) for i in mem if i != apex)
    intervals = []
    if l == 0:
        bounds = [0] + positions + [n]
        for a, b in zip(bounds, bounds[1:]):
            lo, hi = a + 1, b - 1
            if lo > hi:
                continue
            intervals.append(RadialInterval(lo, hi, (), lo == 1, hi == n - 1))
    else:
        m = len(positions)
        if m < l:
            raise ParameterError(f"island has {m} non-apex members; need at least l={l}")
        for t in range(m - l + 1):
            lo = positions[t - 1] + 1 if t > 0 else 1
            hi = positions[t + l] - 1 if t + l < m else n - 1
            window = tuple(positions[t:t + l])
            intervals.append(RadialInterval(lo, hi, window, lo == 1, hi == n - 1))
    return LIntervalCover(tuple(intervals), l)


def _dist2_to_hull(points, hull_pts, q):
    """Exact squared distance from q to the convex hull of hull_pts."""
    best = None
    for h in hull_pts:
        d2 = (q[0] - h[0]) ** 2 + (q[1] - h[1]) ** 2
        if best is None or d2 < best:
            best = d2
    if len(hull_pts) >= 2:
        if len(hull_pts) == 2:
            edges = [(hull_pts[0], hull_pts[1])]
        else:
            edges = list(zip(hull_pts, hull_pts[1:] + hull_pts[:1]))
        for u, v in edges:
            ex, ey = v[0] - u[0], v[1] - u[1]
            t = ex * (q[0] - u[0]) + ey * (q[1] - u[1])
            length2 = ex * ex + ey * ey
            if 0 < t < length2:
                cross = ex * (q[1] - u[1]) - ey * (q[0] - u[0])
                d2 = Fraction(cross * cross, length2)
                if d2 < best:
                    best = d2
    return best


def _closest_candidates(ps: PointSet, j_indices, candidate_indices):
    """Candidates ordered by exact distance to Conv(J); ties by radial position."""
    if not j_indices:
        return sorted(candidate_indices, key=ps.radial_position)
    hull = convex_hull([ps.points[i] for i in j_indices])
    return sorted(
        candidate_indices,
        key=lambda q: (_dist2_to_hull(ps.points, hull, ps.points[q]),
                       ps.radial_position(q)))


def _accept_shrink(ps, cand, base, l, target_drop, base_weight):
    cand = tuple(sorted(cand))
    if len(cand) != len(base):
        return None
    if len(set(cand) & set(base)) != l:
        return None
    if not is_island(ps, cand):
        return None
    if is_projectable(ps, cand):
        return cand
    if island_weight(ps, cand) <= base_weight - target_drop:
        return cand
    return None


def shrink_step(ps: PointSet, island, l: int):
    """One weight-descent move: a neighbor that is projectable or lighter
    by at least k-l.  Returns (neighbor, divergence_events)."""
    mem = _check_members(ps, island)
    k = len(mem)
    n = len(ps)
    thr = descent_threshold(k, l)
    if n <= thr:
        raise PreconditionViolation(f"need n > {thr}, got n={n}")
    if not is_island(ps, mem):
        raise NotAnIsland(mem)
    if is_projectable(ps, mem):
        raise PreconditionViolation(f"{mem} is already projectable")
    target_drop = k - l
    base_weight = island_weight(ps, mem)
    cover = l_interval_cover(ps, mem, l)
    radial = ps.radial
    member_positions = {ps.radial_position(i) for i in mem if i != ps.apex}
    has_apex = ps.apex in mem
    events = []

    def positions_to_indices(pos_list):
        return [radial[p] for p in pos_list]

    def first_qualifying(intervals, drop):
        for itv in intervals:
            if itv.non_a_count >= drop:
                return itv
        return None

    # Recipe candidates: when the island holds the apex we keep it and run
    # the construction on the non-apex members one size down, which is what
    # makes the weight bound come out; the apex-dropping variant is kept as
    # a second try.
    recipes = []
    if has_apex and l >= 1:
        reduced = l_interval_cover(ps, mem, l - 1)
        itv = first_qualifying(reduced.intervals, target_drop)
        if itv is not None:
            cand = _primary_candidate(ps, mem, l - 1, itv, member_positions,
                                      positions_to_indices, target_drop)
            if cand is not None:
                recipes.append(sorted(cand + [ps.apex]))
    primary_interval = first_qualifying(cover.intervals, target_drop)
    if primary_interval is None and not recipes:
        raise ConstructionError(
            f"no interval with {target_drop} outside points (n={n}, k={k}, l={l})")
    if primary_interval is not None:
        cand = _primary_candidate(ps, mem, l, primary_interval, member_positions,
                                  positions_to_indices, target_drop)
        if cand is not None:
            recipes.append(sorted(cand))
    for cand in recipes:
        accepted = _accept_shrink(ps, cand, mem, l, target_drop, base_weight)
        if accepted is not None:
            return accepted, events
    if recipes:
        events.append({"stage": "shrink", "kind": "recipe-rejected",
                       "island": list(mem), "candidates": recipes})

    # Fallback 1: bounded search over outside-point choices per interval.
    trials = 0
    for itv in cover.intervals:
        if itv.non_a_count < target_drop:
            continue
        window = positions_to_indices(itv.a_inside)
        outside = [radial[p] for p in range(itv.lo, itv.hi + 1)
                   if p not in member_positions]
        ordered = _closest_candidates(ps, window, outside)
        for combo in combinations(ordered, target_drop):
            trials += 1
            if trials > _FALLBACK_TRIALS:
                break
            accepted = _accept_shrink(ps, window + list(combo), mem, l,
                                      target_drop, base_weight)
            if accepted is not None:
                events.append({"stage": "shrink", "kind": "interval-search",
                               "island": list(mem)})
                return accepted, events
        if trials > _FALLBACK_TRIALS:
            break

    # Fallback 2: all exact-l neighbors, strict drop or projectable first,
    # then any strict weight decrease.
    best_relaxed = None
    for other in enumerate_islands(ps, k):
        if len(set(other) & set(mem)) != l:
            continue
        if is_projectable(ps, other):
            events.append({"stage": "shrink", "kind": "global-search",
                           "island": list(mem)})
            return other, events
        w = island_weight(ps, other)
        if w <= base_weight - target_drop:
            events.append({"stage": "shrink", "kind": "global-search",
                           "island": list(mem)})
            return other, events
        if w < base_weight and best_relaxed is None:
            best_relaxed = other
    if best_relaxed is not None:
        events.append({"stage": "shrink", "kind": "weight-relaxed",
                       "island": list(mem), "weight": island_weight(ps, best_relaxed)})
        return best_relaxed, events
    raise ConstructionError(f"no descent neighbor found for {mem}")


def _primary_candidate(ps, mem, l, itv, member_positions, positions_to_indices,
                       target_drop):
    """The recipe's candidate inside one interval, before verification."""
    radial = ps.radial
    outside = [radial[p] for p in range(itv.lo, itv.hi + 1)
               if p not in member_positions]
    if l == 0:
        # Any k consecutive positions inside the interval form a radial run.
        if itv.size >= target_drop:
            run = [radial[p] for p in range(itv.lo, itv.lo + target_drop)]
            return run
        return None
    window_positions = list(itv.a_inside)
    window = positions_to_indices(window_positions)
    if itv.is_first or itv.is_last:
        span_lo, span_hi = window_positions[0], window_positions[-1]
        span_outside = [radial[p] for p in range(span_lo, span_hi + 1)
                        if p not in member_positions]
        if len(span_outside) >= target_drop:
            ordered = _closest_candidates(ps, window, span_outside)
            return window + ordered[:target_drop]
        needed = target_drop - len(span_outside)
        left_room = span_lo - itv.lo
        right_room = itv.hi - span_hi
        if itv.is_first:
            a = min(needed, left_room)
            b = needed - a
        else:
            b = min(needed, right_room)
            a = needed - b
        if a > left_room or b > right_room:
            return None
        run = [radial[p] for p in range(span_lo - a, span_hi + b + 1)]
        return run
    ordered = _closest_candidates(ps, window, outside)
    return window + ordered[:target_drop]


def shrink_to_projectable(ps: PointSet, island, l: int) -> PathTrace:
    """Descend to a projectable island; the start itself if already projectable."""
    mem = _check_members(ps, island)
    if not is_island(ps, mem):
        raise NotAnIsland(mem)
    vertices = [mem]
    moves = []
    divergences = []
    guard = 2 * len(ps) + 4
    while not is_projectable(ps, vertices[-1]):
        if len(moves) > guard:
            raise ConstructionError(f"descent from {mem} did not terminate")
        nxt, events = shrink_step(ps, vertices[-1], l)
        vertices.append(nxt)
        moves.append("shrink")
        divergences.extend(events)
    return PathTrace(vertices, moves, divergences)


def descent_path(ps: PointSet, a, b, l: int,
                  shortest_middle: bool = False) -> PathTrace:
    """Descent route between two islands: shrink both ends to projectable
    islands, then cross the projectable subgraph via the interval model.

    With ``shortest_middle`` the projectable segment is found by BFS over
    the model instead of the constructive walk (shortest, same validity).
    """
    a = _check_members(ps, a)
    b = _check_members(ps, b)
    if len(a) != len(b):
        raise ParameterError(f"island sizes differ: {len(a)} vs {len(b)}")
    k = len(a)
    n = len(ps)
    thr = descent_threshold(k, l)
    if n <= thr:
        raise PreconditionViolation(
            f"descent route needs n > (k-l)(k-l+1)+k = {thr}, got n={n}")
    for side in (a, b):
        if not is_island(ps, side):
            raise NotAnIsland(side)
    if a == b:
        return PathTrace([a])
    ta = shrink_to_projectable(ps, a, l)
    tb = shrink_to_projectable(ps, b, l)
    model = LinearModel(n, k, l, with_apex=True)
    route = _bfs_route if shortest_middle else linear_path
    mid_verts, mid_tags = route(model,
                                project_island(ps, ta.vertices[-1]),
                                project_island(ps, tb.vertices[-1]))
    mid_islands = [lift_interval(ps, w) for w in mid_verts]
    vertices = ta.vertices + mid_islands[1:] + list(reversed(tb.vertices))[1:]
    moves = ta.moves + mid_tags + ["shrink"] * len(tb.moves)
    trace = PathTrace(vertices, moves, ta.divergences + tb.divergences)
    check = validate_path(ps, trace, k, l)
    if not check:
        raise ConstructionError(f"descent route invalid: {check!r}")
    return trace


def halving_step(ps: PointSet, a, b, l: int, floor: int | None = None):
    """One divide step: a halfplane H with between (k-l)(k-l+1)+k (or
    ``floor``) and n/2 points, containing exact-l neighbors of both
    islands.  Returns (halfplane, neighbor_of_a, neighbor_of_b, events)."""
    a = _check_members(ps, a)
    b = _check_members(ps, b)
    if len(a) != len(b):
        raise ParameterError(f"island sizes differ: {len(a)} vs {len(b)}")
    k = len(a)
    n = len(ps)
    thr = descent_threshold(k, l)
    if 2 * l > k:
        raise PreconditionViolation(f"halving needs l <= k/2, got k={k} l={l}")
    if n < 2 * thr:
        raise PreconditionViolation(f"halving needs n >= {2 * thr}, got n={n}")
    floor_t = thr if floor is None else floor
    for side in (a, b):
        if not is_island(ps, side):
            raise NotAnIsland(side)
    need = (k + 1) // 2
    pts_a = [ps.points[i] for i in a]
    pts_b = [ps.points[i] for i in b]
    pool = sorted(set(pts_a) | set(pts_b))
    half = n // 2
    pairs = [(pool[i], pool[j])
             for i in range(len(pool)) for j in range(i + 1, len(pool))]

    def through(p, q):
        return Halfplane(q.y - p.y, p.x - q.x,
                         (q.y - p.y) * p.x + (p.x - q.x) * p.y)

    def rotated(pivot, other, sign):
        # The line through pivot and other, rotated about pivot by an
        # angle small enough that no strict side assignment changes; the
        # points on the old line (other included) land on the `sign` side.
        dx, dy = other.x - pivot.x, other.y - pivot.y
        a_n, b_n = dy, -dx
        scale = 1 + max(abs(dx * (p.x - pivot.x) + dy * (p.y - pivot.y))
                        for p in ps.points)
        na = scale * a_n - sign * dx
        nb = scale * b_n - sign * dy
        return Halfplane(na, nb, na * pivot.x + nb * pivot.y)

    def window_side(h):
        """The halfplane itself, expanded to the floor if short, provided
        its final point count lands in [floor, n/2]."""
        count = sum(1 for t in ps.points if h.contains(t))
        if count < floor_t:
            h = expand_halfplane(h, ps.points, floor_t)
            count = sum(1 for t in ps.points if h.contains(t))
        if floor_t <= count <= half:
            return h
        return None

    def attempt(side, extra_events):
        try:
            nb_a, ev_a = _neighbor_in_halfplane(ps, side, a, l)
            nb_b, ev_b = _neighbor_in_halfplane(ps, side, b, l)
        except ConstructionError:
            return None
        return side, nb_a, nb_b, extra_events + ev_a + ev_b

    # Pass 1: exact two-point bisecting lines whose closed sides both hold
    # half of each island.
    for p, q in pairs:
        h = through(p, q)
        lo_a = sum(1 for t in pts_a if h.value(t) <= h.c)
        hi_a = len(pts_a) - sum(1 for t in pts_a if h.value(t) < h.c)
        lo_b = sum(1 for t in pts_b if h.value(t) <= h.c)
        hi_b = len(pts_b) - sum(1 for t in pts_b if h.value(t) < h.c)
        if min(lo_a, hi_a) < need or min(lo_b, hi_b) < need:
            continue
        for raw in sorted((h, h.complement()),
                          key=lambda s: (sum(1 for t in ps.points if s.contains(t)), s)):
            side = window_side(raw)
            if side is None:
                continue
            found = attempt(side, [])
            if found is not None:
                return found
    # Pass 2 and 3: infinitesimally rotated lines through one island point,
    # requiring only the chosen side to hold enough of each island (half
    # of each in pass 2; the l shared points in pass 3, which is all the
    # interval construction needs).
    for pass_need, tag in ((need, None), (max(l, 0), "contract-relaxed")):
        for p, q in pairs:
            for pivot, other in ((p, q), (q, p)):
                for sign in (1, -1):
                    base = rotated(pivot, other, sign)
                    for raw in (base, base.complement()):
                        n_a = sum(1 for t in pts_a if raw.contains(t))
                        n_b = sum(1 for t in pts_b if raw.contains(t))
                        if n_a < pass_need or n_b < pass_need:
                            continue
                        side = window_side(raw)
                        if side is None:
                            continue
                        events = [] if tag is None else [
                            {"stage": "halving", "kind": tag,
                             "a_inside": n_a, "b_inside": n_b}]
                        found = attempt(side, events)
                        if found is not None:
                            return found
    raise ConstructionError(f"no halving halfplane found (n={n}, k={k}, l={l})")


def _neighbor_in_halfplane(ps: PointSet, h: Halfplane, island, l: int):
    """An exact-l neighbor of ``island`` contained in h, built inside one
    maximal run (in boundary-distance order) holding exactly l members."""
    k = len(island)
    target = k - l
    inside = [i for i in range(len(ps)) if h.contains(ps.points[i])]
    inside.sort(key=lambda i: (abs(h.value(ps.points[i]) - h.c), i))
    member_ranks = [r for r, i in enumerate(inside) if i in set(island)]
    m = len(member_ranks)
    if m < l:
        raise ConstructionError(f"only {m} members inside the halfplane; need {l}")
    events = []
    intervals = []
    if l == 0:
        bounds = [-1] + member_ranks + [len(inside)]
        for x, y in zip(bounds, bounds[1:]):
            if x + 1 <= y - 1:
                intervals.append((x + 1, y - 1, ()))
    else:
        for t in range(m - l + 1):
            lo = member_ranks[t - 1] + 1 if t > 0 else 0
            hi = member_ranks[t + l] - 1 if t + l < m else len(inside) - 1
            intervals.append((lo, hi, tuple(member_ranks[t:t + l])))
    member_set = set(island)

    def try_accept(cand):
        cand = tuple(sorted(cand))
        if len(set(cand) & member_set) != l:
            return None
        if not is_island(ps, cand):
            return None
        return cand

    trials = 0
    for lo, hi, window_ranks in intervals:
        window = [inside[r] for r in window_ranks]
        outside = [inside[r] for r in range(lo, hi + 1)
                   if inside[r] not in member_set]
        if len(outside) < target:
            continue
        ordered = _closest_candidates(ps, window, outside)
        cand = try_accept(window + ordered[:target])
        if cand is not None:
            return cand, events
        events.append({"stage": "halving", "kind": "recipe-rejected",
                       "island": list(island)})
        for combo in combinations(ordered, target):
            trials += 1
            if trials > _FALLBACK_TRIALS:
                break
            cand = try_accept(window + list(combo))
            if cand is not None:
                events.append({"stage": "halving", "kind": "interval-search",
                               "island": list(island)})
                return cand, events
        if trials > _FALLBACK_TRIALS:
            break
    # Last resort: enumerate islands of the restricted set directly.
    inside_sorted = sorted(inside)
    sub_ps = PointSet([ps.points[i] for i in inside_sorted])
    for local in enumerate_islands(sub_ps, k):
        cand = tuple(sorted(inside_sorted[i] for i in local))
        if len(set(cand) & member_set) != l:
            continue
        if is_island(ps, cand):
            events.append({"stage": "halving", "kind": "restricted-search",
                           "island": list(island)})
            return cand, events
    raise ConstructionError(f"no exact-{l} neighbor of {island} inside the halfplane")


def log_path(ps: PointSet, a, b, l: int) -> PathTrace:
    """Halving route: repeatedly restrict to a half-size subset around both
    endpoints, then finish with the descent route in the small leftover."""
    a = _check_members(ps, a)
    b = _check_members(ps, b)
    if len(a) != len(b):
        raise ParameterError(f"island sizes differ: {len(a)} vs {len(b)}")
    k = len(a)
    if 2 * l > k:
        raise PreconditionViolation(f"halving route needs l <= k/2, got k={k} l={l}")
    for side in (a, b):
        if not is_island(ps, side):
            raise NotAnIsland(side)
    if a == b:
        return PathTrace([a], meta={"halving_rounds": 0})
    thr = descent_threshold(k, l)
    global_indices = list(range(len(ps)))
    cur_ps = ps
    trace_a = [a]
    trace_b = [b]
    divergences = []
    # Stopping at 2(thr+1) (not 2*thr) keeps the leftover strictly above
    # the descent threshold, which the final route requires.
    while len(cur_ps) >= 2 * (thr + 1):
        to_local = {g: i for i, g in enumerate(global_indices)}
        local_a = tuple(sorted(to_local[i] for i in trace_a[-1]))
        local_b = tuple(sorted(to_local[i] for i in trace_b[-1]))
        h, nb_a, nb_b, events = halving_step(cur_ps, local_a, local_b, l,
                                             floor=thr + 1)
        divergences.extend(events)
        trace_a.append(tuple(sorted(global_indices[i] for i in nb_a)))
        trace_b.append(tuple(sorted(global_indices[i] for i in nb_b)))
        global_indices = [g for g in global_indices if h.contains(ps.points[g])]
        cur_ps = PointSet([ps.points[g] for g in global_indices])
    rounds = len(trace_a) - 1
    to_local = {g: i for i, g in enumerate(global_indices)}
    local_a = tuple(sorted(to_local[i] for i in trace_a[-1]))
    local_b = tuple(sorted(to_local[i] for i in trace_b[-1]))
    mid = descent_path(cur_ps, local_a, local_b, l)
    mid_vertices = [tuple(sorted(global_indices[i] for i in v)) for v in mid.vertices]
    vertices = trace_a + mid_vertices[1:] + list(reversed(trace_b))[1:]
    moves = (["halving"] * rounds) + mid.moves + (["halving"] * rounds)
    trace = PathTrace(vertices, moves, divergences + mid.divergences,
                      meta={"halving_rounds": rounds})
    check = validate_path(ps, trace, k, l)
    if not check:
        raise ConstructionError(f"halving route invalid: {check!r}")
    return trace


def bfs_island_path(ps: PointSet, a, b, l: int) -> PathTrace:
    """Shortest route by BFS over the full island graph (the oracle route)."""
    a = _check_members(ps, a)
    b = _check_members(ps, b)
    if len(a) != len(b):
        raise ParameterError(f"island sizes differ: {len(a)} vs {len(b)}")
    for side in (a, b):
        if not is_island(ps, side):
            raise NotAnIsland(side)
    g = build_island_graph(ps, len(a), l)
    verts = shortest_path(g, a, b)
    return PathTrace(verts, ["bfs"] * (len(verts) - 1))
