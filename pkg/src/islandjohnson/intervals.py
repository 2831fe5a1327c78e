"""Combinatorial model of islands of collinear points plus one apex.

The model works over n points: n-1 "line points" labelled 1..n-1 in
order, plus one off-line apex.  Islands without the apex are runs of k
consecutive line points (written by their last point: end in [k, n-1]);
islands with the apex are the apex plus k-1 consecutive line points
(end in [k-1, n-1]).  No coordinates are involved, so none of the
general-position machinery applies; intersections are interval overlaps,
with the apex counting as one shared element between two apex islands.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotProjectable, ParameterError, Unreachable
from .geometry import PointSet
from .graph import IslandGraph, _graph_from_edges, bfs_distances
from .islands import _check_members, is_projectable


class IntervalIsland(NamedTuple):
    end: int
    has_apex: bool
    k: int

    def span(self) -> tuple[int, int]:
        """Covered line points as an inclusive range (lo > hi when empty)."""
        if self.has_apex:
            return self.end - self.k + 2, self.end
        return self.end - self.k + 1, self.end

    def line_points(self) -> tuple[int, ...]:
        lo, hi = self.span()
        return tuple(range(lo, hi + 1))


@dataclass(frozen=True)
class LinearModel:
    """Parameters of the model: n counts the apex plus the n-1 line points."""

    n: int
    k: int
    l: int
    with_apex: bool = True

    def __post_init__(self):
        if not 0 <= self.l < self.k:
            raise ParameterError(f"need 0 <= l < k, got k={self.k} l={self.l}")
        if self.n < self.k:
            raise ParameterError(f"need n >= k, got n={self.n} k={self.k}")

    def vertices(self) -> list[IntervalIsland]:
        k, n = self.k, self.n
        out = [IntervalIsland(i, False, k) for i in range(k, n)]
        if self.with_apex:
            if k == 1:
                out.append(IntervalIsland(0, True, 1))
            else:
                out.extend(IntervalIsland(i, True, k) for i in range(k - 1, n))
        return sorted(out)

    def is_valid(self, v: IntervalIsland) -> bool:
        if v.k != self.k or (v.has_apex and not self.with_apex):
            return False
        if v.has_apex:
            if self.k == 1:
                return v.end == 0
            return self.k - 1 <= v.end <= self.n - 1
        return self.k <= v.end <= self.n - 1


def interval_overlap(u: IntervalIsland, v: IntervalIsland) -> int:
    """Exact intersection size of two model islands (same k)."""
    lo_u, hi_u = u.span()
    lo_v, hi_v = v.span()
    common = max(0, min(hi_u, hi_v) - max(lo_u, lo_v) + 1)
    if u.has_apex and v.has_apex:
        common += 1
    return common


def build_linear_graph(model: LinearModel) -> IslandGraph:
    """The model's island graph with exact-l adjacency."""
    verts = model.vertices()
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if interval_overlap(verts[i], verts[j]) == model.l:
                edges.append((i, j))
    return _graph_from_edges(model.k, model.l, verts, edges)


def residue_decomposition(model: LinearModel) -> list[list[IntervalIsland]]:
    """The k-l induced paths of the apex-free model, bucketed by end mod (k-l).

    Each bucket, in end order, is one path (steps of k-l); buckets may be
    empty at small n.  Requires l > 0 and the apex-free model.
    """
    if model.l == 0:
        raise ParameterError("residue decomposition needs l > 0")
    if model.with_apex:
        raise ParameterError("residue decomposition applies to the apex-free model")
    d = model.k - model.l
    paths: list[list[IntervalIsland]] = [[] for _ in range(d)]
    for v in model.vertices():
        paths[v.end % d].append(v)
    return paths


def grid_neighbors(model: LinearModel, v: IntervalIsland) -> list[IntervalIsland]:
    """Cross-type neighbors of v: the two islands of the other type it meets
    in exactly l points, filtered to those that exist."""
    if model.l < 2:
        raise ParameterError("grid neighbors need l >= 2")
    if not model.with_apex:
        raise ParameterError("grid neighbors live in the apex model")
    if not model.is_valid(v):
        raise ParameterError(f"{v} is not a vertex of this model")
    d = model.k - model.l
    if v.has_apex:
        cands = [IntervalIsland(v.end + d, False, v.k),
                 IntervalIsland(v.end - d + 1, False, v.k)]
    else:
        cands = [IntervalIsland(v.end - d, True, v.k),
                 IntervalIsland(v.end + d - 1, True, v.k)]
    return sorted(c for c in cands if model.is_valid(c))


def connectivity_threshold(n: int, k: int, l: int) -> bool:
    """Closed form for connectivity of the apex model: n >= 3k-2l-1 or n = k."""
    if l < 2:
        raise ParameterError("the closed form applies for l >= 2")
    if not l < k <= n:
        raise ParameterError(f"need l < k <= n, got k={k} l={l} n={n}")
    return n >= 3 * k - 2 * l - 1 or n == k


def linear_path(model: LinearModel, src: IntervalIsland, dst: IntervalIsland
                ) -> tuple[list[IntervalIsland], list[str]]:
    """An explicit path from src to dst; returns (vertices, per-step tags).

    For l >= 2 the route is constructive: cross-type switches fix the
    apex flag and the end's residue class mod k-l (at most 2(k-l) of
    them, with repositioning along the current residue path when a switch
    would run off the line), then a straight walk along the target
    residue path.  For l < 2 the route is a BFS search on the model.
    """
    for v in (src, dst):
        if not model.is_valid(v):
            raise ParameterError(f"{v} is not a vertex of this model")
    if src == dst:
        return [src], []
    d = model.k - model.l
    if not model.with_apex:
        if model.l == 0:
            return _bfs_route(model, src, dst)
        if (src.end - dst.end) % d != 0:
            raise Unreachable("ends lie in different residue classes")
        verts = [src]
        step = d if dst.end > src.end else -d
        while verts[-1].end != dst.end:
            verts.append(IntervalIsland(verts[-1].end + step, False, model.k))
        return verts, ["residue"] * (len(verts) - 1)
    if model.n == model.k:
        raise Unreachable("single-vertex model")
    if model.l < 2:
        return _bfs_route(model, src, dst)
    if not connectivity_threshold(model.n, model.k, model.l):
        raise Unreachable(f"model disconnected: n={model.n} < 3k-2l-1={3*model.k-2*model.l-1}")
    verts, tags = _grid_walk(model, src, dst)
    if verts is None:
        return _bfs_route(model, src, dst)
    return verts, tags


def _bfs_route(model, src, dst):
    g = build_linear_graph(model)
    si, di = g.index_of(src), g.index_of(dst)
    parent = {si: None}
    frontier = [si]
    while frontier and di not in parent:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in parent:
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    if di not in parent:
        raise Unreachable(f"no path between {src} and {dst}")
    idxs = [di]
    while parent[idxs[-1]] is not None:
        idxs.append(parent[idxs[-1]])
    verts = [g.labels[i] for i in reversed(idxs)]
    return verts, ["bfs"] * (len(verts) - 1)


def _grid_walk(model, src, dst):
    k, l, n = model.k, model.l, model.n
    d = k - l
    verts = [src]
    tags = []

    def push(v, tag):
        if not model.is_valid(v) or interval_overlap(verts[-1], v) != l:
            raise AssertionError(f"invalid constructive move {verts[-1]} -> {v}")
        verts.append(v)
        tags.append(tag)

    def reposition(step, tag="residue"):
        cur = verts[-1]
        push(IntervalIsland(cur.end + step, cur.has_apex, k), tag)

    # Plan the switch sequence on (residue, apex flag).  A "-1" residue
    # step is A_e -> A'_{e+d-1}; a "+1" step is A'_e -> A_{e-d+1}; the
    # residue-preserving switches are A_e -> A'_{e-d} and A'_e -> A_{e+d}.
    delta_minus = (src.end - dst.end) % d
    delta_plus = (dst.end - src.end) % d
    plans = []
    for direction in (("minus", delta_minus), ("plus", delta_plus)):
        name, steps = direction
        moves = []
        ap = src.has_apex
        if steps == 0:
            if ap != dst.has_apex:
                moves.append("switch")
        else:
            for s in range(steps):
                if name == "minus":
                    if ap:
                        moves.append("switch")
                        ap = False
                    moves.append("shift-minus")
                    ap = True
                else:
                    if not ap:
                        moves.append("switch")
                        ap = True
                    moves.append("shift-plus")
                    ap = False
            if ap != dst.has_apex:
                moves.append("switch")
        plans.append((len(moves), name, moves))
    plans.sort()
    _, _, moves = plans[0]

    guard = 0
    for mv in moves:
        while True:
            guard += 1
            if guard > 8 * d + 8 * (n // max(d, 1)) + 16:
                return None, None
            cur = verts[-1]
            e, ap = cur.end, cur.has_apex
            if mv == "switch":
                if not ap:
                    if e - d >= k - 1:
                        push(IntervalIsland(e - d, True, k), "grid")
                        break
                    reposition(d)
                else:
                    if e + d <= n - 1:
                        push(IntervalIsland(e + d, False, k), "grid")
                        break
                    reposition(-d)
            elif mv == "shift-minus":
                if e + d - 1 <= n - 1:
                    push(IntervalIsland(e + d - 1, True, k), "grid")
                    break
                reposition(-d)
            else:  # shift-plus
                if e - d + 1 >= k:
                    push(IntervalIsland(e - d + 1, False, k), "grid")
                    break
                reposition(d)
    cur = verts[-1]
    assert cur.has_apex == dst.has_apex and (cur.end - dst.end) % d == 0
    step = d if dst.end > cur.end else -d
    while verts[-1].end != dst.end:
        reposition(step)
    return verts, tags


def project_island(ps: PointSet, island) -> IntervalIsland:
    """Map a projectable island of a planar set onto the model.

    The apex is the radial-order apex; line point j is the point at
    radial position j.  Inverse of :func:`lift_interval`.
    """
    mem = _check_members(ps, island)
    if not is_projectable(ps, mem):
        raise NotProjectable(f"{mem} is not projectable")
    apex = ps.apex
    k = len(mem)
    has_apex = apex in mem
    positions = sorted(ps.radial_position(i) for i in mem if i != apex)
    end = positions[-1] if positions else k - 1
    return IntervalIsland(end, has_apex, k)


def lift_interval(ps: PointSet, v: IntervalIsland) -> tuple[int, ...]:
    """Map a model island back to input-order indices of the planar set."""
    model = LinearModel(len(ps), v.k, 0, with_apex=True)
    if not model.is_valid(v):
        raise ParameterError(f"{v} is not valid for n={len(ps)}")
    radial = ps.radial
    members = [radial[pos] for pos in v.line_points()]
    if v.has_apex:
        members.append(ps.apex)
    return tuple(sorted(members))
