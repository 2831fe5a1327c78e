"""Pure-Python compute kernels.

Mirror of the compiled extension ``_fastcore``: same functions, same
outputs, but plain Python integers throughout, so results stay exact for
coordinates of any size.  All hull work is on closed hulls with exact
sign tests; no floating point anywhere.
"""

from itertools import combinations


def orientation(ax, ay, bx, by, cx, cy):
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _hull_indices(xs, ys, members):
    """CCW hull of the given point indices (monotone chain), vertices only."""
    pts = sorted(members, key=lambda i: (xs[i], ys[i]))
    if len(pts) <= 2:
        return pts
    lower = []
    for i in pts:
        while len(lower) >= 2:
            a, b = lower[-2], lower[-1]
            if orientation(xs[a], ys[a], xs[b], ys[b], xs[i], ys[i]) <= 0:
                lower.pop()
            else:
                break
        lower.append(i)
    upper = []
    for i in reversed(pts):
        while len(upper) >= 2:
            a, b = upper[-2], upper[-1]
            if orientation(xs[a], ys[a], xs[b], ys[b], xs[i], ys[i]) <= 0:
                upper.pop()
            else:
                break
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _hull_contains_closed(xs, ys, hull, qx, qy):
    m = len(hull)
    if m == 1:
        return qx == xs[hull[0]] and qy == ys[hull[0]]
    if m == 2:
        a, b = hull
        if orientation(xs[a], ys[a], xs[b], ys[b], qx, qy) != 0:
            return False
        return (min(xs[a], xs[b]) <= qx <= max(xs[a], xs[b])
                and min(ys[a], ys[b]) <= qy <= max(ys[a], ys[b]))
    for t in range(m):
        a = hull[t]
        b = hull[(t + 1) % m]
        if orientation(xs[a], ys[a], xs[b], ys[b], qx, qy) < 0:
            return False
    return True


def is_island_members(xs, ys, members):
    """True iff no other point lies in the closed hull of ``members``."""
    if not members:
        raise ValueError("empty member set")
    member_set = set(members)
    hull = _hull_indices(xs, ys, list(members))
    min_x = min(xs[i] for i in hull)
    max_x = max(xs[i] for i in hull)
    min_y = min(ys[i] for i in hull)
    max_y = max(ys[i] for i in hull)
    for q in range(len(xs)):
        if q in member_set:
            continue
        qx, qy = xs[q], ys[q]
        if qx < min_x or qx > max_x or qy < min_y or qy > max_y:
            continue
        if _hull_contains_closed(xs, ys, hull, qx, qy):
            return False
    return True


def islands_of_size(xs, ys, k):
    """All k-subsets (lexicographic index tuples) that are islands."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(xs)
    out = []
    for comb in combinations(range(n), k):
        if is_island_members(xs, ys, comb):
            out.append(comb)
    return out


def overlap_edges(members, l):
    """Pairs (i, j), i < j, with |members[i] & members[j]| == l exactly.

    For l >= 1 candidate pairs come from an inverted index on l-subsets:
    two k-sets meeting in exactly l points share exactly one l-subset, so
    every qualifying pair is generated once and only once.
    """
    n_vertices = len(members)
    if l == 0:
        masks = [_mask(m) for m in members]
        return [(i, j)
                for i in range(n_vertices)
                for j in range(i + 1, n_vertices)
                if not masks[i] & masks[j]]
    buckets = {}
    for idx, mem in enumerate(members):
        for sub in combinations(mem, l):
            buckets.setdefault(sub, []).append(idx)
    masks = [_mask(m) for m in members]
    edges = []
    for group in buckets.values():
        for a in range(len(group)):
            i = group[a]
            for b in range(a + 1, len(group)):
                j = group[b]
                if (masks[i] & masks[j]).bit_count() == l:
                    edges.append((i, j) if i < j else (j, i))
    edges.sort()
    return edges


def _mask(members):
    m = 0
    for i in members:
        m |= 1 << i
    return m


def high_above(xs_hi, ys_hi, xs_lo, ys_lo):
    """Exact check that the first set is high above the second.

    Lines are taken through pairs within each set: none may be vertical,
    every line through the upper set must pass strictly above every lower
    point, and every line through the lower set strictly below every
    upper point.
    """
    nh, nl = len(xs_hi), len(ys_lo)
    for i in range(nh):
        for j in range(i + 1, nh):
            if xs_hi[i] == xs_hi[j]:
                return False
    for i in range(nl):
        for j in range(i + 1, nl):
            if xs_lo[i] == xs_lo[j]:
                return False
    for i in range(nh):
        for j in range(i + 1, nh):
            a, b = (i, j) if xs_hi[i] < xs_hi[j] else (j, i)
            for t in range(nl):
                if orientation(xs_hi[a], ys_hi[a], xs_hi[b], ys_hi[b],
                               xs_lo[t], ys_lo[t]) >= 0:
                    return False
    for i in range(nl):
        for j in range(i + 1, nl):
            a, b = (i, j) if xs_lo[i] < xs_lo[j] else (j, i)
            for t in range(nh):
                if orientation(xs_lo[a], ys_lo[a], xs_lo[b], ys_lo[b],
                               xs_hi[t], ys_hi[t]) <= 0:
                    return False
    return True
