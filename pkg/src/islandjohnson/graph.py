"""Island Johnson graphs, generalized Johnson graphs, and graph analysis.

Vertices are canonical sorted label tuples in lexicographic order; two
vertices are adjacent exactly when their intersection has l elements
(not at least l).  Analysis is plain BFS; the clique solver is a small
exact branch-and-bound with a greedy coloring bound.
"""

from collections import deque
from itertools import combinations
from math import comb

from . import _kernel
from .errors import BudgetExceeded, ParameterError, ResourceCapExceeded, Unreachable
from .geometry import PointSet
from .islands import enumerate_islands

DEFAULT_VERTEX_CAP = 5_000_000
DEFAULT_PAIR_CAP = 500_000_000


class IslandGraph:
    """Immutable undirected graph over canonical vertex labels."""

    def __init__(self, k, l, labels, adj):
        self.k = k
        self.l = l
        self.labels = tuple(labels)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    @property
    def vertex_count(self):
        return len(self.labels)

    @property
    def edge_count(self):
        return sum(len(a) for a in self.adj) // 2

    def index_of(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ParameterError(f"{label} is not a vertex") from None

    def neighbors(self, label):
        return [self.labels[j] for j in self.adj[self.index_of(label)]]

    def degrees(self):
        return [len(a) for a in self.adj]


def _edges_from_labels(labels, l, ground_size, cap_pairs):
    nv = len(labels)
    candidate_pairs = nv * (nv - 1) // 2
    if l >= 1:
        buckets = {}
        for mem in labels:
            for sub in combinations(mem, l):
                buckets[sub] = buckets.get(sub, 0) + 1
        candidate_pairs = min(candidate_pairs,
                              sum(b * (b - 1) // 2 for b in buckets.values()))
    if candidate_pairs > cap_pairs:
        raise ResourceCapExceeded(
            f"{candidate_pairs} candidate pairs exceed the cap {cap_pairs}")
    return _kernel.overlap_edges(labels, l, ground_size)


def _graph_from_edges(k, l, labels, edges):
    adj = [[] for _ in labels]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return IslandGraph(k, l, labels, adj)


def build_island_graph(ps: PointSet, k: int, l: int,
                       cap_vertices=DEFAULT_VERTEX_CAP,
                       cap_pairs=DEFAULT_PAIR_CAP) -> IslandGraph:
    """IJ(P, k, l): all k-islands of P, adjacent iff they meet in l points."""
    if not 0 <= l < k <= len(ps):
        raise ParameterError(f"need 0 <= l < k <= n, got k={k} l={l} n={len(ps)}")
    ps.require_general_position()
    labels = enumerate_islands(ps, k)
    if len(labels) > cap_vertices:
        raise ResourceCapExceeded(f"{len(labels)} vertices exceed the cap {cap_vertices}")
    edges = _edges_from_labels(labels, l, len(ps), cap_pairs)
    return _graph_from_edges(k, l, labels, edges)


def build_generalized_johnson(n: int, k: int, l: int,
                              cap_vertices=DEFAULT_VERTEX_CAP,
                              cap_pairs=DEFAULT_PAIR_CAP) -> IslandGraph:
    """GJ(n, k, l) over ground set {0, .., n-1} (all k-subsets)."""
    if not 0 <= l < k <= n:
        raise ParameterError(f"need 0 <= l < k <= n, got k={k} l={l} n={n}")
    n_vertices = comb(n, k)
    if n_vertices > cap_vertices:
        raise ResourceCapExceeded(f"C({n},{k})={n_vertices} exceeds the cap {cap_vertices}")
    labels = list(combinations(range(n), k))
    edges = _edges_from_labels(labels, l, n, cap_pairs)
    return _graph_from_edges(k, l, labels, edges)


def edges_quadratic(labels, l):
    """All exact-l pairs by direct pairwise intersection counting."""
    sets = [frozenset(m) for m in labels]
    return [(i, j)
            for i in range(len(labels))
            for j in range(i + 1, len(labels))
            if len(sets[i] & sets[j]) == l]


def components(g: IslandGraph) -> list[list]:
    """Connected components as sorted label lists, ordered by least vertex."""
    n = len(g.labels)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(g.labels[i] for i in comp))
    return out


def is_connected(g: IslandGraph) -> bool:
    return len(g.labels) <= 1 or len(components(g)) == 1


def shortest_path(g: IslandGraph, a, b) -> list:
    """A minimum-length vertex sequence from a to b (BFS)."""
    src = g.index_of(tuple(a) if not isinstance(a, tuple) else a)
    dst = g.index_of(tuple(b) if not isinstance(b, tuple) else b)
    if src == dst:
        return [g.labels[src]]
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w not in parent:
                parent[w] = v
                if w == dst:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return [g.labels[i] for i in reversed(path)]
                queue.append(w)
    raise Unreachable(f"{g.labels[src]} and {g.labels[dst]} lie in different components")


def bfs_distances(g: IslandGraph, src_index: int) -> list[int]:
    """Distances from one vertex to all others (-1 where unreachable)."""
    dist = [-1] * len(g.labels)
    dist[src_index] = 0
    queue = deque([src_index])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter(g: IslandGraph) -> int | None:
    """Maximum pairwise distance, or None when the graph is disconnected."""
    n = len(g.labels)
    if n == 0:
        return None
    best = 0
    for src in range(n):
        dist = bfs_distances(g, src)
        far = max(dist)
        if min(dist) < 0:
            return None
        best = max(best, far)
    return best


def component_diameters(g: IslandGraph) -> list[int]:
    """Diameter of each component, in component order."""
    out = []
    for comp in components(g):
        idxs = [g.index_of(lab) for lab in comp]
        best = 0
        for src in idxs:
            dist = bfs_distances(g, src)
            best = max(best, max(dist[i] for i in idxs))
        out.append(best)
    return out


def clique_number(g: IslandGraph, node_budget: int = 1_000_000) -> int:
    """Exact maximum clique size by branch and bound with a coloring bound.

    Raises BudgetExceeded (carrying the best clique size found) if the
    search tree grows past ``node_budget`` expansions.
    """
    n = len(g.labels)
    if n == 0:
        return 0
    adj = [set(a) for a in g.adj]
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    best = 1
    nodes = 0

    def color_bound(cands):
        color_of = {}
        classes = []
        for v in cands:
            for ci, cls in enumerate(classes):
                if not (adj[v] & cls):
                    cls.add(v)
                    color_of[v] = ci + 1
                    break
            else:
                classes.append({v})
                color_of[v] = len(classes)
        return color_of

    def expand(size, cands):
        nonlocal best, nodes
        best = max(best, size)
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(best)
        if not cands:
            return
        color_of = color_bound(cands)
        ordered = sorted(cands, key=lambda v: (color_of[v], v))
        for idx in range(len(ordered) - 1, -1, -1):
            v = ordered[idx]
            if size + color_of[v] <= best:
                return
            expand(size + 1, [u for u in ordered[:idx] if u in adj[v]])

    expand(0, order)
    return best


def graph_report(g: IslandGraph, clique_budget: int | None = None) -> dict:
    """JSON-ready summary: counts, components, diameter, degrees, clique."""
    comps = components(g)
    degs = g.degrees()
    v = len(g.labels)
    report = {
        "vertices": v,
        "edges": g.edge_count,
        "k": g.k,
        "l": g.l,
        "components": len(comps),
        "component_sizes": sorted((len(c) for c in comps), reverse=True),
    }
    if len(comps) == 1:
        report["diameter"] = diameter(g)
    else:
        report["diameter"] = "disconnected"
        report["component_diameters"] = component_diameters(g)
    if degs:
        report["degree"] = {
            "min": min(degs),
            "max": max(degs),
            "mean": round(sum(degs) / v, 6),
        }
    else:
        report["degree"] = {"min": 0, "max": 0, "mean": 0.0}
    if clique_budget is not None:
        try:
            report["clique_number"] = clique_number(g, clique_budget)
        except BudgetExceeded as exc:
            report["clique_number"] = {"budget_exceeded": True, "lower_bound": exc.best}
    return report


def to_dot(g: IslandGraph) -> str:
    """DOT text with vertex labels "{i1,i2,...}"."""
    def name(lab):
        return "{" + ",".join(str(i) for i in lab) + "}"

    lines = ["graph islands {"]
    for lab in g.labels:
        lines.append(f'  "{name(lab)}";')
    for i, lab in enumerate(g.labels):
        for j in g.adj[i]:
            if i < j:
                lines.append(f'  "{name(lab)}" -- "{name(g.labels[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(g: IslandGraph) -> str:
    """One edge per line as two comma-joined member lists."""
    def name(lab):
        return ",".join(str(i) for i in lab)

    lines = [f"# vertices: {len(g.labels)}", f"# edges: {g.edge_count}"]
    for lab in g.labels:
        lines.append(f"v {name(lab)}")
    for i, lab in enumerate(g.labels):
        for j in g.adj[i]:
            if i < j:
                lines.append(f"e {name(lab)} {name(g.labels[j])}")
    return "\n".join(lines) + "\n"
