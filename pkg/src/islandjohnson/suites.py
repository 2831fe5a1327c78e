"""Machine-checkable verification suites for the main claims.

Each suite returns a JSON-ready report with one cell per parameter
combination and an overall pass flag; failures carry the counterexample.
Suites are deterministic for a fixed seed.
"""

from .errors import CheckFailure
from .generate import random_disk_points
from .graph import build_island_graph, is_connected
from .horton import (depth_by_definition, depth_gap_bound, depth_gap_scan,
                     generate_horton, lower_bound_experiment, point_depth,
                     triangle_depth_count, verify_horton)
from .intervals import (LinearModel, build_linear_graph,
                        connectivity_threshold, project_island)
from .islands import is_projectable
from .paths import descent_threshold, descent_path, validate_path
from .rng import SplitMix64


def descent_length_bound(n: int, k: int, l: int) -> int:
    d = k - l
    return 2 * (-(-n // d)) + (-(-(n - k) // d)) + 2 * d + 6


_MAIN_CONFIGS = ((2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 3), (5, 4),
                 (4, 1), (2, 0), (3, 0))


def suite_theorem_main(samples: int = 20, seed: int = 20260801,
                       n_max: int = 24, pairs_per_set: int = 3) -> dict:
    """Random sets above the descent threshold: the island graph must be
    connected and the descent route valid and within its length bound."""
    rng = SplitMix64(seed)
    cells = []
    for idx in range(samples):
        k, l = _MAIN_CONFIGS[idx % len(_MAIN_CONFIGS)]
        thr = descent_threshold(k, l)
        n_lo = thr + 1
        if n_lo > n_max:
            continue
        n = n_lo + (idx % (n_max - n_lo + 1))
        set_seed = rng.next64()
        ps = random_disk_points(n, set_seed)
        g = build_island_graph(ps, k, l)
        connected = is_connected(g)
        bound = descent_length_bound(n, k, l)
        pair_rng = SplitMix64(set_seed)
        paths_ok = True
        max_len = 0
        for _ in range(pairs_per_set):
            src = g.labels[pair_rng.below(len(g.labels))]
            dst = g.labels[pair_rng.below(len(g.labels))]
            trace = descent_path(ps, src, dst, l)
            ok = bool(validate_path(ps, trace, k, l)) and trace.length <= bound
            paths_ok = paths_ok and ok
            max_len = max(max_len, trace.length)
        cells.append({
            "n": n, "k": k, "l": l, "seed": set_seed,
            "vertices": len(g.labels),
            "connected": connected,
            "paths_valid": paths_ok,
            "max_path_length": max_len,
            "length_bound": bound,
            "pass": connected and paths_ok,
        })
    return _finish("theorem-main", cells, seed=seed)


def suite_interval_iff(k_min: int = 4, k_max: int = 8, n_max: int = 40) -> dict:
    """Exhaustive agreement of model connectivity with the closed form."""
    cells = []
    for k in range(k_min, k_max + 1):
        for l in range(2, k):
            for n in range(k, n_max + 1):
                g = build_linear_graph(LinearModel(n, k, l, with_apex=True))
                observed = is_connected(g)
                predicted = connectivity_threshold(n, k, l)
                cells.append({"n": n, "k": k, "l": l,
                              "observed": observed, "predicted": predicted,
                              "pass": observed == predicted})
    return _finish("interval-iff", cells)


def suite_projectable_iso(seed: int = 20260801, sets: int = 6,
                          n_min: int = 6, n_max: int = 12) -> dict:
    """The projectable-island subgraph must match the interval model
    edge-for-edge under the projection bijection."""
    rng = SplitMix64(seed)
    cells = []
    for idx in range(sets):
        n = n_min + (idx % (n_max - n_min + 1))
        set_seed = rng.next64()
        ps = random_disk_points(n, set_seed)
        for k in (3, 4):
            if k > n:
                continue
            for l in range(0, k):
                g = build_island_graph(ps, k, l)
                proj = [lab for lab in g.labels if is_projectable(ps, lab)]
                model = LinearModel(n, k, l, with_apex=True)
                m_graph = build_linear_graph(model)
                ok = sorted(project_island(ps, lab) for lab in proj) == list(m_graph.labels)
                if ok:
                    proj_set = set(proj)
                    edges_p = set()
                    for lab in proj:
                        for nb in g.neighbors(lab):
                            if nb in proj_set:
                                edges_p.add(tuple(sorted((project_island(ps, lab),
                                                          project_island(ps, nb)))))
                    edges_m = set()
                    for i, lab in enumerate(m_graph.labels):
                        for j in m_graph.adj[i]:
                            if i < j:
                                edges_m.add(tuple(sorted((lab, m_graph.labels[j]))))
                    ok = edges_p == edges_m
                cells.append({"n": n, "k": k, "l": l, "seed": set_seed, "pass": ok})
    return _finish("projectable-iso", cells, seed=seed)


def suite_horton_depth(n_max: int = 64) -> dict:
    """Horton sets verify for every size; depths match the 2-adic rule and
    the literal refinement definition; the n=16 profile is the known one."""
    cells = []
    for n in range(1, n_max + 1):
        h = generate_horton(n)
        ok = verify_horton(h)
        depth_ok = all(point_depth(i) == depth_by_definition(h, i)
                       for i in range(1, n + 1))
        cells.append({"n": n, "pass": ok and depth_ok})
    h16 = generate_horton(16)
    expected = [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5]
    got = [point_depth(i) for i in range(1, 17)]
    cells.append({"n": 16, "profile": got, "expected": expected,
                  "pass": got == expected and verify_horton(h16)})
    return _finish("horton-depth", cells)


def suite_depth_gap(n: int = 32, k: int = 4, l: int = 2) -> dict:
    """Every island-graph edge of a Horton set stays within the depth-gap bound."""
    h = generate_horton(n)
    bound = depth_gap_bound(k, l)
    try:
        worst = depth_gap_scan(h, k, l)
        cell = {"n": n, "k": k, "l": l, "max_gap": worst, "bound": bound,
                "pass": True}
    except CheckFailure as exc:
        cell = {"n": n, "k": k, "l": l, "bound": bound, "pass": False,
                "counterexample": str(exc)}
    return _finish("depth-gap", [cell])


def suite_triangle_count(n: int = 32) -> dict:
    """Exhaustive check of the deep-point count inside triangles."""
    h = generate_horton(n)
    checked = 0
    failures = []
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            dxy = min(point_depth(x), point_depth(y))
            for z in range(1, n + 1):
                if z in (x, y) or point_depth(z) >= dxy:
                    continue
                checked += 1
                try:
                    triangle_depth_count(h, x, y, z)
                except CheckFailure as exc:
                    failures.append({"x": x, "y": y, "z": z, "error": str(exc)})
    cell = {"n": n, "triples_checked": checked,
            "failures": failures, "pass": not failures}
    return _finish("triangle-count", [cell])


def suite_lower_bound(n: int = 64, k: int = 4, l: int = 2) -> dict:
    """Certified distance floor from the depth machinery versus BFS."""
    h = generate_horton(n)
    report = lower_bound_experiment(h, k, l)
    ok = (report["bfs_distance"] >= report["certified_floor"]
          and report["bfs_distance"] >= 0)
    report["pass"] = ok
    return _finish("lower-bound", [report])


def _finish(name: str, cells: list, seed: int | None = None) -> dict:
    failures = sum(1 for c in cells if not c.get("pass", False))
    report = {
        "suite": name,
        "cells": cells,
        "cell_count": len(cells),
        "failures": failures,
        "pass": failures == 0,
    }
    if seed is not None:
        report["seed"] = seed
    return report


SUITES = {
    "theorem-main": suite_theorem_main,
    "interval-iff": suite_interval_iff,
    "projectable-iso": suite_projectable_iso,
    "horton-depth": suite_horton_depth,
    "depth-gap": suite_depth_gap,
    "triangle-count": suite_triangle_count,
    "lower-bound": suite_lower_bound,
}
