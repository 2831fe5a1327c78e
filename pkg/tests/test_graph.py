from itertools import combinations
from math import comb

import pytest

from conftest import disk
from islandjohnson.errors import (BudgetExceeded, ParameterError,
                                  ResourceCapExceeded, Unreachable)
from islandjohnson.graph import (IslandGraph, build_generalized_johnson,
                                 build_island_graph, clique_number, components,
                                 diameter, edges_quadratic, graph_report,
                                 shortest_path, to_dot, to_edgelist)
from islandjohnson.intervals import LinearModel, build_linear_graph
from islandjohnson.rng import SplitMix64
from islandjohnson import _purecore


def test_island_graph_example(quad4):
    g = build_island_graph(quad4, 3, 2)
    assert g.vertex_count == 3 and g.edge_count == 3
    assert diameter(g) == 1
    g0 = build_island_graph(quad4, 3, 0)
    assert g0.edge_count == 0
    assert len(components(g0)) == 3


def test_island_graph_parameter_checks(quad4):
    with pytest.raises(ParameterError):
        build_island_graph(quad4, 3, 3)
    with pytest.raises(ParameterError):
        build_island_graph(quad4, 5, 1)


def test_convex_position_matches_generalized_johnson(pentagon):
    for k in (2, 3):
        for l in range(k):
            ij = build_island_graph(pentagon, k, l)
            gj = build_generalized_johnson(5, k, l)
            assert ij.labels == gj.labels
            assert ij.adj == gj.adj


def test_gj_counts_and_degrees():
    g = build_generalized_johnson(5, 3, 2)
    assert g.vertex_count == comb(5, 3)
    assert set(g.degrees()) == {6}
    matching = build_generalized_johnson(4, 2, 0)
    assert matching.vertex_count == 6 and matching.edge_count == 3
    assert set(matching.degrees()) == {1}


def test_gj_degree_formula_small():
    for n in range(2, 8):
        for k in range(1, n + 1):
            for l in range(k):
                if comb(n, k) > 200:
                    continue
                g = build_generalized_johnson(n, k, l)
                expected = comb(k, l) * comb(n - k, k - l)
                assert set(g.degrees()) == {expected} or (g.vertex_count and expected == 0
                                                          and set(g.degrees()) == {0})


def test_island_graph_is_induced_subgraph_of_gj():
    rng = SplitMix64(8)
    for n in (6, 8, 10):
        ps = disk(n, rng.next64())
        for k, l in ((3, 1), (3, 2), (4, 2)):
            ij = build_island_graph(ps, k, l)
            gj = build_generalized_johnson(n, k, l)
            labels = set(ij.labels)
            expected_edges = set()
            for i, lab in enumerate(gj.labels):
                if lab not in labels:
                    continue
                for j in gj.adj[i]:
                    other = gj.labels[j]
                    if other in labels and lab < other:
                        expected_edges.add((lab, other))
            got_edges = set()
            for i, lab in enumerate(ij.labels):
                for j in ij.adj[i]:
                    if lab < ij.labels[j]:
                        got_edges.add((lab, ij.labels[j]))
            assert got_edges == expected_edges


def test_components_of_interval_model():
    g = build_linear_graph(LinearModel(17, 6, 2, with_apex=False))
    assert len(components(g)) == 4


def test_shortest_path_cases():
    g = build_generalized_johnson(5, 3, 2)
    a = (0, 1, 2)
    assert shortest_path(g, a, a) == [a]
    path = shortest_path(g, (0, 1, 2), (2, 3, 4))
    assert len(path) == 3  # length 2
    nb = g.neighbors(a)[0]
    assert shortest_path(g, a, nb) == [a, nb]
    g0 = build_generalized_johnson(5, 3, 0)  # edgeless: 3-subsets always meet
    with pytest.raises(Unreachable):
        shortest_path(g0, (0, 1, 2), (1, 2, 3))


def test_diameter_cases():
    triangle = build_generalized_johnson(3, 2, 1)
    assert diameter(triangle) == 1
    # path on 4 vertices via a single residue class of the line model
    path4 = build_linear_graph(LinearModel(6, 2, 1, with_apex=False))
    assert path4.vertex_count == 4
    assert diameter(path4) == 3
    petersen = build_generalized_johnson(5, 2, 0)
    assert petersen.edge_count == 15
    assert diameter(petersen) == 2


def test_clique_number_cases(quad4):
    triangle = build_generalized_johnson(3, 2, 1)
    assert clique_number(triangle) == 3
    edgeless = build_generalized_johnson(5, 3, 0)
    assert clique_number(edgeless) == 1
    g = build_island_graph(quad4, 3, 2)
    assert clique_number(g) == 3
    assert clique_number(build_generalized_johnson(8, 4, 3)) == 5


def test_clique_number_matches_brute_force():
    def brute(g):
        adj = [set(a) for a in g.adj]
        best = 1 if g.labels else 0
        for size in range(2, len(g.labels) + 1):
            if any(all(b in adj[x] for x, b in combinations(sub, 2))
                   for sub in combinations(range(len(g.labels)), size)):
                best = size
            else:
                return best
        return best

    rng = SplitMix64(9)
    for n, k, l in ((6, 3, 2), (6, 3, 1), (7, 3, 0), (5, 2, 1), (6, 2, 0)):
        g = build_generalized_johnson(n, k, l)
        assert clique_number(g) == brute(g), (n, k, l)
    g = build_island_graph(disk(8, rng.next64()), 3, 2)
    assert clique_number(g) == brute(g)


def test_clique_budget_carries_bound():
    g = build_generalized_johnson(8, 4, 3)
    with pytest.raises(BudgetExceeded) as exc:
        clique_number(g, node_budget=3)
    assert exc.value.best >= 1


def test_edge_builders_agree():
    rng = SplitMix64(3)
    ps = disk(9, rng.next64())
    for k, l in ((3, 0), (3, 1), (3, 2), (4, 2)):
        g = build_island_graph(ps, k, l)
        quad = edges_quadratic(g.labels, l)
        built = sorted((min(i, j), max(i, j))
                       for i, lab in enumerate(g.labels) for j in g.adj[i] if i < j)
        assert built == quad
        assert _purecore.overlap_edges(list(g.labels), l) == quad


def test_adjacency_symmetric_and_exact(quad4):
    g = build_island_graph(quad4, 3, 2)
    for i in range(len(g.labels)):
        for j in g.adj[i]:
            assert i in g.adj[j]
            assert i != j
            assert len(set(g.labels[i]) & set(g.labels[j])) == g.l


def test_resource_caps():
    with pytest.raises(ResourceCapExceeded):
        build_generalized_johnson(20, 10, 2, cap_vertices=1000)
    with pytest.raises(ResourceCapExceeded):
        build_generalized_johnson(8, 4, 0, cap_pairs=10)


def test_graph_report_fields(quad4):
    g = build_island_graph(quad4, 3, 2)
    rep = graph_report(g, clique_budget=10_000)
    assert rep["vertices"] == 3 and rep["edges"] == 3
    assert rep["components"] == 1 and rep["diameter"] == 1
    assert rep["degree"] == {"min": 2, "max": 2, "mean": 2.0}
    assert rep["clique_number"] == 3
    g0 = build_island_graph(quad4, 3, 0)
    rep0 = graph_report(g0)
    assert rep0["diameter"] == "disconnected"
    assert rep0["component_diameters"] == [0, 0, 0]


def test_exports(quad4):
    g = build_island_graph(quad4, 3, 2)
    dot = to_dot(g)
    assert '"{0,1,3}"' in dot and dot.count("--") == 3
    edges = to_edgelist(g)
    assert "e 0,1,3 0,2,3" in edges
    assert edges.startswith("# vertices: 3")
