from itertools import combinations

import pytest

from conftest import disk
from islandjohnson.errors import NotProjectable, ParameterError, Unreachable
from islandjohnson.graph import bfs_distances, components, diameter, is_connected
from islandjohnson.intervals import (IntervalIsland, LinearModel,
                                     build_linear_graph,
                                     connectivity_threshold, grid_neighbors,
                                     interval_overlap, lift_interval,
                                     linear_path, project_island,
                                     residue_decomposition)
from islandjohnson.islands import enumerate_islands, is_projectable
from islandjohnson.rng import SplitMix64


def A(end, k):
    return IntervalIsland(end, False, k)


def Ap(end, k):
    return IntervalIsland(end, True, k)


def test_apex_free_model_is_interval_line():
    # |S| = 16 line points, k = 6, l = 2
    m = LinearModel(17, 6, 2, with_apex=False)
    g = build_linear_graph(m)
    assert g.vertex_count == 11
    for i, u in enumerate(g.labels):
        for j in g.adj[i]:
            assert abs(u.end - g.labels[j].end) == 4
        assert len(g.adj[i]) <= 2


def test_apex_free_degree_bound_holds_generally():
    for k in (3, 5, 7):
        for l in range(1, k):
            g = build_linear_graph(LinearModel(31, k, l, with_apex=False))
            assert max((len(a) for a in g.adj), default=0) <= 2


def test_single_vertex_when_n_equals_k():
    m = LinearModel(6, 6, 2, with_apex=True)
    g = build_linear_graph(m)
    assert g.labels == (Ap(5, 6),)
    assert is_connected(g)


def test_residue_decomposition_figure_case():
    m = LinearModel(17, 6, 2, with_apex=False)
    paths = residue_decomposition(m)
    ends = [[v.end for v in p] for p in paths]
    assert ends == [[8, 12, 16], [9, 13], [6, 10, 14], [7, 11, 15]]
    g = build_linear_graph(m)
    comps = components(g)
    assert sorted(map(tuple, (sorted(p) for p in paths if p))) == sorted(
        map(tuple, comps))


def test_residue_decomposition_tiny_and_errors():
    paths = residue_decomposition(LinearModel(5, 4, 1, with_apex=False))
    assert sum(len(p) for p in paths) == 1
    assert len(paths) == 3
    with pytest.raises(ParameterError):
        residue_decomposition(LinearModel(10, 4, 0, with_apex=False))
    with pytest.raises(ParameterError):
        residue_decomposition(LinearModel(10, 4, 1, with_apex=True))


def test_residue_paths_are_induced_paths():
    for k in (4, 6):
        for l in range(1, k):
            m = LinearModel(25, k, l, with_apex=False)
            g = build_linear_graph(m)
            for path in residue_decomposition(m):
                for a, b in zip(path, path[1:]):
                    assert interval_overlap(a, b) == l
                for a, b in combinations(path, 2):
                    adjacent = interval_overlap(a, b) == l
                    consecutive = abs(a.end - b.end) == k - l
                    assert adjacent == consecutive


def test_grid_neighbors_examples():
    m = LinearModel(17, 6, 2, with_apex=True)
    assert grid_neighbors(m, A(10, 6)) == [Ap(6, 6), Ap(13, 6)]
    assert grid_neighbors(m, Ap(6, 6)) == [A(10, 6)]   # A_3 does not exist
    g = build_linear_graph(m)
    for v in g.labels:
        for w in grid_neighbors(m, v):
            assert w in g.neighbors(v)


def test_grid_neighbors_requires_l_at_least_2():
    with pytest.raises(ParameterError):
        grid_neighbors(LinearModel(17, 6, 1, with_apex=True), A(10, 6))


def test_connectivity_threshold_examples():
    assert connectivity_threshold(13, 6, 2)
    assert not connectivity_threshold(12, 6, 2)
    assert connectivity_threshold(6, 6, 2)  # n = k
    with pytest.raises(ParameterError):
        connectivity_threshold(10, 4, 1)


def test_connectivity_threshold_matches_bfs_exhaustively():
    for k in range(4, 7):
        for l in range(2, k):
            for n in range(k, 31):
                g = build_linear_graph(LinearModel(n, k, l, with_apex=True))
                assert is_connected(g) == connectivity_threshold(n, k, l), (n, k, l)


def test_apex_subgraph_is_smaller_interval_graph():
    for k in (4, 6):
        for l in range(1, k):
            big = build_linear_graph(LinearModel(21, k, l, with_apex=True))
            small = build_linear_graph(LinearModel(21, k - 1, l - 1, with_apex=False)) \
                if k - 1 >= 1 and l - 1 < k - 1 else None
            apex_labels = [v for v in big.labels if v.has_apex]
            apex_edges = set()
            for v in apex_labels:
                for w in big.neighbors(v):
                    if w.has_apex and v < w:
                        apex_edges.add((v.end, w.end))
            small_edges = set()
            if small is not None:
                for i, v in enumerate(small.labels):
                    for j in small.adj[i]:
                        if i < j:
                            small_edges.add((v.end, small.labels[j].end))
            assert apex_edges == small_edges


def test_l0_and_l1_small_diameters():
    # apex-free, l = 0: connected with diameter <= 3 once |S| >= 3k - 1
    for k in (2, 3, 4):
        for n_line in range(3 * k - 1, 3 * k + 6):
            g = build_linear_graph(LinearModel(n_line + 1, k, 0, with_apex=False))
            assert is_connected(g)
            assert diameter(g) <= 3
    # apex model, l in {0, 1}: connected with diameter <= 4 once n >= 3k
    for k in (2, 3, 4):
        for l in (0, 1):
            if l >= k:
                continue
            for n in range(3 * k, 3 * k + 7):
                g = build_linear_graph(LinearModel(n, k, l, with_apex=True))
                assert is_connected(g)
                assert diameter(g) <= 4


def test_linear_path_trivial_and_residue_walk():
    m = LinearModel(17, 6, 2, with_apex=True)
    verts, tags = linear_path(m, A(6, 6), A(6, 6))
    assert verts == [A(6, 6)] and tags == []
    verts, tags = linear_path(m, A(6, 6), A(14, 6))
    assert verts == [A(6, 6), A(10, 6), A(14, 6)]
    assert tags == ["residue", "residue"]


def test_linear_path_unreachable_cases():
    free = LinearModel(20, 5, 2, with_apex=False)
    with pytest.raises(Unreachable):
        linear_path(free, A(5, 5), A(6, 5))
    tight = LinearModel(12, 6, 2, with_apex=True)  # below 3k-2l-1 = 13
    with pytest.raises(Unreachable):
        linear_path(tight, A(6, 6), A(7, 6))


def test_linear_path_matches_bfs_lengths():
    sample = SplitMix64(17)
    for k in (4, 5, 6, 8):
        for l in range(2, k):
            d = k - l
            for n in (3 * k - 2 * l - 1, 3 * k, 4 * k + 3):
                if n < k:
                    continue
                m = LinearModel(n, k, l, with_apex=True)
                g = build_linear_graph(m)
                verts = list(g.labels)
                bound = 2 * d + -(-(n - k) // d) + 4
                for _ in range(6):
                    s = verts[sample.below(len(verts))]
                    t = verts[sample.below(len(verts))]
                    path, tags = linear_path(m, s, t)
                    for u, v in zip(path, path[1:]):
                        assert interval_overlap(u, v) == l
                    dist = bfs_distances(g, g.index_of(s))[g.index_of(t)]
                    assert dist <= len(path) - 1 <= bound
                    assert "bfs" not in tags


def test_linear_path_l_below_2_uses_search():
    m = LinearModel(13, 4, 1, with_apex=True)
    g = build_linear_graph(m)
    verts = list(g.labels)
    for s, t in ((verts[0], verts[-1]), (verts[2], verts[5])):
        path, tags = linear_path(m, s, t)
        assert len(path) - 1 <= 4
        for u, v in zip(path, path[1:]):
            assert interval_overlap(u, v) == 1


def test_project_and_lift(quad4):
    assert project_island(quad4, (0, 1, 3)) == A(3, 3)
    assert project_island(quad4, (1, 2, 3)) == Ap(3, 3)
    assert lift_interval(quad4, A(3, 3)) == (0, 1, 3)
    assert lift_interval(quad4, Ap(3, 3)) == (1, 2, 3)
    with pytest.raises(NotProjectable):
        ps = disk(6, 99)
        radial = ps.radial
        project_island(ps, tuple(sorted((radial[1], radial[3], radial[5]))))


def test_project_lift_roundtrip_on_all_projectables():
    rng = SplitMix64(29)
    for n in (7, 9):
        ps = disk(n, rng.next64())
        for k in (2, 3, 4):
            for isl in enumerate_islands(ps, k):
                if not is_projectable(ps, isl):
                    continue
                v = project_island(ps, isl)
                assert lift_interval(ps, v) == isl


def test_projectable_subgraph_isomorphic_to_model():
    rng = SplitMix64(83)
    for n in (7, 9, 11):
        ps = disk(n, rng.next64())
        for k, l in ((3, 1), (3, 2), (4, 2), (3, 0)):
            from islandjohnson.graph import build_island_graph
            g = build_island_graph(ps, k, l)
            proj = [lab for lab in g.labels if is_projectable(ps, lab)]
            model = LinearModel(n, k, l, with_apex=True)
            mg = build_linear_graph(model)
            assert sorted(project_island(ps, lab) for lab in proj) == list(mg.labels)
            proj_set = set(proj)
            mapped = set()
            for lab in proj:
                for nb in g.neighbors(lab):
                    if nb in proj_set:
                        e = tuple(sorted((project_island(ps, lab), project_island(ps, nb))))
                        mapped.add(e)
            model_edges = set()
            for i, lab in enumerate(mg.labels):
                for j in mg.adj[i]:
                    if i < j:
                        model_edges.add(tuple(sorted((lab, mg.labels[j]))))
            assert mapped == model_edges
