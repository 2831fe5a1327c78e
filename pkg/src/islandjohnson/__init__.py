"""Island Johnson graphs of planar point sets.

Vertices are the k-point islands of a planar set (subsets cut out
exactly by a convex region); two islands are adjacent when they share
exactly l points.  The package builds these graphs with exact integer
geometry, provides the constructive connectivity and diameter routes,
generates Horton sets for the lower-bound side, and ships verification
suites for all of it.
"""

__version__ = "0.1.0"

from ._kernel import BACKEND, HAVE_FAST
from .errors import (BudgetExceeded, CheckFailure, ConstructionError,
                     GeneralPositionViolation, GenerationFailure,
                     IslandJohnsonError, NotAnIsland, NotProjectable,
                     ParameterError, PointFileError, PreconditionViolation,
                     ResourceCapExceeded, Unreachable, VerificationFailure,
                     WeightUndefined)
from .geometry import (CCW, COLLINEAR, CW, Halfplane, Point, PointSet,
                       canonical_radial_order, convex_hull, expand_halfplane,
                       ham_sandwich_bisect, hull_contains, orientation)
from .graph import (IslandGraph, build_generalized_johnson, build_island_graph,
                    clique_number, components, diameter, graph_report,
                    shortest_path, to_dot, to_edgelist)
from .horton import (HortonSet, depth, depth_by_definition, depth_gap_scan,
                     generate_horton, is_high_above, lower_bound_experiment,
                     point_depth, triangle_depth_count, verify_horton)
from .intervals import (IntervalIsland, LinearModel, build_linear_graph,
                        connectivity_threshold, grid_neighbors, lift_interval,
                        linear_path, project_island, residue_decomposition)
from .islands import (count_empty_triangles, enumerate_islands, is_island,
                      is_projectable, island_weight)
from .paths import (PathTrace, bfs_island_path, descent_threshold, halving_step,
                    l_interval_cover, log_path, shrink_step,
                    shrink_to_projectable, step_flags, descent_path,
                    validate_path)

__all__ = [name for name in dir() if not name.startswith("_")]
