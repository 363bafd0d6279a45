"""Grid shortest-path oracle: bounds and refinement behaviour."""
import math

import pytest

from lglab.oracle import grid_shortest_path, oracle_cost, refine_until
from lglab.paths import segment, weighted_length
from lglab.weights import make_weight

# worst-case metric stretch of the move stencils on a uniform grid
STENCIL_STRETCH = {8: 1.0824, 16: 1.0196}


def test_resolution_floor():
    with pytest.raises(ValueError):
        grid_shortest_path(make_weight("constant"), 16, 8, (-1, 0), (1, 0))


def test_unknown_stencil_rejected():
    with pytest.raises(ValueError):
        grid_shortest_path(make_weight("constant"), 64, 5, (-1, 0), (1, 0))


@pytest.mark.parametrize("stencil", [8, 16])
def test_constant_chord_within_stencil_bound(stencil):
    w = make_weight("constant")
    # endpoints on grid nodes so snapping cannot shorten the route
    a, b = (-0.875, -0.25), (0.75, 0.5)
    exact = weighted_length(segment(a, b), w)
    _, cost = grid_shortest_path(w, 128, stencil, a, b)
    assert cost >= exact - 1e-9
    assert cost <= STENCIL_STRETCH[stencil] * exact * 1.01


def test_oracle_never_beats_the_true_geodesic():
    w = make_weight("heavy_diamond", 2.0)
    exact = math.sqrt(5.0)  # tip route between (-1, 0) and (1, 0)
    cost = oracle_cost(w, 128, 16, (-1.0, 0.0), (1.0, 0.0))
    assert cost >= exact - 1e-9
    assert cost <= exact * 1.03


def test_refinement_tightens_the_estimate():
    w = make_weight("heavy_diamond", 2.0)
    coarse = oracle_cost(w, 64, 16, (-1.0, 0.0), (1.0, 0.0))
    r = refine_until(w, (-1.0, 0.0), (1.0, 0.0), rel_tol=5e-3,
                     start_res=64, max_res=256)
    assert r.converged
    assert r.resolution > 64
    assert r.cost <= coarse + 1e-12
    assert r.cost == pytest.approx(math.sqrt(5.0), rel=0.02)


def test_path_endpoints_snap_to_requested_points():
    w = make_weight("constant")
    path, _ = grid_shortest_path(w, 64, 8, (-0.5, -0.5), (0.51, 0.52))
    arr = path.as_array()
    assert abs(arr[0, 0] + 0.5) <= 1.0 / 64 + 1e-12
    assert abs(arr[-1, 1] - 0.52) <= 1.0 / 64 + 1e-12
