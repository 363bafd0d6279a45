"""Level-curve construction for the catalog weights."""
import math

import numpy as np
import pytest

from lglab.curves import LevelCurve, boundary_points, level_curve
from lglab.paths import Polyline, weighted_length
from lglab.weights import make_weight

SQ3 = math.sqrt(3.0)


def test_boundary_points():
    (lx, lh), (rx, rh) = boundary_points(1.0)
    assert (lx, lh, rx, rh) == (-1.0, 0.0, 1.0, 0.0)
    (lx, lh), (rx, rh) = boundary_points(0.5)
    assert lh == rh == -0.5
    assert rx == pytest.approx(SQ3 / 2)
    with pytest.raises(ValueError):
        boundary_points(0.0)
    with pytest.raises(ValueError):
        boundary_points(2.0)


def test_level_curve_must_be_a_graph():
    with pytest.raises(ValueError):
        LevelCurve(1.0, "minimal",
                   Polyline(((0.0, 0.0), (0.5, 0.1), (0.2, 0.2))))


def test_constant_curves_are_chords():
    w = make_weight("constant")
    for t in (0.3, 1.0, 1.7):
        c = level_curve(w, t)
        arr = c.path.as_array()
        assert arr.shape == (2, 2)
        assert np.allclose(arr[:, 1], t - 1.0)


def test_heavy_diamond_kink_and_miss():
    w = make_weight("heavy_diamond", 2.0)
    c = level_curve(w, 1.0, "minimal")
    arr = c.path.as_array()
    k = arr[np.argmax(arr[:, 1])]
    assert k[0] == pytest.approx(0.0, abs=1e-9)
    assert k[1] == pytest.approx(0.5, abs=1e-9)
    assert weighted_length(c.path, w) == pytest.approx(math.sqrt(5.0),
                                                       abs=1e-9)
    # a level whose chord misses the slow diamond stays straight
    low = level_curve(w, 0.2, "minimal")
    assert np.allclose(low.path.as_array()[:, 1], -0.8)


def test_heavy_disk_arc_route():
    w = make_weight("heavy_disk", 2.0)
    c = level_curve(w, 1.0, "minimal")
    assert weighted_length(c.path, w) == pytest.approx(SQ3 + math.pi / 6,
                                                       abs=1e-6)
    arr = c.path.as_array()
    mid = arr[np.abs(arr[:, 0]) < 0.2]
    assert np.allclose(np.hypot(mid[:, 0], mid[:, 1]), 0.5, atol=1e-5)
    assert np.all(mid[:, 1] > 0)


def test_maximal_branch_mirrors_minimal_at_center_level():
    # the weights are y-symmetric, so at t = 1 the two branches must be
    # mirror images
    for name, alpha in (("heavy_diamond", 2.0), ("heavy_disk", 2.0)):
        w = make_weight(name, alpha)
        lo = level_curve(w, 1.0, "maximal").path.as_array()
        hi = level_curve(w, 1.0, "minimal").path.mirrored_y().as_array()
        assert np.allclose(np.sort(lo[:, 1]), np.sort(hi[:, 1]), atol=1e-9)


def test_three_diamonds_route_switching():
    w = make_weight("three_heavy_diamonds", 2.0)
    below = level_curve(w, 0.9, "minimal").path.as_array()
    assert below[:, 1].max() < 0.0  # bottom route passes under everything
    # inside the tie band the two branches split around the small diamond:
    # over its top tip (0, 0.375) or under its bottom tip (0, 0.125), at
    # equal cost because the large tips sit level with its center
    mid_min = level_curve(w, 1.05, "minimal")
    mid_max = level_curve(w, 1.05, "maximal")
    assert float(mid_min.y_at(0.0)) == pytest.approx(0.375, abs=1e-9)
    assert float(mid_max.y_at(0.0)) == pytest.approx(0.125, abs=1e-9)
    cmin = weighted_length(mid_min.path, w)
    cmax = weighted_length(mid_max.path, w)
    assert cmin == pytest.approx(cmax, abs=1e-9)
    high = level_curve(w, 1.2, "minimal").path.as_array()
    apex = high[np.argmax(high[:, 1])]
    assert apex[0] == pytest.approx(0.0, abs=1e-9)  # two-segment route


def test_corelite_center_level_apex():
    w = make_weight("lite_dmd_heavy_core")
    c = level_curve(w, 1.0, "minimal")
    arr = c.path.as_array()
    top = arr[np.argmax(arr[:, 1])]
    assert top[0] == pytest.approx(0.0, abs=1e-6)
    assert top[1] == pytest.approx(0.1494140625, abs=2e-3)


def test_curves_are_deterministic():
    w = make_weight("three_heavy_diamonds", 2.0)
    a = level_curve(w, 1.05, "minimal").path.as_array()
    b = level_curve(w, 1.05, "minimal").path.as_array()
    assert np.array_equal(a, b)


def test_unknown_branch_rejected():
    with pytest.raises(ValueError):
        level_curve(make_weight("constant"), 1.0, "median")
