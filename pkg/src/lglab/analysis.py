"""Experiment drivers over the weight catalog.

Each driver recomputes a published quantity or verifies a structural
inequality numerically and returns plain numbers or an ExperimentReport
whose pass flags can be recomputed from the stored values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .curves import boundary_points, level_curve
from .oracle import grid_shortest_path
from .paths import Polyline, weighted_length
from .shooting import shoot_two_point
from .snell import snell_chain, snell_refract
from .stacker import SolutionStack, bv_energy, stack
from .weights import (ConstantWeight, LayeredWeight, MultiDiamondWeight,
                      RadialWeight, WeightField, constant, heavy_diamond,
                      heavy_disk, layered_horizontal, light_diamond,
                      light_diamond_tight, lite_dmd_heavy_core,
                      three_heavy_diamonds)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Quantity:
    """One measured number with its target and an absolute or relative bar."""

    label: str
    value: float
    expected: float
    tolerance: float
    kind: str = "abs"

    def __post_init__(self):
        if self.kind not in ("abs", "rel"):
            raise ValueError("kind must be 'abs' or 'rel'")

    @property
    def passed(self) -> bool:
        err = abs(self.value - self.expected)
        if self.kind == "rel":
            return err <= self.tolerance * max(1.0, abs(self.expected))
        return err <= self.tolerance


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    quantities: tuple[Quantity, ...]
    artifacts: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(q.passed for q in self.quantities)

    def lines(self):
        for q in self.quantities:
            flag = "PASS" if q.passed else "FAIL"
            yield (f"[{flag}] {self.name}: {q.label} = {q.value:.9g} "
                   f"(expected {q.expected:.9g} +/- {q.tolerance:.3g} {q.kind})")


def _point_polyline_distance(p, pts: np.ndarray) -> float:
    a, b = pts[:-1], pts[1:]
    d = b - a
    l2 = (d * d).sum(axis=1)
    t = ((p - a) * d).sum(axis=1) / np.where(l2 > 0.0, l2, 1.0)
    proj = a + np.clip(t, 0.0, 1.0)[:, None] * d
    return float(np.sqrt(((proj - p) ** 2).sum(axis=1)).min())


def curvature_clearance(w: WeightField, z, r: float) -> float:
    """Distance from boundary point z to the geodesic chord of B(z, r).

    The two points of the circle of radius r about z that lie on the unit
    circle are joined by their weighted geodesic; the returned clearance is
    the sagitta-like gap between z and that path.  Positive clearance at a
    sampled scale is the discrete curvature certificate; for a constant
    weight it equals r^2/2 exactly.
    """
    zx, zy = float(z[0]), float(z[1])
    if abs(math.hypot(zx, zy) - 1.0) > 1e-9:
        raise ValueError("z must lie on the unit circle")
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    dphi = 2.0 * math.asin(0.5 * r)
    phi = math.atan2(zy, zx)
    p1 = (math.cos(phi - dphi), math.sin(phi - dphi))
    p2 = (math.cos(phi + dphi), math.sin(phi + dphi))
    if isinstance(w, ConstantWeight):
        path = Polyline((p1, p2))
    elif abs(zx) < 1e-12 and isinstance(w, (RadialWeight, MultiDiamondWeight)):
        # at a pole the geodesic is a level curve; pick the branch nearer z
        t = 1.0 + zy * math.cos(dphi)
        branch = "minimal" if zy > 0 else "maximal"
        path = level_curve(w, t, branch).path
    elif isinstance(w, (RadialWeight, MultiDiamondWeight, LayeredWeight)):
        path, _ = shoot_two_point(w, p1, p2, tol=1e-7, n_shells=512,
                                  scan_angles=512)
    else:
        path, _ = grid_shortest_path(w, 256, 16, p1, p2)
    return _point_polyline_distance(np.array([zx, zy]), path.as_array())


def _cell_centers(res: int):
    h = 2.0 / res
    c = -1.0 + h * (np.arange(res) + 0.5)
    return np.meshgrid(c, c, indexing="xy")


def _edge_costs(w: WeightField, res: int):
    """Per-edge 4-neighbour costs h*(W_p + W_q)/2, array rim replicated."""
    h = 2.0 / res
    X, Y = _cell_centers(res)
    W = np.asarray(w.values(X, Y), dtype=float)
    Wx = np.pad(W, ((0, 0), (1, 1)), mode="edge")
    ch = h * 0.5 * (Wx[:, :-1] + Wx[:, 1:])
    Wy = np.pad(W, ((1, 1), (0, 0)), mode="edge")
    cv = h * 0.5 * (Wy[:-1, :] + Wy[1:, :])
    return ch, cv


def _mask_perimeter(mask: np.ndarray, ch: np.ndarray, cv: np.ndarray) -> float:
    m = np.pad(mask, 1, mode="constant")
    bh = m[1:-1, 1:] != m[1:-1, :-1]
    bv = m[1:, 1:-1] != m[:-1, 1:-1]
    return float((ch * bh).sum() + (cv * bv).sum())


def _ball_union(X, Y, rng) -> np.ndarray:
    mask = np.zeros(X.shape, dtype=bool)
    for _ in range(int(rng.integers(1, 5))):
        cx, cy = rng.uniform(-0.7, 0.7, 2)
        rad = float(rng.uniform(0.1, 0.5))
        if rng.random() < 0.5:
            mask |= np.abs(X - cx) + np.abs(Y - cy) < rad
        else:
            mask |= (X - cx) ** 2 + (Y - cy) ** 2 < rad * rad
    return mask


def submodularity_check(res: int = 256, trials: int = 1000,
                        seed: int = 0) -> int:
    """Count of random set pairs satisfying the perimeter inequality.

    Each trial rasterizes two unions of random l1/l2 balls and checks
    P(union) + P(intersection) <= P(A) + P(B) + 1e-9 for the discrete
    weighted perimeter, cycling through the weight catalog.
    """
    if res < 64:
        raise ValueError("res must be at least 64")
    if trials < 1:
        raise ValueError("trials must be positive")
    weights = (constant(1.0), heavy_diamond(2.0), heavy_disk(2.0),
               light_diamond(0.5), light_diamond_tight(0.5),
               lite_dmd_heavy_core(), three_heavy_diamonds(2.0))
    costs = [_edge_costs(w, res) for w in weights]
    X, Y = _cell_centers(res)
    rng = np.random.default_rng(seed)
    passed = 0
    for k in range(trials):
        ch, cv = costs[k % len(costs)]
        a = _ball_union(X, Y, rng)
        b = _ball_union(X, Y, rng)
        lhs = (_mask_perimeter(a | b, ch, cv)
               + _mask_perimeter(a & b, ch, cv))
        rhs = _mask_perimeter(a, ch, cv) + _mask_perimeter(b, ch, cv)
        if lhs <= rhs + 1e-9:
            passed += 1
    return passed


def rectangle_submodularity_exhaustive(res: int = 16,
                                       w: WeightField | None = None,
                                       spot_checks: int = 1000,
                                       seed: int = 0) -> ExperimentReport:
    """Perimeter submodularity over every pair of axis rectangles.

    All res(res+1)/2 squared index rectangles are compared pairwise through
    closed-form prefix-sum perimeters of union and intersection; a random
    sample of pairs is re-verified against direct rasterization.
    """
    if w is None:
        w = heavy_diamond(2.0)
    ch, cv = _edge_costs(w, res)
    CH = ch.T  # [x-line, row]
    CV = cv    # [y-line, column]
    SH = np.zeros((res + 1, res + 1))
    SH[:, 1:] = np.cumsum(CH, axis=1)
    SV = np.zeros((res + 1, res + 1))
    SV[:, 1:] = np.cumsum(CV, axis=1)

    def side(S, line, c, d):
        # sum of S's costs on the given grid line over index range [c, d]
        return S[line, d + 1] - S[line, c]

    def rect_p(a1, a2, b1, b2):
        return (side(SH, a1, b1, b2) + side(SH, a2 + 1, b1, b2)
                + side(SV, b1, a1, a2) + side(SV, b2 + 1, a1, a2))

    lo, hi = np.triu_indices(res)
    k_iv = lo.size
    ix = np.repeat(np.arange(k_iv), k_iv)
    iy = np.tile(np.arange(k_iv), k_iv)
    x1, x2 = lo[ix], hi[ix]
    y1, y2 = lo[iy], hi[iy]
    n = x1.size
    P = rect_p(x1, x2, y1, y2)

    worst = math.inf
    fails = 0
    for k in range(n):
        ax1, ax2, ay1, ay2 = int(x1[k]), int(x2[k]), int(y1[k]), int(y2[k])
        bx1, bx2 = x1[k:], x2[k:]
        by1, by2 = y1[k:], y2[k:]
        sx1, sx2 = np.maximum(ax1, bx1), np.minimum(ax2, bx2)
        sy1, sy2 = np.maximum(ay1, by1), np.minimum(ay2, by2)
        sharedx, sharedy = sx1 <= sx2, sy1 <= sy2
        # empty ranges clamp to (0, -1), which side() sums to zero
        sy1c, sy2c = np.where(sharedy, sy1, 0), np.where(sharedy, sy2, -1)
        sx1c, sx2c = np.where(sharedx, sx1, 0), np.where(sharedx, sx2, -1)

        row_a_full = side(SH, ax1, ay1, ay2) + side(SH, ax2 + 1, ay1, ay2)
        row_a_sh = side(SH, ax1, sy1c, sy2c) + side(SH, ax2 + 1, sy1c, sy2c)
        row_b_full = side(SH, bx1, by1, by2) + side(SH, bx2 + 1, by1, by2)
        row_b_sh = side(SH, bx1, sy1c, sy2c) + side(SH, bx2 + 1, sy1c, sy2c)
        xcont = sx1 <= sx2 + 1
        xl, xr = np.minimum(ax1, bx1), np.maximum(ax2, bx2)
        row_merged = side(SH, xl, sy1c, sy2c) + side(SH, xr + 1, sy1c, sy2c)
        ch_part = (row_a_full - row_a_sh + row_b_full - row_b_sh
                   + np.where(xcont, row_merged, row_a_sh + row_b_sh))

        col_a_full = side(SV, ay1, ax1, ax2) + side(SV, ay2 + 1, ax1, ax2)
        col_a_sh = side(SV, ay1, sx1c, sx2c) + side(SV, ay2 + 1, sx1c, sx2c)
        col_b_full = side(SV, by1, bx1, bx2) + side(SV, by2 + 1, bx1, bx2)
        col_b_sh = side(SV, by1, sx1c, sx2c) + side(SV, by2 + 1, sx1c, sx2c)
        ycont = sy1 <= sy2 + 1
        yl, yu = np.minimum(ay1, by1), np.maximum(ay2, by2)
        col_merged = side(SV, yl, sx1c, sx2c) + side(SV, yu + 1, sx1c, sx2c)
        cv_part = (col_a_full - col_a_sh + col_b_full - col_b_sh
                   + np.where(ycont, col_merged, col_a_sh + col_b_sh))

        p_union = ch_part + cv_part
        p_inter = np.where(sharedx & sharedy,
                           rect_p(sx1c, sx2c, sy1c, sy2c), 0.0)
        deficit = P[k] + P[k:] - p_union - p_inter
        m = float(deficit.min())
        worst = min(worst, m)
        fails += int(np.count_nonzero(deficit < -1e-9))

    rng = np.random.default_rng(seed)
    spot_err = 0.0
    for _ in range(spot_checks):
        i, j = rng.integers(0, n, 2)
        ma = np.zeros((res, res), dtype=bool)
        mb = np.zeros((res, res), dtype=bool)
        ma[y1[i]:y2[i] + 1, x1[i]:x2[i] + 1] = True
        mb[y1[j]:y2[j] + 1, x1[j]:x2[j] + 1] = True
        sx1, sx2 = max(x1[i], x1[j]), min(x2[i], x2[j])
        sy1, sy2 = max(y1[i], y1[j]), min(y2[i], y2[j])
        pi = rect_p(sx1, sx2, sy1, sy2) if sx1 <= sx2 and sy1 <= sy2 else 0.0
        pu = _union_perimeter_direct(
            (x1[i], x2[i], y1[i], y2[i]), (x1[j], x2[j], y1[j], y2[j]),
            SH, SV)
        spot_err = max(
            spot_err,
            abs(float(P[i]) - _mask_perimeter(ma, ch, cv)),
            abs(pu - _mask_perimeter(ma | mb, ch, cv)),
            abs(float(pi) - _mask_perimeter(ma & mb, ch, cv)))

    return ExperimentReport(
        name="rectangle_submodularity",
        quantities=(
            Quantity("pairs violating the perimeter inequality",
                     float(fails), 0.0, 0.0),
            Quantity("worst submodularity violation",
                     max(0.0, -worst), 0.0, 1e-9),
            Quantity("closed-form vs raster mismatch", spot_err, 0.0, 1e-9),
        ))


def _union_perimeter_direct(ra, rb, SH, SV) -> float:
    """Scalar union perimeter, same row/column classification as the sweep."""
    ax1, ax2, ay1, ay2 = (int(v) for v in ra)
    bx1, bx2, by1, by2 = (int(v) for v in rb)

    def side(S, line, c, d):
        return float(S[line, d + 1] - S[line, c]) if c <= d else 0.0

    sy1, sy2 = max(ay1, by1), min(ay2, by2)
    sx1, sx2 = max(ax1, bx1), min(ax2, bx2)
    total = (side(SH, ax1, ay1, ay2) + side(SH, ax2 + 1, ay1, ay2)
             - side(SH, ax1, sy1, sy2) - side(SH, ax2 + 1, sy1, sy2)
             + side(SH, bx1, by1, by2) + side(SH, bx2 + 1, by1, by2)
             - side(SH, bx1, sy1, sy2) - side(SH, bx2 + 1, sy1, sy2))
    if sy1 <= sy2:
        if sx1 <= sx2 + 1:
            total += (side(SH, min(ax1, bx1), sy1, sy2)
                      + side(SH, max(ax2, bx2) + 1, sy1, sy2))
        else:
            total += (side(SH, ax1, sy1, sy2) + side(SH, ax2 + 1, sy1, sy2)
                      + side(SH, bx1, sy1, sy2) + side(SH, bx2 + 1, sy1, sy2))
    total += (side(SV, ay1, ax1, ax2) + side(SV, ay2 + 1, ax1, ax2)
              - side(SV, ay1, sx1, sx2) - side(SV, ay2 + 1, sx1, sx2)
              + side(SV, by1, bx1, bx2) + side(SV, by2 + 1, bx1, bx2)
              - side(SV, by1, sx1, sx2) - side(SV, by2 + 1, sx1, sx2))
    if sx1 <= sx2:
        if sy1 <= sy2 + 1:
            total += (side(SV, min(ay1, by1), sx1, sx2)
                      + side(SV, max(ay2, by2) + 1, sx1, sx2))
        else:
            total += (side(SV, ay1, sx1, sx2) + side(SV, ay2 + 1, sx1, sx2)
                      + side(SV, by1, sx1, sx2) + side(SV, by2 + 1, sx1, sx2))
    return total


def three_diamonds_thresholds(alpha: float = SQRT2) -> tuple[float, float]:
    """Level band (t0, t1] where the three-diamond routes admit two winners.

    t0 equates the route through the large diamonds' bottom tips with the
    route over their top tips; t1 is the level whose boundary point lines up
    with the small diamond's top tip and a large diamond's top tip, past
    which the direct two-segment route over the small diamond takes over.
    Route costs use the actual weighted length, so a route that dipped into
    a diamond would be penalized; the returned roots are alpha-free.
    """
    w = three_heavy_diamonds(alpha)

    def cost(t, verts):
        left, right = boundary_points(t)
        return weighted_length(Polyline((left, *verts, right)), w)

    def bottom_minus_top(t):
        return (cost(t, ((-0.5, -0.25), (0.5, -0.25)))
                - cost(t, ((-0.5, 0.25), (0.0, 0.375), (0.5, 0.25))))

    def top_minus_apex(t):
        return (cost(t, ((-0.5, 0.25), (0.0, 0.375), (0.5, 0.25)))
                - cost(t, ((0.0, 0.375),)))

    try:
        t0 = brentq(bottom_minus_top, 0.76, 1.12, xtol=1e-10)
        t1 = brentq(top_minus_apex, t0 + 1e-6, 1.374, xtol=1e-10)
    except ValueError as exc:
        raise ValueError("no route-equality root in (3/4, 11/8)") from exc
    if not 0.75 < t0 < t1 < 1.375:
        raise ValueError(f"thresholds ({t0:.6g}, {t1:.6g}) left (3/4, 11/8)")
    return float(t0), float(t1)


def disagreement_area(sa: SolutionStack, sb: SolutionStack) -> float:
    """Weighted area where two stacked fields differ beyond level noise."""
    if sa.field.res != sb.field.res:
        raise ValueError("stacks were built at different resolutions")
    spacing = float(sa.levels[1] - sa.levels[0])
    xs = sa.field.coords
    X, Y = np.meshgrid(xs, xs, indexing="xy")
    apart = np.abs(sa.field.values - sb.field.values) > 2.0 * spacing
    apart &= X * X + Y * Y < 1.0
    wv = np.asarray(sa.weight.values(X, Y), dtype=float)
    return float((wv * apart).sum() / sa.field.res ** 2)


def nonuniqueness_gap(w: WeightField, policy_a, policy_b, res: int = 256,
                      levels=None, n_shells: int | None = None) -> float:
    """Weighted area of {|u_a - u_b| > 2 level spacings}; 0 means unique.

    Both stacks must spend the same BV energy (within 0.5% relative); a
    larger spread means at least one branch failed to minimize, and raises.
    """
    if policy_a == policy_b:
        raise ValueError("policies must differ")
    sa = stack(w, levels=levels, policy=policy_a, res=res, n_shells=n_shells)
    sb = stack(w, levels=levels, policy=policy_b, res=res, n_shells=n_shells)
    ea, eb = bv_energy(sa), bv_energy(sb)
    if abs(ea - eb) > 0.005 * max(ea, eb):
        raise ValueError(f"BV energies {ea:.6g} and {eb:.6g} differ by more "
                         "than 0.5%; one branch is not minimizing")
    return disagreement_area(sa, sb)


def _tilt_probe(theta: float, eps: float, b: float) -> Polyline:
    # straight probe from (-eps, b) hitting the y-axis at angle theta
    return Polyline(((-eps, b), (0.0, b + eps * math.tan(theta))))


def _tilt_closed_form(theta: float, eps: float, b: float) -> float:
    c = math.cos(theta)
    return 0.25 * ((3.0 - 2.0 * eps - 2.0 * b) * eps / c
                   + (c - math.sin(theta)) * eps * eps / (c * c))


def litedmdheavycore_checks() -> ExperimentReport:
    """Straight-vs-kinked lengths, flat midline crossings, tilt derivative.

    The kinked two-segment path beats the straight diameter through the
    expensive core; level curves cross the y-axis horizontally; and the
    first variation of a tilted probe near the axis matches
    (3 - 2b) eps sin(theta) after scaling by 4 cos^2(theta).
    """
    w = lite_dmd_heavy_core()
    straight = weighted_length(Polyline(((-0.5, 0.0), (0.5, 0.0))), w)
    kinked = weighted_length(Polyline(((-0.5, 0.0), (0.0, 0.2),
                                       (0.5, 0.0))), w)
    expected_kinked = 0.575 * math.sqrt(1.16)
    quantities = [
        Quantity("straight diameter length", straight, 0.625, 1e-9),
        Quantity("kinked path length", kinked, expected_kinked, 1e-9),
        Quantity("kink saving", straight - kinked,
                 0.625 - expected_kinked, 1e-9),
    ]

    delta = 0.01
    for t in (0.9, 1.0, 1.1):
        lc = level_curve(w, t)
        y0, yl, yr = lc.y_at(0.0), lc.y_at(-delta), lc.y_at(delta)
        slope = max(abs(yr - y0), abs(y0 - yl)) / delta
        quantities.append(
            Quantity(f"midline slope of level curve t={t:g}", slope,
                     0.0, 0.02))

    eps, b = 1e-3, 0.25
    ident_err = max(
        abs(weighted_length(_tilt_probe(th, eps, b), w)
            - _tilt_closed_form(th, eps, b))
        for th in (-0.3, -0.1, 0.1, 0.3))
    quantities.append(
        Quantity("tilt probe closed-form mismatch", ident_err, 0.0, 1e-12))

    fd = 1e-4
    for th in (-0.3, 0.3):
        di = (weighted_length(_tilt_probe(th + fd, eps, b), w)
              - weighted_length(_tilt_probe(th - fd, eps, b), w)) / (2 * fd)
        scaled = 4.0 * math.cos(th) ** 2 * di
        quantities.append(
            Quantity(f"tilt derivative at theta={th:+g}", scaled,
                     (3.0 - 2.0 * b) * eps * math.sin(th), 5e-6))

    return ExperimentReport("litedmdheavycore", tuple(quantities))


def _snell_suite(seed: int = 0) -> ExperimentReport:
    rng = np.random.default_rng(seed)
    worst_recip = 0.0
    worst_chain = 0.0
    for _ in range(2000):
        w1, w2 = rng.uniform(0.2, 5.0, 2)
        # subcritical with a 0.5% margin: asin conditioning degrades as
        # 1/cos(theta) toward the critical angle and would swamp 1e-12
        cap = math.asin(min(1.0, w2 / w1)) if w1 > w2 else math.pi / 2
        th1 = rng.uniform(0.0, cap * 0.995)
        th2 = snell_refract(w1, w2, th1)
        worst_recip = max(worst_recip,
                          abs(snell_refract(w2, w1, th2) - th1))
        mids = rng.uniform(max(w1, w2), max(w1, w2) + 4.0,
                           int(rng.integers(1, 5)))
        chain = snell_chain((w1, *mids, w2), th1)
        worst_chain = max(worst_chain, abs(chain - th2))
    wl = layered_horizontal(((0.2, 1.0), (2.0, 2.0)))
    a, b = (-0.5, 0.3), (0.5, -0.7)
    _, shot = shoot_two_point(wl, a, b, n_shells=64, scan_angles=512)
    ref = minimize_scalar(
        lambda x: math.hypot(x + 0.5, 0.5) + 2.0 * math.hypot(0.5 - x, 0.5),
        bracket=(-0.5, 0.4, 0.5), method="golden", options={"xtol": 1e-12})
    return ExperimentReport("snell", (
        Quantity("reciprocity worst error", worst_recip, 0.0, 1e-12),
        Quantity("chain collapse worst error", worst_chain, 0.0, 1e-12),
        Quantity("two-layer kink vs golden section", shot, float(ref.fun),
                 1e-6),
    ))


def _thresholds_suite(seed: int = 0) -> ExperimentReport:
    t0, t1 = three_diamonds_thresholds(SQRT2)
    spread0 = max(abs(three_diamonds_thresholds(a)[0] - t0)
                  for a in (2.0, 5.0))
    spread1 = max(abs(three_diamonds_thresholds(a)[1] - t1)
                  for a in (2.0, 5.0))
    # t1's route-equality root is tangential (quadratic on one side), so its
    # bisection conditioning is ~sqrt of t0's; hence the looser spread bar
    return ExperimentReport("thresholds", (
        Quantity("lower tie level t0", t0, 1.017, 0.005),
        Quantity("upper tie level t1", t1, 1.127, 0.005),
        Quantity("t0 spread across alpha", spread0, 0.0, 1e-9),
        Quantity("t1 spread across alpha", spread1, 0.0, 1e-6),
    ))


def _submodularity_suite(seed: int = 0) -> ExperimentReport:
    trials = 1000
    passed = submodularity_check(res=256, trials=trials, seed=seed)
    return ExperimentReport("submodularity", (
        Quantity("random pairs passing", float(passed), float(trials), 0.0),
    ))


def _clearance_suite(seed: int = 0) -> ExperimentReport:
    rng = np.random.default_rng(seed)
    w = constant(1.0)
    worst = 0.0
    for _ in range(32):
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        r = float(rng.uniform(0.05, 0.8))
        got = curvature_clearance(w, (math.cos(phi), math.sin(phi)), r)
        worst = max(worst, abs(got - 0.5 * r * r))
    tight = curvature_clearance(light_diamond_tight(0.5), (0.0, -1.0), 0.2)
    return ExperimentReport("clearance", (
        Quantity("constant-weight clearance vs r^2/2", worst, 0.0, 1e-6),
        # floor check: passes iff the clearance reaches at least 1e-3
        Quantity("tight-weight clearance at the south pole positive",
                 min(tight, 1e-3), 1e-3, 0.0),
    ))


def _corelite_suite(seed: int = 0) -> ExperimentReport:
    return litedmdheavycore_checks()


def _rectangles_suite(seed: int = 0) -> ExperimentReport:
    return rectangle_submodularity_exhaustive(seed=seed)


SUITES = {
    "snell": _snell_suite,
    "thresholds": _thresholds_suite,
    "submodularity": _submodularity_suite,
    "clearance": _clearance_suite,
    "corelite": _corelite_suite,
    "rectangles": _rectangles_suite,
}


def run_suite(name: str, seed: int = 0) -> ExperimentReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return SUITES[name](seed=seed)
