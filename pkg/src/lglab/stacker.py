"""Stack level curves into a solution field for boundary data y + 1.

The field value at a point is the largest level whose curve passes below
it; level curves are computed per level with a branch chosen by a switch
policy, and consecutive curves are checked to be nested before the field
is filled.  A point exactly on a curve counts as inside for the maximal
branch and outside for the minimal branch, so on a jump line the maximal
solution takes the upper value and the minimal solution the lower one.
Outside the open unit disk the field equals the boundary data clamped
to [0, 2].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import LevelCurve, boundary_points, level_curve
from .paths import weighted_length
from .weights import WeightField

DEFAULT_LEVELS = 401
DEFAULT_RES = 512


def midpoint_levels(count: int = DEFAULT_LEVELS) -> np.ndarray:
    """count level values 2(i + 1/2)/count, strictly inside (0, 2)."""
    if count < 1:
        raise ValueError("count must be positive")
    i = np.arange(count, dtype=float)
    return 2.0 * (i + 0.5) / count


@dataclass(frozen=True)
class SwitchPolicy:
    """Branch selector: minimal strictly above the switch level, else maximal."""

    switch_level: float = 0.0

    def branch_for(self, t: float) -> str:
        return "minimal" if t > self.switch_level else "maximal"


ALL_MINIMAL = SwitchPolicy(0.0)
ALL_MAXIMAL = SwitchPolicy(2.0)


@dataclass
class GridField:
    """Scalar field sampled on the uniform node grid of [-1, 1]^2."""

    res: int
    values: np.ndarray  # shape (2 res + 1, 2 res + 1), indexed [iy, ix]

    @property
    def coords(self) -> np.ndarray:
        return np.linspace(-1.0, 1.0, 2 * self.res + 1)

    def value_at(self, x, y) -> np.ndarray:
        """Nearest-node sample."""
        ix = np.clip(np.rint((np.asarray(x) + 1.0) * self.res), 0,
                     2 * self.res).astype(int)
        iy = np.clip(np.rint((np.asarray(y) + 1.0) * self.res), 0,
                     2 * self.res).astype(int)
        return self.values[iy, ix]


@dataclass
class SolutionStack:
    weight: WeightField
    levels: np.ndarray
    curves: tuple[LevelCurve, ...]
    policy: SwitchPolicy
    field: GridField = field(repr=False, default=None)


class StackNestingError(AssertionError):
    pass


def _check_nesting(curves, xs, res):
    """Consecutive level curves may not cross by more than a grid cell."""
    tol = max(1e-6, 0.5 / res)
    prev = None
    prev_t = None
    for lc in curves:
        xb = lc.x_bound()
        g = np.where(np.abs(xs) <= xb, lc.y_at(xs), np.nan)
        if prev is not None:
            both = ~(np.isnan(g) | np.isnan(prev))
            if both.any():
                worst = float(np.max(prev[both] - g[both]))
                if worst > tol:
                    raise StackNestingError(
                        f"curves at levels {prev_t:.6g} and {lc.level:.6g} "
                        f"cross by {worst:.3g} (tol {tol:.3g})")
        prev, prev_t = g, lc.level
    return


def stack(w: WeightField, levels=None, policy: SwitchPolicy = ALL_MINIMAL,
          res: int = DEFAULT_RES, n_shells: int | None = None) -> SolutionStack:
    """Build the stacked solution field from per-level shortest curves."""
    if levels is None:
        levels = midpoint_levels()
    levels = np.asarray(levels, dtype=float)
    if len(levels) < 16:
        raise ValueError("need at least 16 levels")
    if np.any(np.diff(levels) <= 0) or levels[0] <= 0 or levels[-1] >= 2:
        raise ValueError("levels must be strictly increasing inside (0, 2)")
    kwargs = {} if n_shells is None else {"n_shells": n_shells}
    curves = tuple(level_curve(w, float(t), policy.branch_for(float(t)),
                               **kwargs) for t in levels)

    n = 2 * res + 1
    xs = np.linspace(-1.0, 1.0, n)
    _check_nesting(curves, xs, res)

    gmat = np.empty((len(levels), n))
    for k, lc in enumerate(curves):
        xb = lc.x_bound()
        pad = -np.inf if levels[k] < 1.0 else np.inf
        inside = np.abs(xs) <= xb + 1e-15
        col = np.full(n, pad)
        col[inside] = lc.y_at(xs[inside])
        gmat[k] = col
    # searchsorted needs monotone columns; nesting bounds the fixup by a cell
    gmat = np.maximum.accumulate(gmat, axis=0)

    # SwitchPolicy makes branches a maximal prefix then a minimal suffix
    is_min = np.array([lc.branch == "minimal" for lc in curves])
    first_min = int(np.argmax(is_min)) if is_min.any() else len(curves)

    ys = xs
    u = np.zeros((n, n))
    for i in range(n):
        col = gmat[:, i]
        weak = np.searchsorted(col, ys, side="right") - 1
        strict = np.searchsorted(col, ys, side="left") - 1
        best = np.maximum(np.minimum(weak, first_min - 1),
                          np.where(strict >= first_min, strict, -1))
        u[:, i] = np.where(best >= 0, levels[np.maximum(best, 0)], 0.0)
    X, Y = np.meshgrid(xs, ys, indexing="xy")
    outside = X * X + Y * Y >= 1.0 - 1e-15
    u[outside] = np.clip(Y[outside] + 1.0, 0.0, 2.0)
    return SolutionStack(w, levels, curves, policy, GridField(res, u))


def bv_energy(s: SolutionStack, w: WeightField | None = None) -> float:
    """Coarea sum: weighted curve length integrated over the level grid."""
    w = s.weight if w is None else w
    dts = np.gradient(s.levels)
    return float(sum(dt * weighted_length(lc.path, w)
                     for dt, lc in zip(dts, s.curves)))


def _jump_touch_angles(s: SolutionStack, factor: float = 5.0) -> list[float]:
    """Boundary angles where a jump-carrying level curve meets the circle."""
    out = []
    dt = float(np.median(np.diff(s.levels)))
    for a, b in zip(s.curves[:-1], s.curves[1:]):
        xb = min(a.x_bound(), b.x_bound())
        xs = np.linspace(-xb, xb, 64)
        gap = float(np.max(np.abs(b.y_at(xs) - a.y_at(xs))))
        if gap > factor * dt:
            h = 0.5 * (a.level + b.level) - 1.0
            h = max(-1.0, min(1.0, h))
            phi = math.asin(h)
            out.extend([phi, math.pi - phi])
    return out


def trace_error(s: SolutionStack, n_boundary: int = 720,
                r: float = 0.05) -> float:
    """Worst mean misfit of u against its boundary value near the circle.

    For each of n_boundary points z on the unit circle, averages
    |u - (z_y + 1)| over grid samples in the ball B(z, r) inside the disk
    and returns the maximum over z.  Jump curves legitimately carry their
    discontinuity out to the circle, so probes angularly close to where
    such a curve lands are excluded.
    """
    if n_boundary < 64:
        raise ValueError("n_boundary must be at least 64")
    if not 0.0 < r < 0.2:
        raise ValueError("r must lie in (0, 0.2)")
    phis = np.linspace(0.0, 2.0 * math.pi, n_boundary, endpoint=False)
    exclude = _jump_touch_angles(s)
    if exclude:
        d = np.abs(((phis[:, None] - np.array(exclude)[None, :] + math.pi)
                    % (2 * math.pi)) - math.pi)
        keep = np.min(d, axis=1) > 0.05
        phis = phis[keep]
    u = s.field.values
    xs = s.field.coords
    res = s.field.res
    m = 2 * res
    X, Y = np.meshgrid(xs, xs, indexing="xy")
    in_disk = X * X + Y * Y < 1.0
    worst = 0.0
    for phi in phis:
        zx, zy = math.cos(phi), math.sin(phi)
        ix0 = max(0, int(math.floor((zx - r + 1.0) * res)))
        ix1 = min(m, int(math.ceil((zx + r + 1.0) * res)))
        iy0 = max(0, int(math.floor((zy - r + 1.0) * res)))
        iy1 = min(m, int(math.ceil((zy + r + 1.0) * res)))
        bx = X[iy0:iy1 + 1, ix0:ix1 + 1]
        by = Y[iy0:iy1 + 1, ix0:ix1 + 1]
        sel = (((bx - zx) ** 2 + (by - zy) ** 2 < r * r)
               & in_disk[iy0:iy1 + 1, ix0:ix1 + 1])
        if not sel.any():
            raise ValueError(f"no grid samples in B(z, {r:g}) at angle "
                             f"{phi:.3f}; r is below the grid spacing")
        misfit = np.abs(u[iy0:iy1 + 1, ix0:ix1 + 1][sel] - (zy + 1.0))
        worst = max(worst, float(misfit.mean()))
    return worst


def _oscillation(u: np.ndarray) -> np.ndarray:
    """Max minus min of u over each 3x3 neighborhood, edges replicated."""
    up = np.pad(u, 1, mode="edge")
    n0, n1 = u.shape
    views = [up[i:i + n0, j:j + n1] for i in range(3) for j in range(3)]
    return np.maximum.reduce(views) - np.minimum.reduce(views)


def local_oscillation(s: SolutionStack, x: float, y: float) -> float:
    """Oscillation of u over the 3x3 neighborhood of the nearest grid node."""
    res = s.field.res
    ix = int(np.clip(round((x + 1.0) * res), 0, 2 * res))
    iy = int(np.clip(round((y + 1.0) * res), 0, 2 * res))
    u = s.field.values
    win = u[max(0, iy - 1):iy + 2, max(0, ix - 1):ix + 2]
    return float(win.max() - win.min())


def jump_set(s: SolutionStack, gap_threshold: float) -> np.ndarray:
    """Grid points (x, y) whose 3x3 neighborhood oscillation exceeds the gap.

    The threshold must exceed twice the level spacing: below that, ordinary
    inter-level steps of the sampled field would register as jumps.
    """
    spacing = float(s.levels[1] - s.levels[0]) if len(s.levels) > 1 else 0.0
    if gap_threshold <= 2.0 * spacing:
        raise ValueError("gap_threshold must exceed twice the level spacing")
    xs = s.field.coords
    osc = _oscillation(s.field.values)
    X, Y = np.meshgrid(xs, xs, indexing="xy")
    jy, jx = np.nonzero((osc > gap_threshold) & (X * X + Y * Y < 1.0))
    return np.column_stack([xs[jx], xs[jy]])
