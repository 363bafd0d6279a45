"""Two-point weighted shortest paths by refraction shooting.

Scans launch angles, traces each ray to the line through the target
perpendicular to the endpoint chord, and bisects the transverse miss to
zero between sign changes.  Smooth refracted rays cannot produce corner
routes around slow obstacles, so explicit candidates (the straight chord,
obstacle-corner routes, rim wraps around a slow disk) compete with every
converged ray and the cheapest valid path wins.
"""
from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .paths import Polyline, weighted_length
from .snell import TotalInternalReflection
from .tracing import TraceError, trace_layered_ray
from .weights import (ConstantWeight, LayeredWeight, MultiDiamondWeight,
                      RadialWeight, WeightField)

DEFAULT_SCAN_ANGLES = 2048


def _perp_miss(w, a, b, theta, n_shells):
    """Signed transverse offset of the ray's hit on the through-b line."""
    d = (b[0] - a[0], b[1] - a[1])
    nrm = math.hypot(*d)
    u = (d[0] / nrm, d[1] / nrm)
    stop = ("line", u[0], u[1], u[0] * b[0] + u[1] * b[1])
    try:
        path = trace_layered_ray(w, a, theta, stop, n_shells=n_shells)
    except (TraceError, TotalInternalReflection):
        return math.nan, None
    e = path.vertices[-1]
    along = (e[0] - a[0]) * u[0] + (e[1] - a[1]) * u[1]
    if along < 0.0:
        return math.nan, None
    miss = -(e[0] - b[0]) * u[1] + (e[1] - b[1]) * u[0]
    return miss, path


def _scan_candidates(w, a, b, tol, n_shells, scan_angles):
    swapped = False
    if isinstance(w, LayeredWeight):
        # Layered rays only travel downward, so launch from the higher end.
        if a[1] < b[1]:
            a, b, swapped = b, a, True
        thetas = np.linspace(-math.pi / 2, math.pi / 2, scan_angles + 2)[1:-1]
    else:
        thetas = np.linspace(-math.pi, math.pi, scan_angles, endpoint=False)
    misses = np.full(scan_angles, math.nan)
    for i, th in enumerate(thetas):
        misses[i], _ = _perp_miss(w, a, b, float(th), n_shells)
    out = []
    for i in range(scan_angles - 1):
        m0, m1 = misses[i], misses[i + 1]
        if math.isnan(m0) or math.isnan(m1) or (m0 > 0) == (m1 > 0):
            continue
        lo, hi, flo = float(thetas[i]), float(thetas[i + 1]), m0
        path = None
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm, pm = _perp_miss(w, a, b, mid, n_shells)
            if math.isnan(fm):
                break
            path = pm
            if abs(fm) < tol:
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        if path is not None:
            e = path.vertices[-1]
            if math.hypot(e[0] - b[0], e[1] - b[1]) < max(tol * 10, 1e-6):
                verts = list(path.vertices[:-1]) + [tuple(b)]
                if swapped:
                    verts.reverse()
                out.append(Polyline.from_points(np.array(verts)))
    return out


def _corner_points(w) -> list[tuple[float, float]]:
    pts = []
    if isinstance(w, RadialWeight) and w.norm == "l1":
        for r in w.breakpoints():
            if math.isfinite(r) and r > 0:
                pts += [(r, 0.0), (-r, 0.0), (0.0, r), (0.0, -r)]
    if isinstance(w, MultiDiamondWeight):
        for cx, cy, r, _ in w.CENTERS:
            pts += [(cx + r, cy), (cx - r, cy), (cx, cy + r), (cx, cy - r)]
    return pts


def _corner_routes(w, a, b) -> list[Polyline]:
    corners = [p for p in _corner_points(w)
               if min(a[0], b[0]) - 1e-12 < p[0] < max(a[0], b[0]) + 1e-12]
    if not corners or abs(b[0] - a[0]) < 1e-12:
        return []
    lo, hi = (a, b) if a[0] <= b[0] else (b, a)
    corners.sort()
    routes = []
    max_k = 4 if isinstance(w, MultiDiamondWeight) else 2
    for k in range(1, min(max_k, len(corners)) + 1):
        for combo in combinations(corners, k):
            xs = [p[0] for p in combo]
            if any(x2 - x1 < -1e-12 for x1, x2 in zip(xs, xs[1:])):
                continue
            try:
                routes.append(Polyline.from_points(
                    np.array([lo, *combo, hi])))
            except ValueError:
                continue
    return routes


def _rim_wraps(w, a, b) -> list[Polyline]:
    """Tangent-arc-tangent candidates around a slow circular region."""
    if not (isinstance(w, RadialWeight) and w.norm == "l2"):
        return []
    rims = [r for r in w.breakpoints() if math.isfinite(r) and 0 < r < 1]
    out = []
    for rho in rims:
        for sign in (+1.0, -1.0):
            wrap = _one_wrap(a, b, rho, sign)
            if wrap is not None:
                out.append(wrap)
    return out


def _one_wrap(a, b, rho, sign):
    ra, rb = math.hypot(*a), math.hypot(*b)
    if ra <= rho or rb <= rho:
        return None
    lift = rho * (1.0 + 2e-6)
    pa, pb = math.atan2(a[1], a[0]), math.atan2(b[1], b[0])
    ta = pa - sign * math.acos(rho / ra)
    tb = pb + sign * math.acos(rho / rb)
    arc = (ta - tb) * sign
    arc = arc % (2.0 * math.pi)
    if arc <= 1e-9 or arc >= math.pi * 1.5:
        return None
    n = max(2, int(math.ceil(arc / 2e-3)) + 1)
    phis = ta - sign * np.linspace(0.0, arc, n) if sign > 0 else \
        ta + np.linspace(0.0, arc, n)
    pts = np.column_stack([lift * np.cos(phis), lift * np.sin(phis)])
    return Polyline.from_points(np.vstack([[a], pts, [b]]))


def shoot_two_point(w: WeightField, a, b, tol: float = 1e-9,
                    n_shells: int = 1024,
                    scan_angles: int = DEFAULT_SCAN_ANGLES
                    ) -> tuple[Polyline, float]:
    """Cheapest found path between interior/boundary points a and b.

    Returns (path, weighted length).  For weights without a ray tracer
    (multi-diamond, custom piecewise) only the explicit candidates compete;
    the grid oracle is the fallback for anything more general.
    """
    a = (float(a[0]), float(a[1]))
    b = (float(b[0]), float(b[1]))
    if math.hypot(*a) > 1 + 1e-9 or math.hypot(*b) > 1 + 1e-9:
        raise ValueError("endpoints must lie in the closed unit disk")
    if math.hypot(a[0] - b[0], a[1] - b[1]) < 1e-15:
        raise ValueError("endpoints coincide")
    chord = Polyline((a, b))
    if isinstance(w, ConstantWeight):
        return chord, weighted_length(chord, w)
    candidates = [chord]
    candidates += _corner_routes(w, a, b)
    candidates += _rim_wraps(w, a, b)
    if isinstance(w, (RadialWeight, LayeredWeight)):
        candidates += _scan_candidates(w, a, b, tol, n_shells, scan_angles)
    costs = [weighted_length(p, w) for p in candidates]
    k = int(np.argmin(costs))
    return candidates[k], float(costs[k])
