"""Plane fitting, parabola algebra, and arc-length resampling.

Everything here is a pure function of its inputs; returned objects hold
read-only numpy arrays and are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadSampleCount,
    DegenerateCurvature,
    DegenerateRank,
    DuplicateAbscissa,
    NotSymmetric,
)

_JACOBI_SWEEPS = 50
_JACOBI_OFF_TOL = 1e-14


def _readonly(a) -> np.ndarray:
    out = np.ascontiguousarray(np.asarray(a, dtype=float))
    out.flags.writeable = False
    return out


@dataclass
class Frame3:
    """Right-handed local frame: origin, in-plane axes e1/e2, normal n."""

    origin: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        self.origin = _readonly(self.origin)
        self.e1 = _readonly(self.e1)
        self.e2 = _readonly(self.e2)
        self.n = _readonly(self.n)


@dataclass
class ParabolaSeed:
    """Vertex-form single parabola v = k (u - a)^2 + b with recorded endpoints."""

    k: float
    a: float
    b: float
    u_start: float
    v_start: float
    u_end: float
    v_end: float

    def __post_init__(self):
        for u, v in ((self.u_start, self.v_start), (self.u_end, self.v_end)):
            if abs(self.k * (u - self.a) ** 2 + self.b - v) > 1e-9:
                raise ValueError("seed endpoint does not lie on the parabola")


@dataclass
class PiecewiseParabola:
    """C1 curve with curvature k1 for u >= a1 and k2 for u <= a1."""

    k1: float
    k2: float
    a1: float
    b1: float


@dataclass
class Polyline3:
    """Ordered 3-D waypoint sequence; consecutive points must be distinct."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 2:
            raise ValueError("polyline needs >= 2 points of dimension 3")
        seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
        if np.any(seg <= 1e-9):
            raise ValueError("polyline has coincident consecutive points")
        self.points = _readonly(pts)

    def __len__(self) -> int:
        return self.points.shape[0]


def eig3_symmetric(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric 3x3 matrix via cyclic Jacobi sweeps.

    Returns (eigenvalues descending, eigenvectors as columns). Raises
    NotSymmetric if max |m - m.T| exceeds 1e-12 relative to the matrix scale.
    """
    a = np.array(m, dtype=float)
    if a.shape != (3, 3):
        raise NotSymmetric("expected a 3x3 matrix")
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.max(np.abs(a - a.T))) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    a = 0.5 * (a + a.T)
    v = np.eye(3)
    for _ in range(_JACOBI_SWEEPS):
        off = max(abs(a[0, 1]), abs(a[0, 2]), abs(a[1, 2]))
        if off <= _JACOBI_OFF_TOL * scale:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p, q]
            if abs(apq) <= _JACOBI_OFF_TOL * scale:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
            if theta == 0.0:
                t = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def fit_plane(points) -> Frame3:
    """Fit the least-squares plane through >= 3 points (PCA of the spread).

    origin = centroid; e1/e2 = major/minor in-plane principal directions;
    n = least-variance direction. Deterministic signs: e1 has positive dot
    with (first - last) point, n is flipped so n_z >= 0 (ties: n_y, n_x),
    and e2 = n x e1 keeps the frame right-handed.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
        raise DegenerateRank("need at least 3 points")
    centroid = pts.mean(axis=0)
    x = pts - centroid
    cov = x.T @ x
    w, v = eig3_symmetric(cov)
    if w[0] <= 0.0 or w[1] <= 1e-12 * w[0]:
        raise DegenerateRank("points are collinear or coincident")
    e1 = v[:, 0].copy()
    n = v[:, 2].copy()

    span = pts[0] - pts[-1]
    s = float(np.dot(e1, span))
    if s < 0.0:
        e1 = -e1
    elif s == 0.0 and _lexi_negative(e1):
        e1 = -e1
    if _lexi_negative(n):
        n = -n
    e2 = np.cross(n, e1)
    return Frame3(centroid, e1, e2, n)


def _lexi_negative(vec: np.ndarray) -> bool:
    # Sign tie-break: flip so the last nonzero of (z, y, x) is positive.
    for comp in (vec[2], vec[1], vec[0]):
        if comp > 0.0:
            return False
        if comp < 0.0:
            return True
    return False


def project_to_plane(frame: Frame3, p) -> tuple[float, float]:
    """World point -> local (u, v) coordinates in the frame's plane."""
    d = np.asarray(p, dtype=float) - frame.origin
    return float(np.dot(d, frame.e1)), float(np.dot(d, frame.e2))


def fit_parabola_3pt(p_top_n, p_center, p_top_s) -> ParabolaSeed:
    """Interpolate v = A u^2 + B u + C through three (u, v) anchors.

    Returns the vertex form (k, a, b) = (A, -B/2A, C - A a^2) with the
    first/third anchors recorded as the seed endpoints.
    """
    (u0, v0), (u1, v1), (u2, v2) = p_top_n, p_center, p_top_s
    for x, y in (((u0), (u1)), ((u0), (u2)), ((u1), (u2))):
        if abs(x - y) < 1e-9:
            raise DuplicateAbscissa("two anchors share a u coordinate")
    # Divided differences give the interpolating quadratic exactly.
    d01 = (v1 - v0) / (u1 - u0)
    d12 = (v2 - v1) / (u2 - u1)
    a_coef = (d12 - d01) / (u2 - u0)
    if abs(a_coef) < 1e-9:
        raise DegenerateCurvature("anchors are collinear")
    b_coef = d01 - a_coef * (u0 + u1)
    c_coef = v0 - u0 * (b_coef + a_coef * u0)
    vert_a = -b_coef / (2.0 * a_coef)
    vert_b = c_coef - a_coef * vert_a * vert_a
    return ParabolaSeed(
        k=float(a_coef),
        a=float(vert_a),
        b=float(vert_b),
        u_start=float(u0),
        v_start=float(a_coef * (u0 - vert_a) ** 2 + vert_b),
        u_end=float(u2),
        v_end=float(a_coef * (u2 - vert_a) ** 2 + vert_b),
    )


def eval_piecewise(pp: PiecewiseParabola, u):
    """Evaluate the two-curvature parabola; accepts scalars or arrays."""
    du = np.asarray(u, dtype=float) - pp.a1
    v = (
        0.5 * (pp.k1 + pp.k2) * du * du
        + 0.5 * (pp.k1 - pp.k2) * du * np.abs(du)
        + pp.b1
    )
    return float(v) if np.isscalar(u) else v


def eval_piecewise_slope(pp: PiecewiseParabola, u):
    """dv/du of the piecewise parabola (2 k1 (u-a1) right, 2 k2 (u-a1) left)."""
    du = np.asarray(u, dtype=float) - pp.a1
    slope = (pp.k1 + pp.k2) * du + (pp.k1 - pp.k2) * np.abs(du)
    return float(slope) if np.isscalar(u) else slope


def lift_to_world(frame: Frame3, pp: PiecewiseParabola, u):
    """x(u) = origin + u e1 + v(u) e2; accepts scalars or arrays of u."""
    if np.isscalar(u):
        v = eval_piecewise(pp, u)
        return frame.origin + u * frame.e1 + v * frame.e2
    uu = np.asarray(u, dtype=float)
    vv = eval_piecewise(pp, uu)
    return frame.origin + np.outer(uu, frame.e1) + np.outer(vv, frame.e2)


def trim_and_resample(
    frame: Frame3,
    pp: PiecewiseParabola,
    seed: ParabolaSeed,
    n: int,
    dense: int = 1024,
) -> Polyline3:
    """Trim the curve to the seed's u span and resample n waypoints evenly
    spaced in arc length.

    Arc length uses dense piecewise-linear quadrature (>= 1024 sub-samples,
    with the vertex u = a1 inserted exactly) followed by inverse
    interpolation, then re-evaluates the exact curve at the recovered u.
    """
    if n < 3:
        raise BadSampleCount("need at least 3 waypoints")
    dense = max(int(dense), 1024, 16 * n)
    u0, u1 = seed.u_start, seed.u_end
    us = np.linspace(u0, u1, dense + 1)
    lo, hi = (u0, u1) if u0 <= u1 else (u1, u0)
    if lo < pp.a1 < hi:
        us = np.sort(np.append(us, pp.a1))
        if u0 > u1:
            us = us[::-1]
    pts = lift_to_world(frame, pp, us)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    cum = np.concatenate(([0.0], np.cumsum(seg)))
    targets = np.linspace(0.0, cum[-1], n)
    # cum is strictly increasing unless the curve degenerates to a point
    u_samples = np.interp(targets, cum, us)
    u_samples[0] = u0
    u_samples[-1] = u1
    out = lift_to_world(frame, pp, u_samples)
    return Polyline3(out)


def arc_length(frame: Frame3, pp: PiecewiseParabola, u0: float, u1: float, dense: int = 4096) -> float:
    """Dense chordal arc length of the lifted curve between u0 and u1."""
    us = np.linspace(u0, u1, max(dense, 1024) + 1)
    lo, hi = min(u0, u1), max(u0, u1)
    if lo < pp.a1 < hi:
        us = np.sort(np.append(us, pp.a1))
        if u0 > u1:
            us = us[::-1]
    pts = lift_to_world(frame, pp, us)
    return float(np.sum(np.linalg.norm(np.diff(pts, axis=0), axis=1)))
