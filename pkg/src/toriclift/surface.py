"""Numeric realization of the rotated surface, used as a cross-check oracle.

This is the only module that touches floating point.  The surface over a
curve graph (x1, g_2(x1), ...) with circle weights (k_1, ..., k_n) is

    F(x1, t) = (r_1 cos k_1 t, r_1 sin k_1 t, ..., r_n cos k_n t, r_n sin k_n t)

with r_1 = x1 and r_i = sqrt(2 g_i(x1^2 / 2)).  The planarity probe and
the pullback-density identity give heuristic confirmations of the exact
verdicts; `inconclusive` is always an acceptable probe outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .criterion import CurveGraph
from .jets import Jet


class SamplerError(ValueError):
    pass


@dataclass
class SurfaceSample:
    x1: np.ndarray          # shape (nx,)
    t: np.ndarray           # shape (nt,)
    points: np.ndarray      # shape (nx, nt, 2n)
    weights: tuple[int, ...]
    metadata: dict

    @property
    def grid_shape(self) -> tuple[int, int]:
        return self.points.shape[0], self.points.shape[1]


def _radii(graph: CurveGraph, x1: np.ndarray) -> list[np.ndarray]:
    """Radii r_1..r_n on a float grid; raises on a negative radicand."""
    u = x1 * x1 / 2.0
    radii = [np.asarray(x1, dtype=float)]
    for pos, g in enumerate(graph.g, start=2):
        vals = 2.0 * np.polyval([float(c) for c in reversed(g.coeffs)], u)
        bad = vals < -1e-12
        if np.any(bad):
            x_bad = float(np.asarray(x1)[bad][0])
            raise SamplerError(f"negative radicand in coordinate {pos} at x1 = {x_bad}")
        radii.append(np.sqrt(np.clip(vals, 0.0, None)))
    return radii


def sample_surface(graph: CurveGraph, nx: int, nt: int,
                   x1_max: float | None = None) -> SurfaceSample:
    """Evaluate the rotated surface on a uniform [0, x1_max] x [0, 2pi) grid."""
    if nx < 1 or nt < 1:
        raise SamplerError("empty grid")
    if x1_max is None:
        x1_max = float(graph.x1_max)
        if x1_max <= 0:
            raise SamplerError("graph has nonpositive x1 range; pass x1_max explicitly")
    x1 = np.linspace(0.0, x1_max, nx)
    t = np.linspace(0.0, 2.0 * np.pi, nt, endpoint=False)
    radii = _radii(graph, x1)
    n = graph.n
    pts = np.empty((nx, nt, 2 * n))
    for i in range(n):
        k = graph.k[i]
        pts[:, :, 2 * i] = radii[i][:, None] * np.cos(k * t)[None, :]
        pts[:, :, 2 * i + 1] = radii[i][:, None] * np.sin(k * t)[None, :]
    meta = {"k": graph.k, "Q": sorted(graph.Q), "nx": nx, "nt": nt, "x1_max": x1_max}
    return SurfaceSample(x1, t, pts, graph.k, meta)


def _point(graph: CurveGraph, x1: float, t: float) -> np.ndarray:
    radii = _radii(graph, np.asarray([x1]))
    out = np.empty(2 * graph.n)
    for i in range(graph.n):
        k = graph.k[i]
        out[2 * i] = radii[i][0] * np.cos(k * t)
        out[2 * i + 1] = radii[i][0] * np.sin(k * t)
    return out


def pullback_density_exact(graph: CurveGraph, x1: Fraction) -> Fraction:
    """Exact sum_j k_j d/dx1 [g_j(x1^2/2)], with g_1 the identity."""
    x1 = Fraction(x1)
    total = Fraction(graph.k[0]) * x1  # d/dx1 (x1^2/2) = x1
    for pos, g in enumerate(graph.g, start=2):
        k = graph.k[pos - 1]
        if k == 0:
            continue
        total += Fraction(k) * g.deriv().eval_exact(x1 * x1 / 2) * x1
    return total


def pullback_density(graph: CurveGraph, x1: float, t: float = 0.37,
                     h: float = 1e-5) -> tuple[float, float]:
    """(numeric, exact) symplectic density omega(F_x1, F_t) at x1.

    Numeric side by central differences of the sampled surface; exact side
    from the moment-coordinate identity.
    """
    fx = (_point(graph, x1 + h, t) - _point(graph, x1 - h, t)) / (2 * h)
    ft = (_point(graph, x1, t + h) - _point(graph, x1, t - h)) / (2 * h)
    omega = float(sum(fx[2 * i] * ft[2 * i + 1] - fx[2 * i + 1] * ft[2 * i]
                      for i in range(graph.n)))
    exact = float(pullback_density_exact(graph, Fraction(x1)))
    return omega, exact


@dataclass(frozen=True)
class ProbeResult:
    kind: str  # planar | conelike | inconclusive
    residual_coarse: float
    residual_fine: float
    ratio: float


# Engineering thresholds, frozen with the test corpus.
PLANAR_RESIDUAL = 0.05
PLANAR_RATIO = 0.6
CONE_RESIDUAL = 0.15
CONE_RATIO = 0.9
MIN_POINTS = 30


def _plane_residual(pts: np.ndarray, vertex: np.ndarray) -> float:
    """Normalized out-of-plane spread of pts for the best 2-plane through vertex."""
    centered = pts - vertex[None, :]
    sv = np.linalg.svd(centered, compute_uv=False)
    total = float(np.sqrt(np.sum(sv**2)))
    if total == 0.0:
        return 0.0
    return float(np.sqrt(np.sum(sv[2:] ** 2))) / total


def smoothness_probe(graph: CurveGraph, eps: float | None = None,
                     nx: int = 400, nt: int = 48) -> ProbeResult:
    """Second-moment planarity test at the x1 = 0 end of the surface.

    Compares the normalized out-of-plane residual at two scales eps and
    eps/2: a smooth (C^1) surface flattens at a definite rate, a cone is
    scale-invariant.
    """
    x_cap = float(graph.x1_max) if graph.x1_max > 0 else 1.0
    x_cap = min(x_cap, 1.0) * 0.5
    x1 = np.linspace(x_cap / nx, x_cap, nx)
    t = np.linspace(0.0, 2.0 * np.pi, nt, endpoint=False)
    try:
        radii = _radii(graph, x1)
    except SamplerError:
        return ProbeResult("inconclusive", float("nan"), float("nan"), float("nan"))
    n = graph.n
    pts = np.empty((nx, nt, 2 * n))
    for i in range(n):
        k = graph.k[i]
        pts[:, :, 2 * i] = radii[i][:, None] * np.cos(k * t)[None, :]
        pts[:, :, 2 * i + 1] = radii[i][:, None] * np.sin(k * t)[None, :]
    pts = pts.reshape(-1, 2 * n)
    vertex = _point(graph, 0.0, 0.0)
    dist = np.linalg.norm(pts - vertex[None, :], axis=1)
    if eps is None:
        # small enough that curvature of a smooth sheet stays under the
        # planar threshold, large enough to keep the point count up
        eps = 0.15 * float(np.max(dist))
    res = []
    for scale in (eps, eps / 2):
        sel = pts[(dist > 0) & (dist <= scale)]
        if len(sel) < MIN_POINTS:
            return ProbeResult("inconclusive", float("nan"), float("nan"), float("nan"))
        res.append(_plane_residual(sel, vertex))
    coarse, fine = res
    ratio = fine / coarse if coarse > 0 else 0.0
    if fine <= 1e-9 or (ratio <= PLANAR_RATIO and coarse < PLANAR_RESIDUAL):
        kind = "planar"
    elif coarse > CONE_RESIDUAL and ratio >= CONE_RATIO:
        kind = "conelike"
    else:
        kind = "inconclusive"
    return ProbeResult(kind, coarse, fine, ratio)


# ---------------------------------------------------------------------------
# mesh export


def export_mesh(sample: SurfaceSample, fmt: str, path,
                project: Sequence[int] = (0, 1, 2)) -> None:
    """Write the sample as CSV rows or as an OBJ mesh projected to 3 coords.

    Output is byte-deterministic for identical inputs.
    """
    nx, nt = sample.grid_shape
    if nx == 0 or nt == 0:
        raise SamplerError("empty grid")
    dim = sample.points.shape[2]
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            header = ["x1", "t"] + [f"p{i + 1}" for i in range(dim)]
            fh.write(",".join(header) + "\n")
            for ix in range(nx):
                for it in range(nt):
                    row = [sample.x1[ix], sample.t[it], *sample.points[ix, it]]
                    fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    elif fmt == "obj":
        if any(i < 0 or i >= dim for i in project) or len(project) != 3:
            raise SamplerError(f"projection {project} out of range for dimension {dim}")
        with open(path, "w", newline="") as fh:
            for ix in range(nx):
                for it in range(nt):
                    p = sample.points[ix, it]
                    fh.write("v " + " ".join(f"{p[i]:.17g}" for i in project) + "\n")
            # quad faces with wraparound in t; 1-based OBJ indices
            for ix in range(nx - 1):
                for it in range(nt):
                    jt = (it + 1) % nt
                    a = ix * nt + it + 1
                    b = ix * nt + jt + 1
                    c = (ix + 1) * nt + jt + 1
                    d = (ix + 1) * nt + it + 1
                    fh.write(f"f {a} {b} {c} {d}\n")
    else:
        raise SamplerError(f"unknown mesh format {fmt!r}")
