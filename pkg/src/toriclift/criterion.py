"""The lift decision procedure: endpoint graphs in vertex charts,
interior transversality and containment, and the combined verdict.

A polynomial curve gamma(s) with endpoints on the boundary is converted,
at each endpoint, to a graph (x1, g_2(x1), ..., g_n(x1)) over a chart
coordinate; the smoothness of the rotated surface then reduces to weight
and valuation conditions on the g_i.  Every mathematical failure is a
verdict with diagnostics, never an exception; exceptions are reserved for
malformed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import jets
from .chart import CircleEmbedding, VertexChart, local_weights, make_chart, q_set
from .exactmath import (
    RatPoly,
    isolate_root,
    poly_add,
    poly_compose_linear,
    poly_deriv,
    poly_eval,
    poly_scale,
    poly_sub,
    poly_trim,
    sturm_count,
)
from .jets import Jet
from .polytope import HPolytope, PolytopeError, minimal_face

Curve = list[RatPoly]  # one coefficient list per ambient coordinate
Interval = tuple[Fraction, Fraction]


class GraphBuildReject(Exception):
    """A curve/chart configuration ruled out by the criterion itself."""

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


@dataclass(frozen=True)
class CurveGraph:
    """Per-endpoint graph data: coordinates re-indexed so the parameter is 1.

    Positions are 1-based in reports (parameter = 1); `g[i]` is the jet of
    coordinate i+2, `k` the circle weights with k[0] = k_1, `Q` the set of
    positions (2..n) spanning the endpoint's minimal face.
    """

    chart: VertexChart
    circle: CircleEmbedding
    param_chart_index: int          # chart coordinate serving as x1
    other_chart_indices: tuple[int, ...]
    g: tuple[Jet, ...]              # g_2 .. g_n as jets in x1
    k: tuple[int, ...]              # weights, parameter first
    Q: frozenset[int]               # subset of {2..n}
    x1_max: Fraction                # x1 value at the far end of the curve

    @property
    def n(self) -> int:
        return self.chart.n


@dataclass(frozen=True)
class Condition:
    condition: str
    location: str
    outcome: str  # holds | fails | unknown
    detail: str = ""


@dataclass(frozen=True)
class Report:
    name: str
    conditions: tuple[Condition, ...]

    @property
    def status(self) -> str:
        outcomes = [c.outcome for c in self.conditions]
        if "fails" in outcomes:
            return "fails"
        if "unknown" in outcomes:
            return "unknown"
        return "holds"


@dataclass(frozen=True)
class LiftVerdict:
    verdict: str  # accept | reject | inconclusive
    reports: tuple[Report, ...]

    def report(self, name: str) -> Optional[Report]:
        return next((r for r in self.reports if r.name == name), None)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reports": [
                {
                    "name": r.name,
                    "status": r.status,
                    "conditions": [
                        {
                            "condition": c.condition,
                            "location": c.location,
                            "outcome": c.outcome,
                            "detail": c.detail,
                        }
                        for c in r.conditions
                    ],
                }
                for r in self.reports
            ],
        }


def curve_eval(gamma: Curve, s: Fraction) -> tuple[Fraction, ...]:
    return tuple(poly_eval(c, s) for c in gamma)


def curve_deriv(gamma: Curve) -> Curve:
    return [poly_deriv(c) for c in gamma]


def _fmt(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# endpoint graph construction


def build_graph(P: HPolytope, gamma: Curve, interval: Interval, endpoint: int,
                circle: CircleEmbedding, chart_vertex: Optional[Sequence[Fraction]] = None,
                order: int = jets.DEFAULT_ORDER) -> CurveGraph:
    """Convert the curve near one endpoint into chart-graph form.

    endpoint 0 analyzes s = a, endpoint 1 analyzes s = b; the local
    parameter runs into the domain.  Raises GraphBuildReject for
    criterion-level failures (tangent parallel to the face, curve exiting
    the chart cone) and PolytopeError/ValueError for malformed input.
    """
    a, b = interval
    if not a < b:
        raise ValueError("build_graph: empty parameter interval")
    e = a if endpoint == 0 else b
    sign = 1 if endpoint == 0 else -1
    v1 = curve_eval(gamma, e)
    F = minimal_face(P, v1)  # raises if outside the polytope
    if not F.active:
        raise GraphBuildReject("endpoint_interior", f"endpoint {v1} is not on the boundary")
    if chart_vertex is not None:
        o = tuple(Fraction(x) for x in chart_vertex)
        if o not in F.vertices:
            raise PolytopeError(f"chart vertex {o} is not a vertex of the endpoint face")
    else:
        o = min(F.vertices)
    chart = make_chart(P, o)
    n = P.n

    # gamma(e + sign*tau) componentwise, then chart transform U^{-1}(. - o)
    gt = [poly_compose_linear(c, e, Fraction(sign)) for c in gamma]
    diff = [poly_sub(gt[j], [chart.vertex[j]]) for j in range(n)]
    x_polys: list[RatPoly] = []
    for row in chart.inverse:
        acc: RatPoly = []
        for j in range(n):
            acc = poly_add(acc, poly_scale(diff[j], row[j]))
        x_polys.append(acc)

    if all(poly_eval(poly_deriv(c), Fraction(0)) == 0 for c in x_polys):
        raise ValueError("build_graph: curve parametrization is singular at the endpoint")

    Q0 = q_set(chart, v1)
    param = None
    for j in range(n):
        if j in Q0:
            continue
        d1 = x_polys[j][1] if len(x_polys[j]) > 1 else Fraction(0)
        if d1 != 0:
            param = j
            break
    if param is None:
        raise GraphBuildReject(
            "tangent_parallel_to_face",
            f"no chart coordinate off the face moves to first order at {v1}",
        )
    c1 = x_polys[param][1]
    if c1 < 0:
        raise GraphBuildReject(
            "curve_exits_chart_cone",
            f"parameter coordinate {param + 1} decreases into the domain at {v1}",
        )

    f = Jet.poly(x_polys[param], order)
    h = jets.reversion(f)
    others = tuple(j for j in range(n) if j != param)
    g = tuple(jets.compose(Jet.poly(x_polys[j], order), h) for j in others)
    kw = local_weights(chart, circle)
    k = (kw[param],) + tuple(kw[j] for j in others)
    Q = frozenset(pos for pos, j in enumerate(others, start=2) if j in Q0)

    for pos, (j, gj) in enumerate(zip(others, g), start=2):
        if pos in Q:
            assert gj.coeff(0) > 0
        else:
            assert gj.coeff(0) == 0

    x1_max = poly_eval(x_polys[param], b - a)
    return CurveGraph(chart, circle, param, others, g, k, Q, x1_max)


# ---------------------------------------------------------------------------
# individual checks


def check_transversality(gamma: Curve, circle: CircleEmbedding,
                         interval: Interval) -> Report:
    """<gamma'(s), K> must not vanish on the open parameter interval."""
    a, b = interval
    p: RatPoly = []
    for j, coeffs in enumerate(gamma):
        p = poly_add(p, poly_scale(poly_deriv(coeffs), Fraction(circle.K[j])))
    loc = "interior"
    if not p:
        return Report("transversality", (Condition(
            "tangent_circle_pairing", loc, "fails",
            "pairing identically zero (degenerate: orthogonal everywhere)"),))
    roots = sturm_count(p, a, b)
    if roots == 0:
        return Report("transversality", (Condition(
            "tangent_circle_pairing", loc, "holds", "no interior zero of <gamma', K>"),))
    lo, hi = isolate_root(p, a, b)
    return Report("transversality", (Condition(
        "tangent_circle_pairing", loc, "fails",
        f"pairing vanishes in ({_fmt(lo)}, {_fmt(hi)})"),))


def check_interior(P: HPolytope, gamma: Curve, interval: Interval) -> Report:
    """The open curve must stay strictly inside the polytope.

    A facet slack that is identically zero means the curve runs inside that
    facet; by the z_i = 0 convention this is allowed and noted.
    """
    a, b = interval
    mid = (a + b) / 2
    conditions = []
    for i, (alpha, lam) in enumerate(zip(P.normals, P.offsets)):
        inner: RatPoly = []
        for j, coeffs in enumerate(gamma):
            inner = poly_add(inner, poly_scale(coeffs, Fraction(alpha[j])))
        slack = poly_sub([lam], inner)
        loc = f"facet {i + 1}"
        if not slack:
            conditions.append(Condition("facet_slack", loc, "holds", "curve lies inside the facet"))
            continue
        if poly_eval(slack, mid) < 0:
            conditions.append(Condition("facet_slack", loc, "fails", "curve leaves the polytope"))
            continue
        roots = sturm_count(slack, a, b)
        if roots == 0:
            conditions.append(Condition("facet_slack", loc, "holds", "positive on the interior"))
        else:
            lo, hi = isolate_root(slack, a, b)
            conditions.append(Condition(
                "facet_slack", loc, "fails",
                f"interior boundary contact at s in ({_fmt(lo)}, {_fmt(hi)})"))
    return Report("interior", tuple(conditions))


def check_endpoint(graph: CurveGraph, name: str = "endpoint") -> Report:
    """Weight and valuation conditions of the endpoint criterion."""
    conditions = []
    k1 = graph.k[0]
    loc0 = "x1"
    conditions.append(Condition(
        "k1_nonzero", loc0, "holds" if k1 != 0 else "fails", f"k1 = {k1}"))
    for pos in range(2, graph.n + 1):
        ki = graph.k[pos - 1]
        gi = graph.g[pos - 2]
        loc = f"coordinate {pos}"
        if pos in graph.Q:
            conditions.append(Condition(
                "face_weight_vanishes", loc, "holds" if ki == 0 else "fails", f"k = {ki}"))
            sq = jets.sqrt_factor_class(gi)
            if sq.tag in ("smooth_even", "identically_zero"):
                out = "holds"
            elif sq.tag == "unknown":
                out = "unknown"
            else:
                out = "fails"
            conditions.append(Condition(
                "sqrt_smooth_on_face", loc, out,
                f"class {sq.tag}" + (f", valuation {sq.valuation}" if sq.valuation is not None else "")))
        else:
            if k1 == 0:
                conditions.append(Condition(
                    "weight_ratio_integer", loc, "fails", "k1 = 0: ratio undefined"))
                continue
            if ki % k1 != 0:
                conditions.append(Condition(
                    "weight_ratio_integer", loc, "fails", f"{ki}/{k1} not an integer"))
                continue
            m = ki // k1
            conditions.append(Condition(
                "weight_ratio_integer", loc, "holds", f"m = {m}"))
            ds = jets.divided_smoothness(gi, m)
            detail = f"m = {m}"
            a = jets.valuation(gi)
            if isinstance(a, int):
                detail += f", valuation {a}"
            if ds.status == "fails":
                detail += f", {ds.reason}"
            conditions.append(Condition("divided_smoothness", loc, ds.status, detail))
    return Report(name, tuple(conditions))


# ---------------------------------------------------------------------------
# combined verdict


def check_lift(P: HPolytope, gamma: Curve, interval: Interval, circle: CircleEmbedding,
               chart_vertices: tuple[Optional[Sequence[Fraction]], Optional[Sequence[Fraction]]] = (None, None),
               order: int = jets.DEFAULT_ORDER) -> LiftVerdict:
    """Full criterion: containment, transversality, both endpoint analyses."""
    gamma = [poly_trim([Fraction(c) for c in coeffs]) for coeffs in gamma]
    reports = [check_interior(P, gamma, interval), check_transversality(gamma, circle, interval)]
    for ep in (0, 1):
        name = f"endpoint {ep + 1}"
        try:
            graph = build_graph(P, gamma, interval, ep, circle, chart_vertices[ep], order)
        except GraphBuildReject as exc:
            reports.append(Report(name, (Condition(exc.reason, name, "fails", exc.detail),)))
            continue
        reports.append(check_endpoint(graph, name))
    statuses = [r.status for r in reports]
    if "fails" in statuses:
        verdict = "reject"
    elif "unknown" in statuses:
        verdict = "inconclusive"
    else:
        verdict = "accept"
    return LiftVerdict(verdict, tuple(reports))
