"""JSON file formats: polytopes, curves, facet-vector files, jets, verdicts.

Rationals serialize as strings "p/q" (or "p" when q = 1); decimal literals
are rejected so nothing silently loses exactness.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional, Sequence

from .chart import CircleEmbedding
from .criterion import LiftVerdict
from .jets import Jet
from .polytope import HPolytope

RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Schema violation or non-rational literal in an input file."""


def parse_rational(s, field: str = "value") -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not RATIONAL_RE.match(s.strip()):
        raise FormatError(
            f"{field}: expected a rational literal like '3' or '1/2', got {s!r}")
    return Fraction(s.strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_point(obj, field: str) -> tuple[Fraction, ...]:
    if not isinstance(obj, (list, tuple)):
        raise FormatError(f"{field}: expected a list of rationals")
    return tuple(parse_rational(v, f"{field}[{i}]") for i, v in enumerate(obj))


# ---------------------------------------------------------------------------
# polytopes


def polytope_from_dict(d: dict) -> HPolytope:
    try:
        n = int(d["n"])
        facets = d["facets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"polytope: missing or malformed field ({exc})") from exc
    normals, offsets = [], []
    for i, f in enumerate(facets):
        if not isinstance(f, dict) or "normal" not in f or "offset" not in f:
            raise FormatError(f"facets[{i}]: need 'normal' and 'offset'")
        normal = f["normal"]
        if not isinstance(normal, list) or not all(isinstance(x, int) for x in normal):
            raise FormatError(f"facets[{i}].normal: expected a list of integers")
        normals.append(tuple(normal))
        offsets.append(parse_rational(f["offset"], f"facets[{i}].offset"))
    return HPolytope(n, tuple(normals), tuple(offsets))


def polytope_to_dict(P: HPolytope) -> dict:
    return {
        "n": P.n,
        "facets": [
            {"normal": list(a), "offset": format_rational(lam)}
            for a, lam in zip(P.normals, P.offsets)
        ],
    }


def load_polytope(path) -> HPolytope:
    with open(path) as fh:
        return polytope_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# curves


class CurveSpec:
    """Parsed curve file: polynomial coordinates, domain, circle, charts."""

    def __init__(self, gamma: list[list[Fraction]], interval, circle: CircleEmbedding,
                 chart_vertices: tuple[Optional[tuple[Fraction, ...]], Optional[tuple[Fraction, ...]]]):
        self.gamma = gamma
        self.interval = interval
        self.circle = circle
        self.chart_vertices = chart_vertices


def curve_from_dict(d: dict) -> CurveSpec:
    if not isinstance(d, dict):
        raise FormatError("curve: expected an object")
    try:
        coords = d["coords"]
        domain = d["domain"]
        circle = d["circle"]
    except KeyError as exc:
        raise FormatError(f"curve: missing field {exc}") from exc
    if not isinstance(coords, list) or not coords:
        raise FormatError("coords: expected a nonempty list of coefficient lists")
    gamma = [
        [parse_rational(c, f"coords[{i}][{j}]") for j, c in enumerate(coeffs)]
        for i, coeffs in enumerate(coords)
    ]
    if not isinstance(domain, list) or len(domain) != 2:
        raise FormatError("domain: expected [start, end]")
    a = parse_rational(domain[0], "domain[0]")
    b = parse_rational(domain[1], "domain[1]")
    if not a < b:
        raise FormatError("domain: start must be < end")
    if not isinstance(circle, list) or not all(isinstance(x, int) for x in circle):
        raise FormatError("circle: expected a list of integers")
    if not any(circle):
        raise FormatError("circle: direction must be nonzero (effective action)")
    charts: list[Optional[tuple[Fraction, ...]]] = [None, None]
    eps = d.get("endpoints", [])
    if eps:
        if not isinstance(eps, list) or len(eps) > 2:
            raise FormatError("endpoints: expected up to two endpoint objects")
        for i, ep in enumerate(eps):
            if ep and "chart_vertex" in ep and ep["chart_vertex"] is not None:
                charts[i] = parse_point(ep["chart_vertex"], f"endpoints[{i}].chart_vertex")
    return CurveSpec(gamma, (a, b), CircleEmbedding(tuple(circle)), (charts[0], charts[1]))


def load_curve(path) -> CurveSpec:
    with open(path) as fh:
        return curve_from_dict(json.load(fh))


def load_facet_vectors(path) -> list[tuple[int, ...]]:
    with open(path) as fh:
        d = json.load(fh)
    vecs = d.get("vectors") if isinstance(d, dict) else None
    if not isinstance(vecs, list):
        raise FormatError("facet vectors: expected {'vectors': [[...], ...]}")
    out = []
    for i, v in enumerate(vecs):
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise FormatError(f"vectors[{i}]: expected a list of integers")
        out.append(tuple(v))
    return out


# ---------------------------------------------------------------------------
# jets and verdicts


def jet_to_dict(j: Jet) -> dict:
    return {"coeffs": [format_rational(c) for c in j.coeffs], "exact": j.exact}


def jet_from_dict(d: dict) -> Jet:
    coeffs = [parse_rational(c, f"coeffs[{i}]") for i, c in enumerate(d["coeffs"])]
    return Jet(tuple(coeffs), bool(d.get("exact", False)))


def dumps_deterministic(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def verdict_to_json(v: LiftVerdict) -> str:
    return dumps_deterministic(v.to_dict())
