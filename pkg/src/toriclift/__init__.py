"""Delzant polytope validation and the equivariant curve-lift criterion.

Exact decision machinery lives in `exactmath`, `jets`, `polytope`,
`chart`, and `criterion`; the floating-point surface oracle in `surface`;
file formats in `io`; standard polytopes in `catalog`.
"""

from .chart import CircleEmbedding, VertexChart, make_chart, to_chart, from_chart
from .criterion import CurveGraph, LiftVerdict, build_graph, check_lift
from .jets import Jet
from .polytope import Face, HPolytope, Subtorus, validate_delzant

__all__ = [
    "CircleEmbedding",
    "CurveGraph",
    "Face",
    "HPolytope",
    "Jet",
    "LiftVerdict",
    "Subtorus",
    "VertexChart",
    "build_graph",
    "check_lift",
    "from_chart",
    "make_chart",
    "to_chart",
    "validate_delzant",
]

__version__ = "0.1.0"
