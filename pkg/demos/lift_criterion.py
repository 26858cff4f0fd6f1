"""Decide whether curves in the moment polytope lift to smooth invariant
surfaces, and read the diagnostics.

Three instructive cases on the scaled projective-plane simplex:

  1. the diagonal with circle direction (1, 1)  -> accept (a round disc),
  2. the diagonal with circle direction (1, 0)  -> reject (a half-cone:
     the weight ratio m = 0 clashes with the odd valuation of g_2),
  3. an antidiagonal segment with direction (1, 1) -> reject (the tangent
     is orthogonal to the circle direction everywhere, so the pulled-back
     area form vanishes).

Run:  python3 demos/lift_criterion.py
"""

from fractions import Fraction as F

from toriclift import catalog
from toriclift.chart import CircleEmbedding
from toriclift.criterion import build_graph, check_lift


def show(title, P, gamma, interval, K):
    print(f"\n=== {title} ===")
    verdict = check_lift(P, gamma, interval, CircleEmbedding(K))
    print(f"  verdict: {verdict.verdict}")
    for rep in verdict.reports:
        print(f"  {rep.name}: {rep.status}")
        for c in rep.conditions:
            extra = f" ({c.detail})" if c.detail else ""
            print(f"    {c.condition} [{c.location}]: {c.outcome}{extra}")
    return verdict


def main():
    P = catalog.cp2(3)
    diag = [[F(0), F(1)], [F(0), F(1)]]
    iv = (F(0), F(3, 2))

    show("diagonal, K = (1, 1)", P, diag, iv, (1, 1))
    show("diagonal, K = (1, 0)", P, diag, iv, (1, 0))
    show("antidiagonal (s, 2 - s), K = (1, 1)", P,
         [[F(0), F(1)], [F(2), F(-1)]], (F(0), F(2)), (1, 1))

    # a peek under the hood: the endpoint graph of the accepted disc
    graph = build_graph(P, diag, iv, 0, CircleEmbedding((1, 1)))
    print("\nEndpoint graph of the accepted disc at the origin:")
    print(f"  chart vertex {graph.chart.vertex}, weights k = {graph.k}")
    print(f"  g_2 jet coefficients: {graph.g[0].coeffs[:4]} ...")
    print(f"  face index set Q = {sorted(graph.Q)}, x1 range = {graph.x1_max}")


if __name__ == "__main__":
    main()
