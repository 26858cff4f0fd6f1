"""Command-line front end.

Exit codes: 0 accept/pass, 1 reject/fail, 2 inconclusive, 3 usage or
parse error.  Machine output (--json) is byte-deterministic for identical
inputs.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import io, surface
from .criterion import GraphBuildReject, check_lift
from .polytope import (
    PolytopeError,
    face_lattice,
    points_equivalent,
    validate_delzant,
    validate_quasitoric,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def _emit(args, machine: dict, human: list[str]) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(io.dumps_deterministic(machine))
    else:
        for line in human:
            print(line)


def cmd_validate(args) -> int:
    P = io.load_polytope(args.polytope)
    report = validate_delzant(P)
    machine = {
        "command": "validate",
        "ok": report.ok,
        "vertices": [
            {
                "vertex": [io.format_rational(x) for x in v.vertex],
                "simple": v.simple,
                "rational": v.rational,
                "det": v.det,
                "smooth": v.smooth,
            }
            for v in report.verdicts
        ],
    }
    human = [f"Delzant validation: {'PASS' if report.ok else 'FAIL'}"]
    for v in report.verdicts:
        pt = "(" + ", ".join(io.format_rational(x) for x in v.vertex) + ")"
        if v.simple and v.smooth:
            human.append(f"  vertex {pt}: ok (det {v.det})")
        elif not v.simple:
            human.append(f"  vertex {pt}: FAIL (not simple)")
        else:
            human.append(f"  vertex {pt}: FAIL (|det| = {abs(v.det)})")
    _emit(args, machine, human)
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_quasitoric(args) -> int:
    P = io.load_polytope(args.polytope)
    vectors = io.load_facet_vectors(args.vectors)
    report = validate_quasitoric(P, vectors, strict=not args.relax_sign)
    machine = {
        "command": "quasitoric",
        "ok": report.ok,
        "strict": report.strict,
        "vertices": [
            {"vertex": [io.format_rational(x) for x in v], "det": d}
            for v, d in report.vertex_dets
        ],
    }
    human = [f"Quasitoric facet-vector check ({'det = +1' if report.strict else '|det| = 1'}): "
             f"{'PASS' if report.ok else 'FAIL'}"]
    for v, d in report.vertex_dets:
        pt = "(" + ", ".join(io.format_rational(x) for x in v) + ")"
        human.append(f"  vertex {pt}: det = {d}")
    _emit(args, machine, human)
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_faces(args) -> int:
    P = io.load_polytope(args.polytope)
    faces = face_lattice(P)
    machine = {
        "command": "faces",
        "faces": [
            {
                "active": sorted(f.active),
                "dim": f.dim,
                "vertices": [[io.format_rational(x) for x in v] for v in f.vertices],
            }
            for f in faces
        ],
    }
    human = [f"{len(faces)} faces"]
    for f in faces:
        human.append(f"  dim {f.dim}: facets {sorted(i + 1 for i in f.active)}, "
                     f"{len(f.vertices)} vertices")
    _emit(args, machine, human)
    return EXIT_PASS


def _parse_vec(s: str, field: str):
    return tuple(io.parse_rational(part, field) for part in s.split(","))


def cmd_equiv(args) -> int:
    P = io.load_polytope(args.polytope)
    r = _parse_vec(args.r, "--r")
    t1 = _parse_vec(args.t1, "--t1")
    t2 = _parse_vec(args.t2, "--t2")
    eq = points_equivalent(P, (t1, r), (t2, r))
    machine = {"command": "equiv", "equivalent": eq}
    _emit(args, machine, [f"equivalent: {eq}"])
    return EXIT_PASS if eq else EXIT_FAIL


def cmd_lift_check(args) -> int:
    P = io.load_polytope(args.polytope)
    spec = io.load_curve(args.curve)
    verdict = check_lift(P, spec.gamma, spec.interval, spec.circle,
                         spec.chart_vertices, order=args.max_order)
    machine = {"command": "lift-check", **verdict.to_dict()}
    human = [f"verdict: {verdict.verdict}"]
    for rep in verdict.reports:
        human.append(f"  {rep.name}: {rep.status}")
        for c in rep.conditions:
            human.append(f"    {c.condition} [{c.location}]: {c.outcome}"
                         + (f" ({c.detail})" if c.detail else ""))
    _emit(args, machine, human)
    return {"accept": EXIT_PASS, "reject": EXIT_FAIL,
            "inconclusive": EXIT_INCONCLUSIVE}[verdict.verdict]


def cmd_sample(args) -> int:
    from .criterion import build_graph

    P = io.load_polytope(args.polytope)
    spec = io.load_curve(args.curve)
    graph = build_graph(P, spec.gamma, spec.interval, args.endpoint, spec.circle,
                        spec.chart_vertices[args.endpoint], order=args.max_order)
    sample = surface.sample_surface(graph, args.nx, args.nt)
    fmt = args.format or ("obj" if str(args.out).endswith(".obj") else "csv")
    project = tuple(int(i) - 1 for i in args.project.split(","))
    surface.export_mesh(sample, fmt, args.out, project=project)
    if not args.json:
        print(f"wrote {args.out} ({args.nx}x{args.nt} grid, format {fmt})")
    else:
        sys.stdout.write(io.dumps_deterministic(
            {"command": "sample", "out": str(args.out), "nx": args.nx, "nt": args.nt,
             "format": fmt}))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="toriclift",
        description="Delzant polytope validation and the equivariant curve-lift criterion.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("validate", help="Delzant (simple/rational/smooth) report")
    p.add_argument("polytope")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quasitoric", help="facet-vector determinant report")
    p.add_argument("polytope")
    p.add_argument("vectors")
    p.add_argument("--relax-sign", action="store_true", help="accept |det| = 1")
    common(p)
    p.set_defaults(func=cmd_quasitoric)

    p = sub.add_parser("faces", help="face lattice dump")
    p.add_argument("polytope")
    common(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("equiv", help="quotient-construction point equivalence")
    p.add_argument("polytope")
    p.add_argument("--r", required=True, help="base point, comma-separated rationals")
    p.add_argument("--t1", required=True, help="first torus point (mod 1)")
    p.add_argument("--t2", required=True, help="second torus point (mod 1)")
    common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("lift-check", help="decide the equivariant lift criterion")
    p.add_argument("polytope")
    p.add_argument("curve")
    p.add_argument("--max-order", type=int, default=16)
    common(p)
    p.set_defaults(func=cmd_lift_check)

    p = sub.add_parser("sample", help="sample the rotated surface and export a mesh")
    p.add_argument("polytope")
    p.add_argument("curve")
    p.add_argument("--nx", type=int, default=64)
    p.add_argument("--nt", type=int, default=128)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "obj"])
    p.add_argument("--project", default="1,2,3", help="coordinates for the OBJ projection")
    p.add_argument("--endpoint", type=int, choices=[0, 1], default=0)
    p.add_argument("--max-order", type=int, default=16)
    common(p)
    p.set_defaults(func=cmd_sample)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except GraphBuildReject as exc:
        print(f"reject: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (io.FormatError, PolytopeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
