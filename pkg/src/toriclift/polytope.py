"""H-representation polytopes: vertices, faces, Delzant/quasitoric checks,
the characteristic subtorus map, and the quotient identification rule.

A polytope is {x : <x, normal_i> <= offset_i} with primitive integer
normals and rational offsets.  All enumeration is brute force over facet
subsets, which is exact and fast at desk scale (n <= 4, a few dozen
facets).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exactmath import (
    IntVec,
    RatVec,
    dot,
    hnf,
    int_det,
    integer_kernel_basis,
    invert_rational,
    primitive,
    rank,
    saturation_index,
    solve_rational,
)

Point = tuple[Fraction, ...]


class PolytopeError(ValueError):
    """Invalid polytope data (unbounded, degenerate, malformed)."""


@dataclass(frozen=True)
class HPolytope:
    """Bounded full-dimensional polytope in H-representation."""

    n: int
    normals: tuple[IntVec, ...]
    offsets: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "normals", tuple(tuple(int(x) for x in a) for a in self.normals))
        object.__setattr__(self, "offsets", tuple(Fraction(o) for o in self.offsets))
        if len(self.normals) != len(self.offsets):
            raise PolytopeError("normal/offset count mismatch")
        for a in self.normals:
            if len(a) != self.n:
                raise PolytopeError("normal of wrong dimension")
            if not any(a):
                raise PolytopeError("zero facet normal")
            if primitive(a) != a:
                raise PolytopeError(f"facet normal {a} is not primitive")
        if len(set(self.normals)) != len(self.normals):
            raise PolytopeError("duplicate facet normal")
        _check_bounded(self.normals, self.n)
        verts = enumerate_vertices(self)
        if not verts:
            raise PolytopeError("empty polytope")
        v0 = verts[0][0]
        diffs = [[p[i] - v0[i] for i in range(self.n)] for p, _ in verts[1:]]
        # full-dimensional iff the vertex differences span R^n
        r = _rational_rank(diffs) if diffs else 0
        if r < self.n:
            raise PolytopeError("polytope is not full-dimensional")

    @property
    def d(self) -> int:
        return len(self.normals)

    def contains(self, p: Sequence[Fraction]) -> bool:
        return all(dot(p, a) <= lam for a, lam in zip(self.normals, self.offsets))

    def tight_facets(self, p: Sequence[Fraction]) -> frozenset[int]:
        return frozenset(
            i for i, (a, lam) in enumerate(zip(self.normals, self.offsets)) if dot(p, a) == lam
        )


def _rational_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    r = 0
    n = len(m[0]) if m else 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _check_bounded(normals: Sequence[IntVec], n: int) -> None:
    """The recession cone {x : <x, a_i> <= 0 for all i} must be {0}."""
    if rank([list(a) for a in normals]) < n:
        raise PolytopeError("unbounded polytope: normals do not span")
    for subset in itertools.combinations(range(len(normals)), n - 1):
        sub = [list(normals[i]) for i in subset]
        if rank(sub) != n - 1:
            continue
        for ray in integer_kernel_basis(sub) or []:
            for d in (ray, tuple(-x for x in ray)):
                if all(dot(d, a) <= 0 for a in normals):
                    raise PolytopeError(f"unbounded polytope: recession ray {d}")


@dataclass(frozen=True)
class Face:
    """Face as its canonical active facet set plus vertex data."""

    active: frozenset[int]
    dim: int
    vertices: tuple[Point, ...]


@dataclass(frozen=True)
class Subtorus:
    """Subtorus of T^n given by generator columns in the Lie-algebra lattice."""

    generators: tuple[IntVec, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)


@lru_cache(maxsize=None)
def enumerate_vertices(P: HPolytope) -> list[tuple[Point, frozenset[int]]]:
    """All vertices with their full active facet sets, sorted lexicographically."""
    seen: dict[Point, frozenset[int]] = {}
    for subset in itertools.combinations(range(P.d), P.n):
        A = [[Fraction(x) for x in P.normals[i]] for i in subset]
        b = tuple(P.offsets[i] for i in subset)
        res = solve_rational(A, b)
        if res.status != "unique":
            continue
        p = res.solution
        if not P.contains(p):
            continue
        seen.setdefault(p, P.tight_facets(p))
    return sorted(seen.items())


@lru_cache(maxsize=None)
def face_lattice(P: HPolytope) -> list[Face]:
    """Every face of every dimension, including P itself and the vertices.

    Faces are the closures of vertex active-sets under intersection,
    canonicalized so each face carries the maximal facet set shared by its
    vertices.
    """
    verts = enumerate_vertices(P)
    vsets = [act for _, act in verts]

    def canonical(A: frozenset[int]) -> frozenset[int]:
        members = [act for act in vsets if act >= A]
        out = members[0]
        for m in members[1:]:
            out &= m
        return out

    faces: set[frozenset[int]] = {canonical(a) for a in vsets}
    faces.add(canonical(frozenset()))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(faces), 2):
            c = canonical(a & b)
            if c not in faces:
                faces.add(c)
                changed = True
    out = []
    for act in faces:
        vlist = tuple(p for p, va in verts if va >= act)
        sub = [list(P.normals[i]) for i in sorted(act)]
        dim = P.n - (rank(sub) if sub else 0)
        out.append(Face(act, dim, vlist))
    return sorted(out, key=lambda f: (f.dim, sorted(f.active)))


def edge_vectors_at_vertex(P: HPolytope, v: Sequence[Fraction]) -> list[IntVec]:
    """Primitive edge directions at a simple vertex, as columns.

    Column j relaxes the j-th active facet (sorted by facet index): it is
    orthogonal to every other active normal and pairs negatively with the
    relaxed one.
    """
    v = tuple(Fraction(x) for x in v)
    active = sorted(P.tight_facets(v))
    if len(active) != P.n:
        raise PolytopeError(f"vertex {v} is not simple: {len(active)} active facets")
    cols = []
    for j, fj in enumerate(active):
        others = [list(P.normals[f]) for k, f in enumerate(active) if k != j]
        kern = integer_kernel_basis(others) if others else [tuple(1 if i == 0 else 0 for i in range(P.n))]
        if len(kern) != 1:
            raise PolytopeError(f"degenerate edge at vertex {v}")
        u = kern[0]
        pairing = dot(u, P.normals[fj])
        if pairing == 0:
            raise PolytopeError(f"degenerate normals at vertex {v}")
        if pairing > 0:
            u = tuple(-x for x in u)
        cols.append(u)
    return cols


@dataclass(frozen=True)
class VertexVerdict:
    vertex: Point
    simple: bool
    rational: bool
    det: Optional[int]
    smooth: bool


@dataclass(frozen=True)
class DelzantReport:
    ok: bool
    verdicts: tuple[VertexVerdict, ...]

    def failures(self) -> list[VertexVerdict]:
        return [v for v in self.verdicts if not (v.simple and v.rational and v.smooth)]


def validate_delzant(P: HPolytope) -> DelzantReport:
    """Per-vertex simple/rational/smooth verdicts; pass iff all pass."""
    verdicts = []
    for v, active in enumerate_vertices(P):
        simple = len(active) == P.n
        if not simple:
            verdicts.append(VertexVerdict(v, False, True, None, False))
            continue
        U = edge_vectors_at_vertex(P, v)
        det = int_det([[U[j][i] for j in range(P.n)] for i in range(P.n)])
        verdicts.append(VertexVerdict(v, True, True, det, abs(det) == 1))
    return DelzantReport(all(v.simple and v.rational and v.smooth for v in verdicts), tuple(verdicts))


@dataclass(frozen=True)
class QuasitoricReport:
    ok: bool
    vertex_dets: tuple[tuple[Point, int], ...]
    strict: bool


def validate_quasitoric(P: HPolytope, facet_vectors: Sequence[Sequence[int]],
                        strict: bool = True) -> QuasitoricReport:
    """Facet-vector determinant condition at every vertex.

    `strict` demands det = +1 exactly (facet vectors taken in increasing
    facet-index order); relaxed mode accepts |det| = 1.
    """
    if len(facet_vectors) != P.d:
        raise PolytopeError("one facet vector required per facet")
    vecs = [tuple(int(x) for x in v) for v in facet_vectors]
    dets = []
    ok = True
    for v, active in enumerate_vertices(P):
        if len(active) != P.n:
            raise PolytopeError("quasitoric validation needs a simple polytope")
        cols = [vecs[i] for i in sorted(active)]
        det = int_det([[cols[j][i] for j in range(P.n)] for i in range(P.n)])
        dets.append((v, det))
        if (det != 1) if strict else (abs(det) != 1):
            ok = False
    return QuasitoricReport(ok, tuple(dets), strict)


def minimal_face(P: HPolytope, r: Sequence[Fraction]) -> Face:
    """The face containing r in its relative interior."""
    r = tuple(Fraction(x) for x in r)
    if not P.contains(r):
        raise PolytopeError(f"point {r} outside the polytope")
    active = P.tight_facets(r)
    for f in face_lattice(P):
        if f.active == active:
            return f
    raise AssertionError("tight facet set of an interior point must be a face")


def characteristic_subtorus(P: HPolytope, F: Face) -> Subtorus:
    """Generators of the isotropy subtorus of a face: the active normals."""
    gens = tuple(P.normals[i] for i in sorted(F.active))
    if gens:
        idx = saturation_index(gens)
        if idx != 1:
            raise PolytopeError(
                f"subtorus generators of face {sorted(F.active)} are not saturated (index {idx})"
            )
    return Subtorus(gens)


def in_subtorus(gens: Sequence[IntVec], delta: Sequence[Fraction], n: int) -> bool:
    """Is delta (mod Z^n) in the subtorus spanned by the generator columns?

    Decides existence of real phi and integer m with delta = G phi + m by
    eliminating phi: with C an integer basis of the left kernel of G, the
    condition is C delta in C Z^n, checked by an exact lattice solve.
    """
    if not gens:
        C = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        # left kernel of the column matrix G = kernel of the row matrix of generators
        C = [list(v) for v in integer_kernel_basis([list(g) for g in gens])]
        if not C:
            return True  # generators span R^n: full torus
    e = [sum(Fraction(C[i][j]) * delta[j] for j in range(n)) for i in range(len(C))]
    # lattice generated by the columns of C (as a map Z^n -> Z^k)
    H, _ = hnf(C)
    basis_cols = [col for col in zip(*H) if any(col)]
    A = [[Fraction(basis_cols[j][i]) for j in range(len(basis_cols))] for i in range(len(C))]
    res = solve_rational(A, tuple(e))
    if res.status == "none":
        return False
    assert res.status == "unique"
    return all(x.denominator == 1 for x in res.solution)


def points_equivalent(P: HPolytope, tp1: tuple[Sequence[Fraction], Sequence[Fraction]],
                      tp2: tuple[Sequence[Fraction], Sequence[Fraction]]) -> bool:
    """Identification rule of the quotient construction.

    (t1, r1) ~ (t2, r2) iff r1 = r2 and t1 - t2 (mod Z^n) lies in the
    subtorus attached to the minimal face containing r1.
    """
    t1, r1 = tp1
    t2, r2 = tp2
    r1 = tuple(Fraction(x) for x in r1)
    r2 = tuple(Fraction(x) for x in r2)
    for r in (r1, r2):
        if not P.contains(r):
            raise PolytopeError(f"point {r} outside the polytope")
    if r1 != r2:
        return False
    F = minimal_face(P, r1)
    sub = characteristic_subtorus(P, F)
    delta = tuple(Fraction(a) - Fraction(b) for a, b in zip(t1, t2))
    if len(delta) != P.n:
        raise PolytopeError("torus point of wrong dimension")
    return in_subtorus(sub.generators, delta, P.n)
