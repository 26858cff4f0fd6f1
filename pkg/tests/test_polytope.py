from fractions import Fraction

import pytest

from toriclift import catalog
from toriclift.polytope import (
    HPolytope,
    PolytopeError,
    characteristic_subtorus,
    edge_vectors_at_vertex,
    enumerate_vertices,
    face_lattice,
    minimal_face,
    points_equivalent,
    validate_delzant,
    validate_quasitoric,
)

F = Fraction


def pts(vertex_list):
    return {tuple(map(F, v)) for v in vertex_list}


class TestConstruction:
    def test_unbounded_rejected(self):
        with pytest.raises(PolytopeError, match="unbounded"):
            HPolytope(2, ((-1, 0), (0, -1)), (F(0), F(0)))

    def test_non_primitive_normal_rejected(self):
        with pytest.raises(PolytopeError, match="primitive"):
            HPolytope(2, ((-2, 0), (0, -1), (2, 2)), (F(0), F(0), F(3)))

    def test_duplicate_facet_rejected(self):
        with pytest.raises(PolytopeError, match="duplicate"):
            HPolytope(1, ((1,), (1,), (-1,)), (F(1), F(1), F(0)))

    def test_empty_rejected(self):
        with pytest.raises(PolytopeError):
            HPolytope(1, ((1,), (-1,)), (F(-2), F(0)))


class TestVertices:
    def test_cp2(self, cp2):
        assert {p for p, _ in enumerate_vertices(cp2)} == pts([(0, 0), (3, 0), (0, 3)])

    def test_square(self, square):
        assert {p for p, _ in enumerate_vertices(square)} == pts([(0, 0), (1, 0), (0, 1), (1, 1)])

    def test_hirzebruch(self, hirzebruch):
        assert {p for p, _ in enumerate_vertices(hirzebruch)} == pts([(0, 0), (2, 0), (0, 1), (1, 1)])

    def test_active_sets_exact(self, cp2):
        for p, active in enumerate_vertices(cp2):
            for i, (a, lam) in enumerate(zip(cp2.normals, cp2.offsets)):
                val = sum(F(a[j]) * p[j] for j in range(2))
                assert val <= lam
                assert (val == lam) == (i in active)


class TestFaceLattice:
    def test_cp2_counts(self, cp2):
        faces = face_lattice(cp2)
        by_dim = {d: sum(1 for f in faces if f.dim == d) for d in (0, 1, 2)}
        assert by_dim == {0: 3, 1: 3, 2: 1}

    def test_square_counts(self, square):
        faces = face_lattice(square)
        by_dim = {d: sum(1 for f in faces if f.dim == d) for d in (0, 1, 2)}
        assert by_dim == {0: 4, 1: 4, 2: 1}

    def test_interval(self):
        P = catalog.box([1])
        faces = face_lattice(P)
        assert [f.dim for f in faces] == [0, 0, 1]

    def test_euler_alternating_sum(self, cp2, hirzebruch):
        for P in (cp2, hirzebruch, catalog.cp3()):
            total = sum((-1) ** f.dim for f in face_lattice(P))
            assert total == 1


class TestEdgeVectors:
    def test_cp2_origin(self, cp2):
        assert edge_vectors_at_vertex(cp2, (F(0), F(0))) == [(1, 0), (0, 1)]

    def test_cp2_far_vertex(self, cp2):
        cols = edge_vectors_at_vertex(cp2, (F(3), F(0)))
        assert set(cols) == {(-1, 0), (-1, 1)}

    def test_hirzebruch_top_vertex(self, hirzebruch):
        cols = edge_vectors_at_vertex(hirzebruch, (F(1), F(1)))
        assert set(cols) == {(-1, 0), (1, -1)}

    def test_pairing_signs(self, cp2, hirzebruch):
        # each column pairs to zero with every active normal except the one
        # it relaxes, where the pairing is negative
        for P in (cp2, hirzebruch):
            for v, active in enumerate_vertices(P):
                cols = edge_vectors_at_vertex(P, v)
                act = sorted(active)
                for j, u in enumerate(cols):
                    for k, fi in enumerate(act):
                        pair = sum(u[i] * P.normals[fi][i] for i in range(P.n))
                        if k == j:
                            assert pair < 0
                        else:
                            assert pair == 0


class TestDelzant:
    def test_catalog_passes(self, cp2, square, hirzebruch):
        for P in (cp2, square, hirzebruch, catalog.cp3()):
            rep = validate_delzant(P)
            assert rep.ok, rep.failures()
            assert all(abs(v.det) == 1 for v in rep.verdicts)

    def test_bad_triangle(self, bad_triangle):
        rep = validate_delzant(bad_triangle)
        assert not rep.ok
        bad = rep.failures()
        assert len(bad) == 1
        assert bad[0].vertex == (F(1), F(0))
        assert abs(bad[0].det) == 2


class TestQuasitoric:
    def test_cp2_signed_normals(self, cp2):
        # sign choices making each vertex determinant +1
        rep = validate_quasitoric(cp2, [(1, 0), (0, 1), (-1, 1)])
        assert rep.ok

    def test_repeated_vector_on_parallel_facets_ok(self, square):
        # parallel facets never meet at a vertex, so they may share a vector
        rep = validate_quasitoric(square, [(1, 0), (1, 0), (0, 1), (0, 1)])
        assert rep.ok
        assert all(d == 1 for _, d in rep.vertex_dets)

    def test_strict_vs_relaxed(self, square):
        vectors = [(1, 0), (1, 0), (0, 1), (0, -1)]
        strict = validate_quasitoric(square, vectors, strict=True)
        relaxed = validate_quasitoric(square, vectors, strict=False)
        assert set(d for _, d in strict.vertex_dets) == {1, -1}
        assert relaxed.ok
        assert not strict.ok

    def test_repeated_vector_on_adjacent_facets(self, cp2):
        rep = validate_quasitoric(cp2, [(1, 0), (1, 0), (1, 1)], strict=False)
        assert not rep.ok
        assert any(d == 0 for _, d in rep.vertex_dets)

    def test_count_mismatch(self, cp2):
        with pytest.raises(PolytopeError):
            validate_quasitoric(cp2, [(1, 0)])


class TestMinimalFace:
    def test_interior(self, cp2):
        f = minimal_face(cp2, (F(1), F(1)))
        assert f.active == frozenset() and f.dim == 2

    def test_edge_point(self, cp2):
        f = minimal_face(cp2, (F(1), F(0)))
        assert f.active == frozenset({1}) and f.dim == 1

    def test_vertex(self, cp2):
        f = minimal_face(cp2, (F(0), F(0)))
        assert f.active == frozenset({0, 1}) and f.dim == 0

    def test_outside_rejected(self, cp2):
        with pytest.raises(PolytopeError):
            minimal_face(cp2, (F(5), F(5)))


class TestCharacteristicSubtorus:
    def test_facet_circle(self, cp2):
        f = minimal_face(cp2, (F(3, 2), F(3, 2)))  # facet with normal (1,1)
        sub = characteristic_subtorus(cp2, f)
        assert sub.generators == ((1, 1),)

    def test_vertex_full_torus(self, cp2):
        f = minimal_face(cp2, (F(0), F(0)))
        sub = characteristic_subtorus(cp2, f)
        assert sub.rank == 2

    def test_whole_polytope_trivial(self, cp2):
        f = minimal_face(cp2, (F(1), F(1)))
        assert characteristic_subtorus(cp2, f).rank == 0

    def test_codimension_matches_rank(self, cp2, hirzebruch):
        for P in (cp2, hirzebruch, catalog.cp3()):
            for f in face_lattice(P):
                sub = characteristic_subtorus(P, f)
                assert sub.rank == P.n - f.dim


class TestPointsEquivalent:
    def test_facet_direction(self, cp2):
        r = (F(1), F(0))  # interior of facet with normal (0,-1)
        assert points_equivalent(cp2, ((F(1, 4), F(7, 10)), r), ((F(1, 4), F(1, 10)), r))

    def test_off_direction(self, cp2):
        r = (F(1), F(0))
        assert not points_equivalent(cp2, ((F(1, 4), F(7, 10)), r), ((F(9, 10), F(7, 10)), r))

    def test_vertex_collapses(self, cp2):
        r = (F(0), F(0))
        assert points_equivalent(cp2, ((F(1, 3), F(2, 7)), r), ((F(5, 6), F(1, 2)), r))

    def test_interior_singleton(self, cp2):
        r = (F(1), F(1))
        assert points_equivalent(cp2, ((F(1, 2), F(1, 2)), r), ((F(1, 2), F(1, 2)), r))
        assert not points_equivalent(cp2, ((F(1, 2), F(1, 2)), r), ((F(1, 2), F(1, 3)), r))

    def test_integer_shift_identified(self, cp2):
        r = (F(1), F(1))
        assert points_equivalent(cp2, ((F(3, 2), F(1, 2)), r), ((F(1, 2), F(5, 2)), r))

    def test_different_base_points(self, cp2):
        t = (F(0), F(0))
        assert not points_equivalent(cp2, ((t), (F(1), F(1))), ((t), (F(1), F(2))))

    def test_equivalence_relation_on_samples(self, cp2, square):
        torus_pts = [(F(a, 5), F(b, 4)) for a in range(3) for b in range(3)][:8]
        base_pts = [(F(1), F(1)), (F(1), F(0)), (F(0), F(0)), (F(3, 2), F(3, 2))]
        for P, bases in ((cp2, base_pts), (square, [(F(1, 2), F(1, 2)), (F(0), F(1, 2)), (F(1), F(1))])):
            for r in bases:
                rel ={(i, j): points_equivalent(P, (torus_pts[i], r), (torus_pts[j], r))
                       for i in range(len(torus_pts)) for j in range(len(torus_pts))}
                for i in range(len(torus_pts)):
                    assert rel[(i, i)]
                    for j in range(len(torus_pts)):
                        assert rel[(i, j)] == rel[(j, i)]
                        for k in range(len(torus_pts)):
                            if rel[(i, j)] and rel[(j, k)]:
                                assert rel[(i, k)]
