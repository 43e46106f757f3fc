#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootpoly/paper_checks.hpp"
#include "rootpoly/polytope.hpp"

using namespace rootpoly;

TEST_CASE("unit square from vertices") {
  Polytope P = unit_square();
  CHECK(P.dim == 2);
  CHECK(P.vertices.size() == 4);
  CHECK(P.facets.size() == 4);
  CHECK(P.is_lattice);
  CHECK(lattice_points(P).size() == 4);
  CHECK(interior_lattice_points(P).empty());
}

TEST_CASE("H- and V-representation round trip") {
  Lattice M = Lattice::standard(2);
  std::vector<QVec> pts = {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(2)}, {Rat(3), Rat(2)},
                           {Rat(1), Rat(1)}};  // interior point, must drop out
  Polytope P = from_vertices(pts, M);
  CHECK(P.vertices.size() == 4);
  Polytope Q = from_inequalities(P.facets, M);
  CHECK(P.vertices == Q.vertices);
  CHECK(P.facets == Q.facets);
}

TEST_CASE("degenerate inputs raise typed errors") {
  Lattice M = Lattice::standard(2);
  CHECK_THROWS_AS(from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}, M), LowerDimensionalError);
  CHECK_THROWS_AS(from_inequalities({Halfspace{IVec{1, 0}, Rat(0)}}, M), UnboundedError);
  // x >= 1 and -x >= 0 in the square: empty.
  std::vector<Halfspace> empty = {Halfspace{IVec{1, 0}, Rat(-1)}, Halfspace{IVec{-1, 0}, Rat(0)},
                                  Halfspace{IVec{0, 1}, Rat(0)}, Halfspace{IVec{0, -1}, Rat(1)}};
  CHECK_THROWS_AS(from_inequalities(empty, M), EmptyError);
}

TEST_CASE("dilation scales counts") {
  Polytope P = unit_square();
  Polytope P2 = dilate(P, 2);
  CHECK(lattice_points(P2).size() == 9);
  CHECK(interior_lattice_points(P2).size() == 1);
}

TEST_CASE("Minkowski sum of segments is a parallelogram") {
  Lattice M = Lattice::standard(2);
  Polytope s1 = from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, M);
  Polytope seg1 = from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(2)}}, M);
  Polytope sum = minkowski_sum({s1, seg1});
  CHECK(sum.vertices.size() >= 4);
  // Direct: sum of [0,(1,0)] x [0,(1,2)] hulls equals hull of pairwise sums.
  std::set<QVec> expect;
  for (const QVec& a : s1.vertices)
    for (const QVec& b : seg1.vertices) expect.insert(add(a, b));
  for (const QVec& v : sum.vertices) CHECK(expect.count(v) == 1);
}

TEST_CASE("affine reduction of a lower-dimensional point set") {
  // Points on the line y = 2x inside Z^2.
  std::vector<IVec> pts = {{Int(0), Int(0)}, {Int(1), Int(2)}, {Int(3), Int(6)}};
  AffineReduction ar = affine_reduce(pts);
  CHECK(ar.poly.dim == 1);
  // The induced lattice must be saturated: (1,2) is the primitive step.
  CHECK(ar.poly.vertices == std::vector<QVec>{{Rat(0)}, {Rat(3)}});
}

TEST_CASE("Cayley sum of two edges matches the non-normal simplex") {
  std::vector<std::vector<IVec>> edges = {{{Int(0), Int(0)}, {Int(1), Int(0)}},
                                          {{Int(0), Int(0)}, {Int(1), Int(2)}}};
  Polytope C = cayley_sum_of_point_sets(edges);
  CHECK(C.dim == 3);
  CHECK(C.vertices.size() == 4);
  CHECK(lattice_isomorphic(C, non_normal_simplex()));
}

TEST_CASE("faces of the unit square") {
  Polytope P = unit_square();
  std::vector<Polytope> faces = proper_faces(P);
  size_t edges = 0, verts = 0;
  for (const Polytope& F : faces) {
    if (F.dim == 1) ++edges;
    if (F.dim == 0) ++verts;
  }
  CHECK(edges == 4);
  CHECK(verts == 4);
}

TEST_CASE("cut-out test against root systems") {
  RootSystem b2 = make_root_system('B', 2);
  RootSystem a2 = make_root_system('A', 2);
  Polytope P = unit_square();
  CHECK(is_cut_out(P, b2).ok);
  CHECK(is_cut_out(P, a2).ok);
  // A diamond needs the diagonal normals of B2; A2 lacks them.
  Lattice M = Lattice::standard(2);
  Polytope diamond =
      from_vertices({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}, M);
  CHECK(is_cut_out(diamond, b2).ok);
  CutOutReport bad = is_cut_out(diamond, a2);
  CHECK(!bad.ok);
  CHECK(bad.failing_facet != static_cast<size_t>(-1));
}

TEST_CASE("lattice isomorphism detects shears, rejects different shapes") {
  Lattice M = Lattice::standard(2);
  Polytope tri = from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, M);
  Polytope sheared = from_vertices({{Rat(5), Rat(7)}, {Rat(6), Rat(8)}, {Rat(5), Rat(8)}}, M);
  CHECK(lattice_isomorphic(tri, sheared));
  Polytope big = from_vertices({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}}, M);
  CHECK(!lattice_isomorphic(tri, big));
}
