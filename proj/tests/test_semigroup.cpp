#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootpoly/paper_checks.hpp"
#include "rootpoly/semigroup.hpp"

using namespace rootpoly;

TEST_CASE("semigroup levels of the unit square") {
  GradedSemigroup S = build_semigroup(unit_square(), 3);
  CHECK(S.generators.size() == 4);
  CHECK(S.levels[1].size() == 4);
  CHECK(S.levels[2].size() == 9);
  CHECK(S.levels[3].size() == 16);
  CHECK(S.contains(IVec{1, 2}, 2));
  CHECK(!S.contains(IVec{3, 0}, 2));
}

TEST_CASE("normality of standard examples") {
  CHECK(check_normality(unit_square(), 4).normal);
  NormalityReport rep = check_normality(non_normal_simplex(), 3);
  CHECK(!rep.normal);
  CHECK(rep.fail_degree == 2);
  CHECK(rep.witness == IVec{1, 1, 1});
}

TEST_CASE("hole count of the non-normal simplex at degree 2") {
  Polytope P = non_normal_simplex();
  GradedSemigroup S = build_semigroup(P, 2);
  CHECK(S.levels[2].size() == 10);
  CHECK(lattice_points(dilate(P, 2)).size() == 11);
}

TEST_CASE("fiber graphs: quadratic generation") {
  CHECK(check_quadratic_generation(unit_square(), 4).ok);
  QuadraticReport rep = check_quadratic_generation(non_koszul_triangle(), 3);
  CHECK(!rep.ok);
  CHECK(rep.fail_degree == 3);
  CHECK(rep.witness == IVec{0, 0});
}

TEST_CASE("the disconnected fiber mirrors xyz = w^3") {
  // Degree-3 fiber over the origin: the all-zeros multiset and the triangle
  // vertex multiset are its two components.
  GradedSemigroup S = build_semigroup(non_koszul_triangle(), 3);
  auto fibers = fiber_multisets(S, IVec{0, 0}, 3);
  CHECK(fibers.size() == 2);
}

TEST_CASE("interval posets") {
  GradedSemigroup S = build_semigroup(unit_square(), 3);
  IntervalPoset I = interval(S, IVec{1, 1}, 2);
  // [0,(1,1)] at degree 2: bottom, top, and the four degree-1 points.
  CHECK(I.elems.size() == 6);
  CHECK(I.open_elements().size() == 4);
  IntervalPoset J = interval(S, IVec{0, 0}, 1);
  CHECK(J.open_elements().empty());
}

TEST_CASE("homology conventions") {
  // Empty complex: H~_{-1} = Z.
  SimplicialComplex empty;
  HomologyProfile he = reduced_homology(empty);
  CHECK(he.reduced(-1).free_rank == 1);
  CHECK(he.reduced(0).is_zero());
  // Two isolated vertices: H~_0 = Z.
  SimplicialComplex two;
  two.n_vertices = 2;
  two.faces = {{{0}, {1}}};
  HomologyProfile h2 = reduced_homology(two);
  CHECK(h2.reduced(-1).is_zero());
  CHECK(h2.reduced(0).free_rank == 1);
  // Hollow triangle: H~_1 = Z.
  SimplicialComplex tri;
  tri.n_vertices = 3;
  tri.faces = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
  HomologyProfile h3 = reduced_homology(tri);
  CHECK(h3.reduced(0).is_zero());
  CHECK(h3.reduced(1).free_rank == 1);
}

TEST_CASE("torsion is detected: a triangulated projective plane") {
  // Minimal 6-vertex triangulation; H~_1 = Z/2.
  SimplicialComplex rp2;
  rp2.n_vertices = 6;
  rp2.faces.resize(3);
  for (int v = 0; v < 6; ++v) rp2.faces[0].push_back({v});
  // Vertices of the icosahedron modulo the antipodal map.
  std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::set<std::vector<int>> edges;
  for (auto t : tris) {
    std::sort(t.begin(), t.end());
    rp2.faces[2].push_back(t);
    edges.insert({t[0], t[1]});
    edges.insert({t[0], t[2]});
    edges.insert({t[1], t[2]});
  }
  rp2.faces[1].assign(edges.begin(), edges.end());
  HomologyProfile h = reduced_homology(rp2);
  CHECK(h.reduced(0).is_zero());
  CHECK(h.reduced(1).free_rank == 0);
  REQUIRE(h.reduced(1).torsion.size() == 1);
  CHECK(h.reduced(1).torsion[0] == 2);
  CHECK(h.reduced(2).is_zero());
}

TEST_CASE("Euler characteristic matches the homology ranks") {
  GradedSemigroup S = build_semigroup(non_koszul_triangle(), 3);
  for (const IVec& x : S.levels[3]) {
    IntervalPoset I = interval(S, x, 3);
    SimplicialComplex K = order_complex_open(I);
    HomologyProfile h = reduced_homology(K);
    long chi = K.euler_characteristic();
    long betti_alt = 0;
    for (int k = 0; k <= h.top_dim; ++k) betti_alt += (k % 2 == 0 ? 1 : -1) * h.reduced(k).free_rank;
    // Unreduced chi = 1 + alternating reduced Betti sum (when nonempty).
    if (K.n_vertices > 0) CHECK(chi == 1 + betti_alt - h.reduced(-1).free_rank);
  }
}

TEST_CASE("Koszul certificates") {
  CHECK(check_koszul_up_to(unit_square(), 4).ok);
  KoszulReport rep = check_koszul_up_to(non_koszul_triangle(), 4);
  CHECK(!rep.ok);
  CHECK(rep.fail_j == 3);
  CHECK(rep.fail_i == 2);
  CHECK(rep.witness == IVec{0, 0});
}

TEST_CASE("Koszul implies quadratic generation on test polytopes") {
  for (const Polytope& P : {unit_square(), non_normal_simplex()}) {
    if (check_koszul_up_to(P, 4).ok) CHECK(check_quadratic_generation(P, 4).ok);
  }
}

TEST_CASE("Cohen-Macaulay checks over Z") {
  // A path (1-dimensional, connected, pure): CM.
  SimplicialComplex path;
  path.n_vertices = 3;
  path.faces = {{{0}, {1}, {2}}, {{0, 1}, {1, 2}}};
  CHECK(check_CM_complex(path).ok);
  // A triangle plus a dangling vertex is not pure: not CM.
  SimplicialComplex mixed;
  mixed.n_vertices = 4;
  mixed.faces = {{{0}, {1}, {2}, {3}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
  CMReport bad = check_CM_complex(mixed);
  CHECK(!bad.ok);
  CHECK(!bad.pure);
  // Open intervals in the unit square semigroup are CM over Z.
  GradedSemigroup S = build_semigroup(unit_square(), 3);
  for (const IVec& x : S.levels[2]) CHECK(check_CM_over_Z(interval(S, x, 2)).ok);
}

TEST_CASE("face heredity never reverses") {
  CHECK(check_face_heredity(unit_square(), HeredityProperty::Normality, 3));
  CHECK(check_face_heredity(unit_square(), HeredityProperty::Koszul, 3));
  // Heredity is one-directional: faces of the non-normal simplex may be
  // normal while the simplex is not; no violation either way.
  CHECK(check_face_heredity(non_normal_simplex(), HeredityProperty::Normality, 3));
  CHECK(check_face_heredity(non_koszul_triangle(), HeredityProperty::Koszul, 3));
}
