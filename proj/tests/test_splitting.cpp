#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootpoly/ehrhart.hpp"
#include "rootpoly/paper_checks.hpp"
#include "rootpoly/splitting.hpp"

using namespace rootpoly;

TEST_CASE("splitting polytope of the unit square is the [-1,1] square") {
  SplittingPolytope sp = splitting_polytope(unit_square());
  CHECK(sp.normals.size() == 2);
  CHECK(sp.F.vertices.size() == 4);
  for (const QVec& v : sp.F.vertices)
    for (const Rat& x : v) CHECK((x == 1 || x == -1));
}

TEST_CASE("type A splitting for every q >= 1") {
  RootSystem a2 = make_root_system('A', 2);
  SplittingPolytope sp = splitting_polytope(a2);
  for (long q : {2, 3, 4, 7}) {
    SplitReport rep = is_diagonally_split(sp, q);
    CHECK(rep.split);
    CHECK(rep.covered == rep.total);
    CHECK(rep.missing.empty());
  }
}

TEST_CASE("B2 splits only for odd q") {
  SplittingPolytope sp = splitting_polytope(make_root_system('B', 2));
  CHECK(!is_diagonally_split(sp, 2).split);
  CHECK(is_diagonally_split(sp, 3).split);
  CHECK(!is_diagonally_split(sp, 4).split);
  CHECK(is_diagonally_split(sp, 5).split);
}

TEST_CASE("witnesses are strictly interior representatives of their class") {
  SplittingPolytope sp = splitting_polytope(make_root_system('B', 2));
  long q = 3;
  SplitReport rep = is_diagonally_split(sp, q);
  REQUIRE(rep.split);
  for (const auto& [cls, z] : rep.witnesses) {
    for (const IVec& w : sp.normals) {
      Int t = dot(w, z);
      CHECK(t > -q);
      CHECK(t < q);
    }
    ResidueClasses rc(sp.M, q);
    CHECK(rc.class_of_scaled(z) == cls);
  }
  CHECK(rep.witnesses.size() == 9);
}

TEST_CASE("splitting depends only on the normal rays") {
  // Doubling covectors or flipping signs leaves the splitting polytope alone.
  RootSystem b2 = make_root_system('B', 2);
  std::vector<IVec> covs = b2.root_covectors();
  std::vector<IVec> doubled;
  for (const IVec& w : covs) {
    IVec two;
    for (const Int& x : w) two.push_back(2 * x);
    doubled.push_back(two);
    doubled.push_back(negate(w));
  }
  SplittingPolytope a = splitting_polytope(covs, b2.M);
  SplittingPolytope b = splitting_polytope(doubled, b2.M);
  CHECK(a.normals == b.normals);
  CHECK(a.F.vertices == b.F.vertices);
}

TEST_CASE("interior count of qF equals count of (q-1)F by central symmetry") {
  // F is reflexive-like here: for these splitting polytopes the strict
  // interior of qF meets (1/1)M exactly where (q-1)F meets it.
  for (const char* spec : {"A2", "B2", "G2"}) {
    SplittingPolytope sp = splitting_polytope(parse_root_system(spec));
    for (long q = 2; q <= 4; ++q) {
      Int inner = Int(interior_lattice_points(dilate(sp.F, q)).size());
      Int outer = ehrhart_count(sp.F, q - 1);
      CHECK(inner == outer);
    }
  }
}

TEST_CASE("proposition verifiers cover their stated cases") {
  RootSystem a2 = make_root_system('A', 2);
  CHECK(verify_type_A(2, 4, a2.root_covectors()));
  CHECK(verify_type_BCD('B', 2, 3));
  CHECK_THROWS(verify_type_BCD('B', 2, 4));  // even q rejected
  CHECK(verify_mixed({make_root_system('A', 1), make_root_system('A', 1)}, 2));
}
