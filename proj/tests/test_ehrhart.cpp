#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootpoly/ehrhart.hpp"
#include "rootpoly/paper_checks.hpp"

using namespace rootpoly;

namespace {

Polytope interval(const Rat& lo, const Rat& hi) {
  return from_vertices({{lo}, {hi}}, Lattice::standard(1));
}

}  // namespace

TEST_CASE("counts for the interval [-1,1]") {
  Polytope I = interval(Rat(-1), Rat(1));
  CHECK(ehrhart_count(I, 1) == 3);
  CHECK(ehrhart_count(I, 3) == 7);
  for (long q = 1; q <= 6; ++q) CHECK(ehrhart_count(I, q) == 2 * q + 1);
  Quasipolynomial Q = fit_quasipolynomial(I);
  CHECK(Q.period == 1);
  CHECK(Q.components[0] == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(evaluate(Q, Int(-1)) == -1);
}

TEST_CASE("half-integral interval has period 2") {
  Polytope I = interval(Rat(-1, 2), Rat(1, 2));
  Quasipolynomial Q = fit_quasipolynomial(I);
  CHECK(Q.period == 2);
  for (long q = 1; q <= 8; ++q) {
    Int direct = ehrhart_count_direct(I, q);
    CHECK(Rat(direct) == evaluate(Q, q));
    CHECK(direct == (q % 2 == 0 ? q + 1 : q));
  }
}

TEST_CASE("dilate-then-count agrees with the direct grid scan") {
  for (const Polytope& P : {unit_square(), non_normal_simplex(), non_koszul_triangle()})
    for (long q = 1; q <= 5; ++q) CHECK(ehrhart_count(P, q) == ehrhart_count_direct(P, q));
}

TEST_CASE("reciprocity on the unit square") {
  Polytope P = unit_square();
  Quasipolynomial Q = fit_quasipolynomial(P);
  CHECK(Q.components[0] == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
  ReciprocityReport rep = check_reciprocity(P, Q, 1, 5);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
}

TEST_CASE("corrupted quasipolynomial fails reciprocity (negative control)") {
  Polytope P = unit_square();
  Quasipolynomial Q = fit_quasipolynomial(P);
  Q.components[0][0] += 1;
  ReciprocityReport rep = check_reciprocity(P, Q, 1, 4);
  CHECK(!rep.ok);
  CHECK(rep.failures.size() == 4);
}

TEST_CASE("fit rejects an understated degree") {
  // Forcing degree 1 on a 2-dimensional count cannot pass the held-out
  // verification.
  CHECK_THROWS(fit_quasipolynomial(unit_square(), 0, 1));
}

TEST_CASE("evaluate selects components by residue with floor semantics") {
  Polytope I = interval(Rat(-1, 2), Rat(1, 2));
  Quasipolynomial Q = fit_quasipolynomial(I);
  // -3 is congruent to 1 mod 2: the odd component q must be used.
  CHECK(evaluate(Q, Int(-3)) == -3);
  CHECK(evaluate(Q, Int(-4)) == -3);  // even component q + 1
}
