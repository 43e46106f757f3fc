#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootpoly/json_io.hpp"
#include "rootpoly/lattice.hpp"

using namespace rootpoly;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-1/2") == Rat(-1, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(Rat(3) / Rat(2)) == "3/2");
  CHECK(parse_int("-12") == Int(-12));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("floor and ceiling of rationals") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_ceil(Rat(4)) == 4);
}

TEST_CASE("content and primitive vectors") {
  CHECK(content(IVec{4, -6, 10}) == 2);
  CHECK(primitive(IVec{4, -6, 10}) == IVec{2, -3, 5});
  CHECK(primitive(IVec{0, 0, -7}) == IVec{0, 0, -1});
  CHECK_THROWS(primitive(IVec{0, 0, 0}));
}

TEST_CASE("primitive scaling invariance (property)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IVec v = {d(rng), d(rng), d(rng), d(rng)};
    if (is_zero(v)) continue;
    IVec kv;
    for (const Int& x : v) kv.push_back(3 * x);
    CHECK(primitive(v) == primitive(kv));
  }
}

TEST_CASE("primitive points in sublattices") {
  // In the even-sum sublattice of Z^2, (2,2) is twice (1,1).
  Lattice even2(2, {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}});
  CHECK(primitive_in_lattice({Rat(2), Rat(2)}, even2) == QVec{Rat(1), Rat(1)});
  // In {sum = 0} inside Z^3, (3,3,-6) reduces to (1,1,-2).
  Lattice sum0(3, {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}});
  CHECK(primitive_in_lattice({Rat(3), Rat(3), Rat(-6)}, sum0) == QVec{Rat(1), Rat(1), Rat(-2)});
  // In Z^2 itself primitivity is the gcd condition.
  CHECK(primitive_in_lattice({Rat(4), Rat(6)}, Lattice::standard(2)) == QVec{Rat(2), Rat(3)});
}

TEST_CASE("rational linear solve") {
  QMat A(std::vector<QVec>{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}});
  auto x = solve_rational(A, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK(*x == QVec{Rat(1), Rat(3)});
  QMat S(std::vector<QVec>{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(!solve_rational(S, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("nullspace, inverse, determinant") {
  QMat A(std::vector<QVec>{{Rat(1), Rat(2), Rat(3)}});
  auto ns = nullspace(A);
  CHECK(ns.size() == 2);
  for (const QVec& v : ns) CHECK(dot(A.a[0], v) == 0);

  QMat B(std::vector<QVec>{{Rat(2), Rat(0)}, {Rat(1), Rat(1)}});
  CHECK(determinant(B) == 2);
  auto Binv = inverse(B);
  REQUIRE(Binv.has_value());
  QMat I = mul(B, *Binv);
  CHECK(I.a == QMat::identity(2).a);

  ZMat Z(std::vector<IVec>{{Int(3), Int(1)}, {Int(1), Int(1)}});
  CHECK(determinant(Z) == 2);
}

TEST_CASE("Smith normal form of a fixed example") {
  ZMat A(std::vector<IVec>{{Int(2), Int(4)}, {Int(6), Int(8)}});
  SmithForm f = smith_normal_form(A);
  CHECK(f.D.at(0, 0) == 2);
  CHECK(f.D.at(1, 1) == 4);
  CHECK(mul(mul(f.U, A), f.V) == f.D);
}

TEST_CASE("Smith normal form properties (randomized)") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
    ZMat A(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) A.at(i, j) = d(rng);
    SmithForm f = smith_normal_form(A);
    CHECK(mul(mul(f.U, A), f.V) == f.D);
    Int du = determinant(f.U), dv = determinant(f.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prev = 0;
    for (size_t k = 0; k < std::min(r, c); ++k) {
      const Int& dk = f.D.at(k, k);
      CHECK(dk >= 0);
      if (prev != 0 && dk != 0) CHECK(dk % prev == 0);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
          if (i != j) CHECK(f.D.at(i, j) == 0);
      prev = dk;
    }
  }
}

TEST_CASE("lattice membership and coordinates") {
  Lattice half(1, {{Rat(1, 2)}});
  CHECK(half.contains({Rat(3, 2)}));
  CHECK(!half.contains({Rat(1, 3)}));
  Lattice evensum(2, {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}});
  CHECK(evensum.contains({Rat(2), Rat(0)}));
  CHECK(!evensum.contains({Rat(1), Rat(0)}));
  auto c = evensum.coords({Rat(3), Rat(1)});
  REQUIRE(c.has_value());
  CHECK(evensum.to_ambient(*c) == QVec{Rat(3), Rat(1)});
}

TEST_CASE("dual basis pairing") {
  Lattice M(2, {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}});  // Z^2 + half-diagonal
  Lattice N(2, {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}});       // even-sum
  auto dual = dual_basis_in(M, N);
  REQUIRE(dual.size() == 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(dot(M.basis[i], dual[j]) == (i == j ? 1 : 0));
  for (const QVec& v : dual) CHECK(N.contains(v));
}

TEST_CASE("polytope JSON round trip") {
  Lattice M = Lattice::standard(2);
  std::vector<QVec> pts = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(3)}};
  Polytope P = from_vertices(pts, M);
  json j = polytope_to_json(P);
  Polytope Q = polytope_from_json(j);
  CHECK(P.vertices == Q.vertices);
  CHECK(P.facets == Q.facets);
  CHECK(P.M == Q.M);
}

TEST_CASE("vector serialization round trip") {
  QVec v = {Rat(1, 2), Rat(-3), Rat(7, 5)};
  CHECK(qvec_from_json(qvec_to_json(v)) == v);
}
