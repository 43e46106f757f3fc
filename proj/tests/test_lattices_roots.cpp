#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootpoly/root_system.hpp"

using namespace rootpoly;

namespace {

size_t expected_root_count(char fam, size_t n) {
  switch (fam) {
    case 'A': return n * n + n;
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

TEST_CASE("root counts for every family") {
  for (char fam : {'A', 'B', 'C', 'D'})
    for (size_t n = 2; n <= 4; ++n) {
      RootSystem rs = make_root_system(fam, n);
      CHECK(rs.roots.size() == expected_root_count(fam, n));
      std::set<QVec> uniq(rs.roots.begin(), rs.roots.end());
      CHECK(uniq.size() == rs.roots.size());
    }
  CHECK(make_root_system('A', 1).roots.size() == 2);
  CHECK(make_root_system('F', 4).roots.size() == 48);
  CHECK(make_root_system('G', 2).roots.size() == 12);
}

TEST_CASE("roots closed under negation and inside N") {
  for (const char* spec : {"A3", "B2", "C3", "D3", "F4", "G2"}) {
    RootSystem rs = parse_root_system(spec);
    std::set<QVec> all(rs.roots.begin(), rs.roots.end());
    for (const QVec& r : rs.roots) {
      CHECK(all.count(scale(r, Rat(-1))) == 1);
      CHECK(rs.N.contains(r));
    }
  }
}

TEST_CASE("duality: M pairs integrally with N") {
  for (const char* spec : {"A2", "B3", "C2", "C3", "D3", "F4", "G2"}) {
    RootSystem rs = parse_root_system(spec);
    for (const QVec& b : rs.M.basis)
      for (const QVec& r : rs.roots) CHECK(is_integral(dual_pairing(b, r)));
    // Covector-to-ambient is a section of covector.
    for (const QVec& r : rs.roots) {
      IVec w = rs.covector(r);
      CHECK(rs.covector(rs.covector_to_ambient(w)) == w);
    }
  }
}

TEST_CASE("C and D share lattices; they differ from B") {
  RootSystem c3 = make_root_system('C', 3), d3 = make_root_system('D', 3), b3 = make_root_system('B', 3);
  CHECK(c3.N == d3.N);
  CHECK(c3.M == d3.M);
  CHECK(b3.N == Lattice::standard(3));
  CHECK(b3.M == Lattice::standard(3));
  // C_3: N is the even-sum sublattice, M contains the half diagonal.
  CHECK(c3.N.contains({Rat(1), Rat(1), Rat(0)}));
  CHECK(!c3.N.contains({Rat(1), Rat(0), Rat(0)}));
  CHECK(c3.M.contains({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("F4 lattices") {
  RootSystem f4 = make_root_system('F', 4);
  CHECK(f4.N.contains({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(f4.N.contains({Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(f4.M.contains({Rat(1), Rat(1), Rat(0), Rat(0)}));
  CHECK(!f4.M.contains({Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(f4.rank == 4);
}

TEST_CASE("G2 section coordinates") {
  RootSystem g2 = make_root_system('G', 2);
  CHECK(g2.rank == 2);
  CHECK(g2.ambient_dim == 3);
  // The images of e1, e2, e3 in Z^3/diagonal, in section coordinates.
  CHECK(g2.M.to_ambient({Rat(1), Rat(0)}) == QVec{Rat(1), Rat(0), Rat(0)});
  // The long root e1 + e2 - 2 e3 pairs to (1,1) against the section basis.
  QVec longroot = {Rat(1), Rat(1), Rat(-2)};
  CHECK(g2.covector(longroot) == IVec{1, 1});
}

TEST_CASE("product systems and the spec grammar") {
  RootSystem p = parse_root_system("A2xB2");
  CHECK(p.rank == 4);
  CHECK(p.roots.size() == expected_root_count('A', 2) + expected_root_count('B', 2));
  CHECK(p.name == "A2xB2");
  CHECK_THROWS(parse_root_system("Q9"));
  CHECK_THROWS(parse_root_system("A0"));
  CHECK_THROWS(parse_root_system("F3"));
  CHECK_THROWS(parse_root_system("G5"));
  CHECK_THROWS(parse_root_system(""));
}

TEST_CASE("residue classes of (1/q)M mod M") {
  RootSystem c2 = make_root_system('C', 2);
  ResidueClasses rc(c2.M, 3);
  CHECK(rc.total() == 9);
  // Linear indexing is a bijection.
  std::set<ResidueClassIndex> seen;
  for (size_t i = 0; i < 9; ++i) {
    ResidueClassIndex c = rc.from_index(i);
    CHECK(rc.index_of(c) == i);
    seen.insert(c);
  }
  CHECK(seen.size() == 9);
  // M-points land in class 0.
  ResidueClassIndex zero = rc.class_of(c2.M, {Rat(1, 2), Rat(1, 2)});
  CHECK(zero == ResidueClassIndex{{0, 0}});
  // class_of_scaled reduces modulo q with nonnegative representatives.
  CHECK(rc.class_of_scaled(IVec{-1, 4}) == ResidueClassIndex{{2, 1}});
}
