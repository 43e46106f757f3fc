#pragma once

#include <string>
#include <vector>

#include "rootpoly/ehrhart.hpp"
#include "rootpoly/semigroup.hpp"

namespace rootpoly {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

// The full battery of reference computations: the F4 splitting polytope and
// its Ehrhart data, the classical-type splitting verifications, the two
// counterexample polytopes, the randomized splitting-theorem suite, and the
// dual-route oracle comparisons. `only` filters by substring of the check
// name (empty = all).
std::vector<CheckResult> run_paper_checks(const std::string& only = "");

// Shared fixtures.
Polytope f4_splitting_polytope();
Polytope unit_square();          // over Z^2
Polytope non_normal_simplex();   // conv{0, e1, e3, (1,2,1)} over Z^3
Polytope non_koszul_triangle();  // G2-section triangle over the G2 dual lattice

}  // namespace rootpoly
