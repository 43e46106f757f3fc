#pragma once

#include "rootpoly/splitting.hpp"

namespace rootpoly {

// #(F cap (1/q)M), computed as the lattice point count of the dilate qF.
Int ehrhart_count(const Polytope& F, long q);

// Independent oracle: direct scan of the (1/q)-grid without dilating.
Int ehrhart_count_direct(const Polytope& F, long q);

// Number of points of (1/q)M strictly inside F.
Int ehrhart_count_interior(const Polytope& F, long q);

// period >= 1; components[r] are the coefficients (ascending) of the
// polynomial used for arguments congruent to r mod period.
struct Quasipolynomial {
  long period = 1;
  std::vector<std::vector<Rat>> components;
};

// Lagrange interpolation per residue class over exact rationals, sampled at
// positive q, then verified against two extra held-out counts per class.
// period_bound 0 means the lcm of the vertex coordinate denominators;
// degree -1 means dim(F).
Quasipolynomial fit_quasipolynomial(const Polytope& F, long period_bound = 0, long degree = -1);

Rat evaluate(const Quasipolynomial& Q, const Int& q);

struct ReciprocityReport {
  bool ok = true;
  std::vector<long> failures;
};

// evaluate(Q, -q) against the directly counted interior points, per q.
ReciprocityReport check_reciprocity(const Polytope& F, const Quasipolynomial& Q, long q_min, long q_max);

// For each q in [2, q_max]: the quasipolynomial value f(-q) is below q^4 and
// the per-class scan of the F4 splitting polytope reports missing classes.
bool verify_F4_not_split(long q_max);

}  // namespace rootpoly
