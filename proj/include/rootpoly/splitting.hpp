#pragma once

#include <map>

#include "rootpoly/polytope.hpp"

namespace rootpoly {

// F = { u : -1 <= <u, v_i> <= 1 } over the primitive facet normals v_i,
// deduplicated up to sign. Depends only on the set of normal rays.
struct SplittingPolytope {
  std::vector<IVec> normals;  // primitive covectors in M-basis coordinates
  Lattice M;
  Polytope F;
};

SplittingPolytope splitting_polytope(const std::vector<IVec>& normal_covectors, const Lattice& M);
SplittingPolytope splitting_polytope(const Polytope& P);
// F built from the covectors of every root of the system.
SplittingPolytope splitting_polytope(const RootSystem& rs);

struct SplitReport {
  long q = 0;
  Int covered = 0;
  Int total = 0;
  bool split = false;
  std::vector<ResidueClassIndex> missing;
  // Lex smallest interior representative per covered class, as q * coords.
  std::map<ResidueClassIndex, IVec> witnesses;
};

// Exhaustive scan of (1/q)M over the bounding box of F; a class is covered
// when some representative strictly satisfies every inequality.
SplitReport is_diagonally_split(const SplittingPolytope& F, long q);

// Proposition verifiers: each decides the split property by enumeration and
// additionally checks the explicit representative family behind the claim.
bool verify_type_A(size_t n, long q, const std::vector<IVec>& normal_subset);
bool verify_type_BCD(char family, size_t n, long q);
bool verify_mixed(const std::vector<RootSystem>& factors, long q);

}  // namespace rootpoly
