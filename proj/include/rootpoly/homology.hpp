#pragma once

#include "rootpoly/matrix.hpp"

namespace rootpoly {

// Abstract simplicial complex on vertices 0..n_vertices-1; faces[k] lists
// the k-dimensional faces as sorted vertex index vectors. Closed under
// taking subsets by construction.
struct SimplicialComplex {
  size_t n_vertices = 0;
  std::vector<std::vector<std::vector<int>>> faces;

  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
  long euler_characteristic() const;  // unreduced: sum (-1)^k #faces[k]
};

struct HomologyGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

// Reduced integral homology, computed from Smith forms of the boundary maps
// of the augmented chain complex. groups[k+1] is H~_k; H~_{-1}(empty) = Z.
struct HomologyProfile {
  int top_dim = -1;
  std::vector<HomologyGroup> groups;

  const HomologyGroup& reduced(int k) const;  // k >= -1; zero above top_dim
  bool zero_outside(int allowed_dim) const;
};

HomologyProfile reduced_homology(const SimplicialComplex& K);

// Diagonal entries of the Smith form, without the unimodular transforms.
std::vector<Int> smith_diagonal(ZMat A);

}  // namespace rootpoly
