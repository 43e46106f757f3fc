#pragma once

#include <string>
#include <vector>

#include "rootpoly/lattice.hpp"

namespace rootpoly {

// A root system in explicit coordinates: the finite set of roots, the root
// lattice N, and its dual lattice M, all in a common ambient space. The
// pairing between M_R and N is the ambient dot product.
struct RootSystem {
  std::string name;
  size_t rank = 0;
  size_t ambient_dim = 0;
  std::vector<QVec> roots;  // ambient coordinates; closed under negation
  Lattice N;
  Lattice M;

  // <b_i, v> over the M-basis rows b_i; integral for every v in N. Facet
  // normals and roots are handled in this covector form throughout, so that
  // polytope geometry can run in M-basis coordinates.
  IVec covector(const QVec& ambient_n_point) const;

  std::vector<IVec> root_covectors() const;

  // Ambient N-point of an integral covector (combination of the dual basis
  // of the M-basis).
  QVec covector_to_ambient(const IVec& w) const;
};

// Families A, B, C, D (rank n), F4, G2, in the fixed coordinates:
//   A_n: roots {+-e_i, e_j - e_k}, N = M = Z^n
//   B_n: roots {+-e_i, +-e_j +- e_k}, N = M = Z^n
//   C_n: roots {+-2e_i, +-e_j +- e_k}, N = even-sum sublattice of Z^n,
//        M = Z^n + Z*(1/2,...,1/2)
//   D_n: roots {+-e_i +- e_j}, N and M as for C_n
//   F_4: N = Z^4 + Z*(1/2,1/2,1/2,1/2), M = even-sum sublattice of Z^4,
//        roots {+-e_i, +-e_i +- e_j, (+-1/2,+-1/2,+-1/2,+-1/2)}
//   G_2: N = {a in Z^3 : sum a = 0}, M = Z^3 / diagonal represented by the
//        section {(a,b,0)}, roots {e_i - e_j, +-(e_i + e_j - 2e_k)}
RootSystem make_root_system(char family, size_t n);

RootSystem product(const std::vector<RootSystem>& factors);

// Grammar: "A3", "B2", "C4", "D3", "F4", "G2", and products like "A2xB2".
RootSystem parse_root_system(const std::string& spec);

// Exact ambient dot product <u, v>; integral whenever u is in M and v in N.
Rat dual_pairing(const QVec& u, const QVec& v);

// Residue classes of (1/q)M / M, identified by M-basis coordinates mod q.
struct ResidueClassIndex {
  std::vector<long> coords;  // length = rank, entries in [0, q)
  bool operator==(const ResidueClassIndex& o) const { return coords == o.coords; }
  bool operator<(const ResidueClassIndex& o) const { return coords < o.coords; }
};

struct ResidueClasses {
  long q = 0;
  size_t rank = 0;

  ResidueClasses(const Lattice& M, long q_);

  Int total() const;  // q^rank

  // Class of a point given by q * (M-basis coordinates), an integer vector.
  ResidueClassIndex class_of_scaled(const IVec& q_times_coords) const;

  // Class of an ambient point of (1/q)M.
  ResidueClassIndex class_of(const Lattice& M, const QVec& ambient_pt) const;

  // Linear index in [0, q^rank) for dense coverage tables.
  size_t index_of(const ResidueClassIndex& c) const;
  ResidueClassIndex from_index(size_t idx) const;
};

}  // namespace rootpoly
