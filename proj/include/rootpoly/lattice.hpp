#pragma once

#include <optional>
#include <vector>

#include "rootpoly/matrix.hpp"

namespace rootpoly {

// A full-rank-in-its-span lattice inside an ambient rational vector space,
// given by a basis (rows). Membership is exact: a point belongs to the
// lattice iff its coordinates with respect to the basis are integers.
struct Lattice {
  size_t ambient_dim = 0;
  std::vector<QVec> basis;  // rank rows of length ambient_dim

  Lattice() = default;
  Lattice(size_t ambient, std::vector<QVec> rows);

  static Lattice standard(size_t n);  // Z^n

  size_t rank() const { return basis.size(); }

  // Coordinates of an ambient point with respect to the basis; nullopt when
  // the point is outside the rational span.
  std::optional<QVec> coords(const QVec& ambient_pt) const;

  bool contains(const QVec& ambient_pt) const;

  QVec to_ambient(const QVec& coordinates) const;

  bool operator==(const Lattice& o) const { return ambient_dim == o.ambient_dim && basis == o.basis; }
};

// Shortest lattice point of L on the ray through v (v a nonzero point of L),
// returned in ambient coordinates.
QVec primitive_in_lattice(const QVec& v, const Lattice& L);

// Dual basis of L.basis inside the span of N: rows n_j with <b_i, n_j> =
// delta_ij under the ambient dot product. For a perfect pairing the result
// is a basis of N.
std::vector<QVec> dual_basis_in(const Lattice& L, const Lattice& N);

}  // namespace rootpoly
