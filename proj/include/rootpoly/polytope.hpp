#pragma once

#include <stdexcept>
#include <vector>

#include "rootpoly/root_system.hpp"

namespace rootpoly {

struct LowerDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inequality normal.x + offset >= 0 in M-basis coordinates; the normal is a
// primitive integral covector, i.e. a primitive point of N.
struct Halfspace {
  IVec normal;
  Rat offset;

  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
  bool operator<(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// A full-dimensional bounded rational polytope, carried in coordinates with
// respect to the basis of its reference lattice M. Lattice points of M are
// exactly the integral coordinate vectors.
struct Polytope {
  Lattice M;
  size_t dim = 0;                 // = M.rank()
  std::vector<QVec> vertices;     // lex sorted, irredundant
  std::vector<Halfspace> facets;  // sorted, irredundant
  bool is_lattice = false;        // all vertices integral

  std::vector<IVec> lattice_vertices() const;  // requires is_lattice
};

// Hull of a finite point set (coordinates w.r.t. M). Throws
// LowerDimensionalError when the affine span is not full dimensional.
Polytope from_vertices(const std::vector<QVec>& pts, const Lattice& M);

// Vertex enumeration by exhaustive rank-sized subsets of tight hyperplanes.
// Throws UnboundedError / EmptyError / LowerDimensionalError.
Polytope from_inequalities(const std::vector<Halfspace>& ineqs, const Lattice& M);

// All integral coordinate points of P, lex sorted.
std::vector<IVec> lattice_points(const Polytope& P);

// Integral points strictly satisfying every facet inequality.
std::vector<IVec> interior_lattice_points(const Polytope& P);

Polytope dilate(const Polytope& P, const Int& m);

Polytope minkowski_sum(const std::vector<Polytope>& parts);

// Re-expression of the hull of an integral point set in the lattice
// (span - basepoint) intersected with Z^n, so downstream code always sees a
// full-dimensional polytope. Basepoint is the lex smallest point.
struct AffineReduction {
  Polytope poly;
  std::vector<IVec> basis;  // rows; ambient point = base + sum x_i * basis[i]
  IVec base;
};

AffineReduction affine_reduce(const std::vector<IVec>& points);

// Cayley sum of lattice polytopes over a common lattice: hull of
// P_i x {e_i} in M x Z^r, affinely reduced to full dimension.
Polytope cayley_sum(const std::vector<Polytope>& parts);
Polytope cayley_sum_of_point_sets(const std::vector<std::vector<IVec>>& vertex_sets);

// Vertices of the face where the listed facets are tight (coordinates of P).
std::vector<QVec> face_vertices(const Polytope& P, const std::vector<size_t>& tight);

// The face as a full-dimensional polytope in its induced lattice.
Polytope face(const Polytope& P, const std::vector<size_t>& tight);

// All proper nonempty faces, one polytope per distinct face.
std::vector<Polytope> proper_faces(const Polytope& P);

struct CutOutReport {
  bool ok = false;
  // Per facet, index into rs.roots of a root on the facet's normal ray, or
  // npos for a facet with no such root.
  std::vector<size_t> facet_root;
  size_t failing_facet = static_cast<size_t>(-1);
};

CutOutReport is_cut_out(const Polytope& P, const RootSystem& rs);

// True when some unimodular map plus translation carries the vertex set of A
// onto the vertex set of B (both full-dimensional lattice polytopes).
bool lattice_isomorphic(const Polytope& A, const Polytope& B);

}  // namespace rootpoly
