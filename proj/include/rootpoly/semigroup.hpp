#pragma once

#include <set>

#include "rootpoly/homology.hpp"
#include "rootpoly/polytope.hpp"

namespace rootpoly {

// Degree-by-degree point sets of the polytopal semigroup S_P, the
// subsemigroup of M x Z generated by (lattice points of P) x {1}. Points are
// carried in M-basis coordinates.
struct GradedSemigroup {
  Polytope P;
  int m_max = 0;
  std::vector<IVec> generators;             // lattice points of P, lex sorted
  std::vector<std::vector<IVec>> levels;    // levels[m], m = 0..m_max, lex sorted
  std::vector<std::set<IVec>> level_sets;

  bool contains(const IVec& point, int degree) const;
};

GradedSemigroup build_semigroup(const Polytope& P, int m_max);

struct NormalityReport {
  bool normal = true;
  int m_max = 0;
  int fail_degree = 0;  // smallest degree with a hole
  IVec witness;         // lex smallest point of mP missed by S_P
};

NormalityReport check_normality(const Polytope& P, int m_max);

// All multisets of `degree` generators summing to x, as nondecreasing index
// vectors. Throws when the cap is exceeded.
std::vector<std::vector<size_t>> fiber_multisets(const GradedSemigroup& S, const IVec& x, int degree,
                                                 size_t cap = 100000);

struct QuadraticReport {
  bool ok = true;
  int m_max = 0;
  int fail_degree = 0;
  IVec witness;  // target of a disconnected fiber graph
};

// Fiber-graph connectivity at every degree 3..m_max: edges swap a pair of
// generators for another pair with the same sum. All fibers connected iff
// the ideal of relations is generated in degree <= 2 up to m_max.
QuadraticReport check_quadratic_generation(const Polytope& P, int m_max, size_t cap = 100000);

struct IntervalElement {
  IVec point;
  int degree = 0;
};

// The interval [0, x] in S_P: all y in S_P with x - y in S_P, ordered by
// y <= z iff z - y in S_P. Membership is tested against the semigroup
// levels, not the saturation.
struct IntervalPoset {
  IVec x;
  int degree = 0;
  std::vector<IntervalElement> elems;   // sorted by (degree, point); 0 first, x last
  std::vector<std::vector<bool>> leq;   // leq[i][j]: elems[i] <= elems[j]

  std::vector<size_t> open_elements() const;  // all but bottom and top
};

IntervalPoset interval(const GradedSemigroup& S, const IVec& x, int degree);

// Order complex of the open interval (0, x): chains of open elements.
SimplicialComplex order_complex_open(const IntervalPoset& I);

// Reduced integral homology of the open-interval order complex; the empty
// complex contributes H~_{-1} = Z.
HomologyProfile interval_homology(const IntervalPoset& I);

struct KoszulReport {
  bool ok = true;
  int j_max = 0;
  int fail_j = 0;  // degree of the witness
  int fail_i = 0;  // homological index with nonvanishing H~_{i-2}
  IVec witness;
};

// For every x in S_P of degree j <= j_max, the reduced homology of (0, x)
// must vanish in every dimension except j - 2.
KoszulReport check_koszul_up_to(const Polytope& P, int j_max);

struct CMReport {
  bool ok = true;
  bool pure = true;
  std::vector<int> witness_face;
  int witness_dim = 0;
};

// Cohen-Macaulayness over Z of the open-interval order complex: purity plus
// vanishing reduced integral homology of every face link below its
// dimension.
CMReport check_CM_over_Z(const IntervalPoset& I);
CMReport check_CM_complex(const SimplicialComplex& K);

enum class HeredityProperty { Normality, Koszul };

// Runs the property on P and on every proper face; returns false only if a
// face fails while P passes (which would be an implementation bug).
bool check_face_heredity(const Polytope& P, HeredityProperty prop, int bound);

}  // namespace rootpoly
