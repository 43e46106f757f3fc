#include "rootpoly/ehrhart.hpp"

#include <algorithm>

namespace rootpoly {

Int ehrhart_count(const Polytope& F, long q) {
  if (q < 1) throw std::invalid_argument("ehrhart_count: q must be positive");
  return static_cast<unsigned long>(lattice_points(dilate(F, q)).size());
}

Int ehrhart_count_direct(const Polytope& F, long q) {
  if (q < 1) throw std::invalid_argument("ehrhart_count_direct: q must be positive");
  size_t d = F.dim;
  if (d == 0) return 1;
  IVec lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    Rat mn = F.vertices[0][i], mx = mn;
    for (const QVec& v : F.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn * q);
    hi[i] = rat_floor(mx * q);
    if (lo[i] > hi[i]) return 0;
  }
  Int count = 0;
  IVec z = lo;
  while (true) {
    bool inside = true;
    for (const Halfspace& h : F.facets) {
      // normal.(z/q) + offset >= 0, cleared of denominators.
      Int s = dot(h.normal, z) * h.offset.get_den() + h.offset.get_num() * q;
      if (s < 0) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    size_t i = d;
    bool advanced = false;
    while (i-- > 0) {
      if (z[i] < hi[i]) {
        ++z[i];
        for (size_t j = i + 1; j < d; ++j) z[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return count;
}

Int ehrhart_count_interior(const Polytope& F, long q) {
  if (q < 1) throw std::invalid_argument("ehrhart_count_interior: q must be positive");
  return static_cast<unsigned long>(interior_lattice_points(dilate(F, q)).size());
}

// Value of the polynomial with ascending coefficients at an integer.
static Rat poly_eval(const std::vector<Rat>& coeffs, const Int& q) {
  Rat acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * Rat(q) + coeffs[i];
  return acc;
}

// Lagrange interpolation through (x_i, y_i).
static std::vector<Rat> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  size_t n = xs.size();
  std::vector<Rat> result(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis{Rat(1)};  // product of (x - x_j)/(x_i - x_j)
    Rat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      denom *= Rat(xs[i] - xs[j]);
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k] -= basis[k] * Rat(xs[j]);
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
    }
    Rat w = Rat(ys[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) result[k] += w * basis[k];
  }
  return result;
}

Quasipolynomial fit_quasipolynomial(const Polytope& F, long period_bound, long degree) {
  if (degree < 0) degree = static_cast<long>(F.dim);
  long period = period_bound;
  if (period <= 0) {
    Int l = 1;
    for (const QVec& v : F.vertices)
      for (const Rat& c : v) l = lcm(l, c.get_den());
    period = l.get_si();
  }
  Quasipolynomial Q;
  Q.period = period;
  Q.components.resize(period);
  for (long r = 0; r < period; ++r) {
    std::vector<Int> xs, ys;
    long x = (r == 0) ? period : r;
    for (long k = 0; k < degree + 1 + 2; ++k) {
      xs.emplace_back(x);
      ys.push_back(ehrhart_count(F, x));
      x += period;
    }
    std::vector<Int> fit_x(xs.begin(), xs.begin() + degree + 1);
    std::vector<Int> fit_y(ys.begin(), ys.begin() + degree + 1);
    std::vector<Rat> poly = interpolate(fit_x, fit_y);
    // Held-out verification: the fit must predict two further counts.
    for (size_t k = static_cast<size_t>(degree + 1); k < xs.size(); ++k)
      if (poly_eval(poly, xs[k]) != Rat(ys[k]))
        throw std::runtime_error("fit_quasipolynomial: held-out count mismatch (wrong period or degree)");
    Q.components[r] = std::move(poly);
  }
  return Q;
}

Rat evaluate(const Quasipolynomial& Q, const Int& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), Int(Q.period).get_mpz_t());
  return poly_eval(Q.components[r.get_ui()], q);
}

ReciprocityReport check_reciprocity(const Polytope& F, const Quasipolynomial& Q, long q_min, long q_max) {
  ReciprocityReport rep;
  for (long q = q_min; q <= q_max; ++q) {
    if (evaluate(Q, Int(-q)) != Rat(ehrhart_count_interior(F, q))) {
      rep.ok = false;
      rep.failures.push_back(q);
    }
  }
  return rep;
}

bool verify_F4_not_split(long q_max) {
  RootSystem f4 = make_root_system('F', 4);
  SplittingPolytope sp = splitting_polytope(f4);
  Quasipolynomial Q = fit_quasipolynomial(sp.F);
  for (long q = 2; q <= q_max; ++q) {
    Rat interior = evaluate(Q, Int(-q));
    Int qd = Int(q) * q * q * q;
    if (!(interior < Rat(qd))) return false;
    if (is_diagonally_split(sp, q).missing.empty()) return false;
  }
  return true;
}

}  // namespace rootpoly
