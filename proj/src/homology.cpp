#include "rootpoly/homology.hpp"

#include <algorithm>
#include <map>

namespace rootpoly {

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (size_t k = 0; k < faces.size(); ++k) {
    long c = static_cast<long>(faces[k].size());
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

const HomologyGroup& HomologyProfile::reduced(int k) const {
  static const HomologyGroup zero{};
  if (k < -1) throw std::invalid_argument("HomologyProfile::reduced: dimension < -1");
  size_t idx = static_cast<size_t>(k + 1);
  if (idx >= groups.size()) return zero;
  return groups[idx];
}

bool HomologyProfile::zero_outside(int allowed_dim) const {
  for (int k = -1; k <= top_dim; ++k)
    if (k != allowed_dim && !reduced(k).is_zero()) return false;
  return true;
}

std::vector<Int> smith_diagonal(ZMat A) {
  auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };
  std::vector<Int> diag;
  size_t t = 0;
  size_t n = std::min(A.rows, A.cols);
  while (t < n) {
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < A.rows; ++i)
      for (size_t j = t; j < A.cols; ++j) {
        if (A.a[i][j] == 0) continue;
        if (!found || abs_int(A.a[i][j]) < abs_int(A.a[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(A.a[pi], A.a[t]);
    if (pj != t)
      for (size_t i = t; i < A.rows; ++i) std::swap(A.a[i][pj], A.a[i][t]);

    bool clean = true;
    for (size_t i = t + 1; i < A.rows; ++i) {
      if (A.a[i][t] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A.a[i][t].get_mpz_t(), A.a[t][t].get_mpz_t());
      if (q != 0)
        for (size_t j = t; j < A.cols; ++j) A.a[i][j] -= q * A.a[t][j];
      if (A.a[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < A.cols; ++j) {
      if (A.a[t][j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A.a[t][j].get_mpz_t(), A.a[t][t].get_mpz_t());
      if (q != 0)
        for (size_t i = t; i < A.rows; ++i) A.a[i][j] -= q * A.a[i][t];
      if (A.a[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    bool divides_all = true;
    for (size_t i = t + 1; i < A.rows && divides_all; ++i)
      for (size_t j = t + 1; j < A.cols && divides_all; ++j)
        if (A.a[i][j] % A.a[t][t] != 0) {
          for (size_t c = t; c < A.cols; ++c) A.a[t][c] += A.a[i][c];
          divides_all = false;
        }
    if (!divides_all) continue;

    diag.push_back(abs_int(A.a[t][t]));
    ++t;
  }
  return diag;
}

HomologyProfile reduced_homology(const SimplicialComplex& K) {
  int top = K.top_dim();
  HomologyProfile profile;
  profile.top_dim = top;
  profile.groups.resize(static_cast<size_t>(top + 2));

  // Index maps per dimension.
  std::vector<std::map<std::vector<int>, size_t>> index(static_cast<size_t>(top + 1));
  for (int k = 0; k <= top; ++k)
    for (size_t i = 0; i < K.faces[k].size(); ++i) index[k][K.faces[k][i]] = i;

  // Boundary d_k: C_k -> C_{k-1}; d_0 is the augmentation into C_{-1} = Z.
  auto boundary = [&](int k) -> ZMat {
    if (k < 0 || k > top) return ZMat(0, 0);
    size_t cols = K.faces[k].size();
    size_t rows = (k == 0) ? 1 : K.faces[k - 1].size();
    ZMat d(rows, cols);
    for (size_t c = 0; c < cols; ++c) {
      const std::vector<int>& f = K.faces[k][c];
      if (k == 0) {
        d.a[0][c] = 1;
        continue;
      }
      int sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        sub.reserve(f.size() - 1);
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        d.a[index[k - 1].at(sub)][c] += sign;
        sign = -sign;
      }
    }
    return d;
  };

  // ranks[k] = rank of d_k; torsion of H~_{k-1} comes from d_k's Smith form.
  std::vector<long> ranks(static_cast<size_t>(top + 2), 0);
  std::vector<std::vector<Int>> tors(static_cast<size_t>(top + 2));
  for (int k = 0; k <= top; ++k) {
    std::vector<Int> diag = smith_diagonal(boundary(k));
    ranks[k] = static_cast<long>(diag.size());
    for (const Int& dgn : diag)
      if (dgn > 1) tors[k].push_back(dgn);
  }

  // H~_{-1}: C_{-1} = Z, killed exactly when some vertex exists.
  profile.groups[0].free_rank = 1 - ranks[0];
  profile.groups[0].torsion = tors[0];
  for (int k = 0; k <= top; ++k) {
    long nk = static_cast<long>(K.faces[k].size());
    long rank_dk = ranks[k];
    long rank_dk1 = (k + 1 <= top) ? ranks[k + 1] : 0;
    HomologyGroup& g = profile.groups[static_cast<size_t>(k + 1)];
    g.free_rank = nk - rank_dk - rank_dk1;
    if (k + 1 <= top) g.torsion = tors[k + 1];
  }
  return profile;
}

}  // namespace rootpoly
