#include "rootpoly/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace rootpoly {

bool GradedSemigroup::contains(const IVec& point, int degree) const {
  if (degree < 0 || degree > m_max) throw std::invalid_argument("GradedSemigroup::contains: degree out of range");
  return level_sets[static_cast<size_t>(degree)].count(point) > 0;
}

GradedSemigroup build_semigroup(const Polytope& P, int m_max) {
  if (!P.is_lattice) throw std::invalid_argument("build_semigroup: not a lattice polytope");
  if (m_max < 1) throw std::invalid_argument("build_semigroup: m_max must be >= 1");
  GradedSemigroup S;
  S.P = P;
  S.m_max = m_max;
  S.generators = lattice_points(P);
  S.level_sets.resize(static_cast<size_t>(m_max + 1));
  S.level_sets[0].insert(IVec(P.dim, Int(0)));
  for (int m = 1; m <= m_max; ++m)
    for (const IVec& y : S.level_sets[static_cast<size_t>(m - 1)])
      for (const IVec& g : S.generators) S.level_sets[static_cast<size_t>(m)].insert(add(y, g));
  S.levels.resize(static_cast<size_t>(m_max + 1));
  for (int m = 0; m <= m_max; ++m)
    S.levels[static_cast<size_t>(m)].assign(S.level_sets[static_cast<size_t>(m)].begin(),
                                            S.level_sets[static_cast<size_t>(m)].end());
  return S;
}

NormalityReport check_normality(const Polytope& P, int m_max) {
  if (m_max < 2) throw std::invalid_argument("check_normality: m_max must be >= 2");
  GradedSemigroup S = build_semigroup(P, m_max);
  NormalityReport rep;
  rep.m_max = m_max;
  for (int m = 2; m <= m_max; ++m) {
    std::vector<IVec> target = lattice_points(dilate(P, m));
    const auto& have = S.level_sets[static_cast<size_t>(m)];
    for (const IVec& p : target) {
      if (!have.count(p)) {
        rep.normal = false;
        rep.fail_degree = m;
        rep.witness = p;  // target is lex sorted, so first miss is smallest
        return rep;
      }
    }
  }
  return rep;
}

static void fiber_dfs(const GradedSemigroup& S, const IVec& remaining, int slots, size_t min_idx,
                      std::vector<size_t>& current, std::vector<std::vector<size_t>>& out, size_t cap) {
  if (slots == 0) {
    if (is_zero(remaining)) {
      out.push_back(current);
      if (out.size() > cap) throw std::runtime_error("fiber_multisets: cap exceeded");
    }
    return;
  }
  if (!S.level_sets[static_cast<size_t>(slots)].count(remaining)) return;
  for (size_t gi = min_idx; gi < S.generators.size(); ++gi) {
    current.push_back(gi);
    fiber_dfs(S, sub(remaining, S.generators[gi]), slots - 1, gi, current, out, cap);
    current.pop_back();
  }
}

std::vector<std::vector<size_t>> fiber_multisets(const GradedSemigroup& S, const IVec& x, int degree, size_t cap) {
  if (degree < 1 || degree > S.m_max) throw std::invalid_argument("fiber_multisets: degree out of range");
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> current;
  fiber_dfs(S, x, degree, 0, current, out, cap);
  return out;
}

namespace {
struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t(0)); }
  size_t find(size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};
}  // namespace

static bool fiber_graph_connected(const GradedSemigroup& S, const std::vector<std::vector<size_t>>& fiber,
                                  const std::map<IVec, std::vector<std::pair<size_t, size_t>>>& pair_sums) {
  if (fiber.size() <= 1) return true;
  std::map<std::vector<size_t>, size_t> id;
  for (size_t i = 0; i < fiber.size(); ++i) id[fiber[i]] = i;
  UnionFind uf(fiber.size());
  for (size_t i = 0; i < fiber.size(); ++i) {
    const std::vector<size_t>& ms = fiber[i];
    for (size_t p = 0; p < ms.size(); ++p)
      for (size_t r = p + 1; r < ms.size(); ++r) {
        IVec s = add(S.generators[ms[p]], S.generators[ms[r]]);
        auto it = pair_sums.find(s);
        if (it == pair_sums.end()) continue;
        for (const auto& [c, dgen] : it->second) {
          if (c == std::min(ms[p], ms[r]) && dgen == std::max(ms[p], ms[r])) continue;
          std::vector<size_t> nb = ms;
          nb[p] = c;
          nb[r] = dgen;
          std::sort(nb.begin(), nb.end());
          auto jt = id.find(nb);
          if (jt != id.end()) uf.unite(i, jt->second);
        }
      }
  }
  size_t root = uf.find(0);
  for (size_t i = 1; i < fiber.size(); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

QuadraticReport check_quadratic_generation(const Polytope& P, int m_max, size_t cap) {
  if (m_max < 3) throw std::invalid_argument("check_quadratic_generation: m_max must be >= 3");
  GradedSemigroup S = build_semigroup(P, m_max);
  QuadraticReport rep;
  rep.m_max = m_max;

  std::map<IVec, std::vector<std::pair<size_t, size_t>>> pair_sums;
  for (size_t i = 0; i < S.generators.size(); ++i)
    for (size_t j = i; j < S.generators.size(); ++j)
      pair_sums[add(S.generators[i], S.generators[j])].emplace_back(i, j);

  for (int m = 3; m <= m_max; ++m) {
    for (const IVec& x : S.levels[static_cast<size_t>(m)]) {
      std::vector<std::vector<size_t>> fiber = fiber_multisets(S, x, m, cap);
      if (!fiber_graph_connected(S, fiber, pair_sums)) {
        rep.ok = false;
        rep.fail_degree = m;
        rep.witness = x;
        return rep;
      }
    }
  }
  return rep;
}

std::vector<size_t> IntervalPoset::open_elements() const {
  std::vector<size_t> out;
  for (size_t i = 1; i + 1 < elems.size(); ++i) out.push_back(i);
  return out;
}

IntervalPoset interval(const GradedSemigroup& S, const IVec& x, int degree) {
  if (degree < 1 || degree > S.m_max) throw std::invalid_argument("interval: degree out of range");
  if (!S.contains(x, degree)) throw std::invalid_argument("interval: x is not in S_P");
  IntervalPoset I;
  I.x = x;
  I.degree = degree;
  for (int k = 0; k <= degree; ++k) {
    for (const IVec& y : S.levels[static_cast<size_t>(k)]) {
      if (S.level_sets[static_cast<size_t>(degree - k)].count(sub(x, y)))
        I.elems.push_back(IntervalElement{y, k});
    }
  }
  std::sort(I.elems.begin(), I.elems.end(), [](const IntervalElement& a, const IntervalElement& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.point < b.point;
  });
  size_t n = I.elems.size();
  I.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int dd = I.elems[j].degree - I.elems[i].degree;
      if (dd < 0) continue;
      if (S.level_sets[static_cast<size_t>(dd)].count(sub(I.elems[j].point, I.elems[i].point)))
        I.leq[i][j] = true;
    }
  return I;
}

SimplicialComplex order_complex_open(const IntervalPoset& I) {
  std::vector<size_t> open = I.open_elements();
  SimplicialComplex K;
  K.n_vertices = open.size();
  if (open.empty()) return K;

  // Chains ascend in the (degree, point) element order, so DFS over
  // increasing indices enumerates each chain once.
  std::vector<int> current;
  std::vector<std::vector<std::vector<int>>>& faces = K.faces;
  auto record = [&](const std::vector<int>& chain) {
    size_t k = chain.size() - 1;
    if (faces.size() <= k) faces.resize(k + 1);
    faces[k].push_back(chain);
  };
  std::function<void(size_t)> extend = [&](size_t last) {
    record(current);
    for (size_t next = last + 1; next < open.size(); ++next) {
      if (I.leq[open[last]][open[next]]) {
        current.push_back(static_cast<int>(next));
        extend(next);
        current.pop_back();
      }
    }
  };
  for (size_t v = 0; v < open.size(); ++v) {
    current.push_back(static_cast<int>(v));
    extend(v);
    current.pop_back();
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());
  return K;
}

HomologyProfile interval_homology(const IntervalPoset& I) { return reduced_homology(order_complex_open(I)); }

KoszulReport check_koszul_up_to(const Polytope& P, int j_max) {
  if (j_max < 2) throw std::invalid_argument("check_koszul_up_to: j_max must be >= 2");
  GradedSemigroup S = build_semigroup(P, j_max);
  KoszulReport rep;
  rep.j_max = j_max;
  for (int j = 2; j <= j_max; ++j) {
    for (const IVec& x : S.levels[static_cast<size_t>(j)]) {
      IntervalPoset I = interval(S, x, j);
      HomologyProfile H = interval_homology(I);
      if (!H.zero_outside(j - 2)) {
        for (int k = -1; k <= H.top_dim; ++k) {
          if (k != j - 2 && !H.reduced(k).is_zero()) {
            rep.ok = false;
            rep.fail_j = j;
            rep.fail_i = k + 2;
            rep.witness = x;
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

static SimplicialComplex link_of(const SimplicialComplex& K, const std::vector<int>& sigma) {
  SimplicialComplex L;
  L.n_vertices = K.n_vertices;  // vertex labels reused; absent ones are harmless
  for (const auto& level : K.faces) {
    for (const auto& f : level) {
      // f must contain sigma; the link face is f minus sigma.
      std::vector<int> rest;
      size_t matched = 0;
      for (int v : f) {
        if (std::binary_search(sigma.begin(), sigma.end(), v))
          ++matched;
        else
          rest.push_back(v);
      }
      if (matched != sigma.size() || rest.empty()) continue;
      size_t k = rest.size() - 1;
      if (L.faces.size() <= k) L.faces.resize(k + 1);
      L.faces[k].push_back(std::move(rest));
    }
  }
  for (auto& level : L.faces) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return L;
}

CMReport check_CM_complex(const SimplicialComplex& K) {
  CMReport rep;
  int top = K.top_dim();
  if (top < 0) return rep;  // empty complex

  // Purity: every maximal face has dimension top.
  for (int k = 0; k < top; ++k) {
    for (const auto& f : K.faces[static_cast<size_t>(k)]) {
      bool maximal = true;
      if (k + 1 <= top) {
        for (const auto& g : K.faces[static_cast<size_t>(k + 1)]) {
          if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) {
        rep.ok = false;
        rep.pure = false;
        rep.witness_face = f;
        rep.witness_dim = k;
        return rep;
      }
    }
  }

  // Link vanishing below top dimension, for every face including the empty
  // one (whose link is the complex itself).
  std::vector<std::vector<int>> all_faces{{}};
  for (const auto& level : K.faces)
    for (const auto& f : level) all_faces.push_back(f);
  for (const auto& sigma : all_faces) {
    SimplicialComplex L = sigma.empty() ? K : link_of(K, sigma);
    int ltop = L.top_dim();
    HomologyProfile H = reduced_homology(L);
    for (int k = -1; k < ltop; ++k) {
      if (!H.reduced(k).is_zero()) {
        rep.ok = false;
        rep.witness_face = sigma;
        rep.witness_dim = k;
        return rep;
      }
    }
  }
  return rep;
}

CMReport check_CM_over_Z(const IntervalPoset& I) { return check_CM_complex(order_complex_open(I)); }

bool check_face_heredity(const Polytope& P, HeredityProperty prop, int bound) {
  auto passes = [&](const Polytope& Q) {
    if (Q.dim == 0 || Q.vertices.size() == 1) return true;
    if (prop == HeredityProperty::Normality) return check_normality(Q, bound).normal;
    return check_koszul_up_to(Q, bound).ok;
  };
  bool p_ok = passes(P);
  if (!p_ok) return true;  // heredity claims nothing when P fails
  for (const Polytope& F : proper_faces(P))
    if (!passes(F)) return false;
  return true;
}

}  // namespace rootpoly
