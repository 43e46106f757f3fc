#include "rootpoly/splitting.hpp"

#include <algorithm>
#include <set>

namespace rootpoly {

static std::vector<IVec> dedupe_up_to_sign(const std::vector<IVec>& covs) {
  std::set<IVec> seen;
  std::vector<IVec> out;
  for (const IVec& c : covs) {
    if (is_zero(c)) throw std::invalid_argument("splitting_polytope: zero normal");
    IVec p = primitive(c);
    IVec n = negate(p);
    IVec canon = std::min(p, n);
    if (seen.insert(canon).second) out.push_back(canon);
  }
  return out;
}

SplittingPolytope splitting_polytope(const std::vector<IVec>& normal_covectors, const Lattice& M) {
  SplittingPolytope sp;
  sp.M = M;
  sp.normals = dedupe_up_to_sign(normal_covectors);
  std::vector<Halfspace> hs;
  for (const IVec& v : sp.normals) {
    hs.push_back(Halfspace{v, Rat(1)});          //  <u,v> >= -1
    hs.push_back(Halfspace{negate(v), Rat(1)});  //  <u,v> <= 1
  }
  sp.F = from_inequalities(hs, M);  // throws UnboundedError when normals do not span
  return sp;
}

SplittingPolytope splitting_polytope(const Polytope& P) {
  std::vector<IVec> normals;
  for (const Halfspace& h : P.facets) normals.push_back(h.normal);
  return splitting_polytope(normals, P.M);
}

SplittingPolytope splitting_polytope(const RootSystem& rs) {
  return splitting_polytope(rs.root_covectors(), rs.M);
}

SplitReport is_diagonally_split(const SplittingPolytope& F, long q) {
  if (q < 2) throw std::invalid_argument("is_diagonally_split: q must be >= 2");
  size_t d = F.M.rank();
  ResidueClasses classes(F.M, q);
  SplitReport rep;
  rep.q = q;
  rep.total = classes.total();
  if (rep.total.fits_ulong_p() == 0) throw std::invalid_argument("is_diagonally_split: q^rank too large");
  size_t total = rep.total.get_ui();
  std::vector<bool> covered(total, false);

  // Scan z in q * bounding-box(F); the candidate point is z/q in M-coords.
  IVec lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    Rat mn = F.F.vertices[0][i], mx = mn;
    for (const QVec& v : F.F.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn * q);
    hi[i] = rat_floor(mx * q);
  }

  IVec z = lo;
  size_t ncov = 0;
  while (true) {
    bool interior = true;
    for (const IVec& n : F.normals) {
      Int s = dot(n, z);
      if (s >= q || s <= -q) {  // |<z/q, n>| < 1 required
        interior = false;
        break;
      }
    }
    if (interior) {
      ResidueClassIndex c = classes.class_of_scaled(z);
      size_t idx = classes.index_of(c);
      if (!covered[idx]) {
        covered[idx] = true;
        ++ncov;
        rep.witnesses.emplace(std::move(c), z);
      }
    }
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

  rep.covered = static_cast<unsigned long>(ncov);
  for (size_t idx = 0; idx < total; ++idx)
    if (!covered[idx]) rep.missing.push_back(classes.from_index(idx));
  rep.split = rep.missing.empty();
  return rep;
}

bool verify_type_A(size_t n, long q, const std::vector<IVec>& normal_subset) {
  if (q < 2) throw std::invalid_argument("verify_type_A: q must be >= 2");
  RootSystem rs = make_root_system('A', n);
  SplittingPolytope F = splitting_polytope(normal_subset, rs.M);
  if (!is_diagonally_split(F, q).split) return false;

  // Mechanism behind the claim: the q^n points {0, 1/q, ..., (q-1)/q}^n are
  // all interior, and they hit every residue class.
  IVec z(n, 0);
  while (true) {
    for (const IVec& nv : F.normals) {
      Int s = dot(nv, z);
      if (s >= q || s <= -q) return false;
    }
    size_t i = n;
    bool advanced = false;
    while (i-- > 0) {
      if (z[i] < q - 1) {
        ++z[i];
        for (size_t j = i + 1; j < n; ++j) z[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return true;  // classes are distinct by construction: z mod q = z
}

bool verify_type_BCD(char family, size_t n, long q) {
  if (family != 'B' && family != 'C' && family != 'D')
    throw std::invalid_argument("verify_type_BCD: family must be B, C, or D");
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("verify_type_BCD: the proposition is for odd q >= 3");
  RootSystem rs = make_root_system(family, n);
  SplittingPolytope F = splitting_polytope(rs);
  if (!is_diagonally_split(F, q).split) return false;

  ResidueClasses classes(rs.M, q);
  size_t total = classes.total().get_ui();
  std::vector<bool> hit(total, false);
  size_t nhit = 0;

  // Representative family from the proof: ambient points z/q with integer z
  // and |z_i/q| < 1/2, i.e. |z_i| <= (q-1)/2. For B this is the interior of
  // the half cube; for C and D the claim is that these points already
  // represent every class of (1/q)M / M.
  long half = (q - 1) / 2;
  IVec z(n, -half);
  while (true) {
    QVec u(n);
    for (size_t i = 0; i < n; ++i) u[i] = Rat(z[i], q);
    // Interior of F: strict inequality against every root.
    for (const QVec& root : rs.roots) {
      Rat p = dot(u, root);
      if (p >= 1 || p <= -1) return false;
    }
    ResidueClassIndex c = classes.class_of(rs.M, u);
    size_t idx = classes.index_of(c);
    if (!hit[idx]) {
      hit[idx] = true;
      ++nhit;
    }
    size_t i = n;
    bool advanced = false;
    while (i-- > 0) {
      if (z[i] < half) {
        ++z[i];
        for (size_t j = i + 1; j < n; ++j) z[j] = -half;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return nhit == total;
}

bool verify_mixed(const std::vector<RootSystem>& factors, long q) {
  if (factors.empty()) throw std::invalid_argument("verify_mixed: empty factor list");
  for (const RootSystem& f : factors) {
    char fam = f.name.empty() ? '?' : f.name[0];
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D')
      throw std::invalid_argument("verify_mixed: factor of exceptional type");
    if (fam != 'A' && q % 2 == 0)
      throw std::invalid_argument("verify_mixed: even q requires all factors of type A");
  }
  RootSystem prod = product(factors);
  SplittingPolytope FP = splitting_polytope(prod);

  // Per-factor splitting polytopes; the product of their vertex tuples must
  // land inside F_P.
  std::vector<SplittingPolytope> Fi;
  for (const RootSystem& f : factors) {
    SplittingPolytope sf = splitting_polytope(f);
    if (!is_diagonally_split(sf, q).split) return false;
    Fi.push_back(std::move(sf));
  }

  std::vector<size_t> idx(factors.size(), 0);
  while (true) {
    QVec u;
    for (size_t k = 0; k < factors.size(); ++k)
      for (const Rat& c : Fi[k].F.vertices[idx[k]]) u.push_back(c);
    for (const IVec& nv : FP.normals) {
      Rat s = dot(to_qvec(nv), u);
      if (s > 1 || s < -1) return false;  // containment of the product fails
    }
    size_t k = factors.size();
    bool advanced = false;
    while (k-- > 0) {
      if (idx[k] + 1 < Fi[k].F.vertices.size()) {
        ++idx[k];
        for (size_t j = k + 1; j < factors.size(); ++j) idx[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  return is_diagonally_split(FP, q).split;
}

}  // namespace rootpoly
