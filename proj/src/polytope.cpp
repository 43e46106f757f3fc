#include "rootpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rootpoly {

static constexpr size_t npos = static_cast<size_t>(-1);

std::vector<IVec> Polytope::lattice_vertices() const {
  if (!is_lattice) throw std::invalid_argument("lattice_vertices: polytope has non-lattice vertices");
  std::vector<IVec> out;
  out.reserve(vertices.size());
  for (const QVec& v : vertices) out.push_back(to_ivec(v));
  return out;
}

// First combination [0,1,...,k-1]; advance to next k-subset of [0,n).
static bool next_combination(std::vector<size_t>& c, size_t n) {
  size_t k = c.size();
  for (size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Primitive integral covector from a rational normal direction.
static IVec primitive_covector(const QVec& w) {
  Int den = 1;
  for (const Rat& x : w) den = lcm(den, x.get_den());
  IVec iw(w.size());
  for (size_t i = 0; i < w.size(); ++i) iw[i] = w[i].get_num() * (den / w[i].get_den());
  return primitive(iw);
}

static size_t affine_rank(const std::vector<QVec>& pts) {
  if (pts.empty()) return 0;
  if (pts.size() == 1) return 0;
  QMat diffs(pts.size() - 1, pts[0].size());
  for (size_t i = 1; i < pts.size(); ++i) diffs.a[i - 1] = sub(pts[i], pts[0]);
  return rank(diffs);
}

static Polytope assemble(const Lattice& M, std::vector<QVec> vertices, std::vector<Halfspace> facets) {
  Polytope P;
  P.M = M;
  P.dim = M.rank();
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  P.vertices = std::move(vertices);
  P.facets = std::move(facets);
  P.is_lattice = true;
  for (const QVec& v : P.vertices)
    if (!is_integral(v)) P.is_lattice = false;
  return P;
}

Polytope from_vertices(const std::vector<QVec>& pts_in, const Lattice& M) {
  size_t d = M.rank();
  std::vector<QVec> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("from_vertices: empty point set");
  for (const QVec& p : pts)
    if (p.size() != d) throw std::invalid_argument("from_vertices: coordinate dimension mismatch");

  if (d == 0) return assemble(M, {QVec{}}, {});
  if (affine_rank(pts) != d)
    throw LowerDimensionalError("from_vertices: point set is not full-dimensional in rank " + std::to_string(d));

  size_t n = pts.size();
  std::vector<Halfspace> facets;
  std::vector<size_t> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  do {
    QMat diffs(d - 1, d);
    for (size_t i = 1; i < d; ++i) diffs.a[i - 1] = sub(pts[comb[i]], pts[comb[0]]);
    std::vector<QVec> ker = nullspace(diffs);
    if (ker.size() != 1) continue;  // degenerate subset
    IVec w = primitive_covector(ker[0]);
    Rat c = dot(to_qvec(w), pts[comb[0]]);
    bool any_above = false, any_below = false;
    for (const QVec& p : pts) {
      int s = sgn(dot(to_qvec(w), p) - c);
      if (s > 0) any_above = true;
      if (s < 0) any_below = true;
      if (any_above && any_below) break;
    }
    if (any_above && any_below) continue;  // not supporting
    if (any_below) {
      // Orient inward: after the flip every point satisfies w.x >= c.
      w = negate(w);
      c = -c;
    }
    facets.push_back(Halfspace{w, -c});
  } while (next_combination(comb, n));

  std::vector<Halfspace> valid = std::move(facets);

  // Vertices: points whose tight facet normals span R^d.
  std::vector<QVec> verts;
  for (const QVec& p : pts) {
    std::vector<QVec> tight;
    for (const Halfspace& h : valid)
      if (dot(to_qvec(h.normal), p) + h.offset == 0) tight.push_back(to_qvec(h.normal));
    if (tight.size() >= d && rank(QMat(tight)) == d) verts.push_back(p);
  }
  return assemble(M, std::move(verts), std::move(valid));
}

static std::vector<Halfspace> canonicalize_halfspaces(const std::vector<Halfspace>& in) {
  std::vector<Halfspace> out;
  for (const Halfspace& h : in) {
    if (is_zero(h.normal)) {
      if (h.offset < 0) throw EmptyError("from_inequalities: infeasible trivial inequality");
      continue;
    }
    Int g = content(h.normal);
    Halfspace c;
    c.normal.reserve(h.normal.size());
    for (const Int& x : h.normal) c.normal.push_back(x / g);
    c.offset = h.offset / Rat(g);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polytope from_inequalities(const std::vector<Halfspace>& ineqs, const Lattice& M) {
  size_t d = M.rank();
  std::vector<Halfspace> hs = canonicalize_halfspaces(ineqs);
  for (const Halfspace& h : hs)
    if (h.normal.size() != d) throw std::invalid_argument("from_inequalities: normal dimension mismatch");
  if (d == 0) return assemble(M, {QVec{}}, {});

  {
    QMat normals(hs.size(), d);
    for (size_t i = 0; i < hs.size(); ++i) normals.a[i] = to_qvec(hs[i].normal);
    if (rank(normals) != d)
      throw UnboundedError("from_inequalities: normals do not span (lineality present)");
  }

  auto satisfies_all = [&](const QVec& x) {
    for (const Halfspace& h : hs)
      if (dot(to_qvec(h.normal), x) + h.offset < 0) return false;
    return true;
  };

  std::set<QVec> vert_set;
  std::vector<size_t> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  size_t m = hs.size();
  if (m < d) throw UnboundedError("from_inequalities: too few inequalities");
  do {
    QMat A(d, d);
    QVec b(d);
    for (size_t i = 0; i < d; ++i) {
      A.a[i] = to_qvec(hs[comb[i]].normal);
      b[i] = -hs[comb[i]].offset;
    }
    auto x = solve_rational(A, b);
    if (!x) continue;
    if (satisfies_all(*x)) vert_set.insert(*x);
  } while (next_combination(comb, m));

  if (vert_set.empty()) throw EmptyError("from_inequalities: empty region");

  // Unbounded iff some vertex has a feasible extreme ray along d-1 of its
  // tight inequalities.
  for (const QVec& v : vert_set) {
    std::vector<size_t> tight;
    for (size_t i = 0; i < m; ++i)
      if (dot(to_qvec(hs[i].normal), v) + hs[i].offset == 0) tight.push_back(i);
    if (tight.size() < d) continue;
    std::vector<size_t> sub(d - 1);
    std::iota(sub.begin(), sub.end(), 0);
    do {
      QMat T(d - 1, d);
      for (size_t i = 0; i + 1 < d; ++i) T.a[i] = to_qvec(hs[tight[sub[i]]].normal);
      std::vector<QVec> ker = nullspace(T);
      if (ker.size() != 1) continue;
      for (int s : {1, -1}) {
        QVec r = scale(ker[0], Rat(s));
        bool recession = true;
        for (const Halfspace& h : hs)
          if (dot(to_qvec(h.normal), r) < 0) {
            recession = false;
            break;
          }
        if (recession) throw UnboundedError("from_inequalities: unbounded region");
      }
    } while (next_combination(sub, tight.size()));
  }

  std::vector<QVec> verts(vert_set.begin(), vert_set.end());
  if (affine_rank(verts) != d)
    throw LowerDimensionalError("from_inequalities: region is not full-dimensional");

  // Facets: inequalities tight on a (d-1)-dimensional set of vertices.
  std::vector<Halfspace> facets;
  for (const Halfspace& h : hs) {
    std::vector<QVec> tight_verts;
    for (const QVec& v : verts)
      if (dot(to_qvec(h.normal), v) + h.offset == 0) tight_verts.push_back(v);
    if (tight_verts.size() >= d && affine_rank(tight_verts) == d - 1) facets.push_back(h);
  }
  return assemble(M, std::move(verts), std::move(facets));
}

// Enumeration of integral points in the bounding box, filtered exactly. The
// inequality num/den test is all-integer: den*(n.x) + num >= 0.
static std::vector<IVec> scan_points(const Polytope& P, bool strict) {
  if (P.dim == 0) return strict ? std::vector<IVec>{} : std::vector<IVec>{IVec{}};
  size_t d = P.dim;
  IVec lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    Rat mn = P.vertices[0][i], mx = P.vertices[0][i];
    for (const QVec& v : P.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  struct Row {
    IVec n;
    Int num, den;
  };
  std::vector<Row> rows;
  for (const Halfspace& h : P.facets) rows.push_back({h.normal, h.offset.get_num(), h.offset.get_den()});

  std::vector<IVec> out;
  IVec x = lo;
  while (true) {
    bool ok = true;
    for (const Row& r : rows) {
      Int s = dot(r.n, x) * r.den + r.num;
      if (strict ? s <= 0 : s < 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    size_t i = d;
    while (i-- > 0) {
      if (x[i] < hi[i]) {
        ++x[i];
        for (size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::vector<IVec> lattice_points(const Polytope& P) { return scan_points(P, false); }
std::vector<IVec> interior_lattice_points(const Polytope& P) { return scan_points(P, true); }

Polytope dilate(const Polytope& P, const Int& m) {
  if (m <= 0) throw std::invalid_argument("dilate: factor must be positive");
  Polytope Q = P;
  for (QVec& v : Q.vertices)
    for (Rat& c : v) c *= Rat(m);
  for (Halfspace& h : Q.facets) h.offset *= Rat(m);
  std::sort(Q.vertices.begin(), Q.vertices.end());
  std::sort(Q.facets.begin(), Q.facets.end());
  Q.is_lattice = true;
  for (const QVec& v : Q.vertices)
    if (!is_integral(v)) Q.is_lattice = false;
  return Q;
}

Polytope minkowski_sum(const std::vector<Polytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("minkowski_sum: empty list");
  Polytope acc = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) {
    if (!(parts[k].M == acc.M)) throw std::invalid_argument("minkowski_sum: lattice mismatch");
    std::vector<QVec> sums;
    for (const QVec& a : acc.vertices)
      for (const QVec& b : parts[k].vertices) sums.push_back(add(a, b));
    acc = from_vertices(sums, acc.M);
  }
  return acc;
}

AffineReduction affine_reduce(const std::vector<IVec>& points_in) {
  std::vector<IVec> pts = points_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("affine_reduce: empty point set");
  size_t n = pts[0].size();
  IVec base = pts[0];  // lex smallest

  ZMat diffs(pts.size() - 1, n);
  for (size_t i = 1; i < pts.size(); ++i) diffs.a[i - 1] = sub(pts[i], base);

  AffineReduction red;
  red.base = base;
  if (pts.size() == 1) {
    red.poly = assemble(Lattice(), {QVec{}}, {});
    return red;
  }

  // Saturated basis of the linear span: first r rows of W^{-1} from the
  // Smith form U*diffs*W = D.
  SmithForm snf = smith_normal_form(diffs);
  size_t r = 0;
  while (r < std::min(snf.D.rows, snf.D.cols) && snf.D.a[r][r] != 0) ++r;
  auto Winv = inverse(snf.V.to_rational());
  if (!Winv) throw std::logic_error("affine_reduce: non-invertible unimodular matrix");
  std::vector<IVec> basis;
  for (size_t i = 0; i < r; ++i) {
    IVec row(n);
    for (size_t j = 0; j < n; ++j) {
      if (!is_integral(Winv->a[i][j])) throw std::logic_error("affine_reduce: non-integral unimodular inverse");
      row[j] = Winv->a[i][j].get_num();
    }
    basis.push_back(std::move(row));
  }
  red.basis = basis;

  // Coordinates of each point with respect to the saturated basis.
  QMat Bt(n, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) Bt.a[j][i] = Rat(basis[i][j]);
  std::vector<QVec> coords;
  for (const IVec& p : pts) {
    auto x = solve_rational(Bt, to_qvec(sub(p, base)));
    if (!x || !is_integral(*x)) throw std::logic_error("affine_reduce: point outside saturated span lattice");
    coords.push_back(*x);
  }
  red.poly = from_vertices(coords, Lattice::standard(r));
  return red;
}

Polytope cayley_sum_of_point_sets(const std::vector<std::vector<IVec>>& vertex_sets) {
  size_t r = vertex_sets.size();
  if (r == 0) throw std::invalid_argument("cayley_sum: empty list");
  size_t d = npos;
  std::vector<IVec> pts;
  for (size_t i = 0; i < r; ++i) {
    if (vertex_sets[i].empty()) throw std::invalid_argument("cayley_sum: empty summand");
    for (const IVec& v : vertex_sets[i]) {
      if (d == npos) d = v.size();
      if (v.size() != d) throw std::invalid_argument("cayley_sum: ambient mismatch");
      IVec p = v;
      for (size_t k = 0; k < r; ++k) p.push_back(k == i ? 1 : 0);
      pts.push_back(std::move(p));
    }
  }
  AffineReduction red = affine_reduce(pts);
  // Fiber property: every placed vertex set contributes exactly its own
  // extreme points as vertices of the Cayley sum.
  size_t expected = 0;
  for (const auto& vs : vertex_sets) {
    std::set<IVec> uniq(vs.begin(), vs.end());
    expected += uniq.size();
  }
  if (red.poly.vertices.size() > expected)
    throw std::logic_error("cayley_sum: fiber postcondition violated");
  return red.poly;
}

Polytope cayley_sum(const std::vector<Polytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("cayley_sum: empty list");
  std::vector<std::vector<IVec>> sets;
  for (const Polytope& P : parts) {
    if (!(P.M == parts[0].M)) throw std::invalid_argument("cayley_sum: lattice mismatch");
    sets.push_back(P.lattice_vertices());
  }
  return cayley_sum_of_point_sets(sets);
}

std::vector<QVec> face_vertices(const Polytope& P, const std::vector<size_t>& tight) {
  std::vector<QVec> out;
  for (const QVec& v : P.vertices) {
    bool all_tight = true;
    for (size_t fi : tight) {
      if (fi >= P.facets.size()) throw std::invalid_argument("face_vertices: bad facet index");
      if (dot(to_qvec(P.facets[fi].normal), v) + P.facets[fi].offset != 0) {
        all_tight = false;
        break;
      }
    }
    if (all_tight) out.push_back(v);
  }
  if (out.empty()) throw EmptyError("face: empty face");
  return out;
}

Polytope face(const Polytope& P, const std::vector<size_t>& tight) {
  std::vector<QVec> verts = face_vertices(P, tight);
  if (verts.size() == P.vertices.size()) return P;
  std::vector<IVec> ipts;
  for (const QVec& v : verts) {
    if (!is_integral(v)) throw std::invalid_argument("face: only lattice polytopes supported");
    ipts.push_back(to_ivec(v));
  }
  return affine_reduce(ipts).poly;
}

std::vector<Polytope> proper_faces(const Polytope& P) {
  std::map<std::vector<QVec>, std::vector<size_t>> by_verts;
  size_t f = P.facets.size();
  if (f > 20) throw std::invalid_argument("proper_faces: too many facets for exhaustive enumeration");
  for (size_t mask = 1; mask < (size_t(1) << f); ++mask) {
    std::vector<size_t> tight;
    for (size_t i = 0; i < f; ++i)
      if (mask & (size_t(1) << i)) tight.push_back(i);
    try {
      std::vector<QVec> fv = face_vertices(P, tight);
      if (fv.size() == P.vertices.size()) continue;
      auto it = by_verts.find(fv);
      if (it == by_verts.end()) by_verts.emplace(std::move(fv), tight);
    } catch (const EmptyError&) {
    }
  }
  std::vector<Polytope> out;
  for (const auto& [verts, tight] : by_verts) out.push_back(face(P, tight));
  return out;
}

CutOutReport is_cut_out(const Polytope& P, const RootSystem& rs) {
  if (!(P.M == rs.M)) throw std::invalid_argument("is_cut_out: polytope lattice is not the dual root lattice");
  if (!P.is_lattice) throw std::invalid_argument("is_cut_out: not a lattice polytope");
  std::vector<IVec> rc = rs.root_covectors();
  CutOutReport rep;
  rep.ok = true;
  rep.facet_root.assign(P.facets.size(), npos);
  for (size_t fi = 0; fi < P.facets.size(); ++fi) {
    const IVec& w = P.facets[fi].normal;  // primitive
    for (size_t ri = 0; ri < rc.size(); ++ri) {
      // Root on the ray through w: rc[ri] == k*w with k a positive integer.
      size_t nz = 0;
      while (nz < w.size() && w[nz] == 0) ++nz;
      if (rc[ri][nz] == 0 || w[nz] == 0) continue;
      if (rc[ri][nz] % w[nz] != 0) continue;
      Int k = rc[ri][nz] / w[nz];
      if (k <= 0) continue;
      bool match = true;
      for (size_t j = 0; j < w.size(); ++j)
        if (rc[ri][j] != k * w[j]) {
          match = false;
          break;
        }
      if (match) {
        rep.facet_root[fi] = ri;
        break;
      }
    }
    if (rep.facet_root[fi] == npos && rep.ok) {
      rep.ok = false;
      rep.failing_facet = fi;
    }
  }
  return rep;
}

bool lattice_isomorphic(const Polytope& A, const Polytope& B) {
  if (A.dim != B.dim) return false;
  if (!A.is_lattice || !B.is_lattice) throw std::invalid_argument("lattice_isomorphic: lattice polytopes required");
  if (A.vertices.size() != B.vertices.size()) return false;
  size_t d = A.dim;
  if (d == 0) return true;

  std::vector<IVec> va = A.lattice_vertices();
  std::vector<IVec> vb = B.lattice_vertices();
  std::set<IVec> bset(vb.begin(), vb.end());
  IVec a0 = va[0];

  // Linearly independent difference frame from a0.
  std::vector<size_t> frame;
  {
    std::vector<QVec> rows;
    for (size_t i = 1; i < va.size() && frame.size() < d; ++i) {
      rows.push_back(to_qvec(sub(va[i], a0)));
      if (rank(QMat(rows)) == rows.size())
        frame.push_back(i);
      else
        rows.pop_back();
    }
  }
  if (frame.size() != d) return false;
  QMat Da(d, d);  // columns = frame diffs
  for (size_t c = 0; c < d; ++c)
    for (size_t rI = 0; rI < d; ++rI) Da.a[rI][c] = Rat(va[frame[c]][rI] - a0[rI]);
  auto DaInv = inverse(Da);
  if (!DaInv) return false;

  for (const IVec& b0 : vb) {
    std::vector<IVec> diffs;
    for (const IVec& b : vb)
      if (b != b0) diffs.push_back(sub(b, b0));
    // Ordered selections of d image diffs.
    std::vector<size_t> sel(d, 0);
    while (true) {
      bool distinct = true;
      for (size_t i = 0; i < d && distinct; ++i)
        for (size_t j = i + 1; j < d; ++j)
          if (sel[i] == sel[j]) {
            distinct = false;
            break;
          }
      if (distinct) {
        QMat Db(d, d);
        for (size_t c = 0; c < d; ++c)
          for (size_t rI = 0; rI < d; ++rI) Db.a[rI][c] = Rat(diffs[sel[c]][rI]);
        QMat T = mul(Db, *DaInv);
        bool integral = true;
        for (size_t i = 0; i < d && integral; ++i)
          for (size_t j = 0; j < d; ++j)
            if (!is_integral(T.a[i][j])) {
              integral = false;
              break;
            }
        if (integral) {
          Rat det = determinant(T);
          if (det == 1 || det == -1) {
            bool all_map = true;
            for (const IVec& a : va) {
              QVec img = mul(T, to_qvec(sub(a, a0)));
              IVec pt(d);
              for (size_t i = 0; i < d; ++i) pt[i] = img[i].get_num() + b0[i];
              if (!bset.count(pt)) {
                all_map = false;
                break;
              }
            }
            if (all_map) return true;
          }
        }
      }
      size_t i = d;
      bool advanced = false;
      while (i-- > 0) {
        if (sel[i] + 1 < diffs.size()) {
          ++sel[i];
          for (size_t j = i + 1; j < d; ++j) sel[j] = 0;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return false;
}

}  // namespace rootpoly
