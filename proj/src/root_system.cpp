#include "rootpoly/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rootpoly {

static QVec unit(size_t n, size_t i, const Rat& c = Rat(1)) {
  QVec v(n, Rat(0));
  v[i] = c;
  return v;
}

IVec RootSystem::covector(const QVec& ambient_n_point) const {
  IVec w(M.rank());
  for (size_t i = 0; i < M.rank(); ++i) {
    Rat p = dot(M.basis[i], ambient_n_point);
    if (!is_integral(p)) throw std::invalid_argument("covector: point does not pair integrally with M");
    w[i] = p.get_num();
  }
  return w;
}

std::vector<IVec> RootSystem::root_covectors() const {
  std::vector<IVec> out;
  out.reserve(roots.size());
  for (const QVec& r : roots) out.push_back(covector(r));
  return out;
}

QVec RootSystem::covector_to_ambient(const IVec& w) const {
  std::vector<QVec> dual = dual_basis_in(M, N);
  QVec out(ambient_dim, Rat(0));
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < ambient_dim; ++j) out[j] += Rat(w[i]) * dual[i][j];
  return out;
}

// Basis of the even-coordinate-sum sublattice of Z^n, n >= 2.
static std::vector<QVec> even_sum_basis(size_t n) {
  std::vector<QVec> rows;
  for (size_t i = 0; i + 1 < n; ++i) {
    QVec r(n, Rat(0));
    r[i] = 1;
    r[i + 1] = -1;
    rows.push_back(std::move(r));
  }
  QVec last(n, Rat(0));
  last[n - 2] = 1;
  last[n - 1] = 1;
  rows.push_back(std::move(last));
  return rows;
}

// Basis of Z^n + Z*(1/2,...,1/2).
static std::vector<QVec> half_diagonal_basis(size_t n) {
  std::vector<QVec> rows;
  for (size_t i = 0; i + 1 < n; ++i) rows.push_back(unit(n, i));
  rows.push_back(QVec(n, Rat(1, 2)));
  return rows;
}

RootSystem make_root_system(char family, size_t n) {
  RootSystem rs;
  rs.rank = n;
  std::ostringstream nm;
  nm << family << n;
  rs.name = nm.str();

  switch (family) {
    case 'A': {
      if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
      rs.ambient_dim = n;
      rs.N = Lattice::standard(n);
      rs.M = Lattice::standard(n);
      for (size_t i = 0; i < n; ++i) {
        rs.roots.push_back(unit(n, i));
        rs.roots.push_back(unit(n, i, Rat(-1)));
      }
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          if (j == k) continue;
          QVec r(n, Rat(0));
          r[j] = 1;
          r[k] = -1;
          rs.roots.push_back(std::move(r));
        }
      break;
    }
    case 'B': {
      if (n < 1) throw std::invalid_argument("B_n requires n >= 1");
      rs.ambient_dim = n;
      rs.N = Lattice::standard(n);
      rs.M = Lattice::standard(n);
      for (size_t i = 0; i < n; ++i) {
        rs.roots.push_back(unit(n, i));
        rs.roots.push_back(unit(n, i, Rat(-1)));
      }
      for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k)
          for (int sj : {1, -1})
            for (int sk : {1, -1}) {
              QVec r(n, Rat(0));
              r[j] = sj;
              r[k] = sk;
              rs.roots.push_back(std::move(r));
            }
      break;
    }
    case 'C':
    case 'D': {
      if (n < 2) throw std::invalid_argument("C_n/D_n require n >= 2 in these coordinates");
      rs.ambient_dim = n;
      rs.N = Lattice(n, even_sum_basis(n));
      rs.M = Lattice(n, half_diagonal_basis(n));
      if (family == 'C')
        for (size_t i = 0; i < n; ++i) {
          rs.roots.push_back(unit(n, i, Rat(2)));
          rs.roots.push_back(unit(n, i, Rat(-2)));
        }
      for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k)
          for (int sj : {1, -1})
            for (int sk : {1, -1}) {
              QVec r(n, Rat(0));
              r[j] = sj;
              r[k] = sk;
              rs.roots.push_back(std::move(r));
            }
      break;
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("F4 has rank 4");
      rs.ambient_dim = 4;
      std::vector<QVec> nbasis = {unit(4, 0), unit(4, 1), unit(4, 2), QVec(4, Rat(1, 2))};
      rs.N = Lattice(4, std::move(nbasis));
      rs.M = Lattice(4, even_sum_basis(4));
      for (size_t i = 0; i < 4; ++i) {
        rs.roots.push_back(unit(4, i));
        rs.roots.push_back(unit(4, i, Rat(-1)));
      }
      for (size_t j = 0; j < 4; ++j)
        for (size_t k = j + 1; k < 4; ++k)
          for (int sj : {1, -1})
            for (int sk : {1, -1}) {
              QVec r(4, Rat(0));
              r[j] = sj;
              r[k] = sk;
              rs.roots.push_back(std::move(r));
            }
      for (int mask = 0; mask < 16; ++mask) {
        QVec r(4);
        for (size_t i = 0; i < 4; ++i) r[i] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
        rs.roots.push_back(std::move(r));
      }
      break;
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("G2 has rank 2");
      rs.ambient_dim = 3;
      std::vector<QVec> nbasis = {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}};
      rs.N = Lattice(3, std::move(nbasis));
      // M = Z^3 / diagonal, represented by the section {(a, b, 0)}; the
      // pairing with N is the ambient dot product, well defined because
      // every element of N has coordinate sum zero.
      std::vector<QVec> mbasis = {unit(3, 0), unit(3, 1)};
      rs.M = Lattice(3, std::move(mbasis));
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          QVec r(3, Rat(0));
          r[i] = 1;
          r[j] = -1;
          rs.roots.push_back(std::move(r));
        }
      for (size_t k = 0; k < 3; ++k)
        for (int s : {1, -1}) {
          QVec r(3, Rat(s));
          r[k] = Rat(-2 * s);
          rs.roots.push_back(std::move(r));
        }
      break;
    }
    default:
      throw std::invalid_argument(std::string("unknown root system family '") + family + "'");
  }
  return rs;
}

RootSystem product(const std::vector<RootSystem>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: empty factor list");
  if (factors.size() == 1) return factors[0];
  RootSystem rs;
  size_t amb = 0, rk = 0;
  for (const RootSystem& f : factors) {
    amb += f.ambient_dim;
    rk += f.rank;
  }
  rs.ambient_dim = amb;
  rs.rank = rk;
  std::vector<QVec> nbasis, mbasis;
  size_t off = 0;
  std::ostringstream nm;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const RootSystem& f = factors[fi];
    if (fi) nm << "x";
    nm << f.name;
    auto embed = [&](const QVec& v) {
      QVec e(amb, Rat(0));
      for (size_t j = 0; j < f.ambient_dim; ++j) e[off + j] = v[j];
      return e;
    };
    for (const QVec& b : f.N.basis) nbasis.push_back(embed(b));
    for (const QVec& b : f.M.basis) mbasis.push_back(embed(b));
    for (const QVec& r : f.roots) rs.roots.push_back(embed(r));
    off += f.ambient_dim;
  }
  rs.name = nm.str();
  rs.N = Lattice(amb, std::move(nbasis));
  rs.M = Lattice(amb, std::move(mbasis));
  return rs;
}

RootSystem parse_root_system(const std::string& spec) {
  std::vector<RootSystem> factors;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find_first_of("xX", pos);
    std::string tok = spec.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'Z')
      throw std::invalid_argument("parse_root_system: bad token '" + tok + "' in '" + spec + "'");
    size_t n = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("parse_root_system: bad rank in '" + tok + "'");
      n = 10 * n + static_cast<size_t>(tok[i] - '0');
    }
    factors.push_back(make_root_system(tok[0], n));
    if (end == std::string::npos) break;
    pos = end + 1;
    if (pos == spec.size()) throw std::invalid_argument("parse_root_system: trailing 'x' in '" + spec + "'");
  }
  if (factors.empty()) throw std::invalid_argument("parse_root_system: empty spec");
  return product(factors);
}

Rat dual_pairing(const QVec& u, const QVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dual_pairing: dimension mismatch");
  return dot(u, v);
}

ResidueClasses::ResidueClasses(const Lattice& M, long q_) : q(q_), rank(M.rank()) {
  if (q < 2) throw std::invalid_argument("residue classes require q >= 2");
}

Int ResidueClasses::total() const {
  Int t = 1;
  for (size_t i = 0; i < rank; ++i) t *= q;
  return t;
}

ResidueClassIndex ResidueClasses::class_of_scaled(const IVec& q_times_coords) const {
  if (q_times_coords.size() != rank) throw std::invalid_argument("class_of_scaled: dimension mismatch");
  ResidueClassIndex c;
  c.coords.resize(rank);
  for (size_t i = 0; i < rank; ++i) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), q_times_coords[i].get_mpz_t(), Int(q).get_mpz_t());
    c.coords[i] = r.get_si();
  }
  return c;
}

ResidueClassIndex ResidueClasses::class_of(const Lattice& M, const QVec& ambient_pt) const {
  auto co = M.coords(ambient_pt);
  if (!co) throw std::invalid_argument("class_of: point outside the span of M");
  QVec scaled = scale(*co, Rat(q));
  if (!is_integral(scaled)) throw std::invalid_argument("class_of: point is not in (1/q)M");
  return class_of_scaled(to_ivec(scaled));
}

size_t ResidueClasses::index_of(const ResidueClassIndex& c) const {
  size_t idx = 0;
  for (size_t i = 0; i < rank; ++i) idx = idx * static_cast<size_t>(q) + static_cast<size_t>(c.coords[i]);
  return idx;
}

ResidueClassIndex ResidueClasses::from_index(size_t idx) const {
  ResidueClassIndex c;
  c.coords.assign(rank, 0);
  for (size_t i = rank; i-- > 0;) {
    c.coords[i] = static_cast<long>(idx % static_cast<size_t>(q));
    idx /= static_cast<size_t>(q);
  }
  return c;
}

}  // namespace rootpoly
