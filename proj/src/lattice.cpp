#include "rootpoly/lattice.hpp"

namespace rootpoly {

Lattice::Lattice(size_t ambient, std::vector<QVec> rows) : ambient_dim(ambient), basis(std::move(rows)) {
  if (basis.empty() && ambient > 0) throw std::invalid_argument("Lattice: empty basis");
  for (const QVec& r : basis)
    if (r.size() != ambient_dim) throw std::invalid_argument("Lattice: basis row dimension mismatch");
  if (!basis.empty()) {
    QMat B(basis);
    if (rootpoly::rank(B) != basis.size()) throw std::invalid_argument("Lattice: basis rows linearly dependent");
  }
}

Lattice Lattice::standard(size_t n) {
  std::vector<QVec> rows(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  Lattice L;
  L.ambient_dim = n;
  L.basis = std::move(rows);
  return L;
}

std::optional<QVec> Lattice::coords(const QVec& ambient_pt) const {
  if (ambient_pt.size() != ambient_dim) throw std::invalid_argument("Lattice::coords: dimension mismatch");
  // Solve basis^T x = v.
  QMat Bt = QMat(basis).transposed();
  return solve_rational(Bt, ambient_pt);
}

bool Lattice::contains(const QVec& ambient_pt) const {
  auto c = coords(ambient_pt);
  return c && is_integral(*c);
}

QVec Lattice::to_ambient(const QVec& coordinates) const {
  if (coordinates.size() != rank()) throw std::invalid_argument("Lattice::to_ambient: dimension mismatch");
  QVec out(ambient_dim, Rat(0));
  for (size_t i = 0; i < coordinates.size(); ++i)
    for (size_t j = 0; j < ambient_dim; ++j) out[j] += coordinates[i] * basis[i][j];
  return out;
}

QVec primitive_in_lattice(const QVec& v, const Lattice& L) {
  if (is_zero(v)) throw std::invalid_argument("primitive_in_lattice: zero vector");
  auto c = L.coords(v);
  if (!c || !is_integral(*c)) throw std::invalid_argument("primitive_in_lattice: vector not in lattice");
  IVec ic = to_ivec(*c);
  return L.to_ambient(to_qvec(primitive(ic)));
}

std::vector<QVec> dual_basis_in(const Lattice& L, const Lattice& N) {
  if (L.ambient_dim != N.ambient_dim) throw std::invalid_argument("dual_basis_in: ambient mismatch");
  size_t r = L.rank();
  if (N.rank() != r) throw std::invalid_argument("dual_basis_in: rank mismatch");
  // Pairing matrix G[i][k] = <b_i, nu_k>; solve G c = e_j and assemble in N's basis.
  QMat G(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) G.a[i][k] = dot(L.basis[i], N.basis[k]);
  auto Ginv = inverse(G);
  if (!Ginv) throw std::invalid_argument("dual_basis_in: degenerate pairing");
  std::vector<QVec> out;
  out.reserve(r);
  for (size_t j = 0; j < r; ++j) {
    QVec coeff(r);
    for (size_t k = 0; k < r; ++k) coeff[k] = Ginv->a[k][j];
    out.push_back(N.to_ambient(coeff));
  }
  return out;
}

}  // namespace rootpoly
