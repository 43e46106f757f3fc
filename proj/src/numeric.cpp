#include "rootpoly/numeric.hpp"

#include <sstream>

namespace rootpoly {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Int parse_int(const std::string& s) {
  Int r;
  if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_int: bad integer '" + s + "'");
  return r;
}

Int content(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

IVec primitive(const IVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(x / g);
  return out;
}

QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec scale(const QVec& a, const Rat& c) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

IVec add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec negate(const IVec& a) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

template <typename V>
static std::string vec_to_string_impl(const V& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string vec_to_string(const QVec& v) { return vec_to_string_impl(v); }
std::string vec_to_string(const IVec& v) { return vec_to_string_impl(v); }

}  // namespace rootpoly
