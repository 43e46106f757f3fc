#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootpoly {

// All scalar arithmetic is exact. Int/Rat are GMP-backed; rationals are
// always stored reduced with positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline std::string to_string(const Int& a) { return a.get_str(); }

// "p/q" with q omitted when 1.
inline std::string to_string(const Rat& a) { return a.get_str(); }

Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

inline QVec to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int rat_floor(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& a) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Content of an integer vector: gcd of the entries (0 for the zero vector).
Int content(const IVec& v);

// v divided by its content; rejects the zero vector.
IVec primitive(const IVec& v);

inline bool is_integral(const Rat& a) { return a.get_den() == 1; }

inline bool is_integral(const QVec& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

inline IVec to_ivec(const QVec& v) {
  IVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (!is_integral(x)) throw std::invalid_argument("to_ivec: non-integral entry");
    out.push_back(x.get_num());
  }
  return out;
}

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec negate(const IVec& a);
bool is_zero(const IVec& v);
bool is_zero(const QVec& v);

std::string vec_to_string(const QVec& v);
std::string vec_to_string(const IVec& v);

}  // namespace rootpoly
