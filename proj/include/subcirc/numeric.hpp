#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Exact rational scalar for dense types. All arithmetic in this project is
// exact; epsilon and dummy_precision are genuinely zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace subcirc {

using Int = mpz_class;
using Rational = mpq_class;
using Index = Eigen::Index;

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// "p/q" with the sign on the numerator, "p" when q = 1. Canonical form only.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rational v(s);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal: '" + s + "'");
  }
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

// mpq_class(p, q) does not canonicalize; this does.
inline Rational ratio(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_from_double(double d) {
  return Rational(d);  // binary doubles are exact rationals
}

inline bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline int sign(const Rational& q) { return sgn(q); }

// Lexicographic order; the canonical tie-breaker everywhere in this project.
inline int lex_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  return 0;
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_compare(a, b) < 0; }
};

inline bool vec_eq(const Vec& a, const Vec& b) { return lex_compare(a, b) == 0; }

// Unique positive multiple of v with coprime integer entries.
inline Vec primitive_ray(const Vec& v) {
  if (v.size() == 0 || is_zero(v)) throw Error("primitive_ray: zero vector");
  Int den_lcm = 1;
  for (Index i = 0; i < v.size(); ++i) den_lcm = lcm(den_lcm, v(i).get_den());
  std::vector<Int> scaled(static_cast<size_t>(v.size()));
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    scaled[static_cast<size_t>(i)] = v(i).get_num() * (den_lcm / v(i).get_den());
    g = gcd(g, scaled[static_cast<size_t>(i)]);
  }
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = Rational(scaled[static_cast<size_t>(i)] / g);
  return out;
}

inline bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return vec_eq(primitive_ray(a), primitive_ray(b)) ||
         vec_eq(primitive_ray(a), primitive_ray(Vec(-b)));
}

inline Vec make_vec(std::initializer_list<Rational> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Vec unit_vec(Index n, Index i, const Rational& value = 1) {
  Vec v = Vec::Zero(n);
  v(i) = value;
  return v;
}

inline std::string format_vec(const Vec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(v(i));
  }
  return s + ")";
}

}  // namespace subcirc
