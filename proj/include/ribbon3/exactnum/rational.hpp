#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ribbon3/errors.hpp"

namespace ribbon3::exactnum {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw DomainError("malformed rational '" + text + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0) return std::nullopt;
  Int root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  if (root * root != v) return std::nullopt;
  return root;
}

inline bool is_perfect_square(const Int& v) { return exact_sqrt(v).has_value(); }

// Integer cube root when v is a perfect cube (negative values allowed).
inline std::optional<Int> exact_cbrt(const Int& v) {
  Int root;
  if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), 3) == 0) return std::nullopt;
  return root;
}

// Rational cube root when it exists.
inline std::optional<Rational> exact_cbrt(const Rational& v) {
  auto n = exact_cbrt(v.get_num());
  auto d = exact_cbrt(v.get_den());
  if (!n || !d) return std::nullopt;
  return make_rational(*n, *d);
}

// Positive divisors of |n| in ascending order; n must be nonzero.
inline std::vector<Int> positive_divisors(const Int& n) {
  if (n == 0) throw DomainError("divisors of zero");
  Int a = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

inline double to_double(const Rational& v) { return v.get_d(); }

}  // namespace ribbon3::exactnum
