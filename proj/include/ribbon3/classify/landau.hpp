#pragma once

#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/rational.hpp"

namespace ribbon3::classify {

struct LandauResult {
  exactnum::Int bound;
  std::vector<std::vector<exactnum::Int>> solutions;  // nondecreasing tuples
};

namespace detail {

inline void unit_fractions(const exactnum::Rational& rest, int terms, const exactnum::Int& smallest,
                           std::vector<exactnum::Int>& prefix, LandauResult& out) {
  using exactnum::Int;
  using exactnum::Rational;
  if (terms == 1) {
    if (rest.get_num() == 1 && rest.get_den() >= smallest) {
      prefix.push_back(rest.get_den());
      out.solutions.push_back(prefix);
      if (rest.get_den() > out.bound) out.bound = rest.get_den();
      prefix.pop_back();
    }
    return;
  }
  // c >= 1/rest (each term at most rest) and c <= terms/rest (terms nondecreasing).
  Int lo = rest.get_den() / rest.get_num();
  if (Rational(1, 1) / Rational(lo) > rest) ++lo;
  if (lo < smallest) lo = smallest;
  const Int hi = (terms * rest.get_den()) / rest.get_num();
  for (Int c = lo; c <= hi; ++c) {
    Rational next = rest - Rational(1) / Rational(c);
    if (next <= 0) continue;
    prefix.push_back(c);
    unit_fractions(next, terms - 1, c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// Solutions of 1 = 1/c_1 + ... + 1/c_r in positive integers and the largest
// c_i occurring: the bound on the order of a finite group with r conjugacy
// classes from the class equation.
inline LandauResult landau(int num_classes) {
  if (num_classes < 1) throw DomainError("number of classes must be >= 1");
  if (num_classes > 5) throw DomainError("number of classes above 5 is outside the supported range");
  LandauResult out{0, {}};
  std::vector<exactnum::Int> prefix;
  detail::unit_fractions(exactnum::Rational(1), num_classes, 1, prefix, out);
  return out;
}

inline long landau_bound(int num_classes) { return landau(num_classes).bound.get_si(); }

}  // namespace ribbon3::classify
