#pragma once

#include <cmath>
#include <compare>
#include <numeric>
#include <numbers>
#include <string>
#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/int_poly.hpp"
#include "ribbon3/exactnum/real_algebraic.hpp"

namespace ribbon3::exactnum {

// exp(2*pi*i * p/q) stored as the reduced turn p/q with 0 <= p < q.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long p, long q) {
    if (q < 1) throw DomainError("root of unity needs a positive denominator");
    long r = ((p % q) + q) % q;
    long g = std::gcd(r, q);
    if (g == 0) g = q;
    p_ = r / g;
    q_ = q / g;
  }

  static RootOfUnity one() { return {}; }

  long numerator() const { return p_; }
  long order() const { return q_; }

  RootOfUnity inverse() const { return {-p_, q_}; }
  RootOfUnity pow(long e) const { return {p_ * e, q_}; }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    return {a.p_ * b.q_ + b.p_ * a.q_, a.q_ * b.q_};
  }

  bool is_primitive(long n) const { return q_ == n; }

  double turn() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  // Orders by (order, numerator).
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

 private:
  long p_ = 0;
  long q_ = 1;
};

// All roots of unity with order <= max_order, sorted by (order, numerator).
inline std::vector<RootOfUnity> roots_of_unity_up_to(long max_order) {
  std::vector<RootOfUnity> out;
  for (long q = 1; q <= max_order; ++q)
    for (long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// n-th cyclotomic polynomial by dividing x^n - 1 by Phi_d for proper d | n.
inline IntPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic polynomial needs n >= 1");
  auto p = qpoly::from_int(IntPoly::monomial(1, static_cast<int>(n)) - IntPoly{1});
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = qpoly::divmod(p, qpoly::from_int(cyclotomic_polynomial(d))).first;
  return qpoly::to_primitive_int(p);
}

// Minimal polynomial of 2cos(2*pi/n): the polynomial Psi with
// Phi_n(z) = z^h Psi(z + 1/z), h = phi(n)/2 (n >= 3). For n = 1, 2 the
// values are 2 and -2.
inline IntPoly two_cos_minimal_polynomial(long n) {
  if (n < 1) throw DomainError("two_cos_minimal_polynomial needs n >= 1");
  if (n == 1) return IntPoly{-2, 1};
  if (n == 2) return IntPoly{2, 1};
  const IntPoly phi = cyclotomic_polynomial(n);
  const int h = phi.degree() / 2;
  // D_j(x) = z^j + z^-j as a polynomial in x = z + 1/z.
  std::vector<IntPoly> dickson{IntPoly{2}, IntPoly{0, 1}};
  for (int j = 2; j <= h; ++j)
    dickson.push_back(IntPoly{0, 1} * dickson[static_cast<std::size_t>(j - 1)] - dickson[static_cast<std::size_t>(j - 2)]);
  IntPoly psi(std::vector<Int>{phi.coeff(h)});
  for (int j = 1; j <= h; ++j) psi = psi + IntPoly(std::vector<Int>{phi.coeff(h + j)}) * dickson[static_cast<std::size_t>(j)];
  return psi.primitive();
}

// Exact real algebraic value of z + 1/z = 2cos(2*pi*p/q).
inline RealAlgebraic two_cos(const RootOfUnity& z) {
  const IntPoly psi = two_cos_minimal_polynomial(z.order());
  if (psi.degree() == 1) return RealAlgebraic(make_rational(-psi.coeff(0), psi.coeff(1)));
  const long double approx = 2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * z.numerator() / z.order());
  // Conjugates of 2cos(2pi/q) are separated by far more than 2^-20 for the
  // orders used here; the Sturm check in the constructor certifies the interval.
  const Rational center = Rational(static_cast<double>(approx));
  const Rational eps(1, 1 << 20);
  return RealAlgebraic::from_isolating_interval(psi, center - eps, center + eps);
}

}  // namespace ribbon3::exactnum
