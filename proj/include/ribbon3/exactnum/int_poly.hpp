#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/rational.hpp"

namespace ribbon3::exactnum {

// Polynomial with integer coefficients, lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly monomial(const Int& c, int power) {
    std::vector<Int> v(static_cast<std::size_t>(power) + 1, Int(0));
    v.back() = c;
    return IntPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Int& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  IntPoly derivative() const {
    if (degree() < 1) return {};
    std::vector<Int> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
  }

  Int content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  // Content removed and leading coefficient made positive.
  IntPoly primitive() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c /= g;
    return IntPoly(std::move(v));
  }

  // p(c*x) with the result made primitive.
  IntPoly scaled_argument(const Rational& c) const {
    // Multiply through by den^deg to stay integral.
    std::vector<Rational> v(coeffs_.size());
    Rational power = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      v[i] = Rational(coeffs_[i]) * power;
      power *= c;
    }
    Int lcm_den = 1;
    for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational t = v[i] * lcm_den;
      out[i] = t.get_num();
    }
    return IntPoly(std::move(out)).primitive();
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
  }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Int mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += mag.get_str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

// Dense rational polynomials used internally for exact division, gcd and
// Sturm sequences. Lowest degree first, trimmed.
namespace qpoly {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly from_int(const IntPoly& p) {
  QPoly q;
  q.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) q.emplace_back(c);
  return q;
}

// Clear denominators and make primitive with positive leading coefficient.
inline IntPoly to_primitive_int(const QPoly& p) {
  Int l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  std::vector<Int> v;
  v.reserve(p.size());
  for (const auto& c : p) {
    Rational t = c * l;
    v.push_back(t.get_num());
  }
  return IntPoly(std::move(v)).primitive();
}

inline Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline QPoly add(const QPoly& a, const QPoly& b) {
  QPoly v(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
  trim(v);
  return v;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly v(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
  trim(v);
  return v;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly v(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  trim(v);
  return v;
}

inline QPoly scale(const QPoly& a, const Rational& c) {
  QPoly v(a);
  for (auto& x : v) x *= c;
  trim(v);
  return v;
}

// Quotient and remainder of a by nonzero b.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  trim(a);
  int db = degree(b);
  if (degree(a) < db) return {QPoly{}, a};
  QPoly q(static_cast<std::size_t>(degree(a) - db + 1), Rational(0));
  const Rational& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    int shift = degree(a) - db;
    Rational c = a.back() / lb;
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Extended Euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m) monic.
inline std::pair<QPoly, QPoly> inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a, s0{}, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational l = r0.back();
  return {scale(r0, 1 / l), divmod(scale(s0, 1 / l), m).second};
}

}  // namespace qpoly

// Squarefree part p / gcd(p, p') as a primitive integer polynomial.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
  auto q = qpoly::from_int(p);
  auto g = qpoly::gcd(q, qpoly::derivative(q));
  return qpoly::to_primitive_int(qpoly::divmod(q, g).first);
}

// Exact quotient of p by d over the rationals; throws if d does not divide p.
inline IntPoly exact_quotient(const IntPoly& p, const IntPoly& d) {
  auto [q, r] = qpoly::divmod(qpoly::from_int(p), qpoly::from_int(d));
  if (!r.empty()) throw DomainError("polynomial does not divide exactly");
  return qpoly::to_primitive_int(q);
}

// Number of times d divides p (d non-constant).
inline int multiplicity_of_factor(const IntPoly& p, const IntPoly& d) {
  if (d.degree() < 1) throw DomainError("multiplicity of a constant factor");
  int count = 0;
  auto cur = qpoly::from_int(p);
  const auto qd = qpoly::from_int(d);
  while (!cur.empty()) {
    auto [q, r] = qpoly::divmod(cur, qd);
    if (!r.empty()) break;
    ++count;
    cur = std::move(q);
  }
  return count;
}

// Rational roots of p listed once per multiplicity, ascending.
inline std::vector<Rational> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  auto cur = qpoly::from_int(p.primitive());
  // Roots at zero.
  while (!cur.empty() && cur.front() == 0) {
    roots.emplace_back(0);
    cur.erase(cur.begin());
  }
  auto as_int = [](const qpoly::QPoly& q) { return qpoly::to_primitive_int(q); };
  IntPoly ip = as_int(cur);
  if (ip.degree() >= 1) {
    const auto nums = positive_divisors(ip.coeff(0));
    const auto dens = positive_divisors(ip.leading());
    std::vector<Rational> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens) {
        Rational r = make_rational(a, b);
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      if (qpoly::degree(cur) < 1) break;
      const qpoly::QPoly lin{-c, Rational(1)};
      while (qpoly::degree(cur) >= 1 && qpoly::eval(cur, c) == 0) {
        roots.push_back(c);
        cur = qpoly::divmod(cur, lin).first;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Discriminant of the monic cubic x^3 + a x^2 + b x + c.
inline Int cubic_discriminant(const IntPoly& p) {
  if (p.degree() != 3) throw DomainError("cubic_discriminant needs a cubic, got " + p.to_string());
  if (p.leading() != 1) throw DomainError("cubic_discriminant needs a monic cubic, got " + p.to_string());
  const Int a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    auto p0 = qpoly::from_int(p);
    auto p1 = qpoly::derivative(p0);
    seq_.push_back(p0);
    if (p1.empty()) return;
    seq_.push_back(p1);
    while (true) {
      auto r = qpoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.empty()) break;
      seq_.push_back(qpoly::scale(r, -1));
    }
  }

  int sign_variations(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& s : seq_) {
      int v = sgn(qpoly::eval(s, x));
      if (v == 0) continue;
      if (last != 0 && v != last) ++changes;
      last = v;
    }
    return changes;
  }

  // Distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const {
    return sign_variations(a) - sign_variations(b);
  }

 private:
  std::vector<qpoly::QPoly> seq_;
};

// Cauchy bound: every real root lies strictly inside (-B, B).
inline Rational cauchy_root_bound(const IntPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = Rational(abs(p.coeff(i))) / Rational(abs(p.leading()));
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace ribbon3::exactnum
