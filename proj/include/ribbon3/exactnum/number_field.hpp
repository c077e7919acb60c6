#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/int_poly.hpp"
#include "ribbon3/exactnum/real_algebraic.hpp"

namespace ribbon3::exactnum {

// The abstract field Q[t]/(f) for an irreducible f. No embedding is chosen;
// embed() evaluates an element at a particular real root of f.
class AlgebraicField {
 public:
  explicit AlgebraicField(const IntPoly& defining) : defining_(defining.primitive()) {
    if (defining_.degree() < 1) throw DomainError("field needs a non-constant defining polynomial");
    modulus_ = qpoly::monic(qpoly::from_int(defining_));
  }

  int degree() const { return defining_.degree(); }
  const IntPoly& defining_polynomial() const { return defining_; }
  const qpoly::QPoly& monic_modulus() const { return modulus_; }

  qpoly::QPoly reduce(const qpoly::QPoly& p) const { return qpoly::divmod(p, modulus_).second; }

 private:
  IntPoly defining_;
  qpoly::QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const AlgebraicField>;

inline FieldPtr make_field(const IntPoly& defining) { return std::make_shared<const AlgebraicField>(defining); }

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, qpoly::QPoly coeffs) : field_(std::move(field)) {
    coeffs_ = field_->reduce(coeffs);
  }
  FieldElement(FieldPtr field, const Rational& c) : FieldElement(std::move(field), qpoly::QPoly{c}) {}

  // The class of t itself.
  static FieldElement generator(FieldPtr field) {
    return FieldElement(std::move(field), qpoly::QPoly{Rational(0), Rational(1)});
  }

  const FieldPtr& field() const { return field_; }
  const qpoly::QPoly& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw DomainError("field element is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.common(b), qpoly::add(a.coeffs_, b.coeffs_));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.common(b), qpoly::sub(a.coeffs_, b.coeffs_));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.common(b), qpoly::mul(a.coeffs_, b.coeffs_));
  }
  friend FieldElement operator*(const Rational& c, const FieldElement& a) {
    return FieldElement(a.field_, qpoly::scale(a.coeffs_, c));
  }
  friend FieldElement operator+(const FieldElement& a, const Rational& c) {
    return a + FieldElement(a.field_, c);
  }
  friend FieldElement operator-(const FieldElement& a, const Rational& c) {
    return a - FieldElement(a.field_, c);
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  FieldElement inverse() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    auto [g, s] = qpoly::inverse_mod(coeffs_, field_->monic_modulus());
    if (qpoly::degree(g) != 0) throw DomainError("defining polynomial is not irreducible");
    return FieldElement(field_, s);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }

  // Matrix of multiplication by this element on the basis 1, t, ..., t^(d-1).
  std::vector<std::vector<Rational>> multiplication_matrix() const {
    const int d = field_->degree();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (int j = 0; j < d; ++j) {
      qpoly::QPoly basis(static_cast<std::size_t>(j) + 1, Rational(0));
      basis.back() = 1;
      auto col = field_->reduce(qpoly::mul(coeffs_, basis));
      for (std::size_t i = 0; i < col.size(); ++i) m[i][static_cast<std::size_t>(j)] = col[i];
    }
    return m;
  }

  // Characteristic polynomial of the multiplication map (Faddeev-LeVerrier),
  // monic, lowest degree first.
  qpoly::QPoly characteristic_polynomial() const {
    const auto a = multiplication_matrix();
    const std::size_t n = a.size();
    using Mat = std::vector<std::vector<Rational>>;
    auto matmul = [n](const Mat& x, const Mat& y) {
      Mat r(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (x[i][k] != 0)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      return r;
    };
    qpoly::QPoly c(n + 1, Rational(0));
    c[n] = 1;
    Mat m(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
      // m holds A*M_{k-1}; M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k.
      for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
      m = matmul(a, m);
      Rational tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
      c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    qpoly::trim(c);
    return c;
  }

  // Minimal polynomial over Q as a primitive integer polynomial.
  IntPoly minimal_polynomial() const {
    return squarefree_part(qpoly::to_primitive_int(characteristic_polynomial()));
  }

  Rational norm() const {
    auto cp = characteristic_polynomial();
    Rational n = cp[0];
    return (qpoly::degree(cp) % 2 == 0) ? n : -n;
  }

  Rational trace() const {
    auto cp = characteristic_polynomial();
    return -cp[cp.size() - 2];
  }

 private:
  const FieldPtr& common(const FieldElement& other) const {
    if (field_ != other.field_ && field_->defining_polynomial() != other.field_->defining_polynomial())
      throw DomainError("arithmetic across different fields");
    return field_;
  }

  FieldPtr field_;
  qpoly::QPoly coeffs_;
};

namespace detail {

struct RationalInterval {
  Rational lo, hi;
};

inline RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RationalInterval r{p[0], p[0]};
  for (const auto& v : p) {
    if (v < r.lo) r.lo = v;
    if (v > r.hi) r.hi = v;
  }
  return r;
}

inline RationalInterval eval_on_interval(const qpoly::QPoly& p, const RationalInterval& x) {
  RationalInterval acc{0, 0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = interval_mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace detail

// Value of e at the real root `root` of the field's defining polynomial.
inline RealAlgebraic embed(const FieldElement& e, const RealAlgebraic& root) {
  if (e.is_rational()) return RealAlgebraic(e.rational_value());
  if (!(root.minimal_polynomial() == e.field()->defining_polynomial()))
    throw DomainError("embedding root does not belong to the field");
  const IntPoly m = e.minimal_polynomial();
  auto candidates = isolate_real_roots(m, Rational(1));
  RealAlgebraic r = root;
  Rational width = r.width();
  while (true) {
    auto enc = detail::eval_on_interval(e.coefficients(), {r.lower(), r.upper()});
    int hits = 0;
    std::size_t hit = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& c = candidates[i].value;
      if (!(c.upper() < enc.lo || enc.hi < c.lower())) {
        ++hits;
        hit = i;
      }
    }
    if (hits == 1) return candidates[hit].value;
    if (hits == 0) throw DomainError("embedding lost its root (internal inconsistency)");
    width /= 4;
    r = r.refined(width);
    for (auto& c : candidates) c.value = c.value.refined(width);
  }
}

}  // namespace ribbon3::exactnum
