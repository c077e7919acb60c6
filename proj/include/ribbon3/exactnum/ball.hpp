#pragma once

#include <mpfr.h>

#include <complex>
#include <string>
#include <utility>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/rational.hpp"
#include "ribbon3/exactnum/real_algebraic.hpp"
#include "ribbon3/exactnum/root_of_unity.hpp"

namespace ribbon3::exactnum {

inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMaxPrecisionBits = 4096;

// Owning wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept : Mpfr(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Mpfr& operator=(Mpfr o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Real ball [mid - rad, mid + rad]. Centers are rounded to nearest at the
// working precision; every rounding error is added to the radius, which is
// itself rounded upward, so the exact value always lies in the ball.
class RealBall {
 public:
  static constexpr mpfr_prec_t kRadiusPrec = 64;

  explicit RealBall(long prec = kDefaultPrecisionBits) : mid_(prec), rad_(kRadiusPrec), prec_(prec) {}

  static RealBall from_integer(long v, long prec) {
    RealBall b(prec);
    if (mpfr_set_si(b.mid_.get(), v, MPFR_RNDN) != 0) b.add_rounding_error();
    return b;
  }

  static RealBall from_rational(const Rational& q, long prec) {
    RealBall b(prec);
    if (mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN) != 0) b.add_rounding_error();
    return b;
  }

  // Ball covering the closed interval [lo, hi].
  static RealBall from_interval(const Rational& lo, const Rational& hi, long prec) {
    RealBall b = from_rational((lo + hi) / 2, prec);
    Rational half = (hi - lo) / 2;
    Mpfr h(kRadiusPrec);
    mpfr_set_q(h.get(), half.get_mpq_t(), MPFR_RNDU);
    mpfr_add(b.rad_.get(), b.rad_.get(), h.get(), MPFR_RNDU);
    return b;
  }

  static RealBall from_algebraic(const RealAlgebraic& v, long prec) {
    if (v.is_rational()) return from_rational(v.rational_value(), prec);
    Rational width(1);
    mpz_class den(1);
    den <<= static_cast<unsigned long>(prec + 2);
    width /= den;
    auto r = v.refined(width);
    return from_interval(r.lower(), r.upper(), prec);
  }

  long precision() const { return prec_; }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }

  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  double rad_upper() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  // Upper bound on |x| for every x in the ball.
  double abs_upper() const {
    Mpfr t(kRadiusPrec);
    mpfr_abs(t.get(), mid_.get(), MPFR_RNDU);
    mpfr_set(t.get(), t.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), rad_.get(), MPFR_RNDU);
    return mpfr_get_d(t.get(), MPFR_RNDU);
  }

  bool excludes_zero() const {
    Mpfr t(kRadiusPrec);
    mpfr_abs(t.get(), mid_.get(), MPFR_RNDD);
    return mpfr_cmp(t.get(), rad_.get()) > 0;
  }
  bool contains_zero() const { return !excludes_zero(); }

  // Exact containment test for a rational.
  bool contains(const Rational& q) const {
    Rational m, r;
    mpfr_get_q(m.get_mpq_t(), mid_.get());
    mpfr_get_q(r.get_mpq_t(), rad_.get());
    return abs(q - m) <= r;
  }

  RealBall operator-() const {
    RealBall b = *this;
    mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
    return b;
  }

  friend RealBall operator+(const RealBall& a, const RealBall& b) {
    RealBall c(std::max(a.prec_, b.prec_));
    int inexact = mpfr_add(c.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    mpfr_add(c.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    if (inexact != 0) c.add_rounding_error();
    return c;
  }

  friend RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }

  friend RealBall operator*(const RealBall& a, const RealBall& b) {
    RealBall c(std::max(a.prec_, b.prec_));
    int inexact = mpfr_mul(c.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    Mpfr am = abs_up(a.mid_), bm = abs_up(b.mid_), t(kRadiusPrec);
    mpfr_mul(c.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(c.rad_.get(), c.rad_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(c.rad_.get(), c.rad_.get(), t.get(), MPFR_RNDU);
    if (inexact != 0) c.add_rounding_error();
    return c;
  }

  friend RealBall operator/(const RealBall& a, const RealBall& b) {
    if (!b.excludes_zero()) throw Undecidable("division by a ball containing zero");
    RealBall c(std::max(a.prec_, b.prec_));
    int inexact = mpfr_div(c.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    // |x/y - a/b| <= (ra + |a/b| rb) / (|b| - rb)
    Mpfr q = abs_up(c.mid_), t(kRadiusPrec), den(kRadiusPrec);
    mpfr_add(q.get(), q.get(), ulp_bound(c).get(), MPFR_RNDU);
    mpfr_mul(t.get(), q.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_abs(den.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_set(den.get(), den.get(), MPFR_RNDD);
    mpfr_sub(den.get(), den.get(), b.rad_.get(), MPFR_RNDD);
    mpfr_div(c.rad_.get(), t.get(), den.get(), MPFR_RNDU);
    if (inexact != 0) c.add_rounding_error();
    return c;
  }

  std::string to_string() const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.15Rg +/- %.3Rg", mid_.get(), rad_.get());
    return buf;
  }

  // Adds an explicit error bound to the radius.
  void widen(const Mpfr& extra) { mpfr_add(rad_.get(), rad_.get(), extra.get(), MPFR_RNDU); }

 private:
  static Mpfr abs_up(const Mpfr& x) {
    Mpfr t(kRadiusPrec);
    mpfr_abs(t.get(), x.get(), MPFR_RNDU);
    return t;
  }

  // Half an ulp of the (nonzero) center: the round-to-nearest error bound.
  static Mpfr ulp_bound(const RealBall& c) {
    Mpfr u(kRadiusPrec);
    if (mpfr_zero_p(c.mid_.get())) return u;
    mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(c.mid_.get()) - c.prec_ - 1, MPFR_RNDU);
    return u;
  }

  void add_rounding_error() { mpfr_add(rad_.get(), rad_.get(), ulp_bound(*this).get(), MPFR_RNDU); }

  Mpfr mid_, rad_;
  long prec_;
};

// Complex ball as a rectangle of two real balls.
class ComplexBall {
 public:
  explicit ComplexBall(long prec = kDefaultPrecisionBits) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexBall from_real(RealBall re) {
    RealBall im(re.precision());
    return {std::move(re), std::move(im)};
  }

  const RealBall& real() const { return re_; }
  const RealBall& imag() const { return im_; }
  long precision() const { return re_.precision(); }

  std::complex<double> center() const { return {re_.mid_double(), im_.mid_double()}; }
  // Upper bound on |z - center| over the ball.
  double radius() const {
    double r = re_.rad_upper() + im_.rad_upper();
    return std::nextafter(r, 1e308);
  }
  double abs_upper() const {
    double a = re_.abs_upper(), b = im_.abs_upper();
    return std::nextafter(std::sqrt(a * a + b * b), 1e308) * (1 + 1e-15);
  }

  bool excludes_zero() const { return re_.excludes_zero() || im_.excludes_zero(); }
  bool contains_zero() const { return !excludes_zero(); }

  ComplexBall conj() const { return {re_, -im_}; }
  ComplexBall operator-() const { return {-re_, -im_}; }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return {a.re_ * b, a.im_ * b}; }
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    RealBall n2 = b.re_ * b.re_ + b.im_ * b.im_;
    ComplexBall num = a * b.conj();
    return {num.re_ / n2, num.im_ / n2};
  }

  std::string to_string() const { return "(" + re_.to_string() + ") + i(" + im_.to_string() + ")"; }

 private:
  RealBall re_, im_;
};

// Ball containing exp(2*pi*i*p/q) with radius <= 2^(1 - precision_bits).
inline ComplexBall root_of_unity_value(const RootOfUnity& r, long precision_bits = kDefaultPrecisionBits) {
  if (precision_bits < 32) throw DomainError("precision_bits must be >= 32");
  const long p = r.numerator(), q = r.order();
  auto exact = [&](long re, long im) {
    return ComplexBall(RealBall::from_integer(re, precision_bits), RealBall::from_integer(im, precision_bits));
  };
  if (q == 1) return exact(1, 0);
  if (q == 2) return exact(-1, 0);
  if (q == 4) return p == 1 ? exact(0, 1) : exact(0, -1);

  const long guard = 32;
  const mpfr_prec_t wp = precision_bits + guard;
  Mpfr angle(wp), s(wp), c(wp);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul_si(angle.get(), angle.get(), 2 * p, MPFR_RNDN);
  mpfr_div_si(angle.get(), angle.get(), q, MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  // angle < 2pi carries relative error <= 3 * 2^-wp, so absolute error
  // <= 2^(5 - wp); sin/cos are 1-Lipschitz and add half an ulp each.
  Mpfr err(RealBall::kRadiusPrec);
  mpfr_set_ui_2exp(err.get(), 33, -wp, MPFR_RNDU);

  auto component = [&](const Mpfr& v) {
    RealBall b(precision_bits);
    Mpfr rounded(precision_bits);
    mpfr_set(rounded.get(), v.get(), MPFR_RNDN);
    Rational exact_v, exact_r;
    mpfr_get_q(exact_v.get_mpq_t(), rounded.get());
    b = RealBall::from_rational(exact_v, precision_bits);
    // Distance between the guard-precision value and the rounded center.
    Mpfr diff(wp + 2), d(RealBall::kRadiusPrec);
    mpfr_sub(diff.get(), v.get(), rounded.get(), MPFR_RNDN);
    mpfr_abs(d.get(), diff.get(), MPFR_RNDU);
    b.widen(d);
    b.widen(err);
    return b;
  };
  return {component(c), component(s)};
}

}  // namespace ribbon3::exactnum
