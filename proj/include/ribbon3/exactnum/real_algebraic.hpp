#pragma once

#include <compare>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum/int_poly.hpp"
#include "ribbon3/exactnum/rational.hpp"

namespace ribbon3::exactnum {

// A real algebraic number: an irreducible primitive integer polynomial with
// positive leading coefficient plus an interval isolating one of its real
// roots. Rationals carry a degree-1 polynomial and a degenerate interval
// [r, r]; irrational values carry an open interval (lo, hi) whose endpoints
// are not roots and where the polynomial changes sign exactly once.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}

  explicit RealAlgebraic(const Rational& r) : lo_(r), hi_(r) {
    minpoly_ = IntPoly(std::vector<Int>{-r.get_num(), r.get_den()});
  }
  explicit RealAlgebraic(long v) : RealAlgebraic(Rational(v)) {}

  // poly must be irreducible over the rationals. The interval must contain
  // exactly one real root of poly (checked with a Sturm sequence).
  static RealAlgebraic from_isolating_interval(const IntPoly& poly, const Rational& lo, const Rational& hi) {
    IntPoly p = poly.primitive();
    if (p.degree() < 1) throw DomainError("algebraic number needs a non-constant polynomial");
    if (p.degree() == 1) return RealAlgebraic(make_rational(-p.coeff(0), p.coeff(1)));
    if (!(lo < hi)) throw DomainError("isolating interval must have lo < hi");
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
      throw DomainError("isolating interval endpoint is a root of an irreducible polynomial");
    SturmSequence sturm(p);
    if (sturm.count_roots(lo, hi) != 1) throw DomainError("interval does not isolate exactly one root of " + p.to_string());
    RealAlgebraic out;
    out.minpoly_ = std::move(p);
    out.lo_ = lo;
    out.hi_ = hi;
    return out;
  }

  const IntPoly& minimal_polynomial() const { return minpoly_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }

  const Rational& rational_value() const {
    if (!is_rational()) throw DomainError("value is not rational");
    return lo_;
  }

  // Rational integers are exactly the rational algebraic integers.
  bool is_integer() const { return is_rational() && exactnum::is_integer(lo_); }

  // Algebraic integer iff the primitive minimal polynomial is monic.
  bool is_algebraic_integer() const { return minpoly_.leading() == 1; }

  Rational width() const { return hi_ - lo_; }

  // The same number with an isolating interval no wider than width.
  RealAlgebraic refined(const Rational& width) const {
    if (width <= 0) throw DomainError("refinement width must be positive");
    RealAlgebraic out = *this;
    while (out.hi_ - out.lo_ > width) out.bisect();
    return out;
  }

  int sign() const {
    if (is_rational()) return sgn(lo_);
    RealAlgebraic r = *this;
    while (r.lo_ < 0 && r.hi_ > 0) r.bisect();
    return r.lo_ >= 0 ? 1 : -1;
  }

  // Three-way comparison with a rational.
  int compare_to(const Rational& q) const {
    if (is_rational()) return sgn(lo_ - q);
    RealAlgebraic r = *this;
    while (r.lo_ < q && q < r.hi_) {
      if (r.minpoly_.sign_at(q) == 0) break;  // unreachable for irreducible degree >= 2
      r.bisect();
    }
    return q <= r.lo_ ? 1 : -1;
  }

  // Exact total order.
  friend int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational()) return -b.compare_to(a.lo_);
    if (b.is_rational()) return a.compare_to(b.lo_);
    RealAlgebraic x = a, y = b;
    const bool same_poly = x.minpoly_ == y.minpoly_;
    while (true) {
      if (x.hi_ <= y.lo_) return -1;
      if (y.hi_ <= x.lo_) return 1;
      if (same_poly) {
        Rational lo = x.lo_ < y.lo_ ? x.lo_ : y.lo_;
        Rational hi = x.hi_ > y.hi_ ? x.hi_ : y.hi_;
        // Both intervals overlap; if their hull holds a single root they
        // isolate the same root.
        if (SturmSequence(x.minpoly_).count_roots(lo, hi) == 1) return 0;
      }
      x.bisect();
      y.bisect();
    }
  }

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  double to_double() const {
    if (is_rational()) return lo_.get_d();
    return refined(Rational(1, 1) / Rational(Int(1) << 60)).midpoint().get_d();
  }

  Rational midpoint() const { return (lo_ + hi_) / 2; }

  // Approximation rendered with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const {
    std::ostringstream os;
    os.precision(significant_digits);
    os << to_double();
    return os.str();
  }

  std::string to_string() const {
    if (is_rational()) return exactnum::to_string(lo_);
    return "root of " + minpoly_.to_string() + " in (" + exactnum::to_string(lo_) + ", " + exactnum::to_string(hi_) + ")";
  }

 private:
  void bisect() {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = minpoly_.sign_at(mid);
    if (sm == 0) {  // impossible for irreducible polynomials of degree >= 2
      throw DomainError("bisection hit a rational root of an irreducible polynomial");
    }
    if (sm == minpoly_.sign_at(lo_)) {
      lo_ = mid;
    } else {
      hi_ = mid;
    }
  }

  IntPoly minpoly_;
  Rational lo_, hi_;
};

struct IsolatedRoot {
  RealAlgebraic value;
  int multiplicity = 1;
};

// Isolating intervals for the real roots of a squarefree polynomial with no
// rational roots, ascending. Intervals are open and pairwise disjoint.
inline std::vector<std::pair<Rational, Rational>> isolate_roots_without_rational(const IntPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  SturmSequence sturm(p);
  const Rational bound = cauchy_root_bound(p);
  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> stack{{-bound, bound}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int n = sturm.count_roots(cur.lo, cur.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(cur.lo, cur.hi);
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    if (p.sign_at(mid) == 0) throw DomainError("unexpected rational root during isolation");
    stack.push_back({mid, cur.hi});
    stack.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// All real roots of p with multiplicities, ascending, each isolating
// interval no wider than width. The part of p without rational roots must
// have a squarefree part of degree <= 3, which is then irreducible.
inline std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("isolate_real_roots of the zero polynomial");
  if (width <= 0) throw DomainError("isolation width must be positive");
  std::vector<IsolatedRoot> out;
  auto rat = rational_roots(p);
  auto rest = qpoly::from_int(p);
  for (std::size_t i = 0; i < rat.size();) {
    std::size_t j = i;
    while (j < rat.size() && rat[j] == rat[i]) ++j;
    out.push_back({RealAlgebraic(rat[i]), static_cast<int>(j - i)});
    const qpoly::QPoly lin{-rat[i], Rational(1)};
    for (std::size_t t = i; t < j; ++t) rest = qpoly::divmod(rest, lin).first;
    i = j;
  }
  IntPoly remainder = qpoly::to_primitive_int(rest);
  if (remainder.degree() >= 1) {
    IntPoly sf = squarefree_part(remainder);
    if (sf.degree() > 3)
      throw DomainError("irrational factor of degree > 3 is outside the supported range: " + sf.to_string());
    const int mult = multiplicity_of_factor(remainder, sf);
    for (const auto& [lo, hi] : isolate_roots_without_rational(sf))
      out.push_back({RealAlgebraic::from_isolating_interval(sf, lo, hi).refined(width), mult});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace ribbon3::exactnum
