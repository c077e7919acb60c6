#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum.hpp"
#include "ribbon3/fusion/ring.hpp"

namespace ribbon3::characters {

using exactnum::FieldElement;
using exactnum::FieldPtr;
using exactnum::Int;
using exactnum::IntPoly;
using exactnum::Rational;
using exactnum::RealAlgebraic;
using exactnum::RootOfUnity;
using fusion::FusionRing;
using fusion::Rank3Params;

inline void require_star(const Rank3Params& p) {
  if (!p.satisfies_star()) throw StarViolation("parameters violate k^2+l^2 = lm+kn+1: " + p.to_string());
}

// Characteristic polynomial of multiplication by X.
inline IntPoly char_poly_x(const Rank3Params& p) {
  require_star(p);
  return IntPoly{p.l, p.m * p.l - p.k * p.k - 1, -(p.m + p.l), 1};
}

// Characteristic polynomial of multiplication by Y.
inline IntPoly char_poly_y(const Rank3Params& p) {
  require_star(p);
  return IntPoly{p.k, p.n * p.k - p.l * p.l - 1, -(p.n + p.k), 1};
}

enum class GaloisTag { Trivial, C2FixingFP, C2MovingFP, C3, S3 };

inline std::string to_string(GaloisTag t) {
  switch (t) {
    case GaloisTag::Trivial: return "Trivial";
    case GaloisTag::C2FixingFP: return "C2FixingFP";
    case GaloisTag::C2MovingFP: return "C2MovingFP";
    case GaloisTag::C3: return "C3";
    case GaloisTag::S3: return "S3";
  }
  return "?";
}

// A ring homomorphism to C. For real characters x and y are the values on
// b_1 and b_2; for the Z/3 ring the values are roots of unity.
struct Character {
  RealAlgebraic x, y;
  std::optional<std::array<RootOfUnity, 2>> cyclic;
  int orbit = 0;
  RealAlgebraic root;  // real root of the orbit field's defining polynomial

  bool is_real() const { return !cyclic.has_value(); }

  std::complex<double> value(int i) const {
    if (i == 0) return 1.0;
    if (cyclic) {
      const double a = 2 * 3.14159265358979323846 * (*cyclic)[static_cast<std::size_t>(i - 1)].turn();
      return {std::cos(a), std::sin(a)};
    }
    return (i == 1 ? x : y).to_double();
  }

  exactnum::ComplexBall value_ball(int i, long prec) const {
    using exactnum::ComplexBall;
    using exactnum::RealBall;
    if (i == 0) return ComplexBall::from_real(RealBall::from_integer(1, prec));
    if (cyclic) return exactnum::root_of_unity_value((*cyclic)[static_cast<std::size_t>(i - 1)], prec);
    return ComplexBall::from_real(RealBall::from_algebraic(i == 1 ? x : y, prec));
  }

  // Exact value on b_i when real.
  RealAlgebraic real_value(int i) const {
    if (cyclic) throw DomainError("character of the Z/3 ring is not real");
    return i == 0 ? RealAlgebraic(1) : i == 1 ? x : y;
  }

  bool all_positive() const {
    if (cyclic) return (*cyclic)[0] == RootOfUnity::one() && (*cyclic)[1] == RootOfUnity::one();
    return x.sign() > 0 && y.sign() > 0;
  }
  bool nowhere_zero() const { return cyclic || (x.sign() != 0 && y.sign() != 0); }

  std::string to_string() const {
    if (cyclic) return "(" + (*cyclic)[0].to_string() + " turn, " + (*cyclic)[1].to_string() + " turn)";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
  }
};

// Galois orbit of characters: one abstract field Q[t]/f and the values on
// b_1, b_2 as field elements. Each root of f gives one member.
struct Orbit {
  FieldPtr field;
  FieldElement x, y;
  std::vector<int> members;
};

struct CharacterSystem {
  explicit CharacterSystem(FusionRing r) : ring(std::move(r)) {}

  FusionRing ring;
  std::vector<Character> chars;  // FP character first
  std::vector<Orbit> orbits;

  const Character& fp() const { return chars.front(); }

  // Exact value of a field element of character c's orbit at that character.
  RealAlgebraic evaluate(int c, const FieldElement& e) const {
    return exactnum::embed(e, chars[static_cast<std::size_t>(c)].root);
  }
};

namespace detail {

using Mat3 = std::array<std::array<long, 3>, 3>;

inline IntPoly char_poly(const Mat3& a) {
  const long tr = a[0][0] + a[1][1] + a[2][2];
  const long minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] +
                      a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return IntPoly{-det, minors, -tr, 1};
}

// Nonzero vector w with (a - t I) w = 0 over t's field.
inline std::array<FieldElement, 3> null_vector(const Mat3& a, const FieldElement& t) {
  const FieldPtr& f = t.field();
  std::array<std::array<FieldElement, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m[i][j] = FieldElement(f, Rational(a[i][j]));
      if (i == j) m[i][j] = m[i][j] - t;
    }
  // Reduced row echelon form.
  std::array<int, 3> pivot_col{-1, -1, -1};
  int row = 0;
  for (int col = 0; col < 3 && row < 3; ++col) {
    int p = -1;
    for (int r = row; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    const FieldElement inv = m[row][col].inverse();
    for (int j = 0; j < 3; ++j) m[row][j] = m[row][j] * inv;
    for (int r = 0; r < 3; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const FieldElement c = m[r][col];
      for (int j = 0; j < 3; ++j) m[r][j] = m[r][j] - c * m[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < 3 && free_col < 0; ++col) {
    bool is_pivot = false;
    for (int r = 0; r < row; ++r) is_pivot = is_pivot || pivot_col[r] == col;
    if (!is_pivot) free_col = col;
  }
  if (free_col < 0) throw DegenerateSystem("eigenvalue has a trivial eigenspace");
  std::array<FieldElement, 3> w{FieldElement(f, Rational(0)), FieldElement(f, Rational(0)), FieldElement(f, Rational(0))};
  w[free_col] = FieldElement(f, Rational(1));
  for (int r = 0; r < row; ++r) w[pivot_col[r]] = FieldElement(f, Rational(0)) - m[r][free_col];
  return w;
}

inline FieldPtr rational_field(const Rational& r) { return exactnum::make_field(IntPoly(std::vector<Int>{-r.get_num(), r.get_den()})); }

// Fields for the rational roots and the irreducible remainder of p.
inline std::vector<std::pair<FieldPtr, FieldElement>> split(const IntPoly& p) {
  std::vector<std::pair<FieldPtr, FieldElement>> out;
  auto rest = exactnum::qpoly::from_int(p);
  for (const auto& r : exactnum::rational_roots(p)) {
    auto f = rational_field(r);
    out.emplace_back(f, FieldElement(f, r));
    rest = exactnum::qpoly::divmod(rest, {-r, Rational(1)}).first;
  }
  IntPoly g = exactnum::qpoly::to_primitive_int(rest);
  if (g.degree() >= 1) {
    auto f = exactnum::make_field(g);
    out.emplace_back(f, FieldElement::generator(f));
  }
  return out;
}

inline bool closed_form_applies(const FusionRing& ring) {
  if (!ring.params() || !ring.self_dual()) return false;
  const Rank3Params& p = *ring.params();
  if (p.k == 0) return false;
  const IntPoly cx = char_poly_x(p);
  if (exactnum::squarefree_part(cx).degree() != 3) return false;
  return cx.sign_at(Rational(p.l)) != 0;
}

// Orbits from the closed form y = kx/(x - l) on the roots of the x-cubic.
inline std::vector<Orbit> orbits_closed_form(const Rank3Params& p) {
  std::vector<Orbit> out;
  for (auto& [field, x] : split(char_poly_x(p))) {
    FieldElement y = (Rational(p.k) * x) / (x - Rational(p.l));
    out.push_back({field, x, y, {}});
  }
  return out;
}

// Orbits from eigenvectors of a generic element X + cY.
inline std::vector<Orbit> orbits_by_eigenvectors(const FusionRing& ring) {
  const auto ax = ring.left_matrix(1), ay = ring.left_matrix(2);
  for (long c = 1; c <= 16; ++c) {
    Mat3 az{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) az[i][j] = ax[i][j] + c * ay[i][j];
    const IntPoly cp = char_poly(az);
    if (exactnum::squarefree_part(cp).degree() != 3) continue;
    std::vector<Orbit> out;
    for (auto& [field, t] : split(cp)) {
      auto w = null_vector(az, t);
      if (w[0].is_zero()) throw DegenerateSystem("eigenvector vanishes on the unit");
      const FieldElement inv = w[0].inverse();
      out.push_back({field, w[1] * inv, w[2] * inv, {}});
    }
    return out;
  }
  throw DegenerateSystem("no element X + cY with c <= 16 separates the characters of " + ring.name());
}

inline bool relations_hold(const FusionRing& ring, const Orbit& o) {
  const std::array<FieldElement, 3> v{FieldElement(o.field, Rational(1)), o.x, o.y};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement rhs(o.field, Rational(0));
      for (int k = 0; k < 3; ++k) rhs = rhs + Rational(ring.N(i, j, k)) * v[k];
      if (!(v[i] * v[j] == rhs)) return false;
    }
  return true;
}

inline CharacterSystem solve_z3(const FusionRing& ring) {
  CharacterSystem sys(ring);
  const RootOfUnity w(1, 3), w2(2, 3), one = RootOfUnity::one();
  Character trivial, c1, c2;
  trivial.cyclic = std::array<RootOfUnity, 2>{one, one};
  c1.cyclic = std::array<RootOfUnity, 2>{w, w2};
  c2.cyclic = std::array<RootOfUnity, 2>{w2, w};
  trivial.x = trivial.y = RealAlgebraic(1);
  c1.orbit = c2.orbit = 1;
  sys.chars = {trivial, c1, c2};
  auto q = rational_field(Rational(1));
  auto cyc = exactnum::make_field(IntPoly{1, 1, 1});
  const FieldElement t = FieldElement::generator(cyc);
  sys.orbits.push_back({q, FieldElement(q, Rational(1)), FieldElement(q, Rational(1)), {0}});
  sys.orbits.push_back({cyc, t, t * t, {1, 2}});
  return sys;
}

}  // namespace detail

// The three characters, FP first and the rest ascending in (x, y).
inline CharacterSystem solve_characters(const FusionRing& ring) {
  if (ring.is_z3()) return detail::solve_z3(ring);
  if (!ring.self_dual()) throw DomainError("character solving supports self-dual rings and the Z/3 ring");
  std::vector<Orbit> orbits =
      detail::closed_form_applies(ring) ? detail::orbits_closed_form(*ring.params()) : detail::orbits_by_eigenvectors(ring);

  CharacterSystem sys(ring);
  const Rational width(1, 1 << 16);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (!detail::relations_hold(ring, orbits[o]))
      throw DegenerateSystem("solution violates the multiplication table of " + ring.name());
    const IntPoly& f = orbits[o].field->defining_polynomial();
    for (const auto& r : exactnum::isolate_real_roots(f, width)) {
      Character c;
      c.root = r.value;
      c.x = exactnum::embed(orbits[o].x, r.value);
      c.y = exactnum::embed(orbits[o].y, r.value);
      c.orbit = static_cast<int>(o);
      sys.chars.push_back(c);
    }
  }
  for (std::size_t i = 0; i < sys.chars.size(); ++i)
    for (std::size_t j = i + 1; j < sys.chars.size(); ++j)
      if (sys.chars[i].x == sys.chars[j].x && sys.chars[i].y == sys.chars[j].y)
        throw DegenerateSystem("repeated character in " + ring.name());
  if (sys.chars.size() != 3)
    throw DegenerateSystem(ring.name() + " has " + std::to_string(sys.chars.size()) + " real characters, expected 3");

  std::stable_sort(sys.chars.begin(), sys.chars.end(), [](const Character& a, const Character& b) {
    if (a.all_positive() != b.all_positive()) return a.all_positive();
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  for (std::size_t i = 0; i < sys.chars.size(); ++i)
    orbits[static_cast<std::size_t>(sys.chars[i].orbit)].members.push_back(static_cast<int>(i));
  sys.orbits = std::move(orbits);
  return sys;
}

// Index of the everywhere-positive character.
inline int fp_character(const CharacterSystem& sys) {
  int found = -1;
  for (std::size_t i = 0; i < sys.chars.size(); ++i)
    if (sys.chars[i].all_positive()) {
      if (found >= 0) throw NoPositiveCharacter("more than one positive character in " + sys.ring.name());
      found = static_cast<int>(i);
    }
  if (found < 0) throw NoPositiveCharacter("no positive character in " + sys.ring.name());
  return found;
}

struct GaloisType {
  GaloisTag tag = GaloisTag::Trivial;
  std::vector<std::vector<int>> orbits;  // partition of character indices
  std::optional<Int> discriminant;       // of the x-cubic when one orbit has size 3
};

inline GaloisType galois_type(const CharacterSystem& sys) {
  GaloisType g;
  for (const auto& o : sys.orbits) g.orbits.push_back(o.members);
  std::sort(g.orbits.begin(), g.orbits.end());
  std::size_t largest = 0;
  for (const auto& o : g.orbits) largest = std::max(largest, o.size());
  const int fp = fp_character(sys);
  if (largest == 1) {
    g.tag = GaloisTag::Trivial;
  } else if (largest == 2) {
    const auto& fp_orbit = sys.orbits[static_cast<std::size_t>(sys.chars[static_cast<std::size_t>(fp)].orbit)];
    g.tag = fp_orbit.members.size() == 1 ? GaloisTag::C2FixingFP : GaloisTag::C2MovingFP;
  } else {
    const IntPoly cx = exactnum::qpoly::to_primitive_int(sys.orbits.front().x.characteristic_polynomial());
    g.discriminant = exactnum::cubic_discriminant(cx);
    g.tag = exactnum::is_perfect_square(*g.discriminant) ? GaloisTag::C3 : GaloisTag::S3;
  }
  return g;
}

// Products of the values on X and on Y over all characters, computed as
// products of field norms over the orbits.
inline std::pair<Rational, Rational> vieta_products(const CharacterSystem& sys) {
  Rational px = 1, py = 1;
  for (const auto& o : sys.orbits) {
    px *= o.x.norm();
    py *= o.y.norm();
  }
  return {px, py};
}

}  // namespace ribbon3::characters
