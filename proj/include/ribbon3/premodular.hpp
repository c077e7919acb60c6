#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ribbon3/characters.hpp"
#include "ribbon3/classify/landau.hpp"
#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum.hpp"
#include "ribbon3/fusion.hpp"
#include "ribbon3/json_io.hpp"

namespace ribbon3::premodular {

using characters::Character;
using characters::CharacterSystem;
using exactnum::ComplexBall;
using exactnum::Rational;
using exactnum::RealAlgebraic;
using exactnum::RealBall;
using exactnum::RootOfUnity;
using fusion::FusionRing;
using fusion::Rank3Params;

enum class StructureClass { Symmetric, ProperPremodular, Modular };

inline std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::Symmetric: return "Symmetric";
    case StructureClass::ProperPremodular: return "ProperPremodular";
    case StructureClass::Modular: return "Modular";
  }
  return "?";
}

// Twists of the basis objects; the unit's twist is 1.
struct Twists {
  std::array<RootOfUnity, 3> theta;

  Twists(const RootOfUnity& x, const RootOfUnity& y) : theta{RootOfUnity::one(), x, y} {}
  explicit Twists(const std::array<RootOfUnity, 3>& t) : theta(t) {
    if (!(t[0] == RootOfUnity::one())) throw DomainError("the unit object must have twist 1");
  }

  friend bool operator==(const Twists&, const Twists&) = default;
};

using BallMatrix = std::array<std::array<ComplexBall, 3>, 3>;

struct SMatrix {
  FusionRing ring;
  Character dims;
  Twists twists;
  long precision;
  BallMatrix entries;

  const ComplexBall& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

// S~_ij = theta_i^-1 theta_j^-1 sum_k N_{i* j}^k theta_k d_k.
inline SMatrix build_s_matrix(const FusionRing& ring, const Character& dims, const Twists& twists,
                              long precision_bits = exactnum::kDefaultPrecisionBits) {
  if (!dims.nowhere_zero()) throw ZeroDimension("dimension candidate " + dims.to_string() + " has a zero value");
  std::array<ComplexBall, 3> d, th, inv;
  for (int k = 0; k < 3; ++k) {
    d[k] = dims.value_ball(k, precision_bits);
    th[k] = exactnum::root_of_unity_value(twists.theta[k], precision_bits);
    inv[k] = exactnum::root_of_unity_value(twists.theta[k].inverse(), precision_bits);
  }
  BallMatrix s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ComplexBall acc(precision_bits);
      for (int k = 0; k < 3; ++k) {
        const long mult = ring.N(ring.dual(i), j, k);
        if (mult != 0) acc = acc + th[k] * d[k] * RealBall::from_integer(mult, precision_bits);
      }
      s[i][j] = inv[i] * inv[j] * acc;
    }
  return SMatrix{ring, dims, twists, precision_bits, s};
}

namespace detail {

inline ComplexBall minor2(const BallMatrix& s, int r0, int r1, int c0, int c1) {
  return s[r0][c0] * s[r1][c1] - s[r0][c1] * s[r1][c0];
}

inline ComplexBall determinant(const BallMatrix& s) {
  return s[0][0] * minor2(s, 1, 2, 1, 2) - s[0][1] * minor2(s, 1, 2, 0, 2) + s[0][2] * minor2(s, 1, 2, 0, 1);
}

inline std::vector<ComplexBall> all_minors(const BallMatrix& s) {
  std::vector<ComplexBall> out;
  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& r : pairs)
    for (const auto& c : pairs) out.push_back(minor2(s, r[0], r[1], c[0], c[1]));
  return out;
}

}  // namespace detail

// Upper bound on the largest |2x2 minor|.
inline double max_minor_abs(const SMatrix& s) {
  double m = 0;
  for (const auto& x : detail::all_minors(s.entries)) m = std::max(m, x.abs_upper());
  return m;
}

inline ComplexBall determinant(const SMatrix& s) { return detail::determinant(s.entries); }

// Modular when the determinant ball excludes 0; Symmetric when every 2x2
// minor is below tol; ProperPremodular when some minor excludes 0 while
// |det| <= tol. Otherwise the matrix is rebuilt at doubled precision.
inline StructureClass classify_s_matrix(const SMatrix& s, double tol = 1e-9) {
  for (long prec = s.precision; prec <= exactnum::kMaxPrecisionBits; prec *= 2) {
    const SMatrix cur = prec == s.precision ? s : build_s_matrix(s.ring, s.dims, s.twists, prec);
    const ComplexBall det = determinant(cur);
    if (det.excludes_zero()) return StructureClass::Modular;
    const auto minors = detail::all_minors(cur.entries);
    double largest = 0;
    bool some_nonzero = false;
    for (const auto& m : minors) {
      largest = std::max(largest, m.abs_upper());
      some_nonzero = some_nonzero || m.excludes_zero();
    }
    if (largest < tol) return StructureClass::Symmetric;
    if (some_nonzero && det.abs_upper() <= tol) return StructureClass::ProperPremodular;
  }
  throw Undecidable("S-matrix structure undecided at " + std::to_string(exactnum::kMaxPrecisionBits) + " bits");
}

// For each row i, the index of the character equal to (S~_ij / d_i)_j within tol.
inline std::optional<std::array<int, 3>> match_rows(const SMatrix& s, const CharacterSystem& sys, double tol) {
  std::array<int, 3> out{-1, -1, -1};
  for (int i = 0; i < 3; ++i) {
    const ComplexBall di = s.dims.value_ball(i, s.precision);
    for (std::size_t c = 0; c < sys.chars.size() && out[i] < 0; ++c) {
      bool ok = true;
      for (int j = 0; j < 3 && ok; ++j)
        ok = (s(i, j) / di - sys.chars[c].value_ball(j, s.precision)).abs_upper() <= tol;
      if (ok) out[i] = static_cast<int>(c);
    }
    if (out[i] < 0) return std::nullopt;
  }
  return out;
}

inline bool verify_row_characters(const SMatrix& s, const CharacterSystem& sys, double tol = 1e-9) {
  return match_rows(s, sys, tol).has_value();
}

inline bool verify_row_characters(const SMatrix& s, const Character& dims, const CharacterSystem& sys, double tol = 1e-9) {
  SMatrix t = s;
  t.dims = dims;
  return verify_row_characters(t, sys, tol);
}

inline bool is_symmetric(const SMatrix& s, double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if ((s(i, j) - s(j, i)).abs_upper() > tol) return false;
  return true;
}

struct PremodularDatum {
  int dims_index = 0;  // index into the character system
  SMatrix smatrix;
  StructureClass structure_class;

  const FusionRing& ring() const { return smatrix.ring; }
  const Character& dims() const { return smatrix.dims; }
  const Twists& twists() const { return smatrix.twists; }
};

namespace detail {

// Data-level consequences of each structure class, used to discard
// matrices that pass symmetry and row checks but cannot come from a ribbon
// category of that class.
inline bool symmetric_gate(const CharacterSystem& sys, const Character& d) {
  const auto fp = fusion::fp_dimensions(sys);
  for (int i = 0; i < 3; ++i) {
    if (!d.is_real()) {
      if (!d.all_positive()) return false;
      continue;
    }
    const RealAlgebraic v = d.real_value(i);
    if (!v.is_integer()) return false;
    if (!fp[static_cast<std::size_t>(i)].is_integer()) return false;
    if (abs(v.rational_value()) != fp[static_cast<std::size_t>(i)].rational_value()) return false;
  }
  return fusion::global_fp_dim(sys).compare_to(Rational(classify::landau_bound(3))) <= 0;
}

inline bool is_transparent(const SMatrix& s, int i, double tol) {
  const ComplexBall di = s.dims.value_ball(i, s.precision);
  for (int j = 0; j < 3; ++j)
    if ((s(i, j) - di * s.dims.value_ball(j, s.precision)).abs_upper() > tol) return false;
  return true;
}

inline bool proper_premodular_gate(const SMatrix& s, double tol) {
  bool any = false;
  for (int i = 1; i < 3; ++i) {
    if (!is_transparent(s, i, tol)) continue;
    any = true;
    const bool boson = s.twists.theta[i] == RootOfUnity::one();
    const bool invertible = s.dims.is_real() ? s.dims.real_value(i) == RealAlgebraic(1) : true;
    if (!boson || !invertible || !s.dims.is_real()) continue;
    for (int y = 1; y < 3; ++y) {
      if (y == i || s.ring.N(i, y, y) != 1) continue;
      const auto half = s.dims.real_value(y).minimal_polynomial().scaled_argument(Rational(2));
      if (half.leading() != 1) return false;
    }
  }
  return any;
}

// Second Frobenius-Schur indicator of each basis object.
inline std::array<ComplexBall, 3> fs_indicators(const SMatrix& s) {
  const long prec = s.precision;
  std::array<ComplexBall, 3> d, th;
  for (int k = 0; k < 3; ++k) {
    d[k] = s.dims.value_ball(k, prec);
    th[k] = exactnum::root_of_unity_value(s.twists.theta[k], prec);
  }
  ComplexBall dim2(prec);
  for (int i = 0; i < 3; ++i) dim2 = dim2 + d[i] * d[s.ring.dual(i)];
  std::array<ComplexBall, 3> nu;
  for (int k = 0; k < 3; ++k) {
    ComplexBall acc(prec);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const long mult = s.ring.N(i, j, k);
        if (mult == 0) continue;
        const ComplexBall ratio = th[i] / th[j];
        acc = acc + d[i] * d[j] * ratio * ratio * RealBall::from_integer(mult, prec);
      }
    nu[k] = acc / dim2;
  }
  return nu;
}

inline bool modular_gate(const SMatrix& s, double tol) {
  const auto nu = fs_indicators(s);
  const ComplexBall one = ComplexBall::from_real(RealBall::from_integer(1, s.precision));
  for (int k = 0; k < 3; ++k) {
    if (s.ring.dual(k) == k) {
      if ((nu[k] - one).abs_upper() > tol && (nu[k] + one).abs_upper() > tol) return false;
    } else if (nu[k].abs_upper() > tol) {
      return false;
    }
  }
  return true;
}

inline bool passes_gate(const CharacterSystem& sys, const SMatrix& s, StructureClass c, double tol) {
  switch (c) {
    case StructureClass::Symmetric: return symmetric_gate(sys, s.dims);
    case StructureClass::ProperPremodular: return proper_premodular_gate(s, tol);
    case StructureClass::Modular: return modular_gate(s, tol);
  }
  return false;
}

// Dimensions must be nonzero and invariant under duality.
inline bool admissible_dims(const Character& c) {
  if (!c.nowhere_zero()) return false;
  return c.is_real() || (*c.cyclic)[0] == (*c.cyclic)[1];
}

struct Candidate {
  int dims_index;
  std::size_t a, b;
};

// Double-precision screen; rejects only when the discrepancy exceeds tol by
// a margin far above floating rounding error.
inline void screen(const CharacterSystem& sys, int c, const std::vector<std::complex<double>>& roots, double tol,
                   unsigned worker, unsigned workers, std::vector<Candidate>& out) {
  const double reject = tol + 1e-6;
  const FusionRing& ring = sys.ring;
  std::array<std::complex<double>, 3> d;
  for (int k = 0; k < 3; ++k) d[k] = sys.chars[static_cast<std::size_t>(c)].value(k);
  std::array<std::array<std::complex<double>, 3>, 3> chi;
  for (std::size_t x = 0; x < 3; ++x)
    for (int k = 0; k < 3; ++k) chi[x][k] = sys.chars[x].value(k);
  long n[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) n[i][j][k] = ring.N(ring.dual(i), j, k);

  // d_i * chi_x(b_j), the admissible values of S~_ij.
  std::array<std::array<std::array<std::complex<double>, 3>, 3>, 3> target;
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < 3; ++x)
      for (int j = 0; j < 3; ++j) target[i][x][j] = d[i] * chi[x][j];

  for (std::size_t a = worker; a < roots.size(); a += workers) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const std::array<std::complex<double>, 3> th{1.0, roots[a], roots[b]};
      auto entry = [&](int i, int j) {
        std::complex<double> acc = 0;
        for (int k = 0; k < 3; ++k)
          if (n[i][j][k] != 0) acc += static_cast<double>(n[i][j][k]) * th[k] * d[k];
        return acc * std::conj(th[i] * th[j]);
      };
      // Cheap rejection on S~_XX before building the full matrix.
      const std::complex<double> s11 = entry(1, 1);
      const double margin = reject * std::abs(d[1]);
      if (std::abs(s11 - target[1][0][1]) > margin && std::abs(s11 - target[1][1][1]) > margin &&
          std::abs(s11 - target[1][2][1]) > margin)
        continue;
      std::complex<double> s[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i][j] = (i == 1 && j == 1) ? s11 : entry(i, j);
      bool ok = std::abs(s[0][1] - s[1][0]) <= reject && std::abs(s[0][2] - s[2][0]) <= reject &&
                std::abs(s[1][2] - s[2][1]) <= reject;
      for (int i = 0; i < 3 && ok; ++i) {
        bool row = false;
        for (std::size_t x = 0; x < 3 && !row; ++x) {
          bool match = true;
          for (int j = 0; j < 3 && match; ++j) match = std::abs(s[i][j] - target[i][x][j]) <= reject * std::abs(d[i]);
          row = match;
        }
        ok = row;
      }
      if (ok) out.push_back({c, a, b});
    }
  }
}

}  // namespace detail

// All (dims, twists) with twists of order <= max_twist_order whose S~ is
// symmetric, has character rows, and meets its class's data-level checks.
// Sorted by (dims index, theta_X, theta_Y); independent of thread count.
inline std::vector<PremodularDatum> search_ribbon_data(const CharacterSystem& sys, long max_twist_order, double tol = 1e-9,
                                                       long precision_bits = exactnum::kDefaultPrecisionBits,
                                                       unsigned threads = 1) {
  if (max_twist_order < 1) throw DomainError("max_twist_order must be >= 1");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const auto roots = exactnum::roots_of_unity_up_to(max_twist_order);
  std::vector<std::complex<double>> values;
  values.reserve(roots.size());
  for (const auto& r : roots) values.push_back(std::polar(1.0, 2 * 3.14159265358979323846 * r.turn()));

  const unsigned workers = std::max(1u, std::min(threads, 64u));
  std::vector<std::vector<detail::Candidate>> parts(workers);
  for (std::size_t c = 0; c < sys.chars.size(); ++c) {
    if (!detail::admissible_dims(sys.chars[c])) continue;
    if (workers == 1) {
      detail::screen(sys, static_cast<int>(c), values, tol, 0, 1, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w, c] { detail::screen(sys, static_cast<int>(c), values, tol, w, workers, parts[w]); });
      for (auto& t : pool) t.join();
    }
  }
  std::vector<detail::Candidate> candidates;
  for (auto& p : parts) candidates.insert(candidates.end(), p.begin(), p.end());
  std::sort(candidates.begin(), candidates.end(), [](const detail::Candidate& x, const detail::Candidate& y) {
    return std::tie(x.dims_index, x.a, x.b) < std::tie(y.dims_index, y.a, y.b);
  });

  std::vector<PremodularDatum> out;
  for (const auto& cand : candidates) {
    const Character& dims = sys.chars[static_cast<std::size_t>(cand.dims_index)];
    SMatrix s = build_s_matrix(sys.ring, dims, Twists(roots[cand.a], roots[cand.b]), precision_bits);
    if (!is_symmetric(s, tol) || !verify_row_characters(s, sys, tol)) continue;
    const StructureClass cls = classify_s_matrix(s, tol);
    if (!detail::passes_gate(sys, s, cls, tol)) continue;
    out.push_back(PremodularDatum{cand.dims_index, std::move(s), cls});
  }
  return out;
}

inline std::vector<PremodularDatum> search_ribbon_data(const FusionRing& ring, long max_twist_order, double tol = 1e-9,
                                                       long precision_bits = exactnum::kDefaultPrecisionBits,
                                                       unsigned threads = 1) {
  return search_ribbon_data(characters::solve_characters(ring), max_twist_order, tol, precision_bits, threads);
}

// ---------------------------------------------------------------------------
// Filter verdicts shared by the non-modular filter and the case analysis.

enum class Status { Pass, Fail, NotApplicable };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct FilterVerdict {
  Status status = Status::NotApplicable;
  std::string reason;
  Json certificate = Json::object();

  bool passed() const { return status == Status::Pass; }
};

inline FilterVerdict verdict(Status s, std::string reason, Json cert = Json::object()) {
  return FilterVerdict{s, std::move(reason), std::move(cert)};
}

// Non-modular non-symmetric branch. The premise (a fusion subring Rep(Z/2),
// i.e. canonical form (0,1,0,n)) stands in for a cited structural result.
// Requires n*y+ <= 4 for the positive root y+ of y^2 = 2 + ny, and a root of
// unity theta of order <= 60 with n*d_Y = -2(theta + theta^-1) for a root d_Y.
inline FilterVerdict nonmodular_filter(const Rank3Params& params) {
  const Rank3Params p = fusion::canonicalize(params);
  if (!(p.k == 0 && p.l == 1 && p.m == 0)) {
    return verdict(Status::NotApplicable, "canonical form is not (0,1,0,n): no fusion subring Rep(Z/2)",
                   Json{{"canonical", p.as_array()}});
  }
  const long n = p.n;
  const exactnum::IntPoly quad{-2, -n, 1};  // y^2 - n y - 2
  const auto roots = exactnum::isolate_real_roots(quad, Rational(1, 1 << 20));
  const RealAlgebraic y_plus = roots.back().value, y_minus = roots.front().value;
  Json cert{{"n", n}, {"y_plus", to_json(y_plus)}, {"conditional_on_cited_result", true}};

  // n*y+ <= 4, exactly.
  const bool bound_ok = n == 0 || y_plus.compare_to(Rational(4, n)) <= 0;
  cert["bound"] = Json{{"lhs", "n*y_plus"}, {"lhs_approx", approx_string(static_cast<double>(n) * y_plus.to_double())},
                       {"rhs", 4}, {"holds", bound_ok}};
  if (!bound_ok) return verdict(Status::Fail, "n*y+ > 4 contradicts |theta + theta^-1| <= 2 at a Galois conjugate", cert);

  // -n d_Y / 2 must equal 2cos(2 pi p/q).
  for (const RealAlgebraic& dy : {y_plus, y_minus}) {
    RealAlgebraic target;
    if (n == 0) {
      target = RealAlgebraic(0);
    } else {
      const auto poly = dy.minimal_polynomial().scaled_argument(Rational(-2, n));
      const Rational scale(-n, 2);
      Rational lo = dy.lower() * scale, hi = dy.upper() * scale;
      if (hi < lo) std::swap(lo, hi);
      target = poly.degree() == 1 ? RealAlgebraic(dy.rational_value() * scale)
                                  : RealAlgebraic::from_isolating_interval(poly, lo, hi);
    }
    for (const auto& theta : exactnum::roots_of_unity_up_to(60)) {
      const RealAlgebraic c = exactnum::two_cos(theta);
      if (!(c.minimal_polynomial() == target.minimal_polynomial())) continue;
      if (!(c == target)) continue;
      cert["witness"] = Json{{"d_Y", to_json(dy)}, {"theta_Y", to_json(theta)}, {"two_cos", to_json(c)}};
      return verdict(Status::Pass, "n*d_Y = -2(theta_Y + theta_Y^-1) has a root-of-unity solution", cert);
    }
  }
  cert["witness"] = nullptr;
  return verdict(Status::Fail, "no root of unity of order <= 60 satisfies n*d_Y = -2(theta_Y + theta_Y^-1)", cert);
}

inline FilterVerdict nonmodular_filter(const Rank3Params& params, const CharacterSystem&) { return nonmodular_filter(params); }

inline Json to_json(const PremodularDatum& d) {
  Json dims = Json::array();
  for (int i = 0; i < 3; ++i) {
    if (d.dims().is_real()) {
      dims.push_back(ribbon3::to_json(d.dims().real_value(i)));
    } else {
      dims.push_back(i == 0 ? ribbon3::to_json(RootOfUnity::one()) : ribbon3::to_json((*d.dims().cyclic)[static_cast<std::size_t>(i - 1)]));
    }
  }
  Json twists = Json::array();
  for (const auto& t : d.twists().theta) twists.push_back(ribbon3::to_json(t));
  Json s = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(ribbon3::to_json(d.smatrix(i, j)));
    s.push_back(row);
  }
  return Json{{"dims_character", d.dims_index},
              {"dims", dims},
              {"twists", twists},
              {"structure_class", to_string(d.structure_class)},
              {"smatrix", s}};
}

}  // namespace ribbon3::premodular
