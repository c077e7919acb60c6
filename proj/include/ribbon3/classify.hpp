#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ribbon3/characters.hpp"
#include "ribbon3/classify/landau.hpp"
#include "ribbon3/errors.hpp"
#include "ribbon3/exactnum.hpp"
#include "ribbon3/fusion.hpp"
#include "ribbon3/json_io.hpp"
#include "ribbon3/premodular.hpp"

namespace ribbon3::classify {

using characters::CharacterSystem;
using characters::GaloisTag;
using exactnum::Int;
using exactnum::IntPoly;
using exactnum::Rational;
using exactnum::RealAlgebraic;
using exactnum::RootOfUnity;
using fusion::FusionRing;
using fusion::Rank3Params;
using premodular::FilterVerdict;
using premodular::Status;
using premodular::verdict;
using ribbon3::to_json;

inline constexpr const char* kLimitation =
    "the count of categories (as opposed to fusion rings) is not computed: equivalence classes of categories are "
    "beyond ring/data computation";

// Canonical (*)-solutions with every entry in [0, bound], sorted.
inline std::vector<Rank3Params> enumerate_star_solutions(long bound) {
  if (bound < 0) throw DomainError("bound must be >= 0");
  std::vector<Rank3Params> out;
  for (long k = 0; k <= bound; ++k)
    for (long l = 0; l <= bound; ++l)
      for (long m = 0; m <= bound; ++m) {
        const long rest = k * k + l * l - l * m - 1;  // = k n
        if (k == 0) {
          if (rest == 0)
            for (long n = 0; n <= bound; ++n) out.push_back(fusion::canonicalize({k, l, m, n}));
        } else if (rest >= 0 && rest % k == 0 && rest / k <= bound) {
          out.push_back(fusion::canonicalize({k, l, m, rest / k}));
        }
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Names under which a ring is also known: the other orientation of the
// family, or Rep(Z/3).
inline std::vector<std::string> aliases(const FusionRing& ring) {
  if (ring.is_z3()) return {"K(Rep(Z/3))"};
  const Rank3Params c = fusion::canonicalize(*ring.params());
  if (c.swapped() == c) return {};
  return {c.swapped().name()};
}

namespace detail {

inline Json dims_json(const CharacterSystem& sys) {
  Json d = Json::array();
  for (const auto& v : fusion::fp_dimensions(sys)) d.push_back(to_json(v));
  return d;
}

inline const char* object_name(int i) { return i == 0 ? "1" : i == 1 ? "X" : "Y"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Symmetric branch: Z/3, or integer FP dimensions of global dimension at
// most landau_bound(3) together with a verified rank-1 datum.

inline FilterVerdict symmetric_filter(const FusionRing& ring, const CharacterSystem& sys, double tol = 1e-9) {
  const long bound = landau_bound(3);
  if (ring.is_z3()) {
    return verdict(Status::Pass, "Rep(Z/3) is symmetric",
                   Json{{"dims", detail::dims_json(sys)}, {"global_fp_dim", 3}, {"landau_bound", bound}});
  }
  Json cert{{"dims", detail::dims_json(sys)}};
  const auto fp = fusion::fp_dimensions(sys);
  for (int i = 1; i < 3; ++i) {
    if (!fp[static_cast<std::size_t>(i)].is_integer()) {
      cert["non_integral"] = Json{{"object", detail::object_name(i)}, {"value", to_json(fp[static_cast<std::size_t>(i)])}};
      return verdict(Status::Fail, std::string("FP dimension of ") + detail::object_name(i) + " is not an integer", cert);
    }
  }
  const RealAlgebraic global = fusion::global_fp_dim(sys);
  cert["global_fp_dim"] = to_json(global);
  cert["landau_bound"] = bound;
  if (global.compare_to(Rational(bound)) > 0)
    return verdict(Status::Fail, "global FP dimension exceeds the Landau bound for 3 classes", cert);

  auto s = premodular::build_s_matrix(ring, sys.fp(), premodular::Twists(RootOfUnity::one(), RootOfUnity::one()));
  const auto cls = premodular::classify_s_matrix(s, tol);
  const bool rows = premodular::verify_row_characters(s, sys, tol);
  cert["witness"] = Json{{"twists", Json::array({to_json(RootOfUnity::one()), to_json(RootOfUnity::one()),
                                                  to_json(RootOfUnity::one())})},
                         {"structure_class", premodular::to_string(cls)},
                         {"max_minor_abs_approx", approx_string(premodular::max_minor_abs(s))},
                         {"rows_are_characters", rows}};
  if (cls != premodular::StructureClass::Symmetric || !rows)
    return verdict(Status::Fail, "trivial twists on the FP dimensions do not give a rank-1 S-matrix", cert);
  return verdict(Status::Pass, "integer dimensions within the Landau bound with a rank-1 witness", cert);
}

// ---------------------------------------------------------------------------
// Modular branch, dispatched on the Galois type.

enum class ModularCase { Z3, Case1, Case2, Case3a, Case3b, S3 };

inline std::string to_string(ModularCase c) {
  switch (c) {
    case ModularCase::Z3: return "Z/3";
    case ModularCase::Case1: return "Case 1";
    case ModularCase::Case2: return "Case 2";
    case ModularCase::Case3a: return "Case 3a";
    case ModularCase::Case3b: return "Case 3b";
    case ModularCase::S3: return "S3";
  }
  return "?";
}

inline ModularCase dispatch(const FusionRing& ring, GaloisTag tag) {
  if (ring.is_z3()) return ModularCase::Z3;
  switch (tag) {
    case GaloisTag::Trivial: return ModularCase::Case1;
    case GaloisTag::C3: return ModularCase::Case2;
    case GaloisTag::C2FixingFP: return ModularCase::Case3a;
    case GaloisTag::C2MovingFP: return ModularCase::Case3b;
    case GaloisTag::S3: return ModularCase::S3;
  }
  throw DomainError("unknown Galois type");
}

namespace detail {

inline std::optional<FilterVerdict> not_applicable(const FusionRing& ring, const CharacterSystem& sys, ModularCase want) {
  const GaloisTag tag = characters::galois_type(sys).tag;
  const ModularCase got = dispatch(ring, tag);
  if (got == want) return std::nullopt;
  return verdict(Status::NotApplicable, "Galois type " + characters::to_string(tag) + " is handled by " + to_string(got));
}

}  // namespace detail

// Z/3: the pointed datum d = (1,1,1), theta = (1, w, w) with w = exp(2 pi i/3).
inline FilterVerdict z3_filter(const FusionRing& ring, const CharacterSystem& sys, double tol = 1e-9) {
  if (!ring.is_z3()) return verdict(Status::NotApplicable, "not the Z/3 ring");
  const RootOfUnity w(1, 3);
  auto s = premodular::build_s_matrix(ring, sys.fp(), premodular::Twists(w, w));
  const auto cls = premodular::classify_s_matrix(s, tol);
  const bool rows = premodular::verify_row_characters(s, sys, tol);
  const auto det = premodular::determinant(s);
  Json cert{{"dims", detail::dims_json(sys)},
            {"twists", Json::array({to_json(RootOfUnity::one()), to_json(w), to_json(w)})},
            {"structure_class", premodular::to_string(cls)},
            {"determinant", to_json(det)},
            {"rows_are_characters", rows}};
  if (cls != premodular::StructureClass::Modular || !rows)
    return verdict(Status::Fail, "the pointed datum is not modular", cert);
  return verdict(Status::Pass, "the pointed datum with theta_g = theta_g2 = exp(2 pi i/3) is modular", cert);
}

// Case 1: all character values are rational, hence integers (roots of monic
// integer polynomials), and the group-theoretic bound gives FPdim <= 6.
inline FilterVerdict case1_filter(const Rank3Params& params, const CharacterSystem& sys) {
  if (auto na = detail::not_applicable(sys.ring, sys, ModularCase::Case1)) return *na;
  for (const auto& c : sys.chars) {
    if (!c.x.is_algebraic_integer() || !c.y.is_algebraic_integer() || !c.x.is_integer() || !c.y.is_integer())
      throw DegenerateSystem("rational character of " + params.name() + " is not integral: " + c.to_string());
  }
  const RealAlgebraic global = fusion::global_fp_dim(sys);
  const long bound = landau_bound(3);
  Json cert{{"dims", detail::dims_json(sys)}, {"global_fp_dim", to_json(global)}, {"bound", bound}};
  if (global.compare_to(Rational(bound)) > 0) return verdict(Status::Fail, "global FP dimension exceeds 6", cert);
  return verdict(Status::Pass, "integral dimensions with global FP dimension <= 6", cert);
}

// Case 2 equations in a given orientation: (1) lambda^3 = lk,
// (2) m + l = lambda (nk - l^2 - 1)/(-k), (3) ml - k^2 - 1 = lambda^2 (n + k)/(-k).
// Does not check the Galois type, so it also evaluates hypothetical params.
inline FilterVerdict case2_check(const Rank3Params& p) {
  Json cert{{"params", p.as_array()}, {"constraint_sum", p.n * p.k - p.l * p.l - 1 + p.m * p.l - p.k * p.k - 1}};
  if (p.m + p.l == 0) {
    cert["exception"] = "m + l = 0";
    return verdict(Status::Pass, "m + l = 0: the exceptional ring K(1,0,0,0)", cert);
  }
  const long lk = p.l * p.k;
  cert["lk"] = lk;
  if (lk <= 0) {
    cert["lambda"] = nullptr;
    return verdict(Status::Fail, "lambda^3 = lk has no positive solution", cert);
  }
  Int root;
  const Int lk_big(lk);
  mpz_root(root.get_mpz_t(), lk_big.get_mpz_t(), 3);
  if (root * root * root != lk_big) {
    cert["lambda"] = nullptr;
    cert["lambda_cubed"] = lk;
    return verdict(Status::Fail, "lambda = cube root of lk is irrational", cert);
  }
  const Rational lambda(root);
  const Rational eq2_lhs(p.m + p.l), eq2_rhs = lambda * Rational(p.n * p.k - p.l * p.l - 1) / Rational(-p.k);
  const Rational eq3_lhs(p.m * p.l - p.k * p.k - 1), eq3_rhs = lambda * lambda * Rational(p.n + p.k) / Rational(-p.k);
  cert["lambda"] = to_json(lambda);
  cert["eq1"] = Json{{"lhs", to_json(lambda * lambda * lambda)}, {"rhs", lk}, {"holds", true}};
  cert["eq2"] = Json{{"lhs", to_json(eq2_lhs)}, {"rhs", to_json(eq2_rhs)}, {"holds", eq2_lhs == eq2_rhs}};
  cert["eq3"] = Json{{"lhs", to_json(eq3_lhs)}, {"rhs", to_json(eq3_rhs)}, {"holds", eq3_lhs == eq3_rhs}};
  if (eq2_lhs != eq2_rhs) return verdict(Status::Fail, "equation (2) fails for the integral lambda", cert);
  if (eq3_lhs != eq3_rhs) return verdict(Status::Fail, "equation (3) fails for the integral lambda", cert);
  return verdict(Status::Pass, "integral lambda satisfies equations (1)-(3)", cert);
}

// Case 2 (cyclic Galois group of order 3). The equations depend on which
// object is called X, so both orientations are evaluated.
inline FilterVerdict case2_filter(const Rank3Params& params, const CharacterSystem& sys) {
  if (auto na = detail::not_applicable(sys.ring, sys, ModularCase::Case2)) return *na;
  const FilterVerdict a = case2_check(params), b = case2_check(params.swapped());
  Json cert{{"orientations", Json::array({Json{{"status", to_string(a.status)}, {"reason", a.reason}, {"certificate", a.certificate}},
                                          Json{{"status", to_string(b.status)}, {"reason", b.reason}, {"certificate", b.certificate}}})}};
  if (a.passed() || b.passed()) return verdict(Status::Pass, (a.passed() ? a : b).reason, cert);
  return verdict(Status::Fail, "no orientation satisfies the Case 2 equations", cert);
}

// Case 3a argument without the Galois precondition: divisibility gives
// k, l <= 1, then y^2 = 2 + ny needs a rational root (n = 1) unless the ring
// is K(1,1,1,0). The proportionality sides are recorded only.
inline FilterVerdict case3a_check(const Rank3Params& p) {
  const long lhs = (p.k * p.k * p.m + p.l * p.l * p.l) * p.l, rhs = (p.k * p.k * p.k + p.l * p.l * p.n) * p.k;
  Json cert{{"params", p.as_array()},
            {"proportionality", Json{{"lhs", lhs}, {"rhs", rhs}, {"sides_agree", lhs == rhs}, {"used_for_exclusion", false}}}};
  if (p.k > 1) return verdict(Status::Fail, "divisibility forces k <= 1", cert);
  if (p.l > 1) return verdict(Status::Fail, "divisibility forces l <= 1", cert);
  const Rank3Params c = fusion::canonicalize(p);
  if (c == Rank3Params{1, 1, 0, 1}) return verdict(Status::Pass, "k, l <= 1 leaves K(1,1,1,0)", cert);
  if (c.k == 0 && c.l == 1 && c.m == 0) {
    const long disc = c.n * c.n + 8;  // of y^2 - n y - 2
    const bool rational = exactnum::is_perfect_square(Int(disc));
    cert["rationality"] = Json{{"polynomial", to_json(IntPoly{-2, -c.n, 1})}, {"discriminant", disc}, {"rational_root", rational}};
    if (rational) return verdict(Status::Pass, "y^2 = 2 + ny has a rational root (n = 1)", cert);
    return verdict(Status::Fail, "y^2 = 2 + ny has no rational root", cert);
  }
  return verdict(Status::Fail, "k, l <= 1 leaves only K(0,1,0,n) and K(1,1,1,0)", cert);
}

// Case 3a (order-2 Galois group fixing the FP character).
inline FilterVerdict case3a_filter(const Rank3Params& params, const CharacterSystem& sys) {
  if (auto na = detail::not_applicable(sys.ring, sys, ModularCase::Case3a)) return *na;
  return case3a_check(params);
}

// LHS - RHS of s^2/t^2 + 1/t^2 + 2t^2/(t^2+1) + t^2/s^2 = 1/s^2.
inline Rational case3b_grid_gap(long s, long t) {
  const Rational s2(s * s), t2(t * t);
  return s2 / t2 + 1 / t2 + 2 * t2 / (t2 + 1) + t2 / s2 - 1 / s2;
}

// Exact sweep of 1 <= s <= s_max, 2 <= |t| <= t_max: true iff the identity
// has no solution (the gap is positive everywhere).
inline bool audit_case3b_grid(long s_max, long t_max) {
  for (long s = 1; s <= s_max; ++s)
    for (long t = 2; t <= t_max; ++t)
      if (case3b_grid_gap(s, t) <= 0 || case3b_grid_gap(s, -t) <= 0) return false;
  return true;
}

struct FamilyCheck {
  long s;
  RealAlgebraic y1;  // positive root of y^2 - 2sy - 2
  bool y1_exceeds_2s;
  bool s_y1_at_most_2;
  bool implication_holds;  // (y1 > 2s and s*y1 <= 2) implies 2s^2 < 2
};

// Within the t = -1 family k = 2s, l = 1, m = 2s^2, n = s.
inline std::vector<FamilyCheck> audit_t_minus_one_family(long s_max) {
  std::vector<FamilyCheck> out;
  for (long s = 1; s <= s_max; ++s) {
    const RealAlgebraic y1 = exactnum::isolate_real_roots(IntPoly{-2, -2 * s, 1}, Rational(1, 1 << 20)).back().value;
    const bool gt = y1.compare_to(Rational(2 * s)) > 0;
    const bool le = y1.compare_to(Rational(2, s)) <= 0;
    out.push_back({s, y1, gt, le, !(gt && le) || 2 * s * s < 2});
  }
  return out;
}

namespace detail {

inline Json orientation_json(const Rank3Params& p, const FilterVerdict& v) {
  return Json{{"params", p.as_array()}, {"status", to_string(v.status)}, {"reason", v.reason}, {"certificate", v.certificate}};
}

// One orientation of Case 3b; t, s are the fixed character's values on the
// objects called X and Y in this orientation.
inline FilterVerdict case3b_orientation(const Rank3Params& p, const RealAlgebraic& tv, const RealAlgebraic& sv) {
  if (!tv.is_integer() || !sv.is_integer())
    throw NonIntegralFixedCharacter("fixed character of " + p.name() + " is not integral: t = " + tv.to_string() +
                                    ", s = " + sv.to_string());
  const long t = tv.rational_value().get_num().get_si(), s = sv.rational_value().get_num().get_si();
  Json cert{{"t", t}, {"s", s}};
  if (t * t * t != -p.l) {
    cert["branch"] = "excluded";
    cert["check"] = Json{{"t^3", t * t * t}, {"-l", -p.l}};
    return verdict(Status::Fail, "x1*x2 = x3^2 requires t^3 = -l", cert);
  }
  if (t == 0) {
    cert["branch"] = "excluded";
    return verdict(Status::Fail, "t = 0 makes S~_XY vanish", cert);
  }
  if (s == 0) {
    cert["branch"] = "s=0";
    cert["n"] = p.n;
    if (p.n != 0) return verdict(Status::Fail, "symmetry of S~ forces y2 = -y1, hence n = 0", cert);
    return verdict(Status::Pass, "s = 0 and n = 0", cert);
  }
  if (t == -1) {
    cert["branch"] = "t=-1 family";
    cert["family"] = Json{{"k", 2 * s}, {"l", 1}, {"m", 2 * s * s}, {"n", s}};
    cert["two_s_squared"] = 2 * s * s;
    if (s < 0) return verdict(Status::Fail, "k = 2s would be negative", cert);
    return verdict(Status::Fail, "the family requires 2s^2 < 1, impossible for s >= 1", cert);
  }
  cert["branch"] = "grid contradiction";
  const long as = std::labs(s), at = std::labs(t);
  const Rational gap = case3b_grid_gap(as, at);
  cert["grid_point"] = Json{{"s", as}, {"t", at}};
  cert["lhs_minus_rhs"] = to_json(gap);
  if (gap <= 0) throw DegenerateSystem("grid identity is satisfied at a point; the grid argument does not apply");
  return verdict(Status::Fail, "s^2/t^2 + 1/t^2 + 2t^2/(t^2+1) + t^2/s^2 = 1/s^2 has no solution", cert);
}

}  // namespace detail

// Case 3b (order-2 Galois group moving the FP character): the rational
// character (t, s) pins the ring down. The orientation is not determined by
// the ring, so both labelings are analysed.
inline FilterVerdict case3b_filter(const Rank3Params& params, const CharacterSystem& sys) {
  if (auto na = detail::not_applicable(sys.ring, sys, ModularCase::Case3b)) return *na;
  const characters::Character* fixed = nullptr;
  for (const auto& o : sys.orbits)
    if (o.members.size() == 1) fixed = &sys.chars[static_cast<std::size_t>(o.members.front())];
  if (fixed == nullptr) throw DegenerateSystem("no Galois-fixed character in " + params.name());
  // sys is built from params; its X is params' X.
  const Rank3Params q = params.swapped();
  const FilterVerdict a = detail::case3b_orientation(params, fixed->x, fixed->y);
  const FilterVerdict b = detail::case3b_orientation(q, fixed->y, fixed->x);
  Json cert{{"orientations", Json::array({detail::orientation_json(params, a), detail::orientation_json(q, b)})}};
  if (a.passed() || b.passed()) return verdict(Status::Pass, (a.passed() ? a : b).reason, cert);
  return verdict(Status::Fail, "every orientation reaches a contradiction", cert);
}

// Galois group S3 is not abelian.
inline FilterVerdict s3_filter(const FusionRing& ring, const CharacterSystem& sys) {
  if (auto na = detail::not_applicable(ring, sys, ModularCase::S3)) return *na;
  const auto g = characters::galois_type(sys);
  return verdict(Status::Fail, "the Galois group of a modular category is abelian; S3 is not",
                 Json{{"discriminant", g.discriminant ? to_json(*g.discriminant) : Json(nullptr)}});
}

struct ModularVerdict {
  ModularCase applied;
  FilterVerdict result;
  std::map<ModularCase, FilterVerdict> all;  // every case filter, NotApplicable except one
};

inline ModularVerdict modular_filter(const FusionRing& ring, const CharacterSystem& sys, double tol = 1e-9) {
  ModularVerdict mv{dispatch(ring, characters::galois_type(sys).tag), {}, {}};
  mv.all[ModularCase::Z3] = z3_filter(ring, sys, tol);
  mv.all[ModularCase::S3] = s3_filter(ring, sys);
  if (ring.is_z3()) {
    for (auto c : {ModularCase::Case1, ModularCase::Case2, ModularCase::Case3a, ModularCase::Case3b})
      mv.all[c] = verdict(Status::NotApplicable, "the case analysis covers the self-dual family");
  } else {
    const Rank3Params& p = *ring.params();
    mv.all[ModularCase::Case1] = case1_filter(p, sys);
    mv.all[ModularCase::Case2] = case2_filter(p, sys);
    mv.all[ModularCase::Case3a] = case3a_filter(p, sys);
    mv.all[ModularCase::Case3b] = case3b_filter(p, sys);
  }
  mv.result = mv.all.at(mv.applied);
  return mv;
}

// ---------------------------------------------------------------------------
// Full classification.

struct ClassifyConfig {
  long bound = 20;
  long max_twist_order = 60;
  double tol = 1e-9;
  long precision_bits = exactnum::kDefaultPrecisionBits;
  bool witness_all = false;
  unsigned threads = 1;
};

struct RingEntry {
  FusionRing ring;
  std::vector<std::string> alias;
  characters::GaloisType galois;
  Json dims;
  Json global_fp_dim;
  FilterVerdict symmetric, nonmodular;
  ModularVerdict modular;
  bool admissible = false;
  std::optional<std::vector<premodular::PremodularDatum>> witnesses;

  std::string name() const { return ring.name(); }
};

struct ClassificationReport {
  ClassifyConfig config;
  std::vector<RingEntry> rings;  // Z/3 first, then canonical tuples ascending

  std::vector<std::string> admissible() const {
    std::vector<std::string> out;
    for (const auto& r : rings)
      if (r.admissible) out.push_back(r.name());
    return out;
  }
  std::vector<std::string> modular_survivors() const {
    std::vector<std::string> out;
    for (const auto& r : rings)
      if (r.modular.result.passed()) out.push_back(r.name());
    return out;
  }
};

inline RingEntry analyse_ring(const FusionRing& ring, const ClassifyConfig& cfg, unsigned search_threads = 1) {
  const CharacterSystem sys = characters::solve_characters(ring);
  RingEntry e{ring, aliases(ring), characters::galois_type(sys), detail::dims_json(sys), to_json(fusion::global_fp_dim(sys)),
              {}, {}, {}, false, std::nullopt};
  e.symmetric = symmetric_filter(ring, sys, cfg.tol);
  e.nonmodular = ring.is_z3() ? verdict(Status::NotApplicable, "Z/3 has no fusion subring Rep(Z/2)")
                              : premodular::nonmodular_filter(*ring.params(), sys);
  e.modular = modular_filter(ring, sys, cfg.tol);
  e.admissible = e.symmetric.passed() || e.nonmodular.passed() || e.modular.result.passed();
  if (e.admissible || cfg.witness_all)
    e.witnesses = premodular::search_ribbon_data(sys, cfg.max_twist_order, cfg.tol, cfg.precision_bits, search_threads);
  return e;
}

// Z/3 plus every canonical (*)-solution up to the bound. Rings are analysed
// in parallel; the result does not depend on the thread count.
inline ClassificationReport classify_all(const ClassifyConfig& cfg) {
  if (cfg.bound < 1) throw DomainError("bound must be >= 1");
  std::vector<FusionRing> rings{fusion::make_z3_ring()};
  for (const auto& p : enumerate_star_solutions(cfg.bound)) rings.push_back(fusion::make_rank3_ring(p));

  ClassificationReport report{cfg, std::vector<RingEntry>(rings.size(), RingEntry{rings[0], {}, {}, {}, {}, {}, {}, {}, false, {}})};
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(rings.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < rings.size(); i = next++) report.rings[i] = analyse_ring(rings[i], cfg);
    } catch (...) {
      errors[w] = std::current_exception();
      next = rings.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

inline ClassificationReport classify_all(long bound, long max_twist_order = 60, double tol = 1e-9, bool witness_all = false,
                                         unsigned threads = 1) {
  ClassifyConfig cfg;
  cfg.bound = bound;
  cfg.max_twist_order = max_twist_order;
  cfg.tol = tol;
  cfg.witness_all = witness_all;
  cfg.threads = threads;
  return classify_all(cfg);
}

// ---------------------------------------------------------------------------
// Audits of intermediate claims.

struct StarAssocAudit {
  long bound = 0;
  long checked = 0;
  long star_solutions = 0;
  std::vector<Rank3Params> mismatches;
};

// (*) against associativity of the multiplication table, all entries <= bound.
inline StarAssocAudit audit_star_associativity(long bound) {
  if (bound < 0) throw DomainError("bound must be >= 0");
  StarAssocAudit a{bound, 0, 0, {}};
  for (long k = 0; k <= bound; ++k)
    for (long l = 0; l <= bound; ++l)
      for (long m = 0; m <= bound; ++m)
        for (long n = 0; n <= bound; ++n) {
          const Rank3Params p{k, l, m, n};
          ++a.checked;
          const bool star = p.satisfies_star();
          a.star_solutions += star;
          if (star != fusion::check_based_axioms(fusion::rank3_table(p), {0, 1, 2}).associativity) a.mismatches.push_back(p);
        }
  return a;
}

struct RingsAudit {
  long coeff_bound = 0;
  std::vector<FusionRing> rings;
  long z3_count = 0;
  long unrecognized = 0;
  bool matches_families = false;  // self-dual rings = canonical (*)-solutions
};

inline RingsAudit audit_rank3_rings(long coeff_bound, unsigned threads = 1) {
  RingsAudit a{coeff_bound, fusion::enumerate_rank3_based_rings(coeff_bound, threads), 0, 0, false};
  std::vector<Rank3Params> family;
  for (const auto& r : a.rings) {
    if (r.is_z3()) {
      ++a.z3_count;
    } else if (r.params()) {
      family.push_back(fusion::canonicalize(*r.params()));
    } else {
      ++a.unrecognized;
    }
  }
  std::sort(family.begin(), family.end());
  std::vector<Rank3Params> expected;
  for (const auto& p : enumerate_star_solutions(coeff_bound))
    if (std::max({p.k, p.l, p.m, p.n}) <= coeff_bound) expected.push_back(p);
  a.matches_families = a.unrecognized == 0 && a.z3_count == (coeff_bound >= 1 ? 1 : 0) && family == expected;
  return a;
}

// ---------------------------------------------------------------------------
// Rendering.

inline Json to_json(const FilterVerdict& v) {
  return Json{{"status", to_string(v.status)}, {"reason", v.reason}, {"certificate", v.certificate}};
}

inline Json ring_params_json(const FusionRing& ring) {
  if (ring.is_z3()) return "Z/3";
  return fusion::canonicalize(*ring.params()).as_array();
}

inline Json to_json(const RingEntry& e) {
  Json modular = Json{{"case", to_string(e.modular.applied)}};
  const Json result = to_json(e.modular.result);
  for (const auto& [k, v] : result.items()) modular[k] = v;
  Json j{{"name", e.name()},
         {"params", ring_params_json(e.ring)},
         {"alias", e.alias},
         {"galois", characters::to_string(e.galois.tag)},
         {"fp_dims", e.dims},
         {"global_fp_dim", e.global_fp_dim},
         {"verdicts", Json{{"symmetric_filter", to_json(e.symmetric)},
                           {"nonmodular_filter", to_json(e.nonmodular)},
                           {"modular_filter", modular}}},
         {"admissible", e.admissible}};
  if (e.galois.discriminant) j["x_discriminant"] = to_json(*e.galois.discriminant);
  if (e.witnesses) {
    Json w = Json::array();
    for (const auto& d : *e.witnesses) w.push_back(premodular::to_json(d));
    j["witness_count"] = e.witnesses->size();
    j["witnesses"] = w;
  } else {
    j["witnesses"] = nullptr;
  }
  return j;
}

inline Json to_json(const ClassificationReport& r) {
  Json rings = Json::array();
  for (const auto& e : r.rings) rings.push_back(to_json(e));
  return Json{{"header",
               Json{{"limitations", Json::array({kLimitation,
                                                 "the non-modular branch is conditional on a cited structural result "
                                                 "(a Rep(Z/2) fusion subring), not recomputed here",
                                                 "parameters beyond the bound are not examined"})},
                    {"notes", Json::array({"K(1,0,0,0) \u2261 K(0,1,0,0) and K(1,1,1,0) \u2261 K(1,1,0,1) under canonicalization",
                                           "Case 3a proportionality sides are recorded, not used for exclusion"})}}},
              {"config", Json{{"bound", r.config.bound},
                              {"max_twist_order", r.config.max_twist_order},
                              {"tol", approx_string(r.config.tol)},
                              {"precision_bits", r.config.precision_bits},
                              {"witness_all", r.config.witness_all}}},
              {"admissible", r.admissible()},
              {"modular_survivors", r.modular_survivors()},
              {"rings", rings}};
}

inline std::string render_table(const ClassificationReport& r) {
  std::ostringstream os;
  os << "# limitation: " << kLimitation << "\n";
  os << "# note: K(1,0,0,0) \u2261 K(0,1,0,0), K(1,1,1,0) \u2261 K(1,1,0,1)\n";
  os << "# bound " << r.config.bound << ", max twist order " << r.config.max_twist_order << "\n";
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("ring", 16) << pad("alias", 16) << pad("galois", 12) << pad("symmetric", 15) << pad("nonmodular", 15)
     << pad("modular", 24) << pad("admissible", 12) << "witnesses\n";
  for (const auto& e : r.rings) {
    std::string alias = e.alias.empty() ? "-" : e.alias.front();
    os << pad(e.name(), 16) << pad(alias, 16) << pad(characters::to_string(e.galois.tag), 12)
       << pad(to_string(e.symmetric.status), 15) << pad(to_string(e.nonmodular.status), 15)
       << pad(to_string(e.modular.result.status) + " (" + to_string(e.modular.applied) + ")", 24)
       << pad(e.admissible ? "yes" : "no", 12) << (e.witnesses ? std::to_string(e.witnesses->size()) : "-") << "\n";
  }
  os << "admissible:";
  for (const auto& n : r.admissible()) os << " " << n;
  os << "\nmodular survivors:";
  for (const auto& n : r.modular_survivors()) os << " " << n;
  os << "\n";
  return os.str();
}

}  // namespace ribbon3::classify
