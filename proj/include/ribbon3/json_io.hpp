#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>
#include "ribbon3/characters.hpp"
#include "ribbon3/exactnum.hpp"
#include "ribbon3/fusion.hpp"

namespace ribbon3 {

using Json = nlohmann::ordered_json;

// Fixed 12-significant-digit rendering used for every approximation.
inline std::string approx_string(double v) {
  if (v == 0) v = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline Json approx(double v) { return Json{{"approx", approx_string(v)}}; }

inline Json to_json(const exactnum::Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

// Integers as JSON numbers, other rationals as "p/q" strings.
inline Json to_json(const exactnum::Rational& v) {
  if (exactnum::is_integer(v)) return to_json(v.get_num());
  return exactnum::to_string(v);
}

inline Json to_json(const exactnum::IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

// Rational values as plain rationals; others by minimal polynomial and
// isolating interval.
inline Json to_json(const exactnum::RealAlgebraic& v) {
  if (v.is_rational()) return to_json(v.rational_value());
  return Json{{"minpoly", to_json(v.minimal_polynomial())},
              {"interval", Json::array({exactnum::to_string(v.lower()), exactnum::to_string(v.upper())})},
              {"approx", approx_string(v.to_double())}};
}

inline Json to_json(const exactnum::RootOfUnity& r) { return Json{{"p", r.numerator()}, {"q", r.order()}}; }

inline Json to_json(const exactnum::ComplexBall& z) {
  return Json{{"re_approx", approx_string(z.real().mid_double())},
              {"im_approx", approx_string(z.imag().mid_double())},
              {"radius_approx", approx_string(z.radius())}};
}

inline Json to_json(const fusion::FusionRing& r) {
  Json n = Json::array();
  for (const auto& plane : r.tensor()) {
    Json rows = Json::array();
    for (const auto& row : plane) rows.push_back(Json(row));
    n.push_back(rows);
  }
  return Json{{"rank", r.rank()}, {"labels", r.labels()}, {"dual", r.dual()}, {"N", n}};
}

inline Json to_json(const fusion::AxiomReport& a) {
  Json j{{"unit", a.unit}, {"duality", a.duality}, {"involution", a.involution}, {"associativity", a.associativity},
         {"all_pass", a.all_pass()}};
  if (!a.first_failure.empty()) j["first_failure"] = a.first_failure;
  if (a.first_violation) j["first_violation"] = *a.first_violation;
  return j;
}

inline Json to_json(const characters::Character& c) {
  if (c.cyclic) return Json{{"values", Json::array({to_json(exactnum::RootOfUnity::one()), to_json((*c.cyclic)[0]), to_json((*c.cyclic)[1])})}};
  return Json{{"values", Json::array({1, to_json(c.x), to_json(c.y)})}, {"orbit", c.orbit}};
}

}  // namespace ribbon3
