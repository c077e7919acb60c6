#pragma once

#include <vector>

#include "ribbon3/characters.hpp"
#include "ribbon3/fusion/ring.hpp"

namespace ribbon3::fusion {

// FP dimensions of the basis, read off the everywhere-positive character.
inline std::vector<exactnum::RealAlgebraic> fp_dimensions(const characters::CharacterSystem& sys) {
  const auto& c = sys.chars[static_cast<std::size_t>(characters::fp_character(sys))];
  if (!c.is_real()) return {exactnum::RealAlgebraic(1), exactnum::RealAlgebraic(1), exactnum::RealAlgebraic(1)};
  return {exactnum::RealAlgebraic(1), c.x, c.y};
}

inline std::vector<exactnum::RealAlgebraic> fp_dimensions(const FusionRing& ring) {
  return fp_dimensions(characters::solve_characters(ring));
}

// Sum of squared FP dimensions, evaluated exactly in the FP character's field.
inline exactnum::RealAlgebraic global_fp_dim(const characters::CharacterSystem& sys) {
  const int fp = characters::fp_character(sys);
  const auto& c = sys.chars[static_cast<std::size_t>(fp)];
  if (!c.is_real()) return exactnum::RealAlgebraic(3);
  const auto& o = sys.orbits[static_cast<std::size_t>(c.orbit)];
  return sys.evaluate(fp, o.x * o.x + o.y * o.y + exactnum::Rational(1));
}

inline exactnum::RealAlgebraic global_fp_dim(const FusionRing& ring) {
  return global_fp_dim(characters::solve_characters(ring));
}

}  // namespace ribbon3::fusion
