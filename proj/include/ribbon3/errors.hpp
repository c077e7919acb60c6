#pragma once

#include <stdexcept>
#include <string>

namespace ribbon3 {

// Base of every error raised by the library. kind() is the stable
// machine-readable tag used in CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RIBBON3_DEFINE_ERROR(Name, Tag)                              \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& detail) : Error(Tag, detail) {} \
  };

RIBBON3_DEFINE_ERROR(DomainError, "DomainError")
RIBBON3_DEFINE_ERROR(StarViolation, "StarViolation")
RIBBON3_DEFINE_ERROR(DegenerateSystem, "DegenerateSystem")
RIBBON3_DEFINE_ERROR(NoPositiveCharacter, "NoPositiveCharacter")
RIBBON3_DEFINE_ERROR(ZeroDimension, "ZeroDimension")
RIBBON3_DEFINE_ERROR(Undecidable, "Undecidable")
RIBBON3_DEFINE_ERROR(NonIntegralFixedCharacter, "NonIntegralFixedCharacter")
RIBBON3_DEFINE_ERROR(UsageError, "UsageError")

#undef RIBBON3_DEFINE_ERROR

}  // namespace ribbon3
