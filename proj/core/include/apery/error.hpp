#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apery {

enum class Errc {
  EmptyInput,
  NonPositiveGenerator,
  GcdNotOne,
  Overflow,
  TooLarge,
  NotInSemigroup,
  SemigroupIsN,
  ColumnOutOfRange,
  ParamTooSmall,
  NotAFamilyMember,
};

const char* to_string(Errc code) noexcept;

/// Domain failure raised by every library operation. The code is stable and
/// is what the command-line front end maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apery
