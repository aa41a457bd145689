#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apery/semigroup.hpp"

// Brute-force reference computations. Everything under brute_* reads only the
// generator list and recomputes membership, orders and sumsets from scratch;
// none of it goes through the residue tables or memoized orders of the main
// modules.

namespace apery {

/// Largest generator full_verify accepts.
inline constexpr Value kMaxVerifyGenerator = 500;

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  /// Places where a published closed form disagrees with the computation.
  /// Informational; they never fail the report.
  std::vector<std::string> formula_deltas;
  bool free = false;
  bool cohen_macaulay = false;

  std::size_t failures() const noexcept;
  bool passed() const noexcept { return failures() == 0; }
};

/// Scans [0, a * max generator] with an exhaustive coin-change table and keeps
/// the least member of each residue class.
AperySet brute_apery(const NumericalSemigroup& s, Value a);

/// Maximum length over all factorizations, enumerated with an odometer.
Value brute_order(const NumericalSemigroup& s, Value x);

/// #(nM \ (n+1)M) from explicit sumsets of M inside a finite window.
Value brute_hilbert_function(const NumericalSemigroup& s, Value n);

/// Cross-checks every optimized computation against the brute-force routes
/// and, for family members, against the closed forms. Throws TooLarge when a
/// generator exceeds kMaxVerifyGenerator.
VerificationReport full_verify(const NumericalSemigroup& s);

}  // namespace apery
