#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "apery/apery_table.hpp"

namespace apery {

/// Maximal run of at least two equal consecutive ladder values, rows
/// start..end inclusive.
struct Landing {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start; }
  friend bool operator==(const Landing&, const Landing&) = default;
};

/// Landing structure of one nonzero column of an Apéry table.
///
/// With landings L_0 < ... < L_p: d = e(L_p), and for j = 1..p,
/// b_j = e(L_{j-1}) and c_j = s(L_j) - e(L_{j-1}).
struct LadderProfile {
  Value column_key = 0;
  std::vector<Value> values;
  std::vector<Landing> landings;
  Value p = 0;
  Value d = 0;
  std::vector<Value> b_list;
  std::vector<Value> c_list;
};

/// F(-shift) / (t^a1)^length F, the torsion part contributed by one gap
/// between consecutive landings.
struct TorsionSummand {
  Value shift = 0;
  Value length = 0;

  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
  friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Tangent cone as a module over the fiber cone: free summands F(-shift) and
/// cyclic torsion summands. Both multisets are kept sorted.
struct ConeDecomposition {
  std::vector<Value> free_shifts;
  std::vector<TorsionSummand> torsion;

  bool is_free() const noexcept { return torsion.empty(); }
  friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

/// numerator(x) / (1 - x)^denominator_exponent with integer coefficients,
/// numerator[k] being the coefficient of x^k. Trailing zeros are trimmed.
struct HilbertSeries {
  std::vector<Value> numerator;
  Value denominator_exponent = 1;

  Value numerator_at_one() const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Throws ColumnOutOfRange unless 1 <= column < a1.
LadderProfile ladder_profile(const AperyTable& table, std::size_t column);
std::vector<LadderProfile> ladder_profiles(const AperyTable& table);

ConeDecomposition cone_decomposition(const AperyTable& table);
ConeDecomposition cone_decomposition(const NumericalSemigroup& s);

bool is_free(const NumericalSemigroup& s);
/// Decided by freeness over the fiber cone.
bool is_cohen_macaulay(const NumericalSemigroup& s);

HilbertSeries hilbert_series(const ConeDecomposition& dec);
/// Coefficient of x^n in the power-series expansion.
Value hilbert_function_from_series(const HilbertSeries& hs, Value n);

}  // namespace apery
