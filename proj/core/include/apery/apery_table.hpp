#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// Apéry table of the powers of the maximal ideal M = S \ {0}.
///
/// Row n holds, for each residue class modulo the multiplicity a1, the least
/// element of nM in that class. Row 0 is the Apéry set of S itself (with 0 in
/// column 0), row 1 replaces that 0 by a1. Columns are identified by their
/// row-0 value. Rows run from 0 to the reduction number r, the least r >= 1
/// such that every column steps by a1 from row r to row r + 1.
class AperyTable {
 public:
  /// Wraps precomputed rows. Columns must be keyed by ascending row-0 values;
  /// throws std::invalid_argument on a shape mismatch.
  AperyTable(NumericalSemigroup semigroup, std::vector<std::vector<Value>> rows);

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  Value reduction_number() const noexcept { return static_cast<Value>(rows_.size()) - 1; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return rows_.front().size(); }

  Value entry(std::size_t n, std::size_t column) const { return rows_.at(n).at(column); }
  std::span<const Value> row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<Value>>& rows() const noexcept { return rows_; }
  std::vector<Value> column(std::size_t i) const;

  std::span<const Value> column_keys() const { return rows_.front(); }
  std::optional<std::size_t> column_of(Value key) const;

  /// Entry in row n for any n >= 0; rows past r continue by +a1.
  Value extended_entry(Value n, std::size_t column) const;

  friend bool operator==(const AperyTable& a, const AperyTable& b) {
    return a.semigroup_ == b.semigroup_ && a.rows_ == b.rows_;
  }

 private:
  NumericalSemigroup semigroup_;
  std::vector<std::vector<Value>> rows_;
};

/// x in nM, decided as membership plus order(x) >= n.
bool n_fold_contains(const NumericalSemigroup& s, Value x, Value n);
bool n_fold_contains(OrderTable& orders, Value x, Value n);

AperyTable apery_table(const NumericalSemigroup& s);
Value reduction_number(const NumericalSemigroup& s);

/// H(n) = #(nM \ (n+1)M).
Value hilbert_function(const NumericalSemigroup& s, Value n);
Value hilbert_function(const AperyTable& table, OrderTable& orders, Value n);

}  // namespace apery
