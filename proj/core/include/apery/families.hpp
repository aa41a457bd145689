#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "apery/apery_table.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// Gamma_h = <m0, m1, m2, m3> with m0 = 2h(2h-1), m1 = (2h+1)(2h-1),
/// m2 = 2h(2h+1), m3 = m2 + (2h-1); h >= 2.
struct BresinskyParams {
  Value h = 0;
  Value m0 = 0, m1 = 0, m2 = 0, m3 = 0;

  /// Throws ParamTooSmall for h < 2 and Overflow when a generator does not fit.
  static BresinskyParams make(Value h);
  friend bool operator==(const BresinskyParams&, const BresinskyParams&) = default;
};

/// S_m = <n1, n2, n3, n4> with n1 = m(m+1), n2 = n1 + 1, n3 = (m+1)^2,
/// n4 = n3 + 1; m >= 2.
struct ArslanParams {
  Value m = 0;
  Value n1 = 0, n2 = 0, n3 = 0, n4 = 0;

  static ArslanParams make(Value m);
  friend bool operator==(const ArslanParams&, const ArslanParams&) = default;
};

using FamilyParams = std::variant<BresinskyParams, ArslanParams>;

std::string family_name(const FamilyParams& params);
Value family_parameter(const FamilyParams& params);
std::vector<Value> family_generators(const FamilyParams& params);
NumericalSemigroup family_semigroup(const FamilyParams& params);

NumericalSemigroup bresinsky(Value h);
NumericalSemigroup arslan(Value m);

/// Recognizes a semigroup as a member of either family.
std::optional<FamilyParams> identify_family(const NumericalSemigroup& s);

/// One block of the closed-form Apéry set: its elements in display order and
/// the order the closed form assigns to each.
struct ClosedFormBlock {
  std::string caption;
  std::vector<Value> elements;
  std::vector<Value> orders;
};

/// Blocks 0..5 with blocks 4 and 5 split into their sub-blocks, in the
/// conventional display order.
std::vector<ClosedFormBlock> closed_form_blocks(const FamilyParams& params);

AperySet bresinsky_apery_closed_form(Value h);
AperySet arslan_apery_closed_form(Value m);
AperySet family_apery_closed_form(const FamilyParams& params);

/// Apéry element -> order, with orders i + j for the element i*g + j*g'.
std::map<Value, Value> family_orders_closed_form(const FamilyParams& params);

/// Closed-form reduction number: 2h - 1 for Gamma_h, m for S_m.
Value family_reduction_number(const FamilyParams& params);

/// Apéry table laid out block by block.
struct FamilyTable {
  struct Block {
    std::string caption;
    std::size_t first_column = 0;
    std::size_t width = 0;
  };

  FamilyParams params;
  std::vector<std::vector<Value>> rows;   // block order
  std::vector<Block> blocks;
  std::vector<std::size_t> ascending_index;  // block column -> ascending column

  std::vector<Value> column(std::size_t i) const;
  AperyTable to_apery_table() const;
};

/// Entry in row n of the column of w is w while n <= ord(w), and
/// w + (n - ord(w)) * multiplicity afterwards (row 0 of the zero column is 0).
FamilyTable family_table_closed_form(const FamilyParams& params);

/// Number of nonzero Apéry elements of each order k >= 1.
struct OrderCensus {
  std::map<Value, Value> counts;

  Value total() const;
  friend bool operator==(const OrderCensus&, const OrderCensus&) = default;
};

OrderCensus order_census_closed_form(const FamilyParams& params);

/// Histogram of generic orders over the nonzero Apéry elements.
OrderCensus order_census(const NumericalSemigroup& s);

/// True iff every closed-form Apéry element has exactly one factorization.
bool verify_uniqueness(const FamilyParams& params);
/// Throws NotAFamilyMember for semigroups outside both families.
bool verify_uniqueness(const NumericalSemigroup& s);

/// Hilbert numerator exactly as printed in the published corollaries:
/// Gamma_h: sum_{k=1}^{2h-2} (2k+1) x^k + (2h-1) x^{2h-1};
/// S_m:     sum_{k=1}^{m-1}  (2k-1) x^k + m x^m.
/// Both omit the degree-0 term.
std::vector<Value> published_hilbert_numerator(const FamilyParams& params);
std::string published_hilbert_formula(const FamilyParams& params);

/// Free-summand multiplicities as printed in the published decompositions,
/// keyed by generator degree (a summand F(-k) sits in degree k, F(k) in -k).
/// Gamma_h: (F(-k))^{2k+1}, k = 1..2h-2, and (F(2h-1))^{2h-1};
/// S_m:     (F(-k))^{2m-1}, k = 1..m-1,  and (F(-m))^m.
std::map<Value, Value> published_free_summands(const FamilyParams& params);
std::string published_decomposition_formula(const FamilyParams& params);

}  // namespace apery
