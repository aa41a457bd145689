#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apery/checked.hpp"

namespace apery {

/// Largest modulus for which an Apéry set (one slot per residue class) is
/// materialized.
inline constexpr Value kMaxModulus = Value{1} << 22;

/// Largest element whose order is computed; orders are tabulated densely.
inline constexpr Value kMaxOrderArgument = Value{1} << 26;

/// A coefficient vector s with value sum(a_i * s_i) over the minimal
/// generators.
struct Factorization {
  std::vector<Value> coefficients;
  Value total_order = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

/// Minimal element of the semigroup in each residue class modulo `modulus`.
struct AperySet {
  Value modulus = 0;
  std::vector<Value> elements;    // ascending
  std::vector<Value> by_residue;  // by_residue[w % modulus] == w

  std::size_t size() const noexcept { return elements.size(); }
  Value max() const { return elements.back(); }
  bool has(Value w) const noexcept;

  friend bool operator==(const AperySet& a, const AperySet& b) {
    return a.modulus == b.modulus && a.elements == b.elements;
  }
};

/// Numerical semigroup held by its unique minimal generating system.
///
/// Instances are immutable after construction; the Apéry set with respect to
/// the multiplicity is computed once and used for membership tests.
class NumericalSemigroup {
 public:
  /// Reduces `raw_generators` to the minimal system, sorted ascending.
  /// Throws EmptyInput, NonPositiveGenerator, GcdNotOne or TooLarge.
  static NumericalSemigroup from_generators(std::span<const Value> raw_generators);

  const std::vector<Value>& generators() const noexcept { return generators_; }
  Value multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  bool is_naturals() const noexcept { return multiplicity() == 1; }

  bool contains(Value x) const noexcept;
  /// Throws SemigroupIsN for the semigroup of all nonnegative integers.
  Value frobenius() const;
  const AperySet& apery() const noexcept { return apery_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup(std::vector<Value> generators, AperySet apery)
      : generators_(std::move(generators)), apery_(std::move(apery)) {}

  std::vector<Value> generators_;
  AperySet apery_;
};

NumericalSemigroup new_semigroup(std::span<const Value> raw_generators);
NumericalSemigroup new_semigroup(std::initializer_list<Value> raw_generators);

bool contains(const NumericalSemigroup& s, Value x) noexcept;
Value frobenius(const NumericalSemigroup& s);

/// Apéry set with respect to a nonzero element `a` of the semigroup, by
/// fixed-point relaxation over the residue classes modulo `a`.
AperySet apery_set(const NumericalSemigroup& s, Value a);
AperySet apery_set(const NumericalSemigroup& s);

/// All factorizations of x, in lexicographic order of coefficients. Empty iff
/// x is not in the semigroup.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, Value x);

/// Memo table of orders, grown on demand. One instance per computation; not
/// safe to share between threads.
class OrderTable {
 public:
  explicit OrderTable(const NumericalSemigroup& s);

  /// Throws NotInSemigroup if x is not an element.
  Value order(Value x);
  /// nullopt when x is not an element.
  std::optional<Value> try_order(Value x);

 private:
  void grow_to(Value x);

  NumericalSemigroup semigroup_;
  std::vector<Value> orders_;  // -1 marks a gap
};

Value order(const NumericalSemigroup& s, Value x);

/// Distinct lengths of the factorizations of x, ascending.
std::vector<Value> length_set(const NumericalSemigroup& s, Value x);

}  // namespace apery
