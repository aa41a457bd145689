#include "apery/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace apery {

namespace {

constexpr Value kUnreached = kMaxValue;

// Bellman-Ford style relaxation on the cycle Z/a: dist[r] is the smallest
// known combination of `generators` congruent to r. Runs sweeps until no
// entry improves. Entries already present in `dist` are kept as upper bounds,
// so a previously relaxed table can be extended with more generators.
void relax_residues(std::vector<Value>& dist, std::span<const Value> generators) {
  const auto a = static_cast<Value>(dist.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Value r = 0; r < a; ++r) {
      const Value base = dist[r];
      if (base == kUnreached) continue;
      for (Value g : generators) {
        const Value step = g % a;
        if (step == 0) continue;
        const Value target = (r + step) % a;
        const Value candidate = checked_add(base, g);
        if (candidate < dist[target]) {
          dist[target] = candidate;
          changed = true;
        }
      }
    }
  }
}

AperySet make_apery(Value modulus, std::vector<Value> by_residue) {
  AperySet out;
  out.modulus = modulus;
  out.elements = by_residue;
  std::sort(out.elements.begin(), out.elements.end());
  out.by_residue = std::move(by_residue);
  return out;
}

void require_modulus_in_range(Value a) {
  if (a > kMaxModulus) {
    throw Error(Errc::TooLarge,
                "modulus " + std::to_string(a) + " exceeds the supported bound " + std::to_string(kMaxModulus));
  }
}

}  // namespace

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPositiveGenerator: return "NonPositiveGenerator";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::Overflow: return "Overflow";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::SemigroupIsN: return "SemigroupIsN";
    case Errc::ColumnOutOfRange: return "ColumnOutOfRange";
    case Errc::ParamTooSmall: return "ParamTooSmall";
    case Errc::NotAFamilyMember: return "NotAFamilyMember";
  }
  return "Unknown";
}

bool AperySet::has(Value w) const noexcept {
  if (w < 0 || modulus <= 0) return false;
  return by_residue[static_cast<std::size_t>(w % modulus)] == w;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Value> raw_generators) {
  if (raw_generators.empty()) throw Error(Errc::EmptyInput, "no generators given");
  for (Value g : raw_generators) {
    if (g <= 0) throw Error(Errc::NonPositiveGenerator, "generator " + std::to_string(g) + " is not positive");
  }

  std::vector<Value> sorted(raw_generators.begin(), raw_generators.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Value g = 0;
  for (Value x : sorted) g = std::gcd(g, x);
  if (g != 1) throw Error(Errc::GcdNotOne, "generators have gcd " + std::to_string(g) + ", complement is infinite");

  const Value a1 = sorted.front();
  if (a1 == 1) return NumericalSemigroup({1}, make_apery(1, {0}));
  require_modulus_in_range(a1);

  // Keep a generator only if the smaller kept ones cannot reach it. The residue
  // table doubles as the Apéry set once every generator has been seen.
  std::vector<Value> dist(static_cast<std::size_t>(a1), kUnreached);
  dist[0] = 0;
  std::vector<Value> minimal{a1};
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Value candidate = sorted[i];
    if (dist[static_cast<std::size_t>(candidate % a1)] <= candidate) continue;
    minimal.push_back(candidate);
    const Value single[] = {candidate};
    relax_residues(dist, single);
  }
  return NumericalSemigroup(std::move(minimal), make_apery(a1, std::move(dist)));
}

bool NumericalSemigroup::contains(Value x) const noexcept {
  if (x < 0) return false;
  return x >= apery_.by_residue[static_cast<std::size_t>(x % apery_.modulus)];
}

Value NumericalSemigroup::frobenius() const {
  if (is_naturals()) throw Error(Errc::SemigroupIsN, "the semigroup is N; every nonnegative integer belongs to it");
  return apery_.max() - multiplicity();
}

NumericalSemigroup new_semigroup(std::span<const Value> raw_generators) {
  return NumericalSemigroup::from_generators(raw_generators);
}

NumericalSemigroup new_semigroup(std::initializer_list<Value> raw_generators) {
  return NumericalSemigroup::from_generators(std::span<const Value>(raw_generators.begin(), raw_generators.size()));
}

bool contains(const NumericalSemigroup& s, Value x) noexcept { return s.contains(x); }

Value frobenius(const NumericalSemigroup& s) { return s.frobenius(); }

AperySet apery_set(const NumericalSemigroup& s, Value a) {
  if (a <= 0 || !s.contains(a)) {
    throw Error(Errc::NotInSemigroup, std::to_string(a) + " is not a nonzero element of the semigroup");
  }
  if (a == s.multiplicity()) return s.apery();
  require_modulus_in_range(a);
  std::vector<Value> dist(static_cast<std::size_t>(a), kUnreached);
  dist[0] = 0;
  relax_residues(dist, s.generators());
  return make_apery(a, std::move(dist));
}

AperySet apery_set(const NumericalSemigroup& s) { return s.apery(); }

std::vector<Factorization> factorizations(const NumericalSemigroup& s, Value x) {
  std::vector<Factorization> out;
  if (!s.contains(x)) return out;
  const auto& gens = s.generators();
  const std::size_t e = gens.size();
  std::vector<Value> coef(e, 0);

  // Depth-first over coefficients; the last coefficient is forced by
  // divisibility of what remains.
  auto dfs = [&](auto&& self, std::size_t i, Value remaining) -> void {
    if (i + 1 == e) {
      if (remaining % gens[i] != 0) return;
      coef[i] = remaining / gens[i];
      Factorization f{coef, std::accumulate(coef.begin(), coef.end(), Value{0})};
      out.push_back(std::move(f));
      return;
    }
    for (Value c = 0; c * gens[i] <= remaining; ++c) {
      coef[i] = c;
      if (s.contains(remaining - c * gens[i])) self(self, i + 1, remaining - c * gens[i]);
    }
    coef[i] = 0;
  };
  dfs(dfs, 0, x);
  std::sort(out.begin(), out.end());
  return out;
}

OrderTable::OrderTable(const NumericalSemigroup& s) : semigroup_(s), orders_{0} {}

void OrderTable::grow_to(Value x) {
  if (x > kMaxOrderArgument) {
    throw Error(Errc::TooLarge, "order requested for " + std::to_string(x) + ", beyond the tabulated range");
  }
  const auto& gens = semigroup_.generators();
  orders_.reserve(static_cast<std::size_t>(x) + 1);
  for (auto y = static_cast<Value>(orders_.size()); y <= x; ++y) {
    Value best = -1;
    if (semigroup_.contains(y)) {
      for (Value g : gens) {
        if (g > y) break;
        best = std::max(best, orders_[static_cast<std::size_t>(y - g)]);
      }
      // y > 0 in the semigroup always has some y - g in it.
      ++best;
    }
    orders_.push_back(best);
  }
}

std::optional<Value> OrderTable::try_order(Value x) {
  if (!semigroup_.contains(x)) return std::nullopt;
  if (x >= static_cast<Value>(orders_.size())) grow_to(x);
  return orders_[static_cast<std::size_t>(x)];
}

Value OrderTable::order(Value x) {
  auto o = try_order(x);
  if (!o) throw Error(Errc::NotInSemigroup, std::to_string(x) + " is not in the semigroup");
  return *o;
}

Value order(const NumericalSemigroup& s, Value x) {
  OrderTable table(s);
  return table.order(x);
}

std::vector<Value> length_set(const NumericalSemigroup& s, Value x) {
  if (!s.contains(x)) throw Error(Errc::NotInSemigroup, std::to_string(x) + " is not in the semigroup");
  std::set<Value> lengths;
  for (const auto& f : factorizations(s, x)) lengths.insert(f.total_order);
  return {lengths.begin(), lengths.end()};
}

}  // namespace apery
