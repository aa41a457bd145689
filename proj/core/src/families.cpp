#include "apery/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace apery {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void add_block(std::vector<ClosedFormBlock>& out, std::string caption) { out.push_back({std::move(caption), {}, {}}); }

void push(std::vector<ClosedFormBlock>& out, Value element, Value order) {
  out.back().elements.push_back(element);
  out.back().orders.push_back(order);
}

// Shared shape of both closed forms. With (u, v, w) the three non-multiplicity
// generators and N the top index of the first block:
//   block 1: i*u,       i = 1..N
//   block 2: i*v,       i = 1..N-1
//   block 3: i*w,       i = 1..N-1
//   block 4: i*u + j*w, i = 1..N-1, j = 1..N-i
//   block 5: i*v + j*w, i = 1..N-2, j = 1..N-1-i
std::vector<ClosedFormBlock> five_blocks(char letter, Value u, Value v, Value w, Value top) {
  const std::string l(1, letter);
  std::vector<ClosedFormBlock> out;
  add_block(out, l + "0");
  push(out, 0, 0);
  add_block(out, l + "1");
  for (Value i = 1; i <= top; ++i) push(out, checked_mul(i, u), i);
  add_block(out, l + "2");
  for (Value i = 1; i <= top - 1; ++i) push(out, checked_mul(i, v), i);
  add_block(out, l + "3");
  for (Value i = 1; i <= top - 1; ++i) push(out, checked_mul(i, w), i);
  for (Value i = 1; i <= top - 1; ++i) {
    add_block(out, l + "4_" + std::to_string(i));
    for (Value j = 1; j <= top - i; ++j) push(out, checked_add(checked_mul(i, u), checked_mul(j, w)), i + j);
  }
  for (Value i = 1; i <= top - 2; ++i) {
    add_block(out, l + "5_" + std::to_string(i));
    for (Value j = 1; j <= top - 1 - i; ++j) push(out, checked_add(checked_mul(i, v), checked_mul(j, w)), i + j);
  }
  return out;
}

Value multiplicity_of(const FamilyParams& params) {
  return std::visit(Overloaded{[](const BresinskyParams& p) { return p.m0; }, [](const ArslanParams& p) { return p.n1; }},
                    params);
}

std::string join_poly(const std::vector<Value>& coeffs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace

BresinskyParams BresinskyParams::make(Value h) {
  if (h < 2) throw Error(Errc::ParamTooSmall, "Bresinsky parameter h must be at least 2, got " + std::to_string(h));
  const Value two_h = checked_mul(2, h);
  BresinskyParams p;
  p.h = h;
  p.m0 = checked_mul(two_h, two_h - 1);
  p.m1 = checked_mul(two_h + 1, two_h - 1);
  p.m2 = checked_mul(two_h, checked_add(two_h, 1));
  p.m3 = checked_add(p.m2, two_h - 1);
  return p;
}

ArslanParams ArslanParams::make(Value m) {
  if (m < 2) throw Error(Errc::ParamTooSmall, "Arslan parameter m must be at least 2, got " + std::to_string(m));
  const Value m_plus_1 = checked_add(m, 1);
  ArslanParams p;
  p.m = m;
  p.n1 = checked_mul(m, m_plus_1);
  p.n2 = checked_add(p.n1, 1);
  p.n3 = checked_mul(m_plus_1, m_plus_1);
  p.n4 = checked_add(p.n3, 1);
  return p;
}

std::string family_name(const FamilyParams& params) {
  return std::holds_alternative<BresinskyParams>(params) ? "bresinsky" : "arslan";
}

Value family_parameter(const FamilyParams& params) {
  return std::visit(Overloaded{[](const BresinskyParams& p) { return p.h; }, [](const ArslanParams& p) { return p.m; }},
                    params);
}

std::vector<Value> family_generators(const FamilyParams& params) {
  return std::visit(Overloaded{[](const BresinskyParams& p) { return std::vector<Value>{p.m0, p.m1, p.m2, p.m3}; },
                               [](const ArslanParams& p) { return std::vector<Value>{p.n1, p.n2, p.n3, p.n4}; }},
                    params);
}

NumericalSemigroup family_semigroup(const FamilyParams& params) {
  const auto gens = family_generators(params);
  auto s = new_semigroup(gens);
  if (s.generators() != gens) throw std::logic_error("family generators are not minimal");
  return s;
}

NumericalSemigroup bresinsky(Value h) { return family_semigroup(BresinskyParams::make(h)); }

NumericalSemigroup arslan(Value m) { return family_semigroup(ArslanParams::make(m)); }

std::optional<FamilyParams> identify_family(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 4) return std::nullopt;
  const Value a1 = s.multiplicity();
  for (Value h = 2; 2 * h * (2 * h - 1) <= a1; ++h) {
    auto p = BresinskyParams::make(h);
    if (family_generators(p) == s.generators()) return p;
  }
  for (Value m = 2; m * (m + 1) <= a1; ++m) {
    auto p = ArslanParams::make(m);
    if (family_generators(p) == s.generators()) return p;
  }
  return std::nullopt;
}

std::vector<ClosedFormBlock> closed_form_blocks(const FamilyParams& params) {
  return std::visit(Overloaded{[](const BresinskyParams& p) { return five_blocks('T', p.m1, p.m2, p.m3, 2 * p.h - 1); },
                               [](const ArslanParams& p) { return five_blocks('A', p.n2, p.n3, p.n4, p.m); }},
                    params);
}

AperySet family_apery_closed_form(const FamilyParams& params) {
  const Value a = multiplicity_of(params);
  AperySet out;
  out.modulus = a;
  out.by_residue.assign(static_cast<std::size_t>(a), -1);
  for (const auto& block : closed_form_blocks(params)) {
    for (Value w : block.elements) {
      out.elements.push_back(w);
      out.by_residue[static_cast<std::size_t>(w % a)] = w;
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

AperySet bresinsky_apery_closed_form(Value h) { return family_apery_closed_form(BresinskyParams::make(h)); }

AperySet arslan_apery_closed_form(Value m) { return family_apery_closed_form(ArslanParams::make(m)); }

std::map<Value, Value> family_orders_closed_form(const FamilyParams& params) {
  std::map<Value, Value> out;
  for (const auto& block : closed_form_blocks(params)) {
    for (std::size_t k = 0; k < block.elements.size(); ++k) out[block.elements[k]] = block.orders[k];
  }
  return out;
}

Value family_reduction_number(const FamilyParams& params) {
  return std::visit(
      Overloaded{[](const BresinskyParams& p) { return 2 * p.h - 1; }, [](const ArslanParams& p) { return p.m; }},
      params);
}

std::vector<Value> FamilyTable::column(std::size_t i) const {
  std::vector<Value> out;
  for (const auto& r : rows) out.push_back(r.at(i));
  return out;
}

AperyTable FamilyTable::to_apery_table() const {
  std::vector<std::vector<Value>> sorted(rows.size(), std::vector<Value>(ascending_index.size()));
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t i = 0; i < ascending_index.size(); ++i) sorted[n][ascending_index[i]] = rows[n][i];
  }
  return AperyTable(family_semigroup(params), std::move(sorted));
}

FamilyTable family_table_closed_form(const FamilyParams& params) {
  const Value a = multiplicity_of(params);
  const Value r = family_reduction_number(params);

  FamilyTable t;
  t.params = params;
  t.rows.assign(static_cast<std::size_t>(r) + 1, {});
  std::vector<Value> keys;
  for (const auto& block : closed_form_blocks(params)) {
    t.blocks.push_back({block.caption, keys.size(), block.elements.size()});
    for (std::size_t k = 0; k < block.elements.size(); ++k) {
      const Value w = block.elements[k];
      const Value ord = block.orders[k];
      keys.push_back(w);
      for (Value n = 0; n <= r; ++n) {
        const Value entry = n <= ord ? w : checked_add(w, checked_mul(n - ord, a));
        t.rows[static_cast<std::size_t>(n)].push_back(entry);
      }
    }
  }

  std::vector<std::size_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  t.ascending_index.assign(keys.size(), 0);
  for (std::size_t pos = 0; pos < perm.size(); ++pos) t.ascending_index[perm[pos]] = pos;
  return t;
}

Value OrderCensus::total() const {
  Value sum = 0;
  for (const auto& [k, c] : counts) sum += c;
  return sum;
}

OrderCensus order_census_closed_form(const FamilyParams& params) {
  OrderCensus out;
  std::visit(Overloaded{[&](const BresinskyParams& p) {
                          for (Value k = 1; k <= 2 * p.h - 2; ++k) out.counts[k] = 2 * k + 1;
                          out.counts[2 * p.h - 1] = 2 * p.h - 1;
                        },
                        [&](const ArslanParams& p) {
                          for (Value k = 1; k <= p.m - 1; ++k) out.counts[k] = 2 * k + 1;
                          out.counts[p.m] = p.m;
                        }},
             params);
  return out;
}

OrderCensus order_census(const NumericalSemigroup& s) {
  OrderCensus out;
  OrderTable orders(s);
  for (Value w : s.apery().elements) {
    if (w != 0) ++out.counts[orders.order(w)];
  }
  return out;
}

bool verify_uniqueness(const FamilyParams& params) {
  const auto s = family_semigroup(params);
  for (Value w : family_apery_closed_form(params).elements) {
    if (factorizations(s, w).size() != 1) return false;
  }
  return true;
}

bool verify_uniqueness(const NumericalSemigroup& s) {
  auto params = identify_family(s);
  if (!params) throw Error(Errc::NotAFamilyMember, "semigroup is neither a Bresinsky nor an Arslan semigroup");
  return verify_uniqueness(*params);
}

std::vector<Value> published_hilbert_numerator(const FamilyParams& params) {
  std::vector<Value> out{0};
  std::visit(Overloaded{[&](const BresinskyParams& p) {
                          for (Value k = 1; k <= 2 * p.h - 2; ++k) out.push_back(2 * k + 1);
                          out.push_back(2 * p.h - 1);
                        },
                        [&](const ArslanParams& p) {
                          for (Value k = 1; k <= p.m - 1; ++k) out.push_back(2 * k - 1);
                          out.push_back(p.m);
                        }},
             params);
  return out;
}

std::string published_hilbert_formula(const FamilyParams& params) {
  const std::string body = std::holds_alternative<BresinskyParams>(params)
                               ? "(sum_{k=1}^{2h-2} (2k+1) x^k + (2h-1) x^{2h-1}) / (1-x)"
                               : "(sum_{k=1}^{m-1} (2k-1) x^k + m x^m) / (1-x)";
  return body + " = " + join_poly(published_hilbert_numerator(params)) + " / (1-x)";
}

std::map<Value, Value> published_free_summands(const FamilyParams& params) {
  std::map<Value, Value> out;
  std::visit(Overloaded{[&](const BresinskyParams& p) {
                          for (Value k = 1; k <= 2 * p.h - 2; ++k) out[k] = 2 * k + 1;
                          out[-(2 * p.h - 1)] = 2 * p.h - 1;
                        },
                        [&](const ArslanParams& p) {
                          for (Value k = 1; k <= p.m - 1; ++k) out[k] = 2 * p.m - 1;
                          out[p.m] = p.m;
                        }},
             params);
  return out;
}

std::string published_decomposition_formula(const FamilyParams& params) {
  return std::holds_alternative<BresinskyParams>(params)
             ? "G = (+)_{k=1}^{2h-2} (F(-k))^{2k+1} (+) (F(2h-1))^{2h-1}"
             : "G = (+)_{k=1}^{m-1} (F(-k))^{2m-1} (+) (F(-m))^{m}";
}

}  // namespace apery
