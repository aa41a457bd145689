#include "apery/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "apery/apery_table.hpp"
#include "apery/families.hpp"
#include "apery/ladder.hpp"

namespace apery {

namespace {

// Exhaustive coin-change membership on [0, bound].
std::vector<char> brute_membership(const std::vector<Value>& gens, Value bound) {
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (Value x = 1; x <= bound; ++x) {
    for (Value g : gens) {
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return member;
}

Value brute_frobenius(const std::vector<Value>& gens) {
  const Value a1 = *std::min_element(gens.begin(), gens.end());
  const Value ae = *std::max_element(gens.begin(), gens.end());
  if (a1 == 1) return -1;
  // F <= (a1 - 1)(ae - 1) - 1 < a1 * ae.
  const auto member = brute_membership(gens, a1 * ae);
  for (Value x = a1 * ae; x >= 0; --x) {
    if (!member[static_cast<std::size_t>(x)]) return x;
  }
  return -1;
}

// Minimal dynamic bitset with the one operation sumsets need.
class Bits {
 public:
  explicit Bits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t size() const { return nbits_; }

  // *this |= src << shift, truncated to size().
  void or_shifted(const Bits& src, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const std::size_t bs = shift % 64;
    for (std::size_t j = words_.size(); j-- > ws;) {
      std::uint64_t v = src.words_[j - ws] << bs;
      if (bs != 0 && j > ws) v |= src.words_[j - ws - 1] >> (64 - bs);
      words_[j] |= v;
    }
    if (nbits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

 private:
  std::size_t nbits_;
  std::vector<std::uint64_t> words_;
};

// kM intersected with [0, window], built as iterated sumsets M + ... + M.
Bits sumset_power(const std::vector<char>& member, Value k, Value window) {
  const auto n = static_cast<std::size_t>(window) + 1;
  Bits m(n);
  for (std::size_t x = 1; x < n; ++x) {
    if (member[x]) m.set(x);
  }
  if (k == 0) {
    Bits all = m;
    all.set(0);
    return all;
  }
  Bits current = m;
  for (Value step = 1; step < k; ++step) {
    Bits next(n);
    for (std::size_t y = 1; y < n; ++y) {
      if (m.test(y)) next.or_shifted(current, y);
    }
    current = std::move(next);
  }
  return current;
}

std::string render(const std::map<Value, Value>& m);
std::string render(const std::pair<Value, Value>& p);

template <class T>
std::string render(const T& v) {
  std::ostringstream os;
  if constexpr (std::is_same_v<T, bool>) {
    os << (v ? "true" : "false");
  } else if constexpr (std::is_arithmetic_v<T>) {
    os << v;
  } else {
    os << '[';
    bool first = true;
    for (const auto& x : v) {
      os << (first ? "" : ",") << render(x);
      first = false;
    }
    os << ']';
  }
  return os.str();
}

std::string render(const std::map<Value, Value>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, c] : m) {
    os << (first ? "" : ",") << k << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string render(const std::pair<Value, Value>& p) { return "(" + render(p.first) + "," + render(p.second) + ")"; }

template <class T>
void add_check(VerificationReport& report, std::string name, const T& expected, const T& actual) {
  report.checks.push_back({std::move(name), render(expected), render(actual), expected == actual});
}

std::string describe(const NumericalSemigroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    out += (i ? "," : "") + std::to_string(s.generators()[i]);
  }
  return out + ">";
}

void family_deltas(VerificationReport& report, const FamilyParams& params, const HilbertSeries& series,
                   const ConeDecomposition& dec) {
  const auto printed = published_hilbert_numerator(params);
  const auto& computed = series.numerator;
  const std::size_t len = std::max(printed.size(), computed.size());
  auto coeff = [](const std::vector<Value>& v, std::size_t k) { return k < v.size() ? v[k] : Value{0}; };

  if (coeff(printed, 0) != coeff(computed, 0)) {
    report.formula_deltas.push_back("Hilbert numerator constant term: the published formula " +
                                    published_hilbert_formula(params) + " omits the degree-0 term; computed constant term is " +
                                    std::to_string(coeff(computed, 0)) + " (the free summand F in degree 0)");
  }
  std::vector<Value> degrees, printed_at, computed_at;
  bool odd_shift = true;
  for (std::size_t k = 1; k < len; ++k) {
    if (coeff(printed, k) == coeff(computed, k)) continue;
    const auto kk = static_cast<Value>(k);
    degrees.push_back(kk);
    printed_at.push_back(coeff(printed, k));
    computed_at.push_back(coeff(computed, k));
    odd_shift = odd_shift && coeff(printed, k) == 2 * kk - 1 && coeff(computed, k) == 2 * kk + 1;
  }
  if (!degrees.empty()) {
    std::string note = "Hilbert numerator coefficients at degrees " + render(degrees) + ": published " +
                       render(printed_at) + ", computed order census " + render(computed_at);
    if (odd_shift) note += " (published coefficient 2k-1 vs order census 2k+1)";
    report.formula_deltas.push_back(note);
  }

  std::map<Value, Value> histogram;
  for (Value d : dec.free_shifts) {
    if (d != 0) ++histogram[d];
  }
  const auto published = published_free_summands(params);
  std::vector<std::string> diffs;
  std::set<Value> keys;
  for (const auto& [k, c] : published) keys.insert(k);
  for (const auto& [k, c] : histogram) keys.insert(k);
  for (Value k : keys) {
    const Value p = published.contains(k) ? published.at(k) : 0;
    const Value c = histogram.contains(k) ? histogram.at(k) : 0;
    if (p != c) diffs.push_back("degree " + std::to_string(k) + ": published " + std::to_string(p) + ", computed " + std::to_string(c));
  }
  if (!diffs.empty()) {
    std::string note = "free summand multiplicities: " + published_decomposition_formula(params) + " disagrees at ";
    for (std::size_t i = 0; i < diffs.size(); ++i) note += (i ? "; " : "") + diffs[i];
    report.formula_deltas.push_back(note);
  }
}

void family_checks(VerificationReport& report, const FamilyParams& params, const NumericalSemigroup& s,
                   const AperyTable& table, OrderTable& orders, const ConeDecomposition& dec) {
  const Value a1 = s.multiplicity();
  const auto closed = family_apery_closed_form(params);
  add_check(report, "closed-form Apery set = generic Apery set", s.apery().elements, closed.elements);
  add_check(report, "closed-form Apery set cardinality", a1, static_cast<Value>(closed.size()));

  std::vector<Value> generic_orders, closed_orders;
  for (const auto& [w, o] : family_orders_closed_form(params)) {
    closed_orders.push_back(o);
    generic_orders.push_back(orders.order(w));
  }
  add_check(report, "closed-form orders = generic orders", generic_orders, closed_orders);

  std::vector<Value> expected_shifted, actual_shifted;
  for (const auto& [w, o] : family_orders_closed_form(params)) {
    for (Value k = 0; k <= 3; ++k) {
      expected_shifted.push_back(o + k);
      actual_shifted.push_back(brute_order(s, w + k * a1));
    }
  }
  add_check(report, "ord(w + k*a1) = ord(w) + k for k = 0..3 (brute)", expected_shifted, actual_shifted);

  add_check(report, "closed-form table = generic table", table.rows(),
            family_table_closed_form(params).to_apery_table().rows());
  add_check(report, "closed-form order census = generic census", order_census(s).counts,
            order_census_closed_form(params).counts);
  add_check(report, "every Apery element has a unique factorization", true, verify_uniqueness(params));
  add_check(report, "reduction number = closed form", family_reduction_number(params), table.reduction_number());
  add_check(report, "tangent cone is free over the fiber cone", true, dec.is_free());
}

}  // namespace

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

AperySet brute_apery(const NumericalSemigroup& s, Value a) {
  const auto& gens = s.generators();
  const Value top = *std::max_element(gens.begin(), gens.end());
  if (a <= 0) throw Error(Errc::NotInSemigroup, std::to_string(a) + " is not a nonzero element");
  // Every class has a representative of the form sum of at most a - 1 copies
  // of generators, each <= top, so a * top bounds the scan.
  const Value bound = checked_mul(a, top);
  const auto member = brute_membership(gens, bound);
  if (!member[static_cast<std::size_t>(a)]) throw Error(Errc::NotInSemigroup, std::to_string(a) + " is not in the semigroup");

  AperySet out;
  out.modulus = a;
  out.by_residue.assign(static_cast<std::size_t>(a), -1);
  for (Value x = 0; x <= bound; ++x) {
    if (!member[static_cast<std::size_t>(x)]) continue;
    if (x >= a && member[static_cast<std::size_t>(x - a)]) continue;
    out.elements.push_back(x);
    out.by_residue[static_cast<std::size_t>(x % a)] = x;
  }
  return out;
}

Value brute_order(const NumericalSemigroup& s, Value x) {
  const auto& gens = s.generators();
  const std::size_t e = gens.size();
  Value best = -1;
  if (x >= 0) {
    // Odometer over coefficients of generators 2..e; the first coefficient is
    // whatever remains, if divisible.
    std::vector<Value> coef(e, 0);
    for (;;) {
      Value used = 0, count = 0;
      for (std::size_t i = 1; i < e; ++i) {
        used += coef[i] * gens[i];
        count += coef[i];
      }
      if (used <= x && (x - used) % gens[0] == 0) best = std::max(best, count + (x - used) / gens[0]);

      std::size_t i = 1;
      while (i < e) {
        ++coef[i];
        if (coef[i] * gens[i] <= x) break;
        coef[i] = 0;
        ++i;
      }
      if (i >= e) break;
    }
  }
  if (best < 0) throw Error(Errc::NotInSemigroup, std::to_string(x) + " is not in the semigroup");
  return best;
}

Value brute_hilbert_function(const NumericalSemigroup& s, Value n) {
  if (n < 0) return 0;
  const auto& gens = s.generators();
  const Value a1 = *std::min_element(gens.begin(), gens.end());
  // If x > n*a1 + F + 1 then y = x - n*a1 exceeds F + 1 >= 0, so y lies in M
  // and x = n*a1 + y lies in (n+1)M, hence in nM too. Counting inside the
  // window [0, n*a1 + F + 1] therefore misses nothing.
  const Value window = n * a1 + brute_frobenius(gens) + 1;
  const auto member = brute_membership(gens, window);
  const Bits lower = sumset_power(member, n, window);
  const Bits upper = sumset_power(member, n + 1, window);
  Value count = 0;
  for (std::size_t x = 0; x < lower.size(); ++x) {
    if (lower.test(x) && !upper.test(x)) ++count;
  }
  return count;
}

VerificationReport full_verify(const NumericalSemigroup& s) {
  for (Value g : s.generators()) {
    if (g > kMaxVerifyGenerator) {
      throw Error(Errc::TooLarge, "generator " + std::to_string(g) + " exceeds the verification bound " +
                                      std::to_string(kMaxVerifyGenerator));
    }
  }

  VerificationReport report;
  const Value a1 = s.multiplicity();
  const auto family = identify_family(s);
  report.subject = describe(s);
  if (family) report.subject += " = " + family_name(*family) + "(" + std::to_string(family_parameter(*family)) + ")";

  const AperySet brute = brute_apery(s, a1);
  add_check(report, "Apery set: residue relaxation = brute scan", brute.elements, s.apery().elements);
  add_check(report, "Apery set cardinality = multiplicity", a1, static_cast<Value>(s.apery().size()));
  if (!s.is_naturals()) add_check(report, "Frobenius number = brute", brute_frobenius(s.generators()), s.frobenius());

  OrderTable orders(s);
  std::vector<Value> brute_orders, fast_orders;
  for (Value w : brute.elements) {
    brute_orders.push_back(brute_order(s, w));
    fast_orders.push_back(orders.order(w));
  }
  add_check(report, "orders of Apery elements = brute enumeration", brute_orders, fast_orders);

  const AperyTable table = apery_table(s);
  const Value r = table.reduction_number();
  std::vector<Value> table_brute_orders, table_fast_orders;
  std::vector<std::pair<Value, Value>> not_minimal;
  for (std::size_t n = 0; n < table.row_count(); ++n) {
    const auto nn = static_cast<Value>(n);
    for (Value x : table.row(n)) {
      const Value bo = brute_order(s, x);
      table_brute_orders.push_back(bo);
      table_fast_orders.push_back(orders.order(x));
      // x in nM, and x - a1 not in nM.
      bool below = false;
      if (x - a1 >= 0) {
        try {
          below = brute_order(s, x - a1) >= nn;
        } catch (const Error&) {
          below = false;
        }
      }
      if (bo < nn || below) not_minimal.emplace_back(nn, x);
    }
  }
  add_check(report, "orders of table entries = brute enumeration", table_brute_orders, table_fast_orders);
  add_check(report, "each table row is the Apery set of nM", std::vector<std::pair<Value, Value>>{}, not_minimal);
  add_check(report, "table row 0 = Apery set", s.apery().elements,
            std::vector<Value>(table.row(0).begin(), table.row(0).end()));

  const ConeDecomposition dec = cone_decomposition(table);
  const HilbertSeries series = hilbert_series(dec);
  report.free = dec.is_free();
  report.cohen_macaulay = report.free;
  add_check(report, "free summand count = multiplicity", a1, static_cast<Value>(dec.free_shifts.size()));
  add_check(report, "Hilbert numerator at 1 = multiplicity", a1, series.numerator_at_one());

  if (dec.is_free()) {
    std::map<Value, Value> shift_histogram;
    for (Value d : dec.free_shifts) {
      if (d != 0) ++shift_histogram[d];
    }
    add_check(report, "free shift histogram = order census", order_census(s).counts, shift_histogram);
    std::vector<Value> ds, column_orders;
    for (const auto& prof : ladder_profiles(table)) {
      ds.push_back(prof.d);
      column_orders.push_back(orders.order(prof.column_key));
    }
    add_check(report, "d_i = order of column key", column_orders, ds);
  }

  std::vector<Value> from_brute, from_table, from_series;
  for (Value n = 0; n <= r + 3; ++n) {
    from_brute.push_back(brute_hilbert_function(s, n));
    from_table.push_back(hilbert_function(table, orders, n));
    from_series.push_back(hilbert_function_from_series(series, n));
  }
  add_check(report, "Hilbert function: table count = sumsets (n = 0..r+3)", from_brute, from_table);
  add_check(report, "Hilbert function: series = sumsets (n = 0..r+3)", from_brute, from_series);
  add_check(report, "H(n) = multiplicity for n = r..r+3", std::vector<Value>(4, a1),
            std::vector<Value>(from_brute.end() - 4, from_brute.end()));
  if (r >= 1 && !s.is_naturals()) {
    // (n+1)M = a1 + nM exactly when H(n) = a1, so H(r-1) < a1 certifies r.
    add_check(report, "reduction number is minimal (H(r-1) < a1)", true,
              from_brute[static_cast<std::size_t>(r - 1)] < a1);
  }

  if (family) {
    family_checks(report, *family, s, table, orders, dec);
    family_deltas(report, *family, series, dec);
  }
  return report;
}

}  // namespace apery
