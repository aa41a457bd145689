#include "apery/ladder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace apery {

namespace {

std::vector<Landing> find_landings(const std::vector<Value>& values) {
  std::vector<Landing> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
    if (j > i) out.push_back({i, j});
    i = j + 1;
  }
  return out;
}

}  // namespace

Value HilbertSeries::numerator_at_one() const {
  Value sum = 0;
  for (Value c : numerator) sum = checked_add(sum, c);
  return sum;
}

LadderProfile ladder_profile(const AperyTable& table, std::size_t column) {
  if (column == 0 || column >= table.column_count()) {
    throw Error(Errc::ColumnOutOfRange, "column " + std::to_string(column) + " is outside 1.." +
                                            std::to_string(table.column_count() - 1));
  }
  LadderProfile prof;
  prof.column_key = table.entry(0, column);
  prof.values = table.column(column);
  prof.landings = find_landings(prof.values);
  // Rows 0 and 1 agree on every nonzero column, so L_0 always exists.
  if (prof.landings.empty()) throw std::logic_error("ladder without a landing: malformed Apéry table");

  prof.p = static_cast<Value>(prof.landings.size()) - 1;
  prof.d = static_cast<Value>(prof.landings.back().end);
  for (std::size_t j = 1; j < prof.landings.size(); ++j) {
    const auto prev_end = static_cast<Value>(prof.landings[j - 1].end);
    prof.b_list.push_back(prev_end);
    prof.c_list.push_back(static_cast<Value>(prof.landings[j].start) - prev_end);
  }
  return prof;
}

std::vector<LadderProfile> ladder_profiles(const AperyTable& table) {
  std::vector<LadderProfile> out;
  for (std::size_t i = 1; i < table.column_count(); ++i) out.push_back(ladder_profile(table, i));
  return out;
}

ConeDecomposition cone_decomposition(const AperyTable& table) {
  ConeDecomposition dec;
  dec.free_shifts.push_back(0);
  for (const auto& prof : ladder_profiles(table)) {
    dec.free_shifts.push_back(prof.d);
    for (std::size_t j = 0; j < prof.b_list.size(); ++j) dec.torsion.push_back({prof.b_list[j], prof.c_list[j]});
  }
  std::sort(dec.free_shifts.begin(), dec.free_shifts.end());
  std::sort(dec.torsion.begin(), dec.torsion.end());
  return dec;
}

ConeDecomposition cone_decomposition(const NumericalSemigroup& s) { return cone_decomposition(apery_table(s)); }

bool is_free(const NumericalSemigroup& s) { return cone_decomposition(s).is_free(); }

bool is_cohen_macaulay(const NumericalSemigroup& s) { return is_free(s); }

HilbertSeries hilbert_series(const ConeDecomposition& dec) {
  Value top = 0;
  for (Value d : dec.free_shifts) top = std::max(top, d);
  for (const auto& t : dec.torsion) top = std::max(top, checked_add(t.shift, t.length));

  HilbertSeries hs;
  hs.numerator.assign(static_cast<std::size_t>(top) + 1, 0);
  for (Value d : dec.free_shifts) ++hs.numerator[static_cast<std::size_t>(d)];
  // F/(a^c)(-b) has series (x^b - x^(b+c)) / (1 - x).
  for (const auto& t : dec.torsion) {
    ++hs.numerator[static_cast<std::size_t>(t.shift)];
    --hs.numerator[static_cast<std::size_t>(t.shift + t.length)];
  }
  while (hs.numerator.size() > 1 && hs.numerator.back() == 0) hs.numerator.pop_back();
  return hs;
}

Value hilbert_function_from_series(const HilbertSeries& hs, Value n) {
  if (n < 0) return 0;
  Value sum = 0;
  const auto upto = std::min<std::size_t>(static_cast<std::size_t>(n) + 1, hs.numerator.size());
  for (std::size_t k = 0; k < upto; ++k) sum = checked_add(sum, hs.numerator[k]);
  return sum;
}

}  // namespace apery
