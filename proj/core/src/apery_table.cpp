#include "apery/apery_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery {

AperyTable::AperyTable(NumericalSemigroup semigroup, std::vector<std::vector<Value>> rows)
    : semigroup_(std::move(semigroup)), rows_(std::move(rows)) {
  const auto width = static_cast<std::size_t>(semigroup_.multiplicity());
  if (rows_.size() < 2) throw std::invalid_argument("an Apéry table needs at least rows 0 and 1");
  for (const auto& r : rows_) {
    if (r.size() != width) throw std::invalid_argument("Apéry table row width differs from the multiplicity");
  }
  if (!std::is_sorted(rows_.front().begin(), rows_.front().end())) {
    throw std::invalid_argument("Apéry table columns must be keyed by ascending row-0 values");
  }
}

std::vector<Value> AperyTable::column(std::size_t i) const {
  std::vector<Value> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.at(i));
  return out;
}

std::optional<std::size_t> AperyTable::column_of(Value key) const {
  const auto& keys = rows_.front();
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

Value AperyTable::extended_entry(Value n, std::size_t column) const {
  const Value r = reduction_number();
  if (n <= r) return entry(static_cast<std::size_t>(n), column);
  return checked_add(entry(static_cast<std::size_t>(r), column), checked_mul(n - r, semigroup_.multiplicity()));
}

bool n_fold_contains(OrderTable& orders, Value x, Value n) {
  // A factorization of length L >= n regroups into n nonzero parts, so
  // x in nM exactly when order(x) >= n.
  auto o = orders.try_order(x);
  return o && *o >= n;
}

bool n_fold_contains(const NumericalSemigroup& s, Value x, Value n) {
  OrderTable orders(s);
  return n_fold_contains(orders, x, n);
}

AperyTable apery_table(const NumericalSemigroup& s) {
  const Value a1 = s.multiplicity();
  OrderTable orders(s);

  std::vector<std::vector<Value>> rows;
  rows.push_back(s.apery().elements);
  std::vector<Value> row1 = rows.front();
  row1[0] = a1;
  rows.push_back(std::move(row1));

  // rows[n] -> rows[n + 1]: keep the entry if it already lies in (n+1)M,
  // otherwise add a1. Stop at the first n >= 1 where every column steps.
  for (Value n = 1;; ++n) {
    const auto& current = rows.back();
    std::vector<Value> next(current.size());
    bool all_step = true;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (n_fold_contains(orders, current[i], n + 1)) {
        next[i] = current[i];
        all_step = false;
      } else {
        next[i] = checked_add(current[i], a1);
      }
    }
    if (all_step) break;
    rows.push_back(std::move(next));
  }
  return AperyTable(s, std::move(rows));
}

Value reduction_number(const NumericalSemigroup& s) { return apery_table(s).reduction_number(); }

Value hilbert_function(const AperyTable& table, OrderTable& orders, Value n) {
  if (n < 0) return 0;
  // Within one residue class nM is an arithmetic progression starting at the
  // row-n entry, and (n+1)M is the same progression or its tail; so the class
  // contributes one element of order n exactly when the row-n entry has order n.
  Value count = 0;
  for (std::size_t i = 0; i < table.column_count(); ++i) {
    if (orders.order(table.extended_entry(n, i)) == n) ++count;
  }
  return count;
}

Value hilbert_function(const NumericalSemigroup& s, Value n) {
  const AperyTable table = apery_table(s);
  OrderTable orders(s);
  return hilbert_function(table, orders, n);
}

}  // namespace apery
