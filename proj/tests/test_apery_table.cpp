#include <gtest/gtest.h>

#include "apery/apery_table.hpp"

using namespace apery;

namespace {

std::vector<Value> column_of_key(const AperyTable& t, Value key) {
  auto idx = t.column_of(key);
  EXPECT_TRUE(idx.has_value()) << key;
  return idx ? t.column(*idx) : std::vector<Value>{};
}

}  // namespace

TEST(NFoldContains, Examples) {
  const auto g3 = new_semigroup({30, 35, 42, 47});
  EXPECT_TRUE(n_fold_contains(g3, 82, 2));
  EXPECT_FALSE(n_fold_contains(g3, 82, 3));
  EXPECT_TRUE(n_fold_contains(g3, 0, 0));
  EXPECT_FALSE(n_fold_contains(g3, 0, 1));
  EXPECT_FALSE(n_fold_contains(g3, 31, 0));
}

TEST(ReductionNumber, Examples) {
  EXPECT_EQ(reduction_number(new_semigroup({30, 35, 42, 47})), 5);
  EXPECT_EQ(reduction_number(new_semigroup({20, 21, 25, 26})), 4);
  EXPECT_EQ(reduction_number(new_semigroup({5, 6, 13})), 4);
  EXPECT_EQ(reduction_number(new_semigroup({2, 3})), 1);
  EXPECT_EQ(reduction_number(new_semigroup({1})), 1);
}

TEST(AperyTable, TwoThree) {
  const auto t = apery_table(new_semigroup({2, 3}));
  EXPECT_EQ(t.rows(), (std::vector<std::vector<Value>>{{0, 3}, {2, 3}}));
}

TEST(AperyTable, FiveSixThirteen) {
  const auto t = apery_table(new_semigroup({5, 6, 13}));
  ASSERT_EQ(t.row_count(), 5u);
  EXPECT_EQ(column_of_key(t, 0), (std::vector<Value>{0, 5, 10, 15, 20}));
  EXPECT_EQ(column_of_key(t, 6), (std::vector<Value>{6, 6, 11, 16, 21}));
  EXPECT_EQ(column_of_key(t, 12), (std::vector<Value>{12, 12, 12, 17, 22}));
  EXPECT_EQ(column_of_key(t, 13), (std::vector<Value>{13, 13, 18, 18, 23}));
  EXPECT_EQ(column_of_key(t, 19), (std::vector<Value>{19, 19, 19, 24, 24}));
}

TEST(AperyTable, Bresinsky3Columns) {
  const auto t = apery_table(new_semigroup({30, 35, 42, 47}));
  ASSERT_EQ(t.row_count(), 6u);
  ASSERT_EQ(t.column_count(), 30u);
  EXPECT_EQ(column_of_key(t, 0), (std::vector<Value>{0, 30, 60, 90, 120, 150}));
  EXPECT_EQ(column_of_key(t, 35), (std::vector<Value>{35, 35, 65, 95, 125, 155}));
  EXPECT_EQ(column_of_key(t, 42), (std::vector<Value>{42, 42, 72, 102, 132, 162}));
  EXPECT_EQ(column_of_key(t, 47), (std::vector<Value>{47, 47, 77, 107, 137, 167}));
  EXPECT_EQ(column_of_key(t, 82), (std::vector<Value>{82, 82, 82, 112, 142, 172}));
  EXPECT_EQ(column_of_key(t, 173), (std::vector<Value>{173, 173, 173, 173, 173, 203}));
}

TEST(AperyTable, Arslan4Columns) {
  const auto t = apery_table(new_semigroup({20, 21, 25, 26}));
  ASSERT_EQ(t.row_count(), 5u);
  ASSERT_EQ(t.column_count(), 20u);
  EXPECT_EQ(column_of_key(t, 21), (std::vector<Value>{21, 21, 41, 61, 81}));
  EXPECT_EQ(column_of_key(t, 47), (std::vector<Value>{47, 47, 47, 67, 87}));
  EXPECT_EQ(column_of_key(t, 89), (std::vector<Value>{89, 89, 89, 89, 89}));
}

TEST(AperyTable, StructuralInvariants) {
  for (auto gens : std::vector<std::vector<Value>>{{5, 6, 13}, {7, 9, 11, 20}, {11, 13, 17, 19, 23}, {4, 9}}) {
    const auto s = new_semigroup(gens);
    const auto t = apery_table(s);
    const Value a1 = s.multiplicity();
    EXPECT_EQ(std::vector<Value>(t.row(0).begin(), t.row(0).end()), s.apery().elements);
    OrderTable orders(s);
    for (std::size_t n = 0; n < t.row_count(); ++n) {
      EXPECT_EQ(t.entry(n, 0), static_cast<Value>(n) * a1);
      for (std::size_t i = 0; i < t.column_count(); ++i) {
        const Value x = t.entry(n, i);
        EXPECT_EQ(x % a1, t.entry(0, i) % a1);
        EXPECT_TRUE(n_fold_contains(orders, x, static_cast<Value>(n)));
        EXPECT_FALSE(n_fold_contains(orders, x - a1, static_cast<Value>(n)));
        if (n + 1 < t.row_count()) {
          const Value step = t.entry(n + 1, i) - x;
          EXPECT_TRUE(step == 0 || step == a1);
        }
      }
    }
    // r is the first row from which every column steps, and not earlier.
    const auto r = static_cast<std::size_t>(t.reduction_number());
    bool all_step_before = true;
    for (std::size_t i = 0; i < t.column_count(); ++i) {
      if (t.entry(r, i) == t.entry(r - 1, i)) all_step_before = false;
      EXPECT_FALSE(n_fold_contains(orders, t.entry(r, i), static_cast<Value>(r) + 1));
    }
    EXPECT_FALSE(all_step_before && r > 1);
  }
}

TEST(AperyTable, ExtendedEntriesContinueByMultiplicity) {
  const auto t = apery_table(new_semigroup({5, 6, 13}));
  EXPECT_EQ(t.extended_entry(4, 4), 24);
  EXPECT_EQ(t.extended_entry(7, 4), 39);
  EXPECT_EQ(t.extended_entry(2, 3), 18);
}

TEST(AperyTable, RejectsMalformedRows) {
  const auto s = new_semigroup({2, 3});
  EXPECT_THROW(AperyTable(s, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(AperyTable(s, {{0, 3, 4}, {2, 3, 4}}), std::invalid_argument);
  EXPECT_THROW(AperyTable(s, {{3, 0}, {3, 2}}), std::invalid_argument);
}

TEST(HilbertFunction, Examples) {
  const auto s = new_semigroup({5, 6, 13});
  EXPECT_EQ(hilbert_function(new_semigroup({30, 35, 42, 47}), 0), 1);
  EXPECT_EQ(hilbert_function(s, 1), 3);
  EXPECT_EQ(hilbert_function(s, 3), 4);
  const std::vector<Value> expected{1, 3, 4, 4, 5, 5, 5, 5};
  for (Value n = 0; n < 8; ++n) EXPECT_EQ(hilbert_function(s, n), expected[n]) << n;
}

TEST(HilbertFunction, StabilizesAtMultiplicity) {
  for (auto gens : std::vector<std::vector<Value>>{{12, 15, 20, 23}, {6, 7, 9, 10}, {7, 9, 11, 20}}) {
    const auto s = new_semigroup(gens);
    const auto t = apery_table(s);
    OrderTable orders(s);
    for (Value n = t.reduction_number(); n <= t.reduction_number() + 5; ++n) {
      EXPECT_EQ(hilbert_function(t, orders, n), s.multiplicity());
    }
  }
}
