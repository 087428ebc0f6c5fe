#include <gtest/gtest.h>

#include <random>

#include "bitprobe/fixtures.hpp"
#include "bitprobe/generator.hpp"
#include "bitprobe/transform.hpp"

using namespace bitprobe;

namespace {

// All subsets of `universe` with at most `n` elements.
template <class F>
void for_each_subset(const std::vector<Element>& universe, int n, F&& f) {
  Subset current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    f(current);
    if (static_cast<int>(current.size()) == n) return;
    for (std::size_t k = from; k < universe.size(); ++k) {
      current.push_back(universe[k]);
      self(self, k + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

bool parts_store(const Scheme& original, const Subset& s, const SplitScheme& split) {
  return can_store(split.prime, restrict_subset(original, s, split, 0)).storable() &&
         can_store(split.double_prime, restrict_subset(original, s, split, 1)).storable();
}

}  // namespace

TEST(Relabel, Permutation) {
  EXPECT_EQ(relabel_permutation(5, 1), (std::vector<int>{3, 4, 1, 2, 5}));
  EXPECT_EQ(relabel_permutation(8, 2), (std::vector<int>{4, 5, 6, 1, 2, 3, 7, 8}));
}

TEST(Partition, DblBadPart) {
  auto p = partition_universe(fixtures::dbl(), 1);
  EXPECT_EQ(p.bad, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.good, (std::vector<std::string>{"d", "e"}));
}

TEST(Partition, NeedsRoom) {
  EXPECT_THROW(partition_universe(fixtures::toy3(), 1), RangeError);
}

TEST(Split, PartsKeepSizeAndRelaxedValidity) {
  Scheme d = fixtures::dbl();
  auto split = split_tables(d, partition_universe(d, 1));
  EXPECT_EQ(split.prime.s(), d.s());
  EXPECT_EQ(split.prime.block_count(), 2u);
  EXPECT_EQ(split.double_prime.block_count(), 3u);
  EXPECT_TRUE(validate(split.prime, {true}).ok());
  EXPECT_TRUE(validate(split.double_prime, {true}).ok());
  for (int part = 0; part < 2; ++part) {
    const Scheme& sc = part == 0 ? split.prime : split.double_prime;
    for (Table t : {Table::B, Table::C}) {
      const auto& origins = split.origins(part, t);
      ASSERT_EQ(origins.size(), sc.table(t).size());
      for (std::size_t pos = 0; pos < origins.size(); ++pos) {
        EXPECT_EQ(origins[pos].table, t);
        EXPECT_EQ(d.table(t)[origins[pos].position].bit, sc.table(t)[pos].bit);
      }
    }
  }
}

TEST(Split, RejectsBadPartition) {
  Scheme d = fixtures::dbl();
  EXPECT_THROW(split_tables(d, {{"a", "b"}, {"c"}}), std::invalid_argument);
  EXPECT_THROW(split_tables(d, {{"a", "b", "c"}, {"c", "d"}}), std::invalid_argument);
}

TEST(Swap, IsAnInvolution) {
  Scheme d = fixtures::dbl();
  auto split = split_tables(d, partition_universe(d, 1));
  auto twice = swap_subtables(swap_subtables(split));
  EXPECT_EQ(twice.double_prime, split.double_prime);
  EXPECT_FALSE(twice.swapped);
}

TEST(Modify, DblPassesAudit) {
  auto result = modify(fixtures::dbl(), 1);
  EXPECT_TRUE(result.report.ok());
  EXPECT_EQ(result.report.n, 4);
  EXPECT_EQ(result.final.relabeling, relabel_permutation(8, 1));
}

TEST(Modify, FixturesAtEveryLevel) {
  for (const auto& f : {fixtures::fig1c(), fixtures::fig1c_good()}) {
    for (int i = 1; i <= 2; ++i) {
      auto result = modify(f, i);
      EXPECT_TRUE(result.report.ok()) << report_to_json(result.report);
      for (const auto& name : result.final.double_prime.blocks()) {
        EXPECT_FALSE(badness(result.final.double_prime, {*result.final.double_prime.find_block(name), 1}, Table::B, i));
      }
    }
  }
}

TEST(Modify, ConsistentRandomSchemes) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 30; ++round) {
    int i = round % 2 + 1;
    auto scheme = random_consistent_scheme({6, 2 * i + 3 + round % 3, {4, 2, 1}}, i, rng);
    ASSERT_TRUE(scheme);
    auto result = modify(*scheme, i);
    ASSERT_TRUE(result.report.ok()) << report_to_json(result.report);
  }
}

TEST(Modify, StorabilityAcrossStages) {
  Scheme d = fixtures::dbl();
  auto result = modify(d, 1);
  int reverse_gaps = 0;
  for_each_subset(d.universe(), 2, [&](const Subset& raw) {
    Subset s = normalize_subset(d, raw);
    bool whole = can_store(d, s).storable();
    bool split = parts_store(d, s, result.split);
    bool swapped = parts_store(d, s, result.swapped);
    bool relabeled = parts_store(d, s, result.final);
    if (whole) ASSERT_TRUE(split) << format_subset(d, s);
    if (split && !whole) ++reverse_gaps;
    ASSERT_EQ(split, swapped) << format_subset(d, s);
    ASSERT_EQ(swapped, relabeled) << format_subset(d, s);
  });
  RecordProperty("reverse_gaps", reverse_gaps);
}

TEST(Report, CsvShape) {
  auto result = modify(fixtures::dbl(), 1);
  auto csv = report_to_csv(result.report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,b0,c0,b1,c1,b2,c2,b3,c3");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}
