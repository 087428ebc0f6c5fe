#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bitprobe/analysis.hpp"
#include "bitprobe/fixtures.hpp"
#include "bitprobe/generator.hpp"
#include "bitprobe/storability.hpp"

using namespace bitprobe;

TEST(Bounds, Examples) {
  EXPECT_DOUBLE_EQ(theorem_bound(8, 8), 1.0);
  EXPECT_NEAR(theorem_bound(1e6, 8) / std::pow(125000.0, 0.75), 1.0, 1e-12);
  EXPECT_NEAR(theorem_bound(1e6, 8), 6.65e3, 6.65);
  EXPECT_NEAR(theorem_bound(4000, 4), std::cbrt(1000.0 * 1000.0), 1e-9);
  EXPECT_FALSE(general_bound(100, 3));
  EXPECT_DOUBLE_EQ(*general_bound(1e6, 4), 1.0);
}

TEST(Bounds, Crossover) {
  std::vector<double> ms{std::ldexp(1.0, 64)};
  std::vector<std::uint64_t> ns{1, 3, 4, 8, 64, 1024};
  auto rows = compare_bounds(ms, ns);
  ASSERT_EQ(rows.size(), ns.size());
  EXPECT_TRUE(rows[0].crossover_flag);
  EXPECT_TRUE(rows[0].analytic_region);
  EXPECT_FALSE(rows[1].general_bound);
  EXPECT_TRUE(rows[2].crossover_flag);
  EXPECT_DOUBLE_EQ(*rows[2].general_bound, 1.0);
  EXPECT_NEAR(rows[2].restricted_bound, std::pow(std::ldexp(1.0, 62), 2.0 / 3.0), 1e6);
  EXPECT_FALSE(rows.back().crossover_flag);
  EXPECT_FALSE(rows.back().analytic_region);
}

TEST(Bounds, Monotone) {
  for (std::uint64_t n : {1, 4, 9, 17}) {
    double prev = 0;
    for (double m = 64; m < 1e12; m *= 3) {
      double v = theorem_bound(m, n);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(Bounds, Csv) {
  std::vector<double> ms{1000};
  std::vector<std::uint64_t> ns{2, 8};
  auto csv = bounds_to_csv(compare_bounds(ms, ns));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,n,restricted_bound,general_bound,crossover_flag,analytic_region");
  EXPECT_NE(csv.find("\n1000,2,"), std::string::npos);
}

TEST(Identity, UnitWeightsAtLevelOne) {
  Scheme g = fixtures::fig1c_good();
  std::vector<std::int64_t> ones(g.universe_size(), 1);
  for (BlockId blk = 0; blk < g.block_count(); ++blk) {
    auto sides = universe_sum_sides(g, {blk, 1}, 1, ones);
    auto expected = static_cast<std::int64_t>(peers(g, {blk, 1}, Table::B).size());
    EXPECT_EQ(sides.universe_sum, expected);
    EXPECT_EQ(sides.nested_sum, expected);
  }
}

TEST(Identity, Fig1cGoodLevelTwo) {
  Scheme g = fixtures::fig1c_good();
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> w(-1000, 1000);
  std::vector<std::int64_t> weights(g.universe_size());
  for (auto& x : weights) x = w(rng);
  EXPECT_TRUE(universe_sum_identity_check(g, 2, weights));
}

TEST(Identity, BadSchemeFailsPrecondition) {
  Scheme f = fixtures::fig1c();
  std::vector<std::int64_t> ones(f.universe_size(), 1);
  EXPECT_THROW(universe_sum_identity_check(f, 2, ones), PreconditionError);
  EXPECT_THROW(goodness_size_check(fixtures::dbl(), 1), PreconditionError);
  EXPECT_THROW(universe_sum_ratio(fixtures::toy3(), 1), PreconditionError);
}

TEST(Identity, NestedSumCountsRepeats) {
  // Uniform triples: a1 reaches a3 through both b2 and c2.
  std::vector<std::string> triples(6, "abc");
  Scheme t = fixtures::from_layout("abc", triples, triples);
  std::vector<std::int64_t> ones(t.universe_size(), 1);
  auto sides = universe_sum_sides(t, t.parse_element("a:1"), 2, ones);
  EXPECT_EQ(sides.universe_sum, 3);
  EXPECT_EQ(sides.nested_sum, 4);
}

TEST(Ratio, UniformClosedForm) {
  // Every set has g members and the C sets are transversals of the B sets, so
  // each e1 has g - 1 distinct level-1 members: the ratio is 2 (g - 1) / g.
  auto closed_form = [](double g) { return 2 * (g - 1) / g; };
  std::vector<std::string> pb(4, "ab|cd|ef"), pc(4, "ac|be|df");
  std::vector<std::string> tb(4, "abc|def|ghi"), tc(4, "adg|beh|cfi");
  Scheme pairs = fixtures::from_layout("abcdef", pb, pc);
  Scheme triples = fixtures::from_layout("abcdefghi", tb, tc);
  EXPECT_DOUBLE_EQ(universe_sum_ratio(pairs, 1), closed_form(2));
  EXPECT_DOUBLE_EQ(universe_sum_ratio(triples, 1), closed_form(3));
  long total = 0;
  for (BlockId blk = 0; blk < triples.block_count(); ++blk) {
    total += static_cast<long>(one_universe(triples, {blk, 1}, Table::B).size());
  }
  EXPECT_EQ(total, 18);
}

TEST(SizeCheck, HoldsOnGoodSchemes) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 30; ++round) {
    for (int t = 1; t <= 3; ++t) {
      auto s = random_good_scheme({6, 8, {6, 1}}, t, rng);
      ASSERT_TRUE(s);
      auto check = goodness_size_check(*s, t);
      EXPECT_TRUE(check.holds);
      EXPECT_GT(check.implied_ratio, 0);
      EXPECT_GT(universe_sum_ratio(*s, t), 0);
    }
  }
}

TEST(Synth, Trivial) {
  auto r = synth_min_space(0, 8, 2);
  ASSERT_TRUE(r.minimal_s);
  EXPECT_EQ(*r.minimal_s, 4);
  EXPECT_TRUE(r.exhaustive);
}

TEST(Synth, SingletonsAtM8) {
  auto r = synth_min_space(1, 8, 2);
  ASSERT_TRUE(r.minimal_s);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(validate(*r.witness).ok());
  int checked = 0;
  for (const auto& e : r.witness->universe()) {
    EXPECT_TRUE(can_store_bruteforce(*r.witness, {e}).storable());
    ++checked;
  }
  EXPECT_TRUE(can_store_bruteforce(*r.witness, {}).storable());
  EXPECT_EQ(checked + 1, 9);
}

TEST(Synth, Toy3StructureIsSkipped) {
  auto r = synth_min_space(2, 12, 4);
  ASSERT_TRUE(r.minimal_s);
  EXPECT_GT(*r.minimal_s, 3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_FALSE(*r.witness == fixtures::toy3());
  EXPECT_FALSE(stores_all_subsets(fixtures::toy3(), 2));
  EXPECT_TRUE(stores_all_subsets(fixtures::toy3(), 1));
}

TEST(Synth, BudgetMakesSearchInexhaustive) {
  auto r = synth_min_space(2, 12, 2, {5});
  EXPECT_FALSE(r.exhaustive);
}

TEST(Synth, Csv) {
  auto csv = synth_to_csv({synth_min_space(1, 4, 2)});
  EXPECT_EQ(csv, "n,m,b,minimal_s,witness_b,exhaustive,schemes_examined\n1,4,2,2,2,1,1\n");
}
