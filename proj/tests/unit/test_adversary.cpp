#include <gtest/gtest.h>

#include <random>

#include "bitprobe/adversary.hpp"
#include "bitprobe/fixtures.hpp"
#include "bitprobe/generator.hpp"

using namespace bitprobe;

namespace {

bool disjoint(const Subset& a, const Subset& b) {
  for (const auto& e : a) {
    if (std::binary_search(b.begin(), b.end(), e)) return false;
  }
  return true;
}

}  // namespace

TEST(Forcing, AntecedentsInS) {
  Scheme f = fixtures::fig1c();
  Node start{Table::B, f.parse_element("a:1"), f.parse_element("b:1")};
  auto paths = enumerate_paths(f, start, 2);
  ASSERT_FALSE(paths.empty());
  auto sets = path_forcing_sets(f, paths[0]);
  for (const auto& n : paths[0].nodes) {
    EXPECT_TRUE(std::binary_search(sets.s.begin(), sets.s.end(), n.antecedent));
    EXPECT_TRUE(std::binary_search(sets.x.begin(), sets.x.end(), n.consequent));
  }
  auto flipped = path_forcing_sets(f, paths[0], SeedChoice::AntecedentInX);
  EXPECT_EQ(flipped.s, sets.x);
  EXPECT_EQ(flipped.x, sets.s);
}

TEST(Forcing, PathForcesEndBlockAway) {
  // Routing a to B with the antecedents in S and consequents in X drives the
  // last consequent's block out of the last node's table.
  Scheme f = fixtures::fig1c();
  Node start{Table::B, f.parse_element("a:1"), f.parse_element("b:1")};
  for (const auto& p : enumerate_paths(f, start, 3)) {
    auto sets = path_forcing_sets(f, p);
    auto pinned = can_store(f, sets.s, Pin{0, Table::B});
    if (!pinned.storable()) continue;
    const auto& last = p.last();
    EXPECT_NE(pinned.assignment().a_bits[last.consequent.block], static_cast<int>(last.table));
  }
}

TEST(Adversary, Toy3) {
  Scheme t = fixtures::toy3();
  auto pair = adversarial_pair(t, t.parse_element("a:1"), Table::B, 1);
  EXPECT_EQ(format_subset(t, pair.s), "a:1,b:2");
  EXPECT_EQ(format_subset(t, pair.x), "b:1,c:1,c:2");
  EXPECT_EQ(pair.forbidden, Forbidden::B);
  EXPECT_EQ(pair.support_paths.size(), 2u);
  auto res = certify(t, pair);
  EXPECT_TRUE(res.pass) << res.detail;
}

TEST(Adversary, Fig1cLevelTwo) {
  Scheme f = fixtures::fig1c();
  auto pair = adversarial_pair(f, f.parse_element("a:1"), Table::B, 2);
  EXPECT_LE(pair.s.size(), 4u);
  EXPECT_LE(pair.x.size(), 5u);
  EXPECT_TRUE(disjoint(pair.s, pair.x));
  EXPECT_TRUE(certify(f, pair).pass);
}

TEST(Adversary, GoodElementThrows) {
  Scheme f = fixtures::fig1c();
  EXPECT_THROW(adversarial_pair(f, f.parse_element("a:1"), Table::B, 1), NotBadError);
}

TEST(Adversary, RandomBadElementsCertify) {
  std::mt19937_64 rng(8);
  int produced = 0;
  for (int round = 0; round < 40; ++round) {
    Scheme s = random_scheme({6, 8, {4, 2, 1}}, rng);
    for (const auto& e : s.universe()) {
      for (Table t : {Table::B, Table::C}) {
        for (int i = 1; i <= 3; ++i) {
          if (!badness(s, e, t, i)) continue;
          auto pair = adversarial_pair(s, e, t, i);
          ++produced;
          ASSERT_LE(pair.s.size(), static_cast<std::size_t>(2 * i));
          ASSERT_LE(pair.x.size(), static_cast<std::size_t>(2 * i + 1));
          ASSERT_TRUE(disjoint(pair.s, pair.x));
          for (const auto& p : pair.support_paths) ASSERT_TRUE(is_path(s, p));
          auto res = certify(s, pair);
          ASSERT_TRUE(res.pass) << res.detail;
        }
      }
    }
  }
  EXPECT_GT(produced, 100);
}

TEST(Contradiction, Dbl) {
  Scheme d = fixtures::dbl();
  auto pair = two_table_contradiction(d, *d.find_block("a"), 1);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->forbidden, Forbidden::Both);
  EXPECT_LE(pair->s.size(), 4u);
  EXPECT_FALSE(can_store(d, pair->s).storable());
  EXPECT_TRUE(certify(d, *pair).pass);
  EXPECT_FALSE(two_table_contradiction(d, *d.find_block("d"), 1));
}

TEST(Contradiction, NoneOnFig1c) {
  for (const auto& f : {fixtures::fig1c(), fixtures::fig1c_good()}) {
    for (int i = 1; i <= 2; ++i) {
      for (BlockId blk = 0; blk < f.block_count(); ++blk) EXPECT_FALSE(two_table_contradiction(f, blk, i));
    }
  }
}

TEST(Contradiction, NeedsRoom) {
  Scheme t = fixtures::toy3();
  EXPECT_THROW(two_table_contradiction(t, 0, 1), RangeError);
  Scheme f = fixtures::fig1c();
  EXPECT_THROW(two_table_contradiction(f, 0, 3), RangeError);
  EXPECT_THROW(two_table_contradiction(f, 0, 0), RangeError);
}

TEST(Certificate, JsonRoundTrip) {
  Scheme d = fixtures::dbl();
  auto pair = *two_table_contradiction(d, 0, 1);
  auto back = certificate_from_json(d, certificate_to_json(d, pair));
  EXPECT_EQ(back.s, pair.s);
  EXPECT_EQ(back.x, pair.x);
  EXPECT_EQ(back.target_block, pair.target_block);
  EXPECT_EQ(back.forbidden, pair.forbidden);
  EXPECT_EQ(back.support_paths, pair.support_paths);
}

TEST(Certificate, RejectsOverlapAndWrongClaims) {
  Scheme t = fixtures::toy3();
  auto pair = adversarial_pair(t, t.parse_element("a:1"), Table::B, 1);
  auto overlapping = pair;
  overlapping.x.push_back(pair.s[0]);
  std::sort(overlapping.x.begin(), overlapping.x.end());
  EXPECT_THROW(certify(t, overlapping), std::invalid_argument);

  // Claiming the block cannot use C is false: {a1} alone lets it go anywhere.
  AdversaryPair bogus;
  bogus.s = parse_subset(t, "a:1");
  bogus.target_block = 0;
  bogus.forbidden = Forbidden::C;
  EXPECT_FALSE(certify(t, bogus).pass);
}
