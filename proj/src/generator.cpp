#include "bitprobe/generator.hpp"

#include <algorithm>
#include <numeric>

#include "bitprobe/adversary.hpp"
#include "bitprobe/universe.hpp"

namespace bitprobe {

std::string block_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  std::string digits = std::to_string(i);
  return "z" + std::string(3 - std::min<std::size_t>(3, digits.size()), '0') + digits;
}

namespace {

std::vector<std::vector<int>> random_partition(int s, const std::vector<double>& weights, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(s));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::discrete_distribution<int> pick(weights.begin(), weights.end());
  std::vector<std::vector<int>> parts;
  int pos = 0;
  while (pos < s) {
    int remaining = s - pos;
    int size = std::min(pick(rng) + 2, remaining);
    if (remaining - size == 1) ++size;
    parts.emplace_back(order.begin() + pos, order.begin() + pos + size);
    std::sort(parts.back().begin(), parts.back().end());
    pos += size;
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

Scheme random_scheme(const RandomSchemeParams& params, std::mt19937_64& rng) {
  if (params.s < 2 || params.b < 1) throw std::invalid_argument("random schemes need s >= 2 and b >= 1");
  if (params.size_weights.empty()) throw std::invalid_argument("empty set-size distribution");
  std::vector<std::string> names;
  for (int i = 0; i < params.s; ++i) names.push_back(block_label(i));
  std::vector<SetRecord> tables[2];
  for (int t = 0; t < 2; ++t) {
    for (int k = 1; k <= params.b; ++k) {
      for (const auto& part : random_partition(params.s, params.size_weights, rng)) {
        SetRecord rec;
        rec.table = static_cast<Table>(t);
        rec.bit = static_cast<int>(tables[t].size());
        rec.index = k;
        for (int x : part) rec.members.push_back({static_cast<BlockId>(x), k});
        tables[t].push_back(std::move(rec));
      }
    }
  }
  return Scheme(params.s * params.b, params.s, params.b, std::move(names), std::move(tables[0]),
                std::move(tables[1]));
}

std::optional<Scheme> random_good_scheme(const RandomSchemeParams& params, int t, std::mt19937_64& rng,
                                         int attempts) {
  for (int a = 0; a < attempts; ++a) {
    Scheme scheme = random_scheme(params, rng);
    bool good = true;
    for (BlockId blk = 0; blk < scheme.block_count() && good; ++blk) {
      good = !badness(scheme, {blk, 1}, Table::B, t).has_value();
    }
    if (good) return scheme;
  }
  return std::nullopt;
}

std::optional<Scheme> random_consistent_scheme(const RandomSchemeParams& params, int level, std::mt19937_64& rng,
                                               int attempts) {
  for (int a = 0; a < attempts; ++a) {
    Scheme scheme = random_scheme(params, rng);
    bool consistent = true;
    for (BlockId blk = 0; blk < scheme.block_count() && consistent; ++blk) {
      consistent = !two_table_contradiction(scheme, blk, level).has_value();
    }
    if (consistent) return scheme;
  }
  return std::nullopt;
}

}  // namespace bitprobe
