#pragma once

// Seeded random restricted schemes for property sweeps.

#include <optional>
#include <random>
#include <vector>

#include "bitprobe/model.hpp"

namespace bitprobe {

struct RandomSchemeParams {
  int s = 6;  // blocks
  int b = 6;  // block size
  // size_weights[k] is the relative weight of drawing a set of size k + 2.
  std::vector<double> size_weights{4.0, 2.0, 1.0};
};

/// Block names used for generated schemes: a..z, then z026, z027, ...
std::string block_label(int i);

/// Every (table, index) partition is drawn independently; the result always
/// validates. Throws std::invalid_argument for s < 2 or b < 1.
Scheme random_scheme(const RandomSchemeParams& params, std::mt19937_64& rng);

/// Rejection-samples until every index-1 element is t-good w.r.t. B, giving
/// up after `attempts` draws.
std::optional<Scheme> random_good_scheme(const RandomSchemeParams& params, int t, std::mt19937_64& rng,
                                         int attempts = 10000);

/// Rejection-samples until no block admits a two-table contradiction at
/// `level` (requires b >= 2 * level + 3).
std::optional<Scheme> random_consistent_scheme(const RandomSchemeParams& params, int level, std::mt19937_64& rng,
                                               int attempts = 10000);

}  // namespace bitprobe
