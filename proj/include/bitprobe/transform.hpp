#pragma once

// Scheme modification pipeline: split the universe by goodness of the index-1
// elements, exchange tables B and C for the bad part, then relabel the bad
// part's indices so its former index i+2 becomes index 1.

#include <string>
#include <vector>

#include "bitprobe/adversary.hpp"
#include "bitprobe/model.hpp"
#include "bitprobe/universe.hpp"

namespace bitprobe {

struct UniversePartition {
  std::vector<std::string> good;  // blocks whose index-1 element is i-good w.r.t. B
  std::vector<std::string> bad;
};

/// Requires b >= 2i + 3.
UniversePartition partition_universe(const Scheme& scheme, int level);

/// Where a record of a split part came from.
struct SetOrigin {
  Table table;           // table of the original record
  std::size_t position;  // position in the original table
};

struct SplitScheme {
  Scheme prime;         // blocks of the good part
  Scheme double_prime;  // blocks of the bad part
  // provenance[part][table][position], part 0 = prime, 1 = double_prime.
  std::vector<SetOrigin> provenance[2][2];
  bool swapped = false;         // tables of double_prime exchanged
  std::vector<int> relabeling;  // index map applied to double_prime, empty if none

  const std::vector<SetOrigin>& origins(int part, Table t) const { return provenance[part][static_cast<int>(t)]; }
};

/// Splits every set into its good-part and bad-part members. Parts keep the
/// table size s; sets of size one produced here are legal in relaxed
/// validation only.
SplitScheme split_tables(const Scheme& scheme, const UniversePartition& partition);

/// Exchanges tables B and C of the bad part. Routing of its blocks flips.
SplitScheme swap_subtables(const SplitScheme& split);

/// The transposition product k <-> k + i + 1 for 1 <= k <= i + 1.
std::vector<int> relabel_permutation(int b, int level);

/// Applies relabel_permutation to the bad part. Requires b >= 2i + 3.
SplitScheme relabel(const SplitScheme& split, int level);

/// Moves a subset of the original universe into one part of a split scheme,
/// following its relabeling and dropping elements of the other part.
Subset restrict_subset(const Scheme& original, const Subset& subset, const SplitScheme& split, int part);

/// Per-index set counts (B then C) of a (possibly split) structure.
struct StageSizes {
  std::vector<int> b;  // b[k - 1] = |B_k|
  std::vector<int> c;
};

struct GoodnessFailure {
  int part;  // 0 = prime, 1 = double_prime
  std::string block;
  BadnessCertificate certificate;
};

struct TransformReport {
  int level = 0;
  int n = 0;  // subset size the pipeline is sized for, 4i
  StageSizes stages[4];
  bool doubling_ok = false;       // |T_k^(1)| <= 2 |T_k^(0)|
  bool swap_conserved_ok = false; // |B_k^(2)| + |C_k^(2)| = |B_k^(1)| + |C_k^(1)|
  bool relabel_sum_ok = false;    // sums over k <= 2i + 2 agree between stages 2 and 3
  bool doubling_sum_ok = false;   // ... and are at most twice stage 0
  std::vector<GoodnessFailure> goodness_failures;
  long table_a_bits = 0;
  long table_b_bits = 0;
  long table_c_bits = 0;

  bool ok() const {
    return doubling_ok && swap_conserved_ok && relabel_sum_ok && doubling_sum_ok && goodness_failures.empty();
  }
};

StageSizes stage_sizes(const Scheme& scheme);
StageSizes stage_sizes(const SplitScheme& split);

struct ModifyResult {
  UniversePartition partition;
  SplitScheme split;    // after the first stage
  SplitScheme swapped;  // after the second
  SplitScheme final;    // after the third
  TransformReport report;
};

ModifyResult modify(const Scheme& scheme, int level);

/// One row per index: k,b0,c0,b1,c1,b2,c2,b3,c3.
std::string report_to_csv(const TransformReport& report);
std::string report_to_json(const TransformReport& report, int indent = 2);

}  // namespace bitprobe
