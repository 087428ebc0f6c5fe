#pragma once

// Adversarial (S, X) certificates. A node with one term in S and the other in
// X forbids routing its consequent to the node's table once its antecedent is
// routed there; chaining that along paths forbids whole blocks from a table.

#include <optional>
#include <string>
#include <vector>

#include "bitprobe/storability.hpp"
#include "bitprobe/universe.hpp"

namespace bitprobe {

enum class Forbidden { B, C, Both };
std::string_view to_string(Forbidden f);
Forbidden parse_forbidden(std::string_view text);

struct AdversaryPair {
  Subset s;  // sorted
  Subset x;  // sorted
  BlockId target_block = 0;
  Forbidden forbidden = Forbidden::B;
  std::vector<Path> support_paths;
};

enum class SeedChoice { AntecedentInS, AntecedentInX };

struct ForcingSets {
  Subset s;
  Subset x;
};

/// Splits every node of `path` between S and X. The first node follows
/// `seed`; later nodes follow it as well, which keeps S and X disjoint because
/// no element repeats along a path. Throws std::invalid_argument on a
/// malformed path.
ForcingSets path_forcing_sets(const Scheme& scheme, const Path& path, SeedChoice seed = SeedChoice::AntecedentInS);

class NotBadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// First path (depth-first, lexicographic) of `length` edges whose first node
/// lies in `table` with antecedent `e` and whose last node is `last`.
std::optional<Path> find_path(const Scheme& scheme, const Element& e, Table table, int length, const Node& last,
                              bool override_cap = false);

/// Certificate that the block of `e` cannot be routed to `table`, built from
/// the two paths ending at the badness witnesses. Throws NotBadError when `e`
/// is i-good.
AdversaryPair adversarial_pair(const Scheme& scheme, const Element& e, Table table, int level,
                               bool override_cap = false);

/// Combines a B-certificate for blk_1 and a C-certificate for blk_{i+2}.
/// Requires b >= 2i + 3 (RangeError otherwise). Empty when either element is
/// good, which is always the case on a correct scheme.
std::optional<AdversaryPair> two_table_contradiction(const Scheme& scheme, BlockId block, int level);

struct CertificateResult {
  bool pass = false;
  std::optional<Forced> forced;        // single-table certificates
  std::optional<ConflictTrace> trace;  // refutation, when the oracle finds one
  std::string detail;
};

/// Replays the certificate through the storability oracle. Throws
/// std::invalid_argument when S and X overlap.
CertificateResult certify(const Scheme& scheme, const AdversaryPair& pair);

std::string certificate_to_json(const Scheme& scheme, const AdversaryPair& pair, int indent = 2);
AdversaryPair certificate_from_json(const Scheme& scheme, std::string_view text);

}  // namespace bitprobe
