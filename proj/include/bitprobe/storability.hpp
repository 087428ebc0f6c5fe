#pragma once

// Query simulation and the storability decision procedure.
//
// Storing a subset S amounts to choosing, per block, whether its elements are
// answered from table B (A-bit 0) or table C (A-bit 1). Once that choice is
// fixed the set bits follow: a set bit is 1 iff some member of S is routed to
// it. The choice is admissible iff no set routes both a member of S and a
// non-member to itself, which is a 2-SAT instance over the blocks.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bitprobe/model.hpp"

namespace bitprobe {

using Subset = std::vector<Element>;

/// Sorts and deduplicates; throws std::out_of_range for foreign elements.
Subset normalize_subset(const Scheme& scheme, Subset subset);
Subset parse_subset(const Scheme& scheme, std::string_view text);
std::string format_subset(const Scheme& scheme, const Subset& subset);

struct Assignment {
  std::vector<int> a_bits;  // per block, 0 = table B, 1 = table C
  std::vector<int> b_bits;  // per bit of table B, size bit_count(B)
  std::vector<int> c_bits;  // per bit of table C, size bit_count(C)

  static Assignment zeros(const Scheme& scheme);
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// One implication step of a refutation: routing `from` to `from_table`
/// forces `to` into `to_table`, because both elements share `set` while
/// exactly one of them belongs to S.
struct ForcingStep {
  BlockId from = 0;
  Table from_table = Table::B;
  BlockId to = 0;
  Table to_table = Table::B;
  SetRef set;
  Element member;      // element of S in the shared set
  Element non_member;  // element outside S in the shared set
  bool pinned = false; // the step came from an external pin, not a set
};

struct ConflictTrace {
  // Closed chain of implications: it starts and ends at `block` and visits
  // both of its tables.
  BlockId block = 0;
  std::vector<ForcingStep> steps;
};

struct StorabilityResult {
  std::variant<Assignment, ConflictTrace> outcome;

  bool storable() const { return std::holds_alternative<Assignment>(outcome); }
  const Assignment& assignment() const { return std::get<Assignment>(outcome); }
  const ConflictTrace& trace() const { return std::get<ConflictTrace>(outcome); }
};

struct QueryViolation {
  Element element;
  bool answered = false;
  bool expected = false;
};

bool answer_query(const Scheme& scheme, const Assignment& asg, const Element& e);

std::vector<QueryViolation> verify_assignment(const Scheme& scheme, const Assignment& asg, const Subset& subset);

/// Set bits induced by a block routing (1 iff a routed member is in S).
Assignment derive_assignment(const Scheme& scheme, const std::vector<int>& a_bits, const Subset& subset);

struct Pin {
  BlockId block;
  Table table;
};

StorabilityResult can_store(const Scheme& scheme, const Subset& subset, std::optional<Pin> pin = std::nullopt);

/// Tries all 2^blocks routings. Throws std::invalid_argument for more than
/// `kBruteforceMaxBlocks` blocks.
inline constexpr std::size_t kBruteforceMaxBlocks = 20;
StorabilityResult can_store_bruteforce(const Scheme& scheme, const Subset& subset);

enum class Forced { ForcedB, ForcedC, Free, Unstorable };
std::string_view to_string(Forced f);

Forced forced_table(const Scheme& scheme, const Subset& subset, BlockId block);

std::string describe(const Scheme& scheme, const ForcingStep& step);

}  // namespace bitprobe
