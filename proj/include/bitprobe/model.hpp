#pragma once

// Domain model for restricted two-adaptive bitprobe schemes.
//
// A scheme stores subsets of a universe of m = s * b elements. The universe is
// cut into s blocks of b elements each; every block owns one bit of table A.
// Tables B and C partition the elements of each index into sets, one bit per
// set. Blocks are kept in lexicographic order, so a BlockId compares the same
// way its name does.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bitprobe {

enum class Table : std::uint8_t { B = 0, C = 1 };

inline constexpr Table other(Table t) { return t == Table::B ? Table::C : Table::B; }
std::string_view to_string(Table t);
Table parse_table(std::string_view text);

using BlockId = std::uint32_t;

struct Element {
  BlockId block = 0;
  int index = 1;

  friend auto operator<=>(const Element&, const Element&) = default;
};

struct SetRecord {
  Table table = Table::B;
  int bit = 0;
  int index = 1;
  std::vector<Element> members;

  friend bool operator==(const SetRecord&, const SetRecord&) = default;
};

/// Identifies a set by table and position inside that table's record list.
struct SetRef {
  Table table = Table::B;
  std::size_t position = 0;

  friend auto operator<=>(const SetRef&, const SetRef&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& locus, const std::string& what)
      : std::runtime_error(locus + ": " + what), locus_(locus) {}
  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

class Scheme {
 public:
  Scheme() = default;

  /// Builds a scheme from raw parts. Blocks are sorted and element block ids
  /// inside the records refer to positions of `block_names` as given; they
  /// are remapped to the sorted order. Throws std::invalid_argument on
  /// duplicate blocks or member/index values that cannot be addressed.
  Scheme(int m, int s, int b, std::vector<std::string> block_names, std::vector<SetRecord> table_b,
         std::vector<SetRecord> table_c);

  int m() const { return m_; }
  int s() const { return s_; }
  int b() const { return b_; }
  std::size_t block_count() const { return blocks_.size(); }

  const std::vector<std::string>& blocks() const { return blocks_; }
  const std::string& block_name(BlockId id) const { return blocks_.at(id); }
  std::optional<BlockId> find_block(std::string_view name) const;

  const std::vector<SetRecord>& table(Table t) const { return t == Table::B ? table_b_ : table_c_; }
  const SetRecord& set(SetRef ref) const { return table(ref.table).at(ref.position); }

  bool contains(const Element& e) const {
    return e.block < blocks_.size() && e.index >= 1 && e.index <= b_;
  }
  /// Linear id in [0, block_count * b).
  std::size_t element_id(const Element& e) const {
    return static_cast<std::size_t>(e.block) * static_cast<std::size_t>(b_) +
           static_cast<std::size_t>(e.index - 1);
  }
  std::size_t universe_size() const { return blocks_.size() * static_cast<std::size_t>(b_); }
  std::vector<Element> universe() const;

  /// Set of `t` holding `e`, if any. First record wins on malformed input.
  std::optional<SetRef> set_of(const Element& e, Table t) const;

  /// Number of records of table `t` with the given index.
  int set_count(Table t, int index) const;

  /// Addressable bits of table `t`: s, or more when records use higher bits.
  int bit_count(Table t) const;

  std::string format(const Element& e) const;
  Element parse_element(std::string_view text) const;

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.m_ == b.m_ && a.s_ == b.s_ && a.b_ == b.b_ && a.blocks_ == b.blocks_ &&
           a.table_b_ == b.table_b_ && a.table_c_ == b.table_c_;
  }

 private:
  void build_index();

  int m_ = 0;
  int s_ = 0;
  int b_ = 0;
  std::vector<std::string> blocks_;
  std::vector<SetRecord> table_b_;
  std::vector<SetRecord> table_c_;
  // lookup_[t][element_id] = position + 1, 0 when absent.
  std::vector<std::uint32_t> lookup_[2];
};

// ---------------------------------------------------------------------------
// Parsing and serialization of the scheme JSON format.

Scheme parse_scheme(std::string_view text);
Scheme load_scheme(const std::string& path);
std::string scheme_to_json(const Scheme& scheme, int indent = 2);

// ---------------------------------------------------------------------------
// Validation against the restricted-scheme clauses.

enum class ViolationKind {
  UniverseSize,       // m != s * b
  BlockCount,         // number of blocks != s (or > s when relaxed)
  BitRange,           // negative bit
  DuplicateBit,       // two records share a bit within a table
  TooManySets,        // more than s records in a table (flagged only)
  EmptySet,
  SingletonSet,
  MixedIndices,       // member index differs from the record index
  DirtySet,           // two members from the same block
  DuplicateMember,
  UnknownElement,
  DuplicateElement,   // element placed in two sets of one table
  MissingElement,     // element placed in no set of a table
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Reported but tolerated: tables larger than s, and split-induced
  // singletons in relaxed mode.
  std::vector<Violation> flagged;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

struct ValidationOptions {
  // Sub-schemes produced by splitting: singletons are flagged instead of
  // rejected, and the block count may be smaller than the table size.
  bool relaxed = false;
};

ValidationReport validate(const Scheme& scheme, ValidationOptions options = {});

// ---------------------------------------------------------------------------
// Element arithmetic.

/// S_T(e) \ {e}, sorted.
std::vector<Element> peers(const Scheme& scheme, const Element& e, Table t);

/// ((k + i - 1) mod b) + 1.
int index_add(int k, int i, int b);

/// `pi[k - 1]` is the new label of index k. Throws std::invalid_argument if
/// `pi` is not a bijection on [1, b].
Scheme permute_indices(const Scheme& scheme, const std::vector<int>& pi);
Element permute(const Element& e, const std::vector<int>& pi);

}  // namespace bitprobe
