#pragma once

// Nodes, edges and paths over the sets of tables B and C, the recursive
// i-Universes of an element, and detection of i-bad elements.

#include <optional>
#include <stdexcept>
#include <vector>

#include "bitprobe/model.hpp"

namespace bitprobe {

/// An ordered pair of distinct elements sharing a set of `table`.
struct Node {
  Table table = Table::B;
  Element antecedent;
  Element consequent;

  friend auto operator<=>(const Node&, const Node&) = default;
};

struct Path {
  std::vector<Node> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  const Node& first() const { return nodes.front(); }
  const Node& last() const { return nodes.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// floor(b / 2) - 1: the largest path length / universe level considered.
int level_cap(int b);

/// Throws std::invalid_argument when the terms are equal or do not share a
/// set of `node.table`.
void check_node(const Scheme& scheme, const Node& node);

/// Edge rule between consecutive nodes: tables differ, the consequent block
/// continues as the next antecedent block, and the index advances by one.
bool is_edge(const Scheme& scheme, const Node& from, const Node& to);

/// Checks node validity and the edge rule along the path.
bool is_path(const Scheme& scheme, const Path& path);

std::vector<Node> edges_from(const Scheme& scheme, const Node& node);

/// All paths with `length` edges starting at `start`, depth first in
/// lexicographic edge order. `length` above level_cap(b) throws RangeError
/// unless `override_cap` is set.
std::vector<Path> enumerate_paths(const Scheme& scheme, const Node& start, int length, bool override_cap = false);

/// Peers of `e` in `table`, each moved to the next index.
std::vector<Element> one_universe(const Scheme& scheme, const Element& e, Table table);

/// Table used when growing level `level` of a universe rooted in `table`:
/// the root table on odd levels, the other table on even levels.
Table universe_step_table(Table table, int level);

/// Table of the last node of a length-`length` path starting in `table`, and
/// equally the table in which two level-`length` universe members must not
/// share a set: the root table on even lengths, the other one on odd lengths.
Table path_end_table(Table table, int length);

std::vector<Element> i_universe(const Scheme& scheme, const Element& e, Table table, int level,
                                bool override_cap = false);

/// Last-node antecedents over all length-`level` paths whose first node lies
/// in `table` with antecedent `e`. Level 0 yields {e}.
std::vector<Element> universe_via_paths(const Scheme& scheme, const Element& e, Table table, int level,
                                        bool override_cap = false);

struct BadnessCertificate {
  int level = 0;  // j
  Element u;
  Element v;
  SetRef witness_set;  // the set of path_end_table(table, j) holding u and v

  friend bool operator==(const BadnessCertificate&, const BadnessCertificate&) = default;
};

/// Smallest level j <= i (then lexicographically smallest pair u < v) at which
/// two members of the j-Universe share a set of path_end_table(table, j).
/// Empty when the element is i-good.
std::optional<BadnessCertificate> badness(const Scheme& scheme, const Element& e, Table table, int level,
                                          bool override_cap = false);

}  // namespace bitprobe
