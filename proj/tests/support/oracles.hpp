#pragma once

// Straight-from-the-definition reference implementations. They read the raw
// set records and never call the library's graph or universe code.

#include <algorithm>
#include <set>
#include <vector>

#include "bitprobe/model.hpp"
#include "bitprobe/universe.hpp"

namespace oracle {

using bitprobe::Element;
using bitprobe::Node;
using bitprobe::Scheme;
using bitprobe::Table;

inline Table flip(Table t) { return t == Table::B ? Table::C : Table::B; }

inline int wrap(int k, int b) { return ((k - 1) % b + b) % b + 1; }

// Members of the record of `t` containing `e`, by linear scan.
inline std::vector<Element> set_members(const Scheme& scheme, const Element& e, Table t) {
  for (const auto& rec : scheme.table(t)) {
    if (std::find(rec.members.begin(), rec.members.end(), e) != rec.members.end()) return rec.members;
  }
  return {};
}

inline bool same_set(const Scheme& scheme, const Element& u, const Element& v, Table t) {
  auto members = set_members(scheme, u, t);
  return std::find(members.begin(), members.end(), v) != members.end();
}

inline std::vector<Node> all_nodes(const Scheme& scheme) {
  std::vector<Node> out;
  for (Table t : {Table::B, Table::C}) {
    for (const auto& rec : scheme.table(t)) {
      for (const auto& u : rec.members) {
        for (const auto& v : rec.members) {
          if (!(u == v)) out.push_back({t, u, v});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool edge(const Scheme& scheme, const Node& x, const Node& y) {
  return x.table != y.table && y.antecedent.block == x.consequent.block &&
         y.antecedent.index == wrap(x.consequent.index + 1, scheme.b());
}

// Every node sequence of `length` edges from `start`, by exhaustive extension
// over the full node list.
inline std::vector<std::vector<Node>> paths(const Scheme& scheme, const Node& start, int length) {
  auto nodes = all_nodes(scheme);
  std::vector<std::vector<Node>> frontier{{start}};
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<Node>> next;
    for (const auto& p : frontier) {
      for (const auto& n : nodes) {
        if (edge(scheme, p.back(), n)) {
          auto q = p;
          q.push_back(n);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

// Level-by-level universe growth: level l uses the root table when l is odd.
inline std::set<Element> universe(const Scheme& scheme, const Element& e, Table root, int level) {
  std::set<Element> current{e};
  for (int l = 1; l <= level; ++l) {
    Table t = l % 2 == 1 ? root : flip(root);
    std::set<Element> next;
    for (const auto& x : current) {
      for (const auto& y : set_members(scheme, x, t)) {
        if (!(y == x)) next.insert({y.block, wrap(y.index + 1, scheme.b())});
      }
    }
    current = std::move(next);
  }
  return current;
}

// Two members of some j-universe (1 <= j <= i) sharing a set of the table
// the level-j path would end in.
inline bool is_bad(const Scheme& scheme, const Element& e, Table root, int i) {
  for (int j = 1; j <= i; ++j) {
    Table end = j % 2 == 0 ? root : flip(root);
    auto u = universe(scheme, e, root, j);
    std::vector<Element> members(u.begin(), u.end());
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (same_set(scheme, members[x], members[y], end)) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
