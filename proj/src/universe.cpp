#include "bitprobe/universe.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bitprobe {

int level_cap(int b) { return b / 2 - 1; }

namespace {

void check_level(const Scheme& scheme, int level, int min_level, bool override_cap) {
  if (level < min_level) throw RangeError("level " + std::to_string(level) + " below " + std::to_string(min_level));
  if (!override_cap && level > level_cap(scheme.b())) {
    throw RangeError("level " + std::to_string(level) + " exceeds floor(b/2) - 1 = " +
                     std::to_string(level_cap(scheme.b())));
  }
}

void sort_unique(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void check_node(const Scheme& scheme, const Node& node) {
  if (!scheme.contains(node.antecedent) || !scheme.contains(node.consequent)) {
    throw std::invalid_argument("node term outside the universe");
  }
  if (node.antecedent == node.consequent) throw std::invalid_argument("node terms must be distinct");
  auto a = scheme.set_of(node.antecedent, node.table);
  auto c = scheme.set_of(node.consequent, node.table);
  if (!a || !c || *a != *c) {
    throw std::invalid_argument("node terms " + scheme.format(node.antecedent) + ", " + scheme.format(node.consequent) +
                                " do not share a set of table " + std::string(to_string(node.table)));
  }
}

bool is_edge(const Scheme& scheme, const Node& from, const Node& to) {
  return from.table != to.table && from.consequent.block == to.antecedent.block &&
         index_add(from.consequent.index, 1, scheme.b()) == to.antecedent.index;
}

bool is_path(const Scheme& scheme, const Path& path) {
  if (path.nodes.empty()) return false;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    try {
      check_node(scheme, path.nodes[i]);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (i > 0 && !is_edge(scheme, path.nodes[i - 1], path.nodes[i])) return false;
  }
  return true;
}

std::vector<Node> edges_from(const Scheme& scheme, const Node& node) {
  check_node(scheme, node);
  Table next_table = other(node.table);
  Element next{node.consequent.block, index_add(node.consequent.index, 1, scheme.b())};
  std::vector<Node> out;
  for (const auto& h : peers(scheme, next, next_table)) out.push_back({next_table, next, h});
  return out;
}

std::vector<Path> enumerate_paths(const Scheme& scheme, const Node& start, int length, bool override_cap) {
  check_level(scheme, length, 0, override_cap);
  check_node(scheme, start);
  std::vector<Path> out;
  Path current{{start}};
  auto dfs = [&](auto& self) -> void {
    if (static_cast<int>(current.length()) == length) {
      out.push_back(current);
      return;
    }
    for (const auto& next : edges_from(scheme, current.last())) {
      current.nodes.push_back(next);
      self(self);
      current.nodes.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<Element> one_universe(const Scheme& scheme, const Element& e, Table table) {
  auto out = peers(scheme, e, table);
  for (auto& x : out) x.index = index_add(x.index, 1, scheme.b());
  sort_unique(out);
  return out;
}

Table universe_step_table(Table table, int level) { return level % 2 == 1 ? table : other(table); }

Table path_end_table(Table table, int length) { return length % 2 == 0 ? table : other(table); }

std::vector<Element> i_universe(const Scheme& scheme, const Element& e, Table table, int level, bool override_cap) {
  check_level(scheme, level, 1, override_cap);
  std::vector<Element> current = one_universe(scheme, e, table);
  for (int l = 2; l <= level; ++l) {
    Table step = universe_step_table(table, l);
    std::vector<Element> next;
    for (const auto& u : current) {
      auto grown = one_universe(scheme, u, step);
      next.insert(next.end(), grown.begin(), grown.end());
    }
    sort_unique(next);
    current = std::move(next);
  }
  return current;
}

std::vector<Element> universe_via_paths(const Scheme& scheme, const Element& e, Table table, int level,
                                        bool override_cap) {
  check_level(scheme, level, 0, override_cap);
  if (level == 0) return {e};
  std::vector<Element> out;
  for (const auto& f : peers(scheme, e, table)) {
    for (const auto& path : enumerate_paths(scheme, Node{table, e, f}, level, override_cap)) {
      out.push_back(path.last().antecedent);
    }
  }
  sort_unique(out);
  return out;
}

std::optional<BadnessCertificate> badness(const Scheme& scheme, const Element& e, Table table, int level,
                                          bool override_cap) {
  check_level(scheme, level, 1, override_cap);
  std::vector<Element> current;
  for (int j = 1; j <= level; ++j) {
    if (j == 1) {
      current = one_universe(scheme, e, table);
    } else {
      Table step = universe_step_table(table, j);
      std::vector<Element> next;
      for (const auto& u : current) {
        auto grown = one_universe(scheme, u, step);
        next.insert(next.end(), grown.begin(), grown.end());
      }
      sort_unique(next);
      current = std::move(next);
    }
    Table shared = path_end_table(table, j);
    // current is sorted, so the first hit per set is its smallest member and
    // the scan over u yields the lexicographically smallest pair.
    std::map<std::size_t, Element> first_in_set;
    std::optional<BadnessCertificate> best;
    for (const auto& x : current) {
      auto ref = scheme.set_of(x, shared);
      if (!ref) continue;
      auto [it, fresh] = first_in_set.emplace(ref->position, x);
      if (fresh) continue;
      BadnessCertificate cert{j, it->second, x, *ref};
      if (!best || std::tie(cert.u, cert.v) < std::tie(best->u, best->v)) best = cert;
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace bitprobe
