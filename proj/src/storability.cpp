#include "bitprobe/storability.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace bitprobe {

Subset normalize_subset(const Scheme& scheme, Subset subset) {
  for (const auto& e : subset) {
    if (!scheme.contains(e)) throw std::out_of_range("subset element outside the universe");
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

Subset parse_subset(const Scheme& scheme, std::string_view text) {
  Subset out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) out.push_back(scheme.parse_element(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return normalize_subset(scheme, std::move(out));
}

std::string format_subset(const Scheme& scheme, const Subset& subset) {
  std::string out;
  for (const auto& e : subset) {
    if (!out.empty()) out += ",";
    out += scheme.format(e);
  }
  return out;
}

Assignment Assignment::zeros(const Scheme& scheme) {
  Assignment asg;
  asg.a_bits.assign(scheme.block_count(), 0);
  asg.b_bits.assign(static_cast<std::size_t>(scheme.bit_count(Table::B)), 0);
  asg.c_bits.assign(static_cast<std::size_t>(scheme.bit_count(Table::C)), 0);
  return asg;
}

bool answer_query(const Scheme& scheme, const Assignment& asg, const Element& e) {
  Table t = asg.a_bits.at(e.block) == 0 ? Table::B : Table::C;
  auto ref = scheme.set_of(e, t);
  if (!ref) return false;
  const auto& bits = t == Table::B ? asg.b_bits : asg.c_bits;
  return bits.at(static_cast<std::size_t>(scheme.set(*ref).bit)) != 0;
}

std::vector<QueryViolation> verify_assignment(const Scheme& scheme, const Assignment& asg, const Subset& subset) {
  std::vector<char> in_s(scheme.universe_size(), 0);
  for (const auto& e : subset) in_s[scheme.element_id(e)] = 1;
  std::vector<QueryViolation> out;
  for (const auto& e : scheme.universe()) {
    bool expected = in_s[scheme.element_id(e)] != 0;
    bool answered = answer_query(scheme, asg, e);
    if (answered != expected) out.push_back({e, answered, expected});
  }
  return out;
}

Assignment derive_assignment(const Scheme& scheme, const std::vector<int>& a_bits, const Subset& subset) {
  Assignment asg = Assignment::zeros(scheme);
  asg.a_bits = a_bits;
  for (const auto& e : subset) {
    Table t = a_bits.at(e.block) == 0 ? Table::B : Table::C;
    auto ref = scheme.set_of(e, t);
    if (!ref) continue;
    auto& bits = t == Table::B ? asg.b_bits : asg.c_bits;
    bits.at(static_cast<std::size_t>(scheme.set(*ref).bit)) = 1;
  }
  return asg;
}

namespace {

// Literal "block routed to table t".
constexpr std::size_t lit(BlockId block, Table t) { return 2 * static_cast<std::size_t>(block) + static_cast<std::size_t>(t); }
constexpr std::size_t neg(std::size_t l) { return l ^ 1U; }
constexpr BlockId block_of(std::size_t l) { return static_cast<BlockId>(l / 2); }
constexpr Table table_of(std::size_t l) { return (l & 1U) != 0 ? Table::C : Table::B; }

struct Edge {
  std::size_t to;
  ForcingStep step;
};

class ImplicationGraph {
 public:
  explicit ImplicationGraph(std::size_t blocks) : adj_(2 * blocks) {}

  void implies(std::size_t from, std::size_t to, ForcingStep step) { adj_[from].push_back({to, step}); }

  // Tarjan's algorithm, iterative. Components are numbered in reverse
  // topological order of the condensation.
  std::vector<int> components() const {
    const std::size_t n = adj_.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    int counter = 0, comps = 0;
    struct Frame {
      std::size_t v;
      std::size_t next;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != -1) continue;
      call.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& frame = call.back();
        std::size_t v = frame.v;
        if (frame.next < adj_[v].size()) {
          std::size_t w = adj_[v][frame.next++].to;
          if (index[w] == -1) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
          } while (w != v);
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) {
          std::size_t parent = call.back().v;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
    return comp;
  }

  // Shortest implication chain from `from` to `to` (BFS).
  std::vector<ForcingStep> chain(std::size_t from, std::size_t to) const {
    std::vector<long> parent_edge(adj_.size(), -1);
    std::vector<std::size_t> parent(adj_.size(), 0);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      if (v == to) break;
      for (std::size_t i = 0; i < adj_[v].size(); ++i) {
        std::size_t w = adj_[v][i].to;
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = static_cast<long>(i);
        queue.push_back(w);
      }
    }
    std::vector<ForcingStep> steps;
    if (!seen[to]) return steps;
    for (std::size_t v = to; v != from;) {
      std::size_t p = parent[v];
      steps.push_back(adj_[p][static_cast<std::size_t>(parent_edge[v])].step);
      v = p;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

StorabilityResult can_store(const Scheme& scheme, const Subset& subset, std::optional<Pin> pin) {
  const std::size_t blocks = scheme.block_count();
  std::vector<char> in_s(scheme.universe_size(), 0);
  for (const auto& e : subset) {
    if (!scheme.contains(e)) throw std::out_of_range("subset element outside the universe");
    in_s[scheme.element_id(e)] = 1;
  }

  ImplicationGraph graph(blocks);
  for (Table t : {Table::B, Table::C}) {
    const auto& records = scheme.table(t);
    for (std::size_t pos = 0; pos < records.size(); ++pos) {
      const auto& members = records[pos].members;
      for (const auto& e : members) {
        if (!in_s[scheme.element_id(e)]) continue;
        for (const auto& f : members) {
          if (in_s[scheme.element_id(f)] || f.block == e.block) continue;
          SetRef ref{t, pos};
          graph.implies(lit(e.block, t), lit(f.block, other(t)), {e.block, t, f.block, other(t), ref, e, f, false});
          graph.implies(lit(f.block, t), lit(e.block, other(t)), {f.block, t, e.block, other(t), ref, e, f, false});
        }
      }
    }
  }
  // A member of S with no set in a table can never answer Yes from it.
  for (const auto& e : subset) {
    for (Table t : {Table::B, Table::C}) {
      if (scheme.set_of(e, t)) continue;
      ForcingStep step{e.block, t, e.block, other(t), {}, e, e, true};
      graph.implies(lit(e.block, t), lit(e.block, other(t)), step);
    }
  }
  if (pin) {
    if (pin->block >= blocks) throw std::out_of_range("unknown block");
    ForcingStep step{pin->block, other(pin->table), pin->block, pin->table, {}, {}, {}, true};
    graph.implies(lit(pin->block, other(pin->table)), lit(pin->block, pin->table), step);
  }

  auto comp = graph.components();
  for (BlockId blk = 0; blk < blocks; ++blk) {
    std::size_t in_b = lit(blk, Table::B), in_c = lit(blk, Table::C);
    if (comp[in_b] == comp[in_c]) {
      ConflictTrace trace;
      trace.block = blk;
      trace.steps = graph.chain(in_b, in_c);
      auto back = graph.chain(in_c, in_b);
      trace.steps.insert(trace.steps.end(), back.begin(), back.end());
      return {std::move(trace)};
    }
  }
  std::vector<int> a_bits(blocks, 0);
  for (BlockId blk = 0; blk < blocks; ++blk) {
    // Tarjan numbers sinks first; a literal is true when its component comes
    // earlier than its negation's.
    a_bits[blk] = comp[lit(blk, Table::C)] < comp[lit(blk, Table::B)] ? 1 : 0;
  }
  return {derive_assignment(scheme, a_bits, subset)};
}

StorabilityResult can_store_bruteforce(const Scheme& scheme, const Subset& subset) {
  const std::size_t blocks = scheme.block_count();
  if (blocks > kBruteforceMaxBlocks) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kBruteforceMaxBlocks) + " blocks");
  }
  std::vector<int> a_bits(blocks, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
    for (std::size_t i = 0; i < blocks; ++i) a_bits[i] = static_cast<int>((mask >> i) & 1U);
    Assignment asg = derive_assignment(scheme, a_bits, subset);
    if (verify_assignment(scheme, asg, subset).empty()) return {std::move(asg)};
  }
  return {ConflictTrace{}};
}

std::string_view to_string(Forced f) {
  switch (f) {
    case Forced::ForcedB: return "ForcedB";
    case Forced::ForcedC: return "ForcedC";
    case Forced::Free: return "Free";
    case Forced::Unstorable: return "Unstorable";
  }
  return "?";
}

Forced forced_table(const Scheme& scheme, const Subset& subset, BlockId block) {
  if (block >= scheme.block_count()) throw std::out_of_range("unknown block");
  bool in_b = can_store(scheme, subset, Pin{block, Table::B}).storable();
  bool in_c = can_store(scheme, subset, Pin{block, Table::C}).storable();
  if (in_b && in_c) return Forced::Free;
  if (in_b) return Forced::ForcedB;
  if (in_c) return Forced::ForcedC;
  return Forced::Unstorable;
}

std::string describe(const Scheme& scheme, const ForcingStep& step) {
  std::ostringstream out;
  out << scheme.block_name(step.from) << " in " << to_string(step.from_table) << " => "
      << scheme.block_name(step.to) << " in " << to_string(step.to_table);
  if (step.pinned) {
    out << " (pinned)";
  } else {
    const auto& rec = scheme.set(step.set);
    out << " (table " << to_string(step.set.table) << " bit " << rec.bit << ": " << scheme.format(step.member)
        << " in S, " << scheme.format(step.non_member) << " not in S)";
  }
  return out.str();
}

}  // namespace bitprobe
