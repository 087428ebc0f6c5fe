#include "bitprobe/adversary.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace bitprobe {

using json = nlohmann::ordered_json;

std::string_view to_string(Forbidden f) {
  switch (f) {
    case Forbidden::B: return "B";
    case Forbidden::C: return "C";
    case Forbidden::Both: return "Both";
  }
  return "?";
}

Forbidden parse_forbidden(std::string_view text) {
  if (text == "B") return Forbidden::B;
  if (text == "C") return Forbidden::C;
  if (text == "Both") return Forbidden::Both;
  throw std::invalid_argument("unknown forbidden table '" + std::string(text) + "'");
}

namespace {

enum class Side { S, X };

// Element -> side, with conflict detection.
class SideMap {
 public:
  bool fits(const Element& e, Side side) const {
    auto it = sides_.find(e);
    return it == sides_.end() || it->second == side;
  }
  void put(const Element& e, Side side) { sides_.emplace(e, side); }

  ForcingSets sets() const {
    ForcingSets out;
    for (const auto& [e, side] : sides_) (side == Side::S ? out.s : out.x).push_back(e);
    return out;
  }

 private:
  std::map<Element, Side> sides_;
};

Side flip(Side s) { return s == Side::S ? Side::X : Side::S; }

}  // namespace

ForcingSets path_forcing_sets(const Scheme& scheme, const Path& path, SeedChoice seed) {
  if (!is_path(scheme, path)) throw std::invalid_argument("malformed path");
  SideMap sides;
  Side ante = seed == SeedChoice::AntecedentInS ? Side::S : Side::X;
  for (const auto& node : path.nodes) {
    if (!sides.fits(node.antecedent, ante) || !sides.fits(node.consequent, flip(ante))) {
      throw std::invalid_argument("path repeats an element across S and X");
    }
    sides.put(node.antecedent, ante);
    sides.put(node.consequent, flip(ante));
  }
  return sides.sets();
}

std::optional<Path> find_path(const Scheme& scheme, const Element& e, Table table, int length, const Node& last,
                              bool override_cap) {
  for (const auto& f : peers(scheme, e, table)) {
    Node start{table, e, f};
    if (length == 0) {
      if (start == last) return Path{{start}};
      continue;
    }
    for (auto& path : enumerate_paths(scheme, start, length, override_cap)) {
      if (path.last() == last) return std::move(path);
    }
  }
  return std::nullopt;
}

AdversaryPair adversarial_pair(const Scheme& scheme, const Element& e, Table table, int level, bool override_cap) {
  auto cert = badness(scheme, e, table, level, override_cap);
  if (!cert) {
    throw NotBadError(scheme.format(e) + " is " + std::to_string(level) + "-good w.r.t. table " +
                      std::string(to_string(table)));
  }
  const int j = cert->level;
  const Table end = path_end_table(table, j);
  // The two last nodes live in the shared set; their consequents are crossed.
  auto to_u = find_path(scheme, e, table, j, Node{end, cert->u, cert->v}, override_cap);
  auto to_v = find_path(scheme, e, table, j, Node{end, cert->v, cert->u}, override_cap);
  if (!to_u || !to_v) throw std::logic_error("no path reaches a universe member");

  SideMap sides;
  for (const auto& node : to_u->nodes) {
    sides.put(node.antecedent, Side::S);
    sides.put(node.consequent, Side::X);
  }
  // Second path, in ascending index order: keep the default split unless it
  // collides with the first path, in which case the node is swapped.
  for (const auto& node : to_v->nodes) {
    Side ante = Side::S;
    if (!sides.fits(node.antecedent, ante) || !sides.fits(node.consequent, flip(ante))) ante = Side::X;
    if (!sides.fits(node.antecedent, ante) || !sides.fits(node.consequent, flip(ante))) {
      throw std::logic_error("swap repair failed at " + scheme.format(node.antecedent));
    }
    sides.put(node.antecedent, ante);
    sides.put(node.consequent, flip(ante));
  }
  auto sets = sides.sets();
  AdversaryPair pair;
  pair.s = std::move(sets.s);
  pair.x = std::move(sets.x);
  pair.target_block = e.block;
  pair.forbidden = table == Table::B ? Forbidden::B : Forbidden::C;
  pair.support_paths = {std::move(*to_u), std::move(*to_v)};
  return pair;
}

std::optional<AdversaryPair> two_table_contradiction(const Scheme& scheme, BlockId block, int level) {
  if (level < 1) throw RangeError("level must be at least 1");
  if (scheme.b() < 2 * level + 3) {
    throw RangeError("block size " + std::to_string(scheme.b()) + " must exceed 2i + 2 = " +
                     std::to_string(2 * level + 2));
  }
  if (block >= scheme.block_count()) throw std::out_of_range("unknown block");
  Element first{block, 1};
  Element second{block, level + 2};
  if (!badness(scheme, first, Table::B, level) || !badness(scheme, second, Table::C, level)) return std::nullopt;

  auto in_b = adversarial_pair(scheme, first, Table::B, level);
  auto in_c = adversarial_pair(scheme, second, Table::C, level);
  AdversaryPair pair;
  pair.target_block = block;
  pair.forbidden = Forbidden::Both;
  std::set_union(in_b.s.begin(), in_b.s.end(), in_c.s.begin(), in_c.s.end(), std::back_inserter(pair.s));
  std::set_union(in_b.x.begin(), in_b.x.end(), in_c.x.begin(), in_c.x.end(), std::back_inserter(pair.x));
  pair.support_paths = std::move(in_b.support_paths);
  for (auto& p : in_c.support_paths) pair.support_paths.push_back(std::move(p));
  return pair;
}

CertificateResult certify(const Scheme& scheme, const AdversaryPair& pair) {
  Subset overlap;
  std::set_intersection(pair.s.begin(), pair.s.end(), pair.x.begin(), pair.x.end(), std::back_inserter(overlap));
  if (!overlap.empty()) throw std::invalid_argument("S and X overlap at " + scheme.format(overlap.front()));

  CertificateResult result;
  if (pair.forbidden == Forbidden::Both) {
    auto outcome = can_store(scheme, pair.s);
    result.pass = !outcome.storable();
    if (!outcome.storable()) result.trace = outcome.trace();
    result.detail = result.pass ? "S is unstorable" : "S is storable";
    return result;
  }
  Forced forced = forced_table(scheme, pair.s, pair.target_block);
  result.forced = forced;
  Forced allowed_elsewhere = pair.forbidden == Forbidden::B ? Forced::ForcedC : Forced::ForcedB;
  result.pass = forced == allowed_elsewhere || forced == Forced::Unstorable;
  if (forced == Forced::Unstorable) result.trace = can_store(scheme, pair.s).trace();
  result.detail = "block " + scheme.block_name(pair.target_block) + " is " + std::string(to_string(forced));
  return result;
}

namespace {

json node_json(const Scheme& scheme, const Node& n) {
  return {{"table", std::string(to_string(n.table))},
          {"antecedent", scheme.format(n.antecedent)},
          {"consequent", scheme.format(n.consequent)}};
}

json subset_json(const Scheme& scheme, const Subset& s) {
  json arr = json::array();
  for (const auto& e : s) arr.push_back(scheme.format(e));
  return arr;
}

}  // namespace

std::string certificate_to_json(const Scheme& scheme, const AdversaryPair& pair, int indent) {
  json doc;
  doc["s"] = subset_json(scheme, pair.s);
  doc["x"] = subset_json(scheme, pair.x);
  doc["block"] = scheme.block_name(pair.target_block);
  doc["forbidden"] = std::string(to_string(pair.forbidden));
  json paths = json::array();
  for (const auto& p : pair.support_paths) {
    json nodes = json::array();
    for (const auto& n : p.nodes) nodes.push_back(node_json(scheme, n));
    paths.push_back(std::move(nodes));
  }
  doc["paths"] = std::move(paths);
  return doc.dump(indent);
}

AdversaryPair certificate_from_json(const Scheme& scheme, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw ParseError("certificate", ex.what());
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "s" && key != "x" && key != "block" && key != "forbidden" && key != "paths") {
      throw ParseError(key, "unknown field '" + key + "'");
    }
  }
  auto read_subset = [&](const char* key) {
    Subset out;
    for (const auto& item : doc.at(key)) out.push_back(scheme.parse_element(item.get<std::string>()));
    return normalize_subset(scheme, std::move(out));
  };
  AdversaryPair pair;
  try {
    pair.s = read_subset("s");
    pair.x = read_subset("x");
    auto blk = scheme.find_block(doc.at("block").get<std::string>());
    if (!blk) throw std::invalid_argument("unknown block");
    pair.target_block = *blk;
    pair.forbidden = parse_forbidden(doc.at("forbidden").get<std::string>());
    for (const auto& p : doc.value("paths", json::array())) {
      Path path;
      for (const auto& n : p) {
        path.nodes.push_back({parse_table(n.at("table").get<std::string>()),
                              scheme.parse_element(n.at("antecedent").get<std::string>()),
                              scheme.parse_element(n.at("consequent").get<std::string>())});
      }
      pair.support_paths.push_back(std::move(path));
    }
  } catch (const json::exception& ex) {
    throw ParseError("certificate", ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError("certificate", ex.what());
  }
  return pair;
}

}  // namespace bitprobe
