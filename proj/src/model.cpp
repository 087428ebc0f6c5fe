#include "bitprobe/model.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bitprobe {

using json = nlohmann::ordered_json;

std::string_view to_string(Table t) { return t == Table::B ? "B" : "C"; }

Table parse_table(std::string_view text) {
  if (text == "B" || text == "b") return Table::B;
  if (text == "C" || text == "c") return Table::C;
  throw std::invalid_argument("unknown table '" + std::string(text) + "' (expected B or C)");
}

Scheme::Scheme(int m, int s, int b, std::vector<std::string> block_names, std::vector<SetRecord> table_b,
               std::vector<SetRecord> table_c)
    : m_(m), s_(s), b_(b), table_b_(std::move(table_b)), table_c_(std::move(table_c)) {
  if (b_ < 1) throw std::invalid_argument("block size must be positive");
  std::vector<std::size_t> order(block_names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return block_names[x] < block_names[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (block_names[order[i]] == block_names[order[i - 1]]) {
      throw std::invalid_argument("duplicate block identifier '" + block_names[order[i]] + "'");
    }
  }
  std::vector<BlockId> remap(block_names.size());
  blocks_.reserve(block_names.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    remap[order[pos]] = static_cast<BlockId>(pos);
    blocks_.push_back(std::move(block_names[order[pos]]));
  }
  for (auto* records : {&table_b_, &table_c_}) {
    for (auto& rec : *records) {
      if (rec.index < 1 || rec.index > b_) {
        throw std::invalid_argument("set index " + std::to_string(rec.index) + " out of range [1, " +
                                    std::to_string(b_) + "]");
      }
      for (auto& e : rec.members) {
        if (e.block >= remap.size()) throw std::invalid_argument("member refers to unknown block");
        if (e.index < 1 || e.index > b_) {
          throw std::invalid_argument("member index " + std::to_string(e.index) + " out of range [1, " +
                                      std::to_string(b_) + "]");
        }
        e.block = remap[e.block];
      }
    }
  }
  for (auto& rec : table_b_) rec.table = Table::B;
  for (auto& rec : table_c_) rec.table = Table::C;
  build_index();
}

void Scheme::build_index() {
  for (Table t : {Table::B, Table::C}) {
    auto& lookup = lookup_[static_cast<int>(t)];
    lookup.assign(universe_size(), 0);
    const auto& records = table(t);
    for (std::size_t pos = 0; pos < records.size(); ++pos) {
      for (const auto& e : records[pos].members) {
        auto& slot = lookup[element_id(e)];
        if (slot == 0) slot = static_cast<std::uint32_t>(pos + 1);
      }
    }
  }
}

std::optional<BlockId> Scheme::find_block(std::string_view name) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), name);
  if (it == blocks_.end() || *it != name) return std::nullopt;
  return static_cast<BlockId>(it - blocks_.begin());
}

std::vector<Element> Scheme::universe() const {
  std::vector<Element> out;
  out.reserve(universe_size());
  for (BlockId blk = 0; blk < blocks_.size(); ++blk) {
    for (int k = 1; k <= b_; ++k) out.push_back({blk, k});
  }
  return out;
}

std::optional<SetRef> Scheme::set_of(const Element& e, Table t) const {
  if (!contains(e)) return std::nullopt;
  auto slot = lookup_[static_cast<int>(t)][element_id(e)];
  if (slot == 0) return std::nullopt;
  return SetRef{t, slot - 1};
}

int Scheme::set_count(Table t, int index) const {
  const auto& records = table(t);
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [&](const SetRecord& r) { return r.index == index; }));
}

int Scheme::bit_count(Table t) const {
  int count = s_;
  for (const auto& rec : table(t)) count = std::max(count, rec.bit + 1);
  return count;
}

std::string Scheme::format(const Element& e) const {
  return block_name(e.block) + ":" + std::to_string(e.index);
}

Element Scheme::parse_element(std::string_view text) const {
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("element '" + std::string(text) + "' is not of the form block:index");
  }
  auto name = text.substr(0, colon);
  auto blk = find_block(name);
  if (!blk) throw std::invalid_argument("unknown block '" + std::string(name) + "'");
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(std::string(text.substr(colon + 1)), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad index in element '" + std::string(text) + "'");
  }
  if (index < 1 || index > b_) {
    throw std::invalid_argument("index out of range in element '" + std::string(text) + "'");
  }
  return {*blk, index};
}

// ---------------------------------------------------------------------------

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

int require_int(const json& obj, const char* key, const std::string& locus) {
  if (!obj.contains(key)) throw ParseError(locus, std::string("missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(locus + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<SetRecord> parse_records(const json& arr, const std::string& locus,
                                     const std::map<std::string, BlockId, std::less<>>& ids, int b,
                                     Table table) {
  if (!arr.is_array()) throw ParseError(locus, "expected an array");
  std::vector<SetRecord> out;
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const auto& item = arr[r];
    std::string where = locus + "[" + std::to_string(r) + "]";
    if (!item.is_object()) throw ParseError(where, "expected an object");
    for (const auto& [key, _] : item.items()) {
      if (key != "bit" && key != "index" && key != "members") throw ParseError(where, "unknown field '" + key + "'");
    }
    SetRecord rec;
    rec.table = table;
    rec.bit = require_int(item, "bit", where);
    rec.index = require_int(item, "index", where);
    if (rec.index < 1 || rec.index > b) {
      throw ParseError(where + ".index", "index " + std::to_string(rec.index) + " out of range [1, " +
                                             std::to_string(b) + "]");
    }
    if (!item.contains("members") || !item.at("members").is_array()) {
      throw ParseError(where + ".members", "expected an array of block identifiers");
    }
    const auto& members = item.at("members");
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::string mwhere = where + ".members[" + std::to_string(i) + "]";
      if (!members[i].is_string()) throw ParseError(mwhere, "expected a string");
      auto text = members[i].get<std::string>();
      // "blk" names the element of this record's index; "blk:k" names one explicitly.
      std::string name = text;
      int index = rec.index;
      if (auto colon = text.rfind(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        try {
          std::size_t used = 0;
          index = std::stoi(text.substr(colon + 1), &used);
          if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError(mwhere, "bad element index in '" + text + "'");
        }
        if (index < 1 || index > b) {
          throw ParseError(mwhere, "index " + std::to_string(index) + " out of range [1, " + std::to_string(b) + "]");
        }
      }
      auto it = ids.find(name);
      if (it == ids.end()) throw ParseError(mwhere, "unknown block '" + name + "'");
      rec.members.push_back({it->second, index});
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

Scheme parse_scheme(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw ParseError("line " + std::to_string(line_of(text, ex.byte)), "syntax error: " + std::string(ex.what()));
  }
  if (!doc.is_object()) throw ParseError("line 1", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "m" && key != "s" && key != "b" && key != "blocks" && key != "table_b" && key != "table_c") {
      throw ParseError(key, "unknown field '" + key + "'");
    }
  }
  int m = require_int(doc, "m", "scheme");
  int s = require_int(doc, "s", "scheme");
  int b = require_int(doc, "b", "scheme");
  if (b < 1) throw ParseError("b", "block size must be positive");
  if (!doc.contains("blocks") || !doc.at("blocks").is_array()) throw ParseError("blocks", "expected an array");
  std::vector<std::string> names;
  std::map<std::string, BlockId, std::less<>> ids;
  const auto& blocks = doc.at("blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string where = "blocks[" + std::to_string(i) + "]";
    if (!blocks[i].is_string()) throw ParseError(where, "expected a string");
    auto name = blocks[i].get<std::string>();
    if (name.empty() || name.find(':') != std::string::npos || name.find(',') != std::string::npos) {
      throw ParseError(where, "block identifier must be non-empty and contain no ':' or ','");
    }
    if (!ids.emplace(name, static_cast<BlockId>(names.size())).second) {
      throw ParseError(where, "duplicate block identifier '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  auto table_b = parse_records(doc.value("table_b", json::array()), "table_b", ids, b, Table::B);
  auto table_c = parse_records(doc.value("table_c", json::array()), "table_c", ids, b, Table::C);
  return Scheme(m, s, b, std::move(names), std::move(table_b), std::move(table_c));
}

Scheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scheme file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scheme(buf.str());
}

std::string scheme_to_json(const Scheme& scheme, int indent) {
  json doc;
  doc["m"] = scheme.m();
  doc["s"] = scheme.s();
  doc["b"] = scheme.b();
  doc["blocks"] = scheme.blocks();
  for (Table t : {Table::B, Table::C}) {
    json arr = json::array();
    for (const auto& rec : scheme.table(t)) {
      json members = json::array();
      for (const auto& e : rec.members) {
        members.push_back(e.index == rec.index ? scheme.block_name(e.block) : scheme.format(e));
      }
      arr.push_back({{"bit", rec.bit}, {"index", rec.index}, {"members", std::move(members)}});
    }
    doc[t == Table::B ? "table_b" : "table_c"] = std::move(arr);
  }
  return doc.dump(indent);
}

// ---------------------------------------------------------------------------

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::UniverseSize: return "universe size";
    case ViolationKind::BlockCount: return "block count";
    case ViolationKind::BitRange: return "bit out of range";
    case ViolationKind::DuplicateBit: return "duplicate bit";
    case ViolationKind::TooManySets: return "too many sets";
    case ViolationKind::EmptySet: return "empty set";
    case ViolationKind::SingletonSet: return "singleton set";
    case ViolationKind::MixedIndices: return "mixed indices";
    case ViolationKind::DirtySet: return "dirty set";
    case ViolationKind::DuplicateMember: return "duplicate member";
    case ViolationKind::UnknownElement: return "unknown element";
    case ViolationKind::DuplicateElement: return "element in several sets";
    case ViolationKind::MissingElement: return "element in no set";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const Scheme& scheme, ValidationOptions options) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) { report.violations.push_back({kind, std::move(msg)}); };
  const auto blocks = static_cast<int>(scheme.block_count());

  if (options.relaxed) {
    if (blocks > scheme.s()) {
      add(ViolationKind::BlockCount, std::to_string(blocks) + " blocks exceed table size " + std::to_string(scheme.s()));
    }
    if (scheme.m() != blocks * scheme.b()) {
      add(ViolationKind::UniverseSize, "m = " + std::to_string(scheme.m()) + " but blocks * b = " +
                                           std::to_string(blocks * scheme.b()));
    }
  } else {
    if (blocks != scheme.s()) {
      add(ViolationKind::BlockCount, std::to_string(blocks) + " blocks but s = " + std::to_string(scheme.s()));
    }
    if (scheme.m() != scheme.s() * scheme.b()) {
      add(ViolationKind::UniverseSize, "m = " + std::to_string(scheme.m()) + " but s * b = " +
                                           std::to_string(scheme.s() * scheme.b()));
    }
  }

  for (Table t : {Table::B, Table::C}) {
    const auto& records = scheme.table(t);
    const std::string tname(to_string(t));
    if (static_cast<int>(records.size()) > scheme.s()) {
      report.flagged.push_back({ViolationKind::TooManySets, "table " + tname + " has " + std::to_string(records.size()) +
                                                                " sets, more than s = " + std::to_string(scheme.s())});
    }
    std::set<int> bits;
    std::vector<int> placed(scheme.universe_size(), 0);
    for (std::size_t pos = 0; pos < records.size(); ++pos) {
      const auto& rec = records[pos];
      const std::string where = "table " + tname + " bit " + std::to_string(rec.bit);
      if (rec.bit < 0) add(ViolationKind::BitRange, where + " is negative");
      if (!bits.insert(rec.bit).second) add(ViolationKind::DuplicateBit, where + " used by several sets");
      if (rec.members.empty()) {
        add(ViolationKind::EmptySet, where + " has no members");
      } else if (rec.members.size() == 1) {
        Violation v{ViolationKind::SingletonSet, where + " is a singleton {" + scheme.format(rec.members[0]) + "}"};
        (options.relaxed ? report.flagged : report.violations).push_back(std::move(v));
      }
      std::set<Element> seen;
      std::set<BlockId> seen_blocks;
      bool mixed = false;
      for (const auto& e : rec.members) {
        if (!scheme.contains(e)) {
          add(ViolationKind::UnknownElement, where + " refers to an element outside the universe");
          continue;
        }
        if (!seen.insert(e).second) {
          add(ViolationKind::DuplicateMember, where + " lists " + scheme.format(e) + " twice");
          continue;
        }
        if (!seen_blocks.insert(e.block).second) {
          add(ViolationKind::DirtySet, where + " holds two elements of block " + scheme.block_name(e.block));
        }
        if (e.index != rec.index) mixed = true;
        ++placed[scheme.element_id(e)];
      }
      if (mixed) {
        add(ViolationKind::MixedIndices, where + " (index " + std::to_string(rec.index) + ") holds elements of other indices");
      }
    }
    for (const auto& e : scheme.universe()) {
      int count = placed[scheme.element_id(e)];
      if (count == 0) add(ViolationKind::MissingElement, scheme.format(e) + " is in no set of table " + tname);
      if (count > 1) add(ViolationKind::DuplicateElement, scheme.format(e) + " is in several sets of table " + tname);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Element> peers(const Scheme& scheme, const Element& e, Table t) {
  if (!scheme.contains(e)) throw std::out_of_range("unknown element");
  std::vector<Element> out;
  auto ref = scheme.set_of(e, t);
  if (!ref) return out;
  for (const auto& x : scheme.set(*ref).members) {
    if (x != e) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int index_add(int k, int i, int b) { return ((k + i - 1) % b) + 1; }

namespace {

void check_permutation(const std::vector<int>& pi, int b) {
  if (static_cast<int>(pi.size()) != b) throw std::invalid_argument("permutation length differs from block size");
  std::vector<bool> hit(static_cast<std::size_t>(b) + 1, false);
  for (int v : pi) {
    if (v < 1 || v > b || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("index map is not a bijection on [1, b]");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Element permute(const Element& e, const std::vector<int>& pi) {
  return {e.block, pi.at(static_cast<std::size_t>(e.index - 1))};
}

Scheme permute_indices(const Scheme& scheme, const std::vector<int>& pi) {
  check_permutation(pi, scheme.b());
  auto remap = [&](std::vector<SetRecord> records) {
    for (auto& rec : records) {
      rec.index = pi[static_cast<std::size_t>(rec.index - 1)];
      for (auto& e : rec.members) e = permute(e, pi);
    }
    return records;
  };
  return Scheme(scheme.m(), scheme.s(), scheme.b(), scheme.blocks(), remap(scheme.table(Table::B)),
                remap(scheme.table(Table::C)));
}

}  // namespace bitprobe
