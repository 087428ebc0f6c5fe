#include "bitprobe/transform.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bitprobe {

namespace {

void require_room(const Scheme& scheme, int level) {
  if (level < 1) throw RangeError("level must be at least 1");
  if (scheme.b() < 2 * level + 3) {
    throw RangeError("block size " + std::to_string(scheme.b()) + " must exceed 2i + 2 = " +
                     std::to_string(2 * level + 2));
  }
}

Scheme build_part(const Scheme& scheme, const std::vector<std::string>& names, std::vector<SetOrigin> (&origins)[2]) {
  std::vector<long> remap(scheme.block_count(), -1);
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto id = scheme.find_block(names[i]);
    if (!id) throw std::invalid_argument("partition names unknown block '" + names[i] + "'");
    remap[*id] = static_cast<long>(i);
  }
  std::vector<SetRecord> tables[2];
  for (Table t : {Table::B, Table::C}) {
    const auto& records = scheme.table(t);
    for (std::size_t pos = 0; pos < records.size(); ++pos) {
      SetRecord part{t, records[pos].bit, records[pos].index, {}};
      for (const auto& e : records[pos].members) {
        if (remap[e.block] >= 0) part.members.push_back({static_cast<BlockId>(remap[e.block]), e.index});
      }
      if (part.members.empty()) continue;
      tables[static_cast<int>(t)].push_back(std::move(part));
      origins[static_cast<int>(t)].push_back({t, pos});
    }
  }
  int blocks = static_cast<int>(names.size());
  return Scheme(blocks * scheme.b(), scheme.s(), scheme.b(), names, std::move(tables[0]), std::move(tables[1]));
}

}  // namespace

UniversePartition partition_universe(const Scheme& scheme, int level) {
  require_room(scheme, level);
  UniversePartition out;
  for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
    bool bad = badness(scheme, Element{blk, 1}, Table::B, level).has_value();
    (bad ? out.bad : out.good).push_back(scheme.block_name(blk));
  }
  return out;
}

SplitScheme split_tables(const Scheme& scheme, const UniversePartition& partition) {
  if (partition.good.size() + partition.bad.size() != scheme.block_count()) {
    throw std::invalid_argument("partition does not cover the blocks exactly");
  }
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  SplitScheme out;
  out.prime = build_part(scheme, sorted(partition.good), out.provenance[0]);
  out.double_prime = build_part(scheme, sorted(partition.bad), out.provenance[1]);
  std::vector<std::string> all = out.prime.blocks();
  all.insert(all.end(), out.double_prime.blocks().begin(), out.double_prime.blocks().end());
  if (sorted(all) != scheme.blocks()) throw std::invalid_argument("partition does not cover the blocks exactly");
  return out;
}

SplitScheme swap_subtables(const SplitScheme& split) {
  SplitScheme out = split;
  const auto& dp = split.double_prime;
  out.double_prime = Scheme(dp.m(), dp.s(), dp.b(), dp.blocks(), dp.table(Table::C), dp.table(Table::B));
  std::swap(out.provenance[1][0], out.provenance[1][1]);
  out.swapped = !split.swapped;
  return out;
}

std::vector<int> relabel_permutation(int b, int level) {
  std::vector<int> pi(static_cast<std::size_t>(b));
  for (int k = 1; k <= b; ++k) pi[static_cast<std::size_t>(k - 1)] = k;
  for (int k = 1; k <= level + 1; ++k) {
    std::swap(pi[static_cast<std::size_t>(k - 1)], pi[static_cast<std::size_t>(k + level)]);
  }
  return pi;
}

SplitScheme relabel(const SplitScheme& split, int level) {
  require_room(split.double_prime, level);
  auto pi = relabel_permutation(split.double_prime.b(), level);
  SplitScheme out = split;
  out.double_prime = permute_indices(split.double_prime, pi);
  if (split.relabeling.empty()) {
    out.relabeling = pi;
  } else {
    for (auto& v : out.relabeling) v = pi[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

Subset restrict_subset(const Scheme& original, const Subset& subset, const SplitScheme& split, int part) {
  const Scheme& target = part == 0 ? split.prime : split.double_prime;
  Subset out;
  for (const auto& e : subset) {
    auto id = target.find_block(original.block_name(e.block));
    if (!id) continue;
    Element mapped{*id, e.index};
    if (part == 1 && !split.relabeling.empty()) mapped = permute(mapped, split.relabeling);
    out.push_back(mapped);
  }
  return normalize_subset(target, std::move(out));
}

StageSizes stage_sizes(const Scheme& scheme) {
  StageSizes out;
  for (int k = 1; k <= scheme.b(); ++k) {
    out.b.push_back(scheme.set_count(Table::B, k));
    out.c.push_back(scheme.set_count(Table::C, k));
  }
  return out;
}

StageSizes stage_sizes(const SplitScheme& split) {
  StageSizes p = stage_sizes(split.prime);
  StageSizes d = stage_sizes(split.double_prime);
  for (std::size_t k = 0; k < p.b.size(); ++k) {
    p.b[k] += d.b[k];
    p.c[k] += d.c[k];
  }
  return p;
}

ModifyResult modify(const Scheme& scheme, int level) {
  require_room(scheme, level);
  ModifyResult out;
  out.partition = partition_universe(scheme, level);
  out.split = split_tables(scheme, out.partition);
  out.swapped = swap_subtables(out.split);
  out.final = relabel(out.swapped, level);

  auto& rep = out.report;
  rep.level = level;
  rep.n = 4 * level;
  rep.stages[0] = stage_sizes(scheme);
  rep.stages[1] = stage_sizes(out.split);
  rep.stages[2] = stage_sizes(out.swapped);
  rep.stages[3] = stage_sizes(out.final);

  const auto& s0 = rep.stages[0];
  const auto& s1 = rep.stages[1];
  const auto& s2 = rep.stages[2];
  const auto& s3 = rep.stages[3];
  const int b = scheme.b();
  const int head = 2 * level + 2;
  rep.doubling_ok = rep.swap_conserved_ok = rep.relabel_sum_ok = true;
  long sum0 = 0, sum2 = 0, sum3 = 0;
  for (int k = 0; k < b; ++k) {
    auto ku = static_cast<std::size_t>(k);
    if (s1.b[ku] > 2 * s0.b[ku] || s1.c[ku] > 2 * s0.c[ku]) rep.doubling_ok = false;
    if (s2.b[ku] + s2.c[ku] != s1.b[ku] + s1.c[ku]) rep.swap_conserved_ok = false;
    if (k < head) {
      sum0 += s0.b[ku] + s0.c[ku];
      sum2 += s2.b[ku] + s2.c[ku];
      sum3 += s3.b[ku] + s3.c[ku];
    } else if (s3.b[ku] != s2.b[ku] || s3.c[ku] != s2.c[ku]) {
      rep.relabel_sum_ok = false;
    }
  }
  if (sum3 != sum2) rep.relabel_sum_ok = false;
  rep.doubling_sum_ok = sum2 <= 2 * sum0;

  for (int part = 0; part < 2; ++part) {
    const Scheme& sch = part == 0 ? out.final.prime : out.final.double_prime;
    for (BlockId blk = 0; blk < sch.block_count(); ++blk) {
      if (auto cert = badness(sch, Element{blk, 1}, Table::B, level)) {
        rep.goodness_failures.push_back({part, sch.block_name(blk), *cert});
      }
    }
  }
  rep.table_a_bits = static_cast<long>(out.final.prime.block_count() + out.final.double_prime.block_count());
  rep.table_b_bits = static_cast<long>(out.final.prime.table(Table::B).size() + out.final.double_prime.table(Table::B).size());
  rep.table_c_bits = static_cast<long>(out.final.prime.table(Table::C).size() + out.final.double_prime.table(Table::C).size());
  return out;
}

std::string report_to_csv(const TransformReport& report) {
  std::ostringstream out;
  out << "k,b0,c0,b1,c1,b2,c2,b3,c3\n";
  for (std::size_t k = 0; k < report.stages[0].b.size(); ++k) {
    out << (k + 1);
    for (const auto& st : report.stages) out << ',' << st.b[k] << ',' << st.c[k];
    out << '\n';
  }
  return out.str();
}

std::string report_to_json(const TransformReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["i"] = report.level;
  doc["n"] = report.n;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < report.stages[0].b.size(); ++k) {
    nlohmann::ordered_json row;
    row["k"] = k + 1;
    for (int st = 0; st < 4; ++st) {
      row["b" + std::to_string(st)] = report.stages[st].b[k];
      row["c" + std::to_string(st)] = report.stages[st].c[k];
    }
    rows.push_back(std::move(row));
  }
  doc["stages"] = std::move(rows);
  doc["doubling_ok"] = report.doubling_ok;
  doc["swap_conserved_ok"] = report.swap_conserved_ok;
  doc["relabel_sum_ok"] = report.relabel_sum_ok;
  doc["doubling_sum_ok"] = report.doubling_sum_ok;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.goodness_failures) {
    failures.push_back({{"part", f.part == 0 ? "prime" : "double_prime"}, {"block", f.block}, {"j", f.certificate.level}});
  }
  doc["goodness_failures"] = std::move(failures);
  doc["bits"] = {{"a", report.table_a_bits}, {"b", report.table_b_bits}, {"c", report.table_c_bits}};
  return doc.dump(indent);
}

}  // namespace bitprobe
