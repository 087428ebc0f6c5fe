#include "bitprobe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bitprobe/generator.hpp"
#include "bitprobe/storability.hpp"

namespace bitprobe {

double theorem_bound(double m, std::uint64_t n) {
  double exponent = 1.0 - 1.0 / static_cast<double>(n / 4 + 2);
  return std::pow(m / static_cast<double>(n), exponent);
}

std::optional<double> general_bound(double m, std::uint64_t n) {
  if (n < 4) return std::nullopt;
  double exponent = 1.0 - 1.0 / static_cast<double>(n / 4);
  return std::pow(m, exponent);
}

std::vector<BoundsRow> compare_bounds(std::span<const double> m_values, std::span<const std::uint64_t> n_values) {
  std::vector<BoundsRow> rows;
  for (double m : m_values) {
    for (std::uint64_t n : n_values) {
      BoundsRow row;
      row.m = m;
      row.n = n;
      row.restricted_bound = theorem_bound(m, n);
      row.general_bound = general_bound(m, n);
      row.crossover_flag = !row.general_bound || row.restricted_bound >= *row.general_bound;
      row.analytic_region =
          n <= 1 || static_cast<double>(n) <= std::sqrt(std::log(m) / std::log(static_cast<double>(n)));
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bounds_to_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "m,n,restricted_bound,general_bound,crossover_flag,analytic_region\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << r.restricted_bound << ',';
    if (r.general_bound) out << *r.general_bound;
    out << ',' << (r.crossover_flag ? 1 : 0) << ',' << (r.analytic_region ? 1 : 0) << '\n';
  }
  return out.str();
}

void require_index1_good(const Scheme& scheme, int t) {
  for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
    Element e{blk, 1};
    if (auto cert = badness(scheme, e, Table::B, t)) {
      throw PreconditionError(scheme.format(e) + " is not " + std::to_string(t) + "-good w.r.t. B (level " +
                              std::to_string(cert->level) + ", " + scheme.format(cert->u) + " and " +
                              scheme.format(cert->v) + ")");
    }
  }
}

IdentitySides universe_sum_sides(const Scheme& scheme, const Element& e1, int t, std::span<const std::int64_t> weights) {
  if (weights.size() != scheme.universe_size()) throw std::invalid_argument("one weight per element expected");
  IdentitySides sides;
  for (const auto& u : i_universe(scheme, e1, Table::B, t)) sides.universe_sum += weights[scheme.element_id(u)];

  // Nested sums keep every visit, so repeated elements count repeatedly.
  std::vector<Element> frontier{e1};
  for (int level = 1; level <= t; ++level) {
    Table step = universe_step_table(Table::B, level);
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& p : peers(scheme, x, step)) next.push_back({p.block, index_add(p.index, 1, scheme.b())});
    }
    frontier = std::move(next);
  }
  for (const auto& x : frontier) sides.nested_sum += weights[scheme.element_id(x)];
  return sides;
}

bool universe_sum_identity_check(const Scheme& scheme, int t, std::span<const std::int64_t> weights) {
  require_index1_good(scheme, t);
  for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
    auto sides = universe_sum_sides(scheme, {blk, 1}, t, weights);
    if (sides.universe_sum != sides.nested_sum) return false;
  }
  return true;
}

namespace {

long universe_total(const Scheme& scheme, int t) {
  long total = 0;
  for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
    total += static_cast<long>(i_universe(scheme, {blk, 1}, Table::B, t).size());
  }
  return total;
}

long sets_up_to(const Scheme& scheme, int last_index) {
  long sum = 0;
  for (int k = 1; k <= last_index; ++k) sum += scheme.set_count(Table::B, k) + scheme.set_count(Table::C, k);
  return sum;
}

}  // namespace

double universe_sum_ratio(const Scheme& scheme, int t) {
  require_index1_good(scheme, t);
  double s = static_cast<double>(scheme.block_count());
  double sets = static_cast<double>(sets_up_to(scheme, t));
  double scale = std::pow(s, t + 1) / std::pow(sets, t);
  return static_cast<double>(universe_total(scheme, t)) / scale;
}

SizeCheck goodness_size_check(const Scheme& scheme, int t) {
  require_index1_good(scheme, t);
  SizeCheck check;
  long s = static_cast<long>(scheme.block_count());
  Table target = path_end_table(Table::B, t);
  check.universe_total = universe_total(scheme, t);
  check.bound = s * scheme.set_count(target, index_add(1, t, scheme.b()));
  check.holds = check.universe_total <= check.bound;
  check.implied_ratio =
      std::pow(static_cast<double>(sets_up_to(scheme, t + 1)), t + 1) / std::pow(static_cast<double>(s), t);
  return check;
}

// ---------------------------------------------------------------------------
// Synthesis

bool stores_all_subsets(const Scheme& scheme, int n) {
  auto universe = scheme.universe();
  const int total = static_cast<int>(universe.size());
  for (int size = 0; size <= std::min(n, total); ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Subset subset;
      for (int p : pick) subset.push_back(universe[static_cast<std::size_t>(p)]);
      if (!can_store(scheme, subset).storable()) return false;
      int pos = size - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == total - size + pos) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < size; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return true;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Set partitions of {0..n-1} without singleton parts, via restricted growth
// strings.
std::vector<Partition> partitions_without_singletons(int n) {
  std::vector<Partition> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  auto emit = [&](int parts) {
    Partition p(static_cast<std::size_t>(parts));
    for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])].push_back(x);
    for (const auto& part : p) {
      if (part.size() < 2) return;
    }
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int x, int parts) -> void {
    if (x == n) {
      emit(parts);
      return;
    }
    for (int l = 0; l <= parts; ++l) {
      label[static_cast<std::size_t>(x)] = l;
      self(self, x + 1, std::max(parts, l + 1));
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return out;
}

// One partition per size profile, parts laid out on consecutive blocks in
// decreasing size. Every partition is a block relabeling of one of these.
std::vector<Partition> canonical_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> sizes;
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      Partition p;
      int next = 0;
      for (int size : sizes) {
        std::vector<int> part(static_cast<std::size_t>(size));
        std::iota(part.begin(), part.end(), next);
        next += size;
        p.push_back(std::move(part));
      }
      out.push_back(std::move(p));
      return;
    }
    for (int size = std::min(remaining, largest); size >= 2; --size) {
      sizes.push_back(size);
      self(self, remaining - size, size);
      sizes.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Scheme build_scheme(int s, int block_size, const std::vector<const Partition*>& slots) {
  std::vector<std::string> names;
  for (int i = 0; i < s; ++i) names.push_back(block_label(i));
  std::vector<SetRecord> tables[2];
  // slots[2 * (k - 1) + t] is the partition of index k in table t.
  for (int k = 1; k <= block_size; ++k) {
    for (int t = 0; t < 2; ++t) {
      for (const auto& part : *slots[static_cast<std::size_t>(2 * (k - 1) + t)]) {
        SetRecord rec;
        rec.table = static_cast<Table>(t);
        rec.bit = static_cast<int>(tables[t].size());
        rec.index = k;
        for (int x : part) rec.members.push_back({static_cast<BlockId>(x), k});
        tables[t].push_back(std::move(rec));
      }
    }
  }
  return Scheme(s * block_size, s, block_size, std::move(names), std::move(tables[0]), std::move(tables[1]));
}

}  // namespace

SynthResult synth_min_space(int n, int m, int b, SynthOptions options) {
  if (n < 0 || m < 1 || b < 1) throw std::invalid_argument("synthesis needs n >= 0, m >= 1, b >= 1");
  SynthResult result;
  result.n = n;
  result.m = m;
  result.b = b;
  bool all_complete = true;
  int smallest = (m + b - 1) / b;
  for (int s = std::max(smallest, 2); s <= m; ++s) {
    if (m % s != 0) continue;
    const int block_size = m / s;
    const auto all = partitions_without_singletons(s);
    const auto first = canonical_partitions(s);
    const int slots = 2 * block_size;

    std::vector<std::size_t> odometer(static_cast<std::size_t>(slots), 0);
    long examined = 0;
    bool complete = true;
    while (true) {
      if (examined >= options.budget) {
        complete = false;
        break;
      }
      std::vector<const Partition*> chosen;
      chosen.push_back(&first[odometer[0]]);
      for (int slot = 1; slot < slots; ++slot) chosen.push_back(&all[odometer[static_cast<std::size_t>(slot)]]);
      Scheme scheme = build_scheme(s, block_size, chosen);
      ++examined;
      ++result.schemes_examined;
      if (stores_all_subsets(scheme, n)) {
        result.minimal_s = s;
        result.witness_b = block_size;
        result.witness = std::move(scheme);
        result.exhaustive = all_complete;
        return result;
      }
      int slot = slots - 1;
      for (; slot >= 0; --slot) {
        auto limit = slot == 0 ? first.size() : all.size();
        if (++odometer[static_cast<std::size_t>(slot)] < limit) break;
        odometer[static_cast<std::size_t>(slot)] = 0;
      }
      if (slot < 0) break;
    }
    all_complete = all_complete && complete;
  }
  result.exhaustive = all_complete;
  return result;
}

std::string synth_to_csv(const std::vector<SynthResult>& rows) {
  std::ostringstream out;
  out << "n,m,b,minimal_s,witness_b,exhaustive,schemes_examined\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.b << ',';
    if (r.minimal_s) out << *r.minimal_s;
    out << ',';
    if (r.minimal_s) out << r.witness_b;
    out << ',' << (r.exhaustive ? 1 : 0) << ',' << r.schemes_examined << '\n';
  }
  return out.str();
}

}  // namespace bitprobe
