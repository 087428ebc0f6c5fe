#include "bitprobe/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bitprobe/adversary.hpp"
#include "bitprobe/analysis.hpp"
#include "bitprobe/generator.hpp"
#include "bitprobe/model.hpp"
#include "bitprobe/storability.hpp"
#include "bitprobe/transform.hpp"
#include "bitprobe/universe.hpp"

namespace bitprobe::cli {

using json = nlohmann::ordered_json;

namespace {

// Raised for malformed flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    auto first = item.find_first_not_of(' ');
    auto last = item.find_last_not_of(' ');
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return out;
}

Element element_arg(const Scheme& scheme, const std::string& text) {
  try {
    return scheme.parse_element(text);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

Subset subset_arg(const Scheme& scheme, const std::string& text) {
  try {
    return parse_subset(scheme, text);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

Table table_arg(const std::string& text) {
  try {
    return parse_table(text);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

// "a:1,b:1,B"
Node node_arg(const Scheme& scheme, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("node '" + text + "' is not of the form blk:k,blk:k,T");
  Node node{table_arg(parts[2]), element_arg(scheme, parts[0]), element_arg(scheme, parts[1])};
  try {
    check_node(scheme, node);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return node;
}

BlockId block_arg(const Scheme& scheme, const std::string& name) {
  auto blk = scheme.find_block(name);
  if (!blk) throw UsageError("unknown block '" + name + "'");
  return *blk;
}

json element_json(const Scheme& scheme, const Element& e) { return scheme.format(e); }

json subset_json(const Scheme& scheme, const Subset& subset) {
  json out = json::array();
  for (const auto& e : subset) out.push_back(element_json(scheme, e));
  return out;
}

json node_json(const Scheme& scheme, const Node& n) {
  return {{"table", std::string(to_string(n.table))},
          {"antecedent", scheme.format(n.antecedent)},
          {"consequent", scheme.format(n.consequent)}};
}

json path_json(const Scheme& scheme, const Path& p) {
  json out = json::array();
  for (const auto& n : p.nodes) out.push_back(node_json(scheme, n));
  return out;
}

json trace_json(const Scheme& scheme, const ConflictTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json item{{"from", scheme.block_name(step.from)},
              {"from_table", std::string(to_string(step.from_table))},
              {"to", scheme.block_name(step.to)},
              {"to_table", std::string(to_string(step.to_table))},
              {"pinned", step.pinned}};
    if (!step.pinned) {
      item["set"] = {{"table", std::string(to_string(step.set.table))}, {"bit", scheme.set(step.set).bit}};
      item["member"] = scheme.format(step.member);
      item["non_member"] = scheme.format(step.non_member);
    }
    item["text"] = describe(scheme, step);
    steps.push_back(std::move(item));
  }
  json out;
  if (scheme.block_count() > 0) out["block"] = scheme.block_name(trace.block);
  out["steps"] = std::move(steps);
  return out;
}

json assignment_json(const Scheme& scheme, const Assignment& asg) {
  json a;
  for (BlockId blk = 0; blk < scheme.block_count(); ++blk) a[scheme.block_name(blk)] = asg.a_bits[blk];
  return {{"a", a}, {"b", asg.b_bits}, {"c", asg.c_bits}};
}

json certificate_json(const Scheme& scheme, const AdversaryPair& pair) {
  return json::parse(certificate_to_json(scheme, pair));
}

json certify_json(const CertificateResult& res, const Scheme& scheme) {
  json out{{"pass", res.pass}};
  if (res.forced) out["forced"] = std::string(to_string(*res.forced));
  if (res.trace) out["trace"] = trace_json(scheme, *res.trace);
  out["detail"] = res.detail;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string scheme_path;
  std::string subset;
  std::string table = "B";
  std::string element;
  std::string block;
  std::string start;
  std::string end;
  std::string certificate;
  std::string format = "json";
  std::string m_list;
  std::string n_list;
  int i = 1;
  int t = 1;
  int length = 1;
  int n = 0;
  int m = 0;
  int b = 0;
  int s = 0;
  long budget = SynthOptions{}.budget;
  std::uint64_t seed = 0;
  std::int64_t weight_max = 1000;
  int good_t = 0;
  int consistent_i = 0;
  bool override_cap = false;
  bool relaxed = false;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_validate(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  auto report = validate(scheme, {o.relaxed});
  if (o.format == "csv") {
    out << "severity,kind,message\n";
    for (const auto& v : report.violations) out << "violation," << to_string(v.kind) << ",\"" << v.message << "\"\n";
    for (const auto& v : report.flagged) out << "flagged," << to_string(v.kind) << ",\"" << v.message << "\"\n";
  } else {
    auto list = [](const std::vector<Violation>& vs) {
      json arr = json::array();
      for (const auto& v : vs) arr.push_back({{"kind", std::string(to_string(v.kind))}, {"message", v.message}});
      return arr;
    };
    emit(out, {{"valid", report.ok()}, {"violations", list(report.violations)}, {"flagged", list(report.flagged)}});
  }
  return report.ok() ? kOk : kNegative;
}

int cmd_store(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  Subset subset = subset_arg(scheme, o.subset);
  auto result = can_store(scheme, subset);
  json doc{{"subset", subset_json(scheme, subset)}, {"storable", result.storable()}};
  if (result.storable()) {
    doc["assignment"] = assignment_json(scheme, result.assignment());
  } else {
    doc["trace"] = trace_json(scheme, result.trace());
  }
  if (!o.block.empty()) doc["forced"] = std::string(to_string(forced_table(scheme, subset, block_arg(scheme, o.block))));
  emit(out, doc);
  return result.storable() ? kOk : kNegative;
}

int cmd_query(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  Subset subset = subset_arg(scheme, o.subset);
  auto result = can_store(scheme, subset);
  if (!result.storable()) {
    emit(out, {{"storable", false}, {"trace", trace_json(scheme, result.trace())}});
    return kNegative;
  }
  const auto& asg = result.assignment();
  std::vector<Element> targets;
  if (o.element.empty()) {
    targets = scheme.universe();
  } else {
    targets.push_back(element_arg(scheme, o.element));
  }
  json answers = json::array();
  for (const auto& e : targets) {
    Table probe = asg.a_bits[e.block] == 0 ? Table::B : Table::C;
    bool member = std::binary_search(subset.begin(), subset.end(), e);
    answers.push_back({{"element", scheme.format(e)},
                       {"table", std::string(to_string(probe))},
                       {"answer", answer_query(scheme, asg, e)},
                       {"member", member}});
  }
  emit(out, {{"storable", true}, {"answers", answers}});
  return kOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  Node start = node_arg(scheme, o.start);
  std::optional<Node> end;
  if (!o.end.empty()) end = node_arg(scheme, o.end);
  auto all = enumerate_paths(scheme, start, o.length, o.override_cap);
  std::vector<Path> kept;
  for (auto& p : all) {
    if (!end || p.last() == *end) kept.push_back(std::move(p));
  }
  if (o.format == "csv") {
    out << "path,position,table,antecedent,consequent\n";
    for (std::size_t k = 0; k < kept.size(); ++k) {
      for (std::size_t pos = 0; pos < kept[k].nodes.size(); ++pos) {
        const auto& n = kept[k].nodes[pos];
        out << k << ',' << pos << ',' << to_string(n.table) << ',' << scheme.format(n.antecedent) << ','
            << scheme.format(n.consequent) << '\n';
      }
    }
  } else {
    json paths = json::array();
    for (const auto& p : kept) paths.push_back(path_json(scheme, p));
    emit(out, {{"count", kept.size()}, {"paths", paths}});
  }
  return kOk;
}

int cmd_universe(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  Element e = element_arg(scheme, o.element);
  Table table = table_arg(o.table);
  auto members = i_universe(scheme, e, table, o.i, o.override_cap);
  if (o.format == "csv") {
    out << "element\n";
    for (const auto& u : members) out << scheme.format(u) << '\n';
  } else {
    emit(out, {{"element", scheme.format(e)},
               {"table", std::string(to_string(table))},
               {"i", o.i},
               {"members", subset_json(scheme, members)}});
  }
  return kOk;
}

int cmd_badness(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  Element e = element_arg(scheme, o.element);
  Table table = table_arg(o.table);
  auto cert = badness(scheme, e, table, o.i, o.override_cap);
  json doc{{"element", scheme.format(e)}, {"table", std::string(to_string(table))}, {"i", o.i}, {"bad", cert.has_value()}};
  if (cert) {
    const auto& rec = scheme.set(cert->witness_set);
    doc["j"] = cert->level;
    doc["u"] = scheme.format(cert->u);
    doc["v"] = scheme.format(cert->v);
    doc["witness"] = {{"table", std::string(to_string(rec.table))}, {"bit", rec.bit}};
  }
  emit(out, doc);
  return cert ? kNegative : kOk;
}

int cmd_adversary(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  if (!o.certificate.empty()) {
    AdversaryPair pair = certificate_from_json(scheme, read_file(o.certificate));
    auto res = certify(scheme, pair);
    emit(out, certify_json(res, scheme));
    return res.pass ? kOk : kNegative;
  }
  Element e = element_arg(scheme, o.element);
  Table table = table_arg(o.table);
  try {
    AdversaryPair pair = adversarial_pair(scheme, e, table, o.i, o.override_cap);
    emit(out, {{"certificate", certificate_json(scheme, pair)}, {"check", certify_json(certify(scheme, pair), scheme)}});
    return kOk;
  } catch (const NotBadError& ex) {
    emit(out, {{"element", scheme.format(e)}, {"bad", false}, {"detail", ex.what()}});
    return kNegative;
  }
}

int cmd_contradiction(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  std::vector<BlockId> blocks;
  if (o.block.empty()) {
    for (BlockId blk = 0; blk < scheme.block_count(); ++blk) blocks.push_back(blk);
  } else {
    blocks.push_back(block_arg(scheme, o.block));
  }
  json found = json::array();
  for (BlockId blk : blocks) {
    if (auto pair = two_table_contradiction(scheme, blk, o.i)) {
      found.push_back({{"certificate", certificate_json(scheme, *pair)},
                       {"check", certify_json(certify(scheme, *pair), scheme)}});
    }
  }
  bool any = !found.empty();
  emit(out, {{"i", o.i}, {"contradiction", any}, {"certificates", found}});
  return any ? kNegative : kOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  auto result = modify(scheme, o.i);
  if (o.format == "csv") {
    out << report_to_csv(result.report);
  } else {
    json doc{{"good", result.partition.good}, {"bad", result.partition.bad}};
    doc["report"] = json::parse(report_to_json(result.report));
    doc["prime"] = json::parse(scheme_to_json(result.final.prime));
    doc["double_prime"] = json::parse(scheme_to_json(result.final.double_prime));
    doc["relabeling"] = result.final.relabeling;
    emit(out, doc);
  }
  return result.report.ok() ? kOk : kNegative;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  std::vector<double> ms;
  std::vector<std::uint64_t> ns;
  try {
    for (const auto& item : split(o.m_list, ',')) {
      // "2^64" is accepted as a power of two.
      if (auto caret = item.find('^'); caret != std::string::npos) {
        ms.push_back(std::pow(std::stod(item.substr(0, caret)), std::stod(item.substr(caret + 1))));
      } else {
        ms.push_back(std::stod(item));
      }
    }
    for (const auto& item : split(o.n_list, ',')) ns.push_back(std::stoull(item));
  } catch (const std::exception&) {
    throw UsageError("--m and --n take comma-separated numbers");
  }
  for (auto n : ns) {
    if (n < 1) throw UsageError("n must be positive");
  }
  auto rows = compare_bounds(ms, ns);
  if (o.format == "csv") {
    out << bounds_to_csv(rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json row{{"m", r.m}, {"n", r.n}, {"restricted_bound", r.restricted_bound}};
      row["general_bound"] = r.general_bound ? json(*r.general_bound) : json(nullptr);
      row["crossover_flag"] = r.crossover_flag;
      row["analytic_region"] = r.analytic_region;
      arr.push_back(std::move(row));
    }
    emit(out, arr);
  }
  return kOk;
}

int cmd_identity(const Options& o, std::ostream& out) {
  Scheme scheme = load_scheme(o.scheme_path);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> draw(-o.weight_max, o.weight_max);
  std::vector<std::int64_t> weights(scheme.universe_size());
  for (auto& w : weights) w = draw(rng);
  try {
    bool holds = universe_sum_identity_check(scheme, o.t, weights);
    auto size = goodness_size_check(scheme, o.t);
    double ratio = universe_sum_ratio(scheme, o.t);
    if (o.format == "csv") {
      out << "element,universe_sum,nested_sum\n";
      for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
        auto sides = universe_sum_sides(scheme, {blk, 1}, o.t, weights);
        out << scheme.format({blk, 1}) << ',' << sides.universe_sum << ',' << sides.nested_sum << '\n';
      }
    } else {
      json rows = json::array();
      for (BlockId blk = 0; blk < scheme.block_count(); ++blk) {
        auto sides = universe_sum_sides(scheme, {blk, 1}, o.t, weights);
        rows.push_back({{"element", scheme.format({blk, 1})},
                        {"universe_sum", sides.universe_sum},
                        {"nested_sum", sides.nested_sum}});
      }
      emit(out, {{"t", o.t},
                 {"seed", o.seed},
                 {"identity_holds", holds},
                 {"rows", rows},
                 {"ratio", ratio},
                 {"size_check",
                  {{"universe_total", size.universe_total},
                   {"bound", size.bound},
                   {"holds", size.holds},
                   {"implied_ratio", size.implied_ratio}}}});
    }
    return holds && size.holds ? kOk : kNegative;
  } catch (const PreconditionError& ex) {
    emit(out, {{"t", o.t}, {"precondition", false}, {"detail", ex.what()}});
    return kNegative;
  }
}

int cmd_synth(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.m < 1 || o.b < 1) throw UsageError("synth needs --n >= 0, --m >= 1, --b >= 1");
  auto result = synth_min_space(o.n, o.m, o.b, {o.budget});
  if (o.format == "csv") {
    out << synth_to_csv({result});
  } else {
    json doc{{"n", result.n}, {"m", result.m}, {"b", result.b}};
    doc["minimal_s"] = result.minimal_s ? json(*result.minimal_s) : json(nullptr);
    doc["witness_b"] = result.minimal_s ? json(result.witness_b) : json(nullptr);
    doc["exhaustive"] = result.exhaustive;
    doc["schemes_examined"] = result.schemes_examined;
    doc["witness"] = result.witness ? json::parse(scheme_to_json(*result.witness)) : json(nullptr);
    emit(out, doc);
  }
  return result.minimal_s ? kOk : kNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.s < 2 || o.b < 1) throw UsageError("gen needs --s >= 2 and --b >= 1");
  RandomSchemeParams params;
  params.s = o.s;
  params.b = o.b;
  std::mt19937_64 rng(o.seed);
  std::optional<Scheme> scheme;
  if (o.consistent_i > 0) {
    scheme = random_consistent_scheme(params, o.consistent_i, rng);
  } else if (o.good_t > 0) {
    scheme = random_good_scheme(params, o.good_t, rng);
  } else {
    scheme = random_scheme(params, rng);
  }
  if (!scheme) {
    emit(out, {{"generated", false}, {"detail", "no scheme met the requested condition"}});
    return kNegative;
  }
  out << scheme_to_json(*scheme) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted two-adaptive bitprobe scheme toolkit", "bitprobe"};
  app.require_subcommand(1, 1);
  Options o;

  auto scheme_opt = [&](CLI::App* sub) { sub->add_option("--scheme", o.scheme_path, "scheme JSON file")->required(); };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto cap_opt = [&](CLI::App* sub) { sub->add_flag("--override-cap", o.override_cap, "allow levels above b/2 - 1"); };

  auto* validate_cmd = app.add_subcommand("validate", "check a scheme against the restricted-scheme rules");
  scheme_opt(validate_cmd);
  format_opt(validate_cmd);
  validate_cmd->add_flag("--relaxed", o.relaxed, "tolerate singleton sets and missing blocks");

  auto* store_cmd = app.add_subcommand("store", "decide whether a subset can be stored");
  scheme_opt(store_cmd);
  store_cmd->add_option("--subset", o.subset, "elements as blk:k, comma separated")->required();
  store_cmd->add_option("--block", o.block, "also report the forced table of this block");

  auto* query_cmd = app.add_subcommand("query", "store a subset and answer membership queries");
  scheme_opt(query_cmd);
  query_cmd->add_option("--subset", o.subset)->required();
  query_cmd->add_option("--element", o.element, "single element to query; all when omitted");

  auto* paths_cmd = app.add_subcommand("paths", "enumerate paths from a node");
  scheme_opt(paths_cmd);
  paths_cmd->add_option("--start", o.start, "first node as blk:k,blk:k,T")->required();
  paths_cmd->add_option("--end", o.end, "keep only paths ending at this node");
  paths_cmd->add_option("--length", o.length)->required()->check(CLI::NonNegativeNumber);
  format_opt(paths_cmd);
  cap_opt(paths_cmd);

  auto* universe_cmd = app.add_subcommand("universe", "i-Universe of an element");
  scheme_opt(universe_cmd);
  universe_cmd->add_option("--element", o.element)->required();
  universe_cmd->add_option("--table", o.table);
  universe_cmd->add_option("--i", o.i)->required();
  format_opt(universe_cmd);
  cap_opt(universe_cmd);

  auto* badness_cmd = app.add_subcommand("badness", "test whether an element is i-bad");
  scheme_opt(badness_cmd);
  badness_cmd->add_option("--element", o.element)->required();
  badness_cmd->add_option("--table", o.table);
  badness_cmd->add_option("--i", o.i)->required();
  cap_opt(badness_cmd);

  auto* adversary_cmd = app.add_subcommand("adversary", "build or check an adversarial certificate");
  scheme_opt(adversary_cmd);
  adversary_cmd->add_option("--element", o.element);
  adversary_cmd->add_option("--table", o.table);
  adversary_cmd->add_option("--i", o.i);
  adversary_cmd->add_option("--certificate", o.certificate, "certificate JSON file to check instead");
  cap_opt(adversary_cmd);

  auto* contradiction_cmd = app.add_subcommand("contradiction", "search for two-table contradictions");
  scheme_opt(contradiction_cmd);
  contradiction_cmd->add_option("--i", o.i)->required();
  contradiction_cmd->add_option("--block", o.block, "single block; all when omitted");

  auto* transform_cmd = app.add_subcommand("transform", "run the split / swap / relabel pipeline");
  scheme_opt(transform_cmd);
  transform_cmd->add_option("--i", o.i)->required();
  format_opt(transform_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "tabulate the restricted and general lower bounds");
  bounds_cmd->add_option("--m", o.m_list, "comma-separated m values, 2^k allowed")->required();
  bounds_cmd->add_option("--n", o.n_list, "comma-separated n values")->required();
  format_opt(bounds_cmd);

  auto* identity_cmd = app.add_subcommand("identity", "universe-sum identity and size checks");
  scheme_opt(identity_cmd);
  identity_cmd->add_option("--t", o.t)->required();
  identity_cmd->add_option("--seed", o.seed, "weight seed")->required();
  identity_cmd->add_option("--weight-max", o.weight_max, "weights drawn from [-w, w]");
  format_opt(identity_cmd);

  auto* synth_cmd = app.add_subcommand("synth", "smallest scheme storing every subset of size <= n");
  synth_cmd->add_option("--n", o.n)->required();
  synth_cmd->add_option("--m", o.m)->required();
  synth_cmd->add_option("--b", o.b)->required();
  synth_cmd->add_option("--budget", o.budget, "schemes examined per candidate size");
  format_opt(synth_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "random restricted scheme");
  gen_cmd->add_option("--s", o.s)->required();
  gen_cmd->add_option("--b", o.b)->required();
  gen_cmd->add_option("--seed", o.seed)->required();
  gen_cmd->add_option("--good-t", o.good_t, "resample until index-1 elements are t-good w.r.t. B");
  gen_cmd->add_option("--consistent-i", o.consistent_i, "resample until no two-table contradiction at i");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "validate") return cmd_validate(o, out);
    if (name == "store") return cmd_store(o, out);
    if (name == "query") return cmd_query(o, out);
    if (name == "paths") return cmd_paths(o, out);
    if (name == "universe") return cmd_universe(o, out);
    if (name == "badness") return cmd_badness(o, out);
    if (name == "adversary") {
      if (o.certificate.empty() && o.element.empty()) throw UsageError("adversary needs --element or --certificate");
      return cmd_adversary(o, out);
    }
    if (name == "contradiction") return cmd_contradiction(o, out);
    if (name == "transform") return cmd_transform(o, out);
    if (name == "bounds") return cmd_bounds(o, out);
    if (name == "identity") return cmd_identity(o, out);
    if (name == "synth") return cmd_synth(o, out);
    if (name == "gen") return cmd_gen(o, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    // Includes range errors on levels and unsatisfiable pipeline sizes.
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& ex) {
    // Unreadable input files.
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  err << "error: unknown command '" << name << "'\n";
  return kUsage;
}

}  // namespace bitprobe::cli
