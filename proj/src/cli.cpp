#include "cutsetlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cutsetlab/complex.hpp"
#include "cutsetlab/cutsets.hpp"
#include "cutsetlab/graph.hpp"
#include "cutsetlab/s2.hpp"
#include "cutsetlab/set_system.hpp"
#include "cutsetlab/sweep.hpp"

namespace cutsetlab::cli {

namespace {

// Raised for bad flags or caps that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_significant_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    return line.substr(start, end - start + 1);
  }
  return {};
}

Graph load_graph(const std::string& path, bool graph6) {
  const std::string text = read_input(path);
  if (!graph6) return parse_graph_text(text);
  const std::string line = first_significant_line(text);
  if (line.empty()) throw InputError("graph6 input is empty");
  return parse_graph6(line);
}

VertexSet parse_set(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto start = item.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    item = item.substr(start, item.find_last_not_of(" \t") - start + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || v > kMaxVertices) {
      throw UsageError("bad vertex '" + item + "' in list '" + text + "'");
    }
    if (out.contains(v)) throw UsageError("vertex " + item + " repeated in '" + text + "'");
    out.insert(v);
  }
  return out;
}

VertexSet checked_set(const Graph& g, const std::string& text, const char* flag) {
  const VertexSet s = parse_set(text);
  if (!s.subset_of(g.vertices())) {
    throw UsageError(std::string(flag) + " names a vertex outside 1.." + std::to_string(g.order()));
  }
  return s;
}

int order_cap() {
  const char* env = std::getenv("CUTSETLAB_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("CUTSETLAB_MAX_N must be a positive integer");
  return static_cast<int>(std::min<long>(v, kSweepHardCap));
}

void require_cap(int n) {
  const int cap = order_cap();
  if (n > cap) {
    throw UsageError("order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                     " (CUTSETLAB_MAX_N raises it up to " + std::to_string(kSweepHardCap) + ")");
  }
}

void require_connected(const Graph& g, const char* command) {
  if (!is_connected(g)) {
    throw UsageError(std::string(command) +
                     " needs a connected graph; run it on each component separately");
  }
}

std::string family_string(const std::vector<VertexSet>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ",";
    out += sets[i].empty() ? "∅" : sets[i].to_string();
  }
  return out + "}";
}

struct Common {
  std::string input;
  bool graph6 = false;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
  if (with_input) {
    sub->add_option("graph", c.input, "graph file in text format, or - for stdin")->required();
    sub->add_flag("--graph6", c.graph6, "read the input as graph6");
  }
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

class Printer {
 public:
  Printer(std::ostream& out, const std::string& format) : out_(out), json_(format == "json") {}

  bool json_mode() const { return json_; }

  void emit(const json& j, const std::string& text) const {
    if (json_) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

 private:
  std::ostream& out_;
  bool json_;
};

std::string report_text(const std::string& label, const VerdictReport& r) {
  std::string out = label + ": " + (r.verdict ? "true" : "false");
  if (!r.applicable) out += " (hypotheses unmet)";
  out += "\n";
  if (!r.witness.is_null()) out += "  witness: " + r.witness.dump() + "\n";
  return out;
}

int cmd_cutsets(const Common& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.graph6);
  const CutSetFamily family = cut_sets(g);
  const VerdictReport unmixed = check_unmixed(g);
  json j = {{"n", g.order()},
            {"cut_sets", to_json(family.sets)},
            {"unmixed", unmixed.verdict},
            {"unmixed_witness", unmixed.witness}};
  std::string text = "C(G) = " + family_string(family.sets) + "\n";
  text += "unmixed: " + std::string(unmixed.verdict ? "true" : "false") + "\n";
  if (!unmixed.verdict) text += "  witness: " + unmixed.witness.dump() + "\n";
  Printer(out, c.format).emit(j, text);
  return kExitTrue;
}

int cmd_accessible(const Common& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.graph6);
  const SetSystem sys = SetSystem::from(cut_sets(g));
  const VerdictReport graph = is_accessible_graph(g);
  const VerdictReport system = is_accessible(sys);
  const VerdictReport strong = is_strongly_accessible(sys);
  const VerdictReport unmixed = check_unmixed(g);
  json j = {{"accessible_graph", graph.to_json()},
            {"accessible_system", system.to_json()},
            {"strongly_accessible", strong.to_json()},
            {"unmixed", unmixed.to_json()}};
  const std::string text = report_text("accessible graph", graph) +
                           report_text("accessible cut-set system", system) +
                           report_text("strongly accessible cut-set system", strong) +
                           report_text("unmixed", unmixed);
  Printer(out, c.format).emit(j, text);
  return graph.verdict ? kExitTrue : kExitFalse;
}

int cmd_complex(const Common& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.graph6);
  require_connected(g, "complex");
  const std::vector<Facet> facets = delta_facets(g);
  const SimplicialComplex delta = delta_complex(g);
  json list = json::array();
  std::string text;
  for (const Facet& f : facets) {
    list.push_back(to_json(f, g.order()));
    text += f.face(g.order()).to_string() + "\n";
  }
  const bool pure = is_pure(delta);
  const int dim = dimension(delta);
  json j = {{"n", g.order()}, {"facets", list}, {"pure", pure}, {"dimension", dim}};
  text += "facets: " + std::to_string(facets.size()) + "\n";
  text += "pure: " + std::string(pure ? "true" : "false") + "\n";
  text += "dimension: " + std::to_string(dim) + "\n";
  Printer(out, c.format).emit(j, text);
  return kExitTrue;
}

int cmd_s2(const Common& c, bool force_complex, std::ostream& out) {
  const std::string text = read_input(c.input);
  const std::string head = first_significant_line(text);
  const bool is_complex =
      force_complex || (!c.graph6 && !head.empty() && (head[0] == 'x' || head[0] == 'y'));
  SimplicialComplex complex;
  if (is_complex) {
    complex = parse_complex_text(text);
  } else {
    const Graph g = c.graph6 ? parse_graph6(head) : parse_graph_text(text);
    require_connected(g, "s2");
    complex = delta_complex(g);
  }
  const VerdictReport r = satisfies_s2(complex);
  Printer(out, c.format).emit(r.to_json(), report_text("s2", r));
  return r.verdict ? kExitTrue : kExitFalse;
}

int cmd_reduce(const Common& c, const std::string& set, const std::string& avoid,
               std::ostream& out) {
  const Graph g = load_graph(c.input, c.graph6);
  const VertexSet u = checked_set(g, set, "--set");
  const VertexSet a = checked_set(g, avoid, "--avoid");
  if (u == g.vertices()) throw UsageError("--set must be a proper subset of the vertices");
  if (!a.subset_of(u)) throw UsageError("--avoid must be contained in --set");
  const ReductionOutcome r = reduce_to_cut_set(g, u, a);
  const ReductionTrace& t = r.trace;
  json j = {{"status", r.ok() ? "ok" : "avoid-infeasible"},
            {"input", to_json(t.input)},
            {"result", to_json(t.result)},
            {"removed_order", t.removed_order},
            {"avoid", to_json(t.avoid)},
            {"c_input", component_count(g, t.input)},
            {"c_result", component_count(g, t.result)}};
  std::string text = "status: " + j["status"].get<std::string>() + "\n";
  text += "result: " + t.result.to_string() + "\n";
  text += "removed_order: " + j["removed_order"].dump() + "\n";
  Printer(out, c.format).emit(j, text);
  return r.ok() ? kExitTrue : kExitFalse;
}

struct LemmaArgs {
  std::string variant;
  std::string t1, t2, w1, w2;
};

int cmd_lemma(const Common& c, const LemmaArgs& a, std::ostream& out) {
  const Graph g = load_graph(c.input, c.graph6);
  const auto variant = parse_bridging_variant(a.variant);
  if (!variant) throw UsageError("unknown variant '" + a.variant + "'");
  BridgingQuery q{checked_set(g, a.t1, "--t1"), checked_set(g, a.t2, "--t2"),
                  checked_set(g, a.w1, "--w1"), checked_set(g, a.w2, "--w2")};
  if (*variant == BridgingVariant::shared_transversal && a.w2.empty()) q.w2 = q.w1;
  const VerdictReport r = find_bridging_cutset(g, q, *variant);
  std::string text = report_text("bridging cut set", r);
  if (r.verdict) text = "T = " + vertex_set_from_json(r.witness.at("T")).to_string() + "\n" + text;
  Printer(out, c.format).emit(r.to_json(), text);
  return r.verdict ? kExitTrue : kExitFalse;
}

struct SweepArgs {
  int max_n = 0;
  int min_n = 1;
  std::vector<std::string> checks;
  std::string range;
  int workers = 1;
  bool all_graphs = false;
  std::string witness_out;
};

MaskRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects lo:hi");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    MaskRange r{std::stoull(lo, &a, 0), std::stoull(hi, &b, 0)};
    if (a != lo.size() || b != hi.size() || r.lo > r.hi) throw UsageError("");
    return r;
  } catch (const std::exception&) {
    throw UsageError("--range expects lo:hi with lo <= hi, got '" + text + "'");
  }
}

int cmd_sweep(const Common& c, const SweepArgs& a, std::ostream& out) {
  require_cap(a.max_n);
  SweepConfig config;
  config.max_n = a.max_n;
  config.min_n = a.min_n;
  config.connected_only = !a.all_graphs;
  config.workers = a.workers;
  if (config.min_n < 1 || config.min_n > config.max_n) {
    throw UsageError("need 1 <= --min-n <= --max-n");
  }
  if (config.workers < 1) throw UsageError("--workers must be positive");
  if (!a.range.empty()) config.range = parse_range(a.range);
  for (const std::string& name : a.checks) {
    if (name == "all") {
      config.checks = all_sweep_checks();
      continue;
    }
    const auto check = parse_sweep_check(name);
    if (!check) throw UsageError("unknown check '" + name + "'");
    config.checks.push_back(*check);
  }
  const std::vector<SweepSummary> summaries = sweep(config);
  json all = json::array();
  std::string text;
  bool failed = false;
  for (const SweepSummary& s : summaries) {
    all.push_back(s.to_json());
    text += s.check + ": graphs=" + std::to_string(s.graphs) +
            " failures=" + std::to_string(s.failures) + " elapsed_ms=" +
            std::to_string(s.elapsed_ms) + "\n";
    if (s.failures > 0 && !failed) {
      failed = true;
      text += "  witness graph:\n" + s.witness["graph"].get<std::string>();
      text += "  payload: " + s.witness["payload"].dump() + "\n";
      if (!a.witness_out.empty()) {
        std::ofstream file(a.witness_out);
        if (!file) throw InputError("cannot write '" + a.witness_out + "'");
        file << s.witness.dump(2) << "\n";
      }
    }
  }
  Printer(out, c.format).emit(all.size() == 1 ? all[0] : all, text);
  return failed ? kExitFalse : kExitTrue;
}

SetSystem load_system(const std::string& path) {
  const std::string text = read_input(path);
  json j;
  try {
    j = json::parse(text);
    return SetSystem::from_json(j);
  } catch (const json::exception& e) {
    throw InputError("set system '" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError("set system '" + path + "': " + e.what());
  }
}

int cmd_realize(const Common& c, const std::string& system, int max_n, std::ostream& out) {
  const SetSystem sys = load_system(system);
  require_cap(max_n);
  if (!sys.contains(VertexSet{})) throw UsageError("the set system must contain the empty set");
  if (max_n < sys.ground_n()) throw UsageError("--max-n is below the ground set size");
  const VerdictReport r = realize_system(sys, max_n);
  std::string text;
  if (r.verdict) {
    text = "realized on " + std::to_string(r.witness["n"].get<int>()) + " vertices:\n" +
           r.witness["graph"].get<std::string>();
  } else {
    text = "none within bound (max_n = " + std::to_string(max_n) + ")\n";
  }
  Printer(out, c.format).emit(r.to_json(), text);
  return r.verdict ? kExitTrue : kExitFalse;
}

int cmd_system(const Common& c, const std::string& system, std::ostream& out) {
  const SetSystem sys = load_system(system);
  const VerdictReport acc = is_accessible(sys);
  json j = {{"system", sys.to_json()}, {"accessible", acc.to_json()}};
  std::string text = "system: " + family_string(sys.sets()) + "\n" + report_text("accessible", acc);
  if (sys.contains(VertexSet{})) {
    json forms = json::object();
    bool agree = true;
    const VerdictReport reference = is_strongly_accessible(sys, StrongForm::deletion);
    for (auto [form, name] : {std::pair{StrongForm::augmentation, "augmentation"},
                              std::pair{StrongForm::deletion, "deletion"},
                              std::pair{StrongForm::chain, "chain"}}) {
      const VerdictReport r = is_strongly_accessible(sys, form);
      forms[name] = r.to_json();
      agree = agree && r.verdict == reference.verdict;
    }
    j["strongly_accessible"] = forms;
    j["forms_agree"] = agree;
    text += report_text("strongly accessible", reference);
  } else {
    j["strongly_accessible"] = nullptr;
    text += "strongly accessible: not evaluated (empty set is not a member)\n";
  }
  Printer(out, c.format).emit(j, text);
  return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut sets, accessibility and the (S2) criterion for small graphs", "cutsetlab"};
  app.require_subcommand(1);

  Common common;
  bool force_complex = false;
  std::string set_arg, avoid_arg, system_arg;
  int realize_max_n = 0;
  LemmaArgs lemma;
  SweepArgs sweep_args;

  auto* cutsets = app.add_subcommand("cutsets", "list the cut sets and check unmixedness");
  add_common(cutsets, common);
  auto* accessible = app.add_subcommand("accessible", "accessibility of the cut-set family");
  add_common(accessible, common);
  auto* complex = app.add_subcommand("complex", "facets of the complex of a connected graph");
  add_common(complex, common);
  auto* s2 = app.add_subcommand("s2", "check the (S2) link criterion on a graph or complex file");
  add_common(s2, common);
  s2->add_flag("--complex", force_complex, "read the input as a facet list");

  auto* reduce = app.add_subcommand("reduce", "shrink a vertex set to a cut set");
  add_common(reduce, common);
  reduce->add_option("--set", set_arg, "comma-separated vertices")->required();
  reduce->add_option("--avoid", avoid_arg, "vertices to keep out of the result");

  auto* lem = app.add_subcommand("lemma", "find a bridging cut set inside T1 + T2");
  add_common(lem, common);
  lem->add_option("--variant", lemma.variant,
                  "nested-transversals|enclosed-neighborhood|shared-transversal (or 4.3|4.5|4.7)")
      ->required();
  lem->add_option("--t1", lemma.t1)->required();
  lem->add_option("--t2", lemma.t2)->required();
  lem->add_option("--w1,--w", lemma.w1)->required();
  lem->add_option("--w2", lemma.w2);

  auto* sw = app.add_subcommand("sweep", "run checks over all small labeled graphs");
  add_common(sw, common, false);
  sw->add_option("--max-n", sweep_args.max_n)->required();
  sw->add_option("--min-n", sweep_args.min_n);
  sw->add_option("--check", sweep_args.checks, "check name, repeatable, or 'all'")->required();
  sw->add_option("--range", sweep_args.range, "edge-mask range lo:hi, half-open");
  sw->add_option("--workers", sweep_args.workers);
  sw->add_flag("--all-graphs", sweep_args.all_graphs, "include disconnected graphs");
  sw->add_option("--witness-out", sweep_args.witness_out, "write the first witness here");

  auto* realize = app.add_subcommand("realize", "search small graphs realizing a set system");
  add_common(realize, common, false);
  realize->add_option("--system", system_arg, "JSON {\"n\": .., \"sets\": [[..], ..]}")
      ->required();
  realize->add_option("--max-n", realize_max_n)->required();

  auto* system = app.add_subcommand("system", "accessibility of an abstract set system");
  add_common(system, common, false);
  system->add_option("--system", system_arg)->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (*cutsets) return cmd_cutsets(common, out);
    if (*accessible) return cmd_accessible(common, out);
    if (*complex) return cmd_complex(common, out);
    if (*s2) return cmd_s2(common, force_complex, out);
    if (*reduce) return cmd_reduce(common, set_arg, avoid_arg, out);
    if (*lem) return cmd_lemma(common, lemma, out);
    if (*sw) return cmd_sweep(common, sweep_args, out);
    if (*realize) return cmd_realize(common, system_arg, realize_max_n, out);
    if (*system) return cmd_system(common, system_arg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cutsetlab::cli
