// Command-line front end: graph analysis, privacy bound calculators and
// sweeps, protocol simulation, and the numeric verification suite.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netshuffle/analysis.hpp"
#include "netshuffle/bounds.hpp"
#include "netshuffle/graph.hpp"
#include "netshuffle/protocol.hpp"
#include "netshuffle/randomizer.hpp"
#include "netshuffle/rng.hpp"

using json = nlohmann::json;
using namespace netshuffle;

namespace {

int g_precision = 6;

// Round to the configured number of significant digits so emitted JSON/CSV
// is stable across platforms.
double rounded(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  std::ostringstream os;
  os.precision(g_precision);
  os << v;
  return std::stod(os.str());
}

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty()) return std::cout;
  file.open(out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  return file;
}

// ---------------------------------------------------------------------------
// Config-file overlay: flags win, config fills in anything not given.

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json cfg;
  in >> cfg;
  return cfg;
}

template <typename T>
void overlay(const CLI::App& app, const json& cfg, const std::string& flag,
             T& value) {
  const auto* opt = app.get_option_no_throw("--" + flag);
  if (opt != nullptr && opt->count() > 0) return;  // flag given, keep it
  if (cfg.contains(flag)) value = cfg.at(flag).get<T>();
}

// ---------------------------------------------------------------------------
// Shared flag bundles.

struct GraphArgs {
  std::string topology;
  std::string edge_list;
  int n = 0;
  double p = 0.5;   // erdos_renyi edge probability
  double d = 3;     // random_regular degree
  std::uint64_t seed = 0;

  Graph build() const {
    if (!edge_list.empty()) return read_edge_list_file(edge_list);
    if (topology.empty())
      throw CLI::ValidationError("graph", "need --topology or --edge-list");
    auto kind = parse_topology_kind(topology);
    double param = kind == TopologyKind::ErdosRenyi ? p
                   : kind == TopologyKind::RandomRegular ? d
                                                         : 0.0;
    return generate_topology(kind, n, seed, param);
  }

  json describe() const {
    json j;
    if (!edge_list.empty())
      j["edge_list"] = edge_list;
    else
      j = {{"topology", topology}, {"n", n}, {"seed", seed}};
    return j;
  }
};

void add_graph_flags(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("--topology", args.topology,
                  "complete|cycle|path|star|erdos_renyi|random_regular");
  cmd->add_option("--edge-list", args.edge_list, "edge-list file path");
  cmd->add_option("--n", args.n, "vertex count");
  cmd->add_option("--p", args.p, "erdos_renyi edge probability");
  cmd->add_option("--d", args.d, "random_regular degree");
}

Randomizer make_randomizer(const std::string& kind, double eps0, int k) {
  if (kind == "binary_rr") return binary_rr(eps0);
  if (kind == "kary_rr") return kary_rr(eps0, k);
  if (kind == "identity") return identity_randomizer(k);
  throw CLI::ValidationError("randomizer", "unknown kind: " + kind);
}

// "start:stop:log", "start:stop:step", or a single value.
std::vector<double> parse_range(const std::string& spec) {
  auto first = spec.find(':');
  if (first == std::string::npos) return {std::stod(spec)};
  auto second = spec.find(':', first + 1);
  if (second == std::string::npos)
    throw CLI::ValidationError("range", "expected start:stop:log or start:stop:step");
  double start = std::stod(spec.substr(0, first));
  double stop = std::stod(spec.substr(first + 1, second - first - 1));
  std::string tail = spec.substr(second + 1);
  std::vector<double> out;
  if (tail == "log") {
    if (start <= 0 || stop < start)
      throw CLI::ValidationError("range", "log range needs 0 < start <= stop");
    const int per_decade = 10;
    double ratio = std::pow(10.0, 1.0 / per_decade);
    for (double v = start; v < stop * (1 + 1e-12); v *= ratio) out.push_back(v);
    if (std::abs(out.back() - stop) / stop > 1e-9) out.push_back(stop);
  } else {
    double step = std::stod(tail);
    if (step <= 0) throw CLI::ValidationError("range", "step must be > 0");
    for (double v = start; v <= stop * (1 + 1e-12); v += step) out.push_back(v);
  }
  return out;
}

std::uint64_t resolve_seed(CLI::App* cmd, std::uint64_t seed) {
  const auto* opt = cmd->get_option_no_throw("--seed");
  if (opt != nullptr && opt->count() > 0) return seed;
  std::uint64_t drawn = std::random_device{}();
  std::cerr << "seed: " << drawn << " (drawn from entropy; pass --seed to reproduce)\n";
  return drawn;
}

std::uint64_t enumeration_budget(std::uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("NETSHUFFLE_BUDGET"))
    return static_cast<std::uint64_t>(std::stod(env));
  return kDefaultEnumerationBudget;
}

json bound_json(const std::string& model, const json& inputs,
                const PrivacyBound& b) {
  json j = {{"model", model},
            {"inputs", inputs},
            {"valid", b.valid},
            {"validity_condition", b.validity_condition}};
  if (b.valid) {
    j["eps"] = rounded(b.eps);
    j["delta"] = rounded(b.delta);
  }
  return j;
}

// ---------------------------------------------------------------------------
// graph info

int cmd_graph_info(const GraphArgs& gargs, double eps0, std::ostream& out) {
  Graph g = gargs.build();
  auto report = validate_ergodic(g);
  json j = {{"n", g.n},
            {"m", g.m},
            {"connected", report.connected},
            {"bipartite", report.bipartite},
            {"ergodic", report.ergodic}};
  auto spectral = spectral_gap(g);
  j["spectral_gap"] = rounded(spectral.gap);
  auto pi = stationary_distribution(g);
  std::vector<double> probs(pi.probs.data(), pi.probs.data() + g.n);
  for (auto& v : probs) v = rounded(v);
  j["stationary_distribution"] = probs;
  if (eps0 > 0 && report.ergodic)
    j["recommended_T"] = recommended_rounds(spectral.gap, g.n, eps0);
  out << j.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bounds compute / sweep

struct BoundArgs {
  std::string model;
  double eps0 = 1.0;
  double delta0 = 0.0;
  double delta = 1e-6;
  long n = 0;
  double eps = 0.0;  // subsample_wor input
  std::optional<double> p;
  std::optional<long> l;
  long T = 0;
};

PrivacyBound evaluate_model(const std::string& model, const BoundArgs& a,
                            const GraphArgs& gargs) {
  BoundInputs in;
  in.eps0 = a.eps0;
  in.delta0 = a.delta0;
  in.n = a.n;
  in.delta = a.delta;
  in.p = a.p;
  in.l = a.l;
  if (model == "fmt") return fmt_shuffle_bound(in);
  if (model == "netshuffle") return netshuffle_bound(in);
  if (model == "smpl_wlk") return smpl_wlk_bound(in);
  if (model == "partial") return partial_shuffle_bound(in);
  if (model == "subsample_wor")
    return subsample_wor(a.eps, a.delta, a.l.value_or(a.n), a.n);
  if (model == "liew_metric") {
    Graph g = gargs.build();
    PrivacyBound b;
    b.eps = liew_topology_metric(g, a.T);
    b.delta = 0.0;
    b.valid = true;
    b.validity_condition = validate_ergodic(g).ergodic
                               ? "ergodic graph"
                               : "warning: graph not ergodic; metric from "
                                 "degree-based stationary distribution";
    return b;
  }
  throw CLI::ValidationError("model", "unknown model: " + model);
}

int cmd_bounds_compute(const BoundArgs& a, const GraphArgs& gargs,
                       std::ostream& out) {
  json inputs = {{"eps0", a.eps0}, {"delta0", a.delta0}, {"n", a.n},
                 {"delta", a.delta}};
  if (a.p) inputs["p"] = *a.p;
  if (a.l) inputs["l"] = *a.l;
  if (a.model == "subsample_wor") inputs["eps"] = a.eps;
  if (a.model == "liew_metric") inputs["T"] = a.T;
  out << bound_json(a.model, inputs, evaluate_model(a.model, a, gargs)).dump()
      << "\n";
  return 0;
}

int cmd_bounds_sweep(const std::string& models, BoundArgs base,
                     const std::string& n_range, const std::string& eps0_range,
                     const std::string& p_range, const std::string& l_range,
                     const GraphArgs& gargs, std::ostream& out) {
  std::vector<std::string> model_list;
  std::stringstream ms(models);
  std::string item;
  while (std::getline(ms, item, ',')) model_list.push_back(item);

  auto ns = n_range.empty() ? std::vector<double>{static_cast<double>(base.n)}
                            : parse_range(n_range);
  auto eps0s = eps0_range.empty() ? std::vector<double>{base.eps0}
                                  : parse_range(eps0_range);
  std::vector<std::optional<double>> ps{base.p};
  if (!p_range.empty()) {
    ps.clear();
    for (double v : parse_range(p_range)) ps.emplace_back(v);
  }
  std::vector<std::optional<long>> ls{base.l};
  if (!l_range.empty()) {
    ls.clear();
    for (double v : parse_range(l_range)) ls.emplace_back(std::lround(v));
  }

  out << "model,eps0,n,delta,p,l,eps,delta_out,valid\n";
  for (const auto& model : model_list)
    for (double eps0 : eps0s)
      for (double n : ns)
        for (auto p : ps)
          for (auto l : ls) {
            BoundArgs a = base;
            a.model = model;
            a.eps0 = eps0;
            a.n = std::lround(n);
            a.p = p;
            a.l = l;
            PrivacyBound b = evaluate_model(model, a, gargs);
            out << model << ',' << eps0 << ',' << a.n << ',' << a.delta << ',';
            if (p) out << *p;
            out << ',';
            if (l) out << *l;
            out << ',';
            if (b.valid)
              out << rounded(b.eps) << ',' << rounded(b.delta);
            else
              out << ',';
            out << ',' << (b.valid ? "true" : "false") << "\n";
          }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string protocol = "rnd_wlk";
  std::string randomizer = "binary_rr";
  double eps0 = 1.0;
  int k = 2;
  std::string rounds = "auto";
  double p = 1.0;
  std::vector<int> data;
  std::vector<int> restrict_to;
  long trials = 1;
  std::uint64_t seed = 0;
  bool summary = false;
};

int cmd_simulate(const GraphArgs& gargs, const SimulateArgs& a,
                 std::ostream& out) {
  ProtocolConfig cfg;
  cfg.graph = gargs.build();
  cfg.randomizer = make_randomizer(a.randomizer, a.eps0, a.k);
  if (a.rounds != "auto") cfg.rounds = std::stoi(a.rounds);
  cfg.seed = a.seed;

  std::vector<int> data = a.data;
  if (data.empty()) {
    data.resize(cfg.graph.n);
    for (int u = 0; u < cfg.graph.n; ++u)
      data[u] = u % cfg.randomizer.input_size;
  }

  auto run_one = [&](std::uint64_t trial) -> MultisetPartition {
    if (a.protocol == "rnd_wlk") return run_rnd_wlk(cfg, data, trial);
    if (a.protocol == "infinite") return run_infinite(cfg, data, trial);
    if (a.protocol == "smpl_wlk") return run_smpl_wlk(cfg, data, a.p, trial);
    if (a.protocol == "restricted")
      return run_restricted(cfg, data, a.restrict_to, trial);
    throw CLI::ValidationError("protocol", "unknown protocol: " + a.protocol);
  };

  int resolved = a.protocol == "infinite" && !cfg.rounds.has_value()
                     ? -1
                     : resolve_rounds(cfg);

  if (a.summary) {
    // Destination-frequency matrix; needs distinct symbols so values can be
    // attributed to their source client.
    std::vector<int> owner(cfg.randomizer.input_size, -1);
    for (int u = 0; u < cfg.graph.n; ++u) {
      if (owner[data[u]] != -1)
        throw CLI::ValidationError("summary",
                                   "--summary needs pairwise-distinct data");
      owner[data[u]] = u;
    }
    if (a.randomizer != "identity")
      throw CLI::ValidationError("summary", "--summary needs --randomizer identity");
    std::vector<std::vector<long>> counts(
        cfg.graph.n, std::vector<long>(cfg.graph.n, 0));
    for (long t = 0; t < a.trials; ++t) {
      auto part = run_one(static_cast<std::uint64_t>(t));
      for (int v = 0; v < cfg.graph.n; ++v)
        for (int y : part.per_client[v]) counts[owner[y]][v]++;
    }
    json j = {{"seed", a.seed}, {"T", resolved}, {"trials", a.trials}};
    std::vector<std::vector<double>> freq(cfg.graph.n,
                                          std::vector<double>(cfg.graph.n));
    for (int u = 0; u < cfg.graph.n; ++u)
      for (int v = 0; v < cfg.graph.n; ++v)
        freq[u][v] =
            rounded(static_cast<double>(counts[u][v]) / static_cast<double>(a.trials));
    j["destination_frequency"] = freq;
    out << j.dump() << "\n";
    return 0;
  }

  for (long t = 0; t < a.trials; ++t) {
    auto part = run_one(static_cast<std::uint64_t>(t));
    json j = {{"seed", a.seed},
              {"trial", t},
              {"T", resolved},
              {"per_client", part.per_client}};
    out << j.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  GraphArgs graph;
  double eps0 = 1.0;
  double delta = 1e-6;
  double sample_p = 0.5;
  long trials = 10000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool strict = false;
};

json check_row(const std::string& check, const json& instance, double observed,
               double bound, bool pass) {
  return {{"check", check}, {"instance", instance},
          {"observed", rounded(observed)}, {"bound", rounded(bound)},
          {"pass", pass}};
}

void verify_lemma1(const VerifyArgs& a, json& rows, bool& all_pass,
                   bool& any_skipped) {
  Graph g = a.graph.build();
  double gap = spectral_gap(g).gap;
  int rounds = recommended_rounds(gap, g.n, a.eps0);
  json instance = a.graph.describe();
  instance["eps0"] = a.eps0;
  instance["T"] = rounds;
  try {
    auto rep = lemma1_ratio_check(g, rounds, a.eps0, enumeration_budget(a.budget));
    double hi = std::exp(a.eps0 / (2.0 * g.n));
    rows.push_back(check_row("lemma1_ratio_max", instance, rep.max_ratio, hi,
                             rep.ratios_pass));
    rows.push_back(check_row("lemma1_ratio_min", instance, rep.min_ratio,
                             1.0 / hi, rep.ratios_pass));
    rows.push_back(check_row("lemma1_walk_deviation", instance,
                             rep.max_walk_deviation, rep.deviation_bound,
                             rep.deviation_pass));
    all_pass = all_pass && rep.pass;
  } catch (const std::runtime_error& e) {
    rows.push_back({{"check", "lemma1"}, {"instance", instance},
                    {"status", "skipped"}, {"reason", e.what()}});
    any_skipped = true;
  }
}

void verify_mixing(const VerifyArgs& a, json& rows, bool& all_pass) {
  Graph g = a.graph.build();
  double gap = spectral_gap(g).gap;
  auto pi = stationary_distribution(g);
  int rounds = recommended_rounds(gap, g.n, a.eps0);
  double worst_margin = 1.0;
  bool pass = true;
  for (int u = 0; u < g.n; ++u) {
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(g.n);
    probs[u] = 1.0;
    Eigen::MatrixXd p = transition_matrix(g);
    for (int t = 0; t <= 3 * rounds; ++t) {
      double l1 = (probs - pi.probs).lpNorm<1>();
      double bound = mixing_bound(g.n, gap, t);
      if (l1 > bound + 1e-12) pass = false;
      worst_margin = std::min(worst_margin, bound - l1);
      probs = p * probs;
    }
  }
  json instance = a.graph.describe();
  instance["T"] = rounds;
  rows.push_back(check_row("mixing_fact4", instance, -worst_margin, 0.0, pass));
  all_pass = all_pass && pass;
}

void verify_empirical_dp(const VerifyArgs& a, json& rows, bool& all_pass,
                         bool& any_skipped) {
  ProtocolConfig cfg;
  cfg.graph = a.graph.build();
  cfg.randomizer = binary_rr(a.eps0);
  cfg.rounds = std::nullopt;
  cfg.seed = a.seed;
  std::vector<int> data(cfg.graph.n, 0), neighbor(cfg.graph.n, 0);
  neighbor[0] = 1;
  json instance = a.graph.describe();
  instance["eps0"] = a.eps0;
  instance["delta"] = a.delta;
  try {
    auto rep = empirical_dp_check(ProtocolKind::RndWlk, cfg, data, neighbor,
                                  a.delta, enumeration_budget(a.budget));
    double bound = rep.theory_valid ? std::min(rep.theory_eps, a.eps0) : a.eps0;
    rows.push_back(
        check_row("empirical_dp", instance, rep.emp_eps, bound, rep.pass));
    all_pass = all_pass && rep.pass;
  } catch (const std::runtime_error& e) {
    rows.push_back({{"check", "empirical_dp"}, {"instance", instance},
                    {"status", "skipped"}, {"reason", e.what()}});
    any_skipped = true;
  }
}

void verify_concentration(const VerifyArgs& a, json& rows, bool& all_pass) {
  auto rng = substream(a.seed, 0xC0);
  long n = a.graph.n > 0 ? a.graph.n : 100;
  auto rep =
      sampling_concentration_check(a.sample_p, n, 0.05, a.trials, rng);
  json instance = {{"p", a.sample_p}, {"n", n}, {"trials", a.trials}};
  bool pass = rep.violation_fraction <= 0.05;
  rows.push_back(check_row("sampling_concentration", instance,
                           rep.violation_fraction, 0.05, pass));
  all_pass = all_pass && pass;
}

void verify_ldp_suite(const VerifyArgs& a, json& rows, bool& all_pass) {
  for (double e : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    double tight = verify_ldp(binary_rr(e));
    bool pass = std::abs(tight - e) <= 1e-12;
    rows.push_back(check_row("ldp_binary_rr",
                             json{{"eps0", e}}, tight, e, pass));
    all_pass = all_pass && pass;
  }
  for (int k : {3, 8}) {
    double tight = verify_ldp(kary_rr(a.eps0, k));
    bool pass = std::abs(tight - a.eps0) <= 1e-12;
    rows.push_back(check_row("ldp_kary_rr",
                             json{{"eps0", a.eps0}, {"k", k}}, tight, a.eps0,
                             pass));
    all_pass = all_pass && pass;
  }
}

int cmd_verify(const std::string& suite, const VerifyArgs& a,
               std::ostream& out) {
  json rows = json::array();
  bool all_pass = true;
  bool any_skipped = false;
  if (suite == "lemma1" || suite == "all")
    verify_lemma1(a, rows, all_pass, any_skipped);
  if (suite == "mixing" || suite == "all") verify_mixing(a, rows, all_pass);
  if (suite == "empirical-dp" || suite == "all")
    verify_empirical_dp(a, rows, all_pass, any_skipped);
  if (suite == "concentration" || suite == "all")
    verify_concentration(a, rows, all_pass);
  if (suite == "ldp" || suite == "all") verify_ldp_suite(a, rows, all_pass);
  if (rows.empty())
    throw CLI::ValidationError("verify", "unknown suite: " + suite);
  json report = {{"suite", suite}, {"checks", rows}, {"pass", all_pass}};
  out << report.dump(2) << "\n";
  if (!all_pass) return 1;
  if (any_skipped && a.strict) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network-shuffle privacy amplification toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  app.add_option("--config", config_path, "JSON config file; flags override")
      ->envname("NETSHUFFLE_CONFIG");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--precision", g_precision, "significant digits in output")
      ->default_val(6);

  // graph info
  auto* graph_cmd = app.add_subcommand("graph", "graph analysis");
  graph_cmd->fallthrough();
  auto* info_cmd = graph_cmd->add_subcommand("info", "spectral/ergodicity report");
  info_cmd->fallthrough();
  GraphArgs info_graph;
  double info_eps0 = 0.0;
  add_graph_flags(info_cmd, info_graph);
  info_cmd->add_option("--seed", info_graph.seed, "topology seed");
  info_cmd->add_option("--eps0", info_eps0,
                       "also report recommended_T for this eps0");

  // bounds compute / sweep
  auto* bounds_cmd = app.add_subcommand("bounds", "privacy bound calculators");
  bounds_cmd->fallthrough();
  auto* compute_cmd = bounds_cmd->add_subcommand("compute", "single point");
  compute_cmd->fallthrough();
  BoundArgs compute_args;
  GraphArgs compute_graph;
  compute_cmd->add_option("--model", compute_args.model,
                          "fmt|netshuffle|smpl_wlk|partial|subsample_wor|liew_metric")
      ->required();
  compute_cmd->add_option("--eps0", compute_args.eps0);
  compute_cmd->add_option("--delta0", compute_args.delta0);
  compute_cmd->add_option("--delta", compute_args.delta);
  compute_cmd->add_option("--n", compute_args.n);
  compute_cmd->add_option("--eps", compute_args.eps, "base eps for subsample_wor");
  double compute_p = -1.0;
  long compute_l = -1;
  compute_cmd->add_option("--p", compute_p, "sampling probability");
  compute_cmd->add_option("--l", compute_l, "cohort size");
  compute_cmd->add_option("--T", compute_args.T, "rounds for liew_metric");
  compute_cmd->add_option("--topology", compute_graph.topology);
  compute_cmd->add_option("--edge-list", compute_graph.edge_list);
  compute_cmd->add_option("--graph-n", compute_graph.n);
  compute_cmd->add_option("--seed", compute_graph.seed);

  auto* sweep_cmd = bounds_cmd->add_subcommand("sweep", "CSV grid sweep");
  sweep_cmd->fallthrough();
  BoundArgs sweep_args;
  GraphArgs sweep_graph;
  std::string sweep_models, sweep_n, sweep_eps0, sweep_p, sweep_l;
  sweep_cmd->add_option("--model", sweep_models, "comma-separated model list")
      ->required();
  sweep_cmd->add_option("--n", sweep_n, "value or start:stop:log|step")
      ->required();
  sweep_cmd->add_option("--eps0", sweep_eps0, "value or range");
  sweep_cmd->add_option("--delta", sweep_args.delta);
  sweep_cmd->add_option("--delta0", sweep_args.delta0);
  sweep_cmd->add_option("--p", sweep_p, "value or range");
  sweep_cmd->add_option("--l", sweep_l, "value or range");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "run a protocol");
  sim_cmd->fallthrough();
  GraphArgs sim_graph;
  SimulateArgs sim_args;
  add_graph_flags(sim_cmd, sim_graph);
  sim_cmd->add_option("--protocol", sim_args.protocol,
                      "rnd_wlk|infinite|smpl_wlk|restricted");
  sim_cmd->add_option("--randomizer", sim_args.randomizer,
                      "binary_rr|kary_rr|identity");
  sim_cmd->add_option("--eps0", sim_args.eps0);
  sim_cmd->add_option("--k", sim_args.k, "randomizer alphabet size");
  sim_cmd->add_option("--T", sim_args.rounds, "round count or 'auto'");
  sim_cmd->add_option("--sample-p", sim_args.p, "smpl_wlk participation probability");
  sim_cmd->add_option("--data", sim_args.data, "input dataset (default 0..n-1)");
  sim_cmd->add_option("--restrict", sim_args.restrict_to,
                      "reporting clients for restricted");
  sim_cmd->add_option("--trials", sim_args.trials);
  sim_cmd->add_option("--seed", sim_args.seed);
  sim_cmd->add_flag("--summary", sim_args.summary,
                    "emit destination-frequency matrix");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "numeric verification suites");
  verify_cmd->fallthrough();
  std::string suite;
  VerifyArgs verify_args;
  verify_cmd->add_option("suite", suite,
                         "lemma1|empirical-dp|mixing|concentration|ldp|all")
      ->required();
  add_graph_flags(verify_cmd, verify_args.graph);
  verify_cmd->add_option("--eps0", verify_args.eps0);
  verify_cmd->add_option("--delta", verify_args.delta);
  verify_cmd->add_option("--sample-p", verify_args.sample_p);
  verify_cmd->add_option("--trials", verify_args.trials);
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--budget", verify_args.budget,
                         "enumeration budget (atoms)");
  verify_cmd->add_flag("--strict", verify_args.strict,
                       "nonzero exit when checks are skipped");

  try {
    app.parse(argc, argv);
    json cfg = load_config(config_path);

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);

    if (info_cmd->parsed()) {
      overlay(*info_cmd, cfg, "topology", info_graph.topology);
      overlay(*info_cmd, cfg, "n", info_graph.n);
      overlay(*info_cmd, cfg, "eps0", info_eps0);
      std::cerr << "config: "
                << json{{"command", "graph info"},
                        {"graph", info_graph.describe()},
                        {"eps0", info_eps0}}
                       .dump()
                << "\n";
      return cmd_graph_info(info_graph, info_eps0, out);
    }
    if (compute_cmd->parsed()) {
      overlay(*compute_cmd, cfg, "eps0", compute_args.eps0);
      overlay(*compute_cmd, cfg, "delta", compute_args.delta);
      overlay(*compute_cmd, cfg, "n", compute_args.n);
      if (compute_p >= 0.0) compute_args.p = compute_p;
      if (compute_l >= 0) compute_args.l = compute_l;
      std::cerr << "config: "
                << json{{"command", "bounds compute"},
                        {"model", compute_args.model},
                        {"eps0", compute_args.eps0},
                        {"n", compute_args.n},
                        {"delta", compute_args.delta}}
                       .dump()
                << "\n";
      return cmd_bounds_compute(compute_args, compute_graph, out);
    }
    if (sweep_cmd->parsed()) {
      std::cerr << "config: "
                << json{{"command", "bounds sweep"},
                        {"models", sweep_models},
                        {"n", sweep_n},
                        {"eps0", sweep_eps0},
                        {"delta", sweep_args.delta}}
                       .dump()
                << "\n";
      return cmd_bounds_sweep(sweep_models, sweep_args, sweep_n, sweep_eps0,
                              sweep_p, sweep_l, sweep_graph, out);
    }
    if (sim_cmd->parsed()) {
      overlay(*sim_cmd, cfg, "protocol", sim_args.protocol);
      overlay(*sim_cmd, cfg, "topology", sim_graph.topology);
      overlay(*sim_cmd, cfg, "n", sim_graph.n);
      overlay(*sim_cmd, cfg, "randomizer", sim_args.randomizer);
      overlay(*sim_cmd, cfg, "eps0", sim_args.eps0);
      overlay(*sim_cmd, cfg, "k", sim_args.k);
      overlay(*sim_cmd, cfg, "T", sim_args.rounds);
      overlay(*sim_cmd, cfg, "trials", sim_args.trials);
      overlay(*sim_cmd, cfg, "seed", sim_args.seed);
      bool seed_given = sim_cmd->get_option_no_throw("--seed")->count() > 0 ||
                        cfg.contains("seed");
      if (!seed_given) sim_args.seed = resolve_seed(sim_cmd, sim_args.seed);
      sim_graph.seed = sim_args.seed;
      std::cerr << "config: "
                << json{{"command", "simulate"},
                        {"protocol", sim_args.protocol},
                        {"graph", sim_graph.describe()},
                        {"randomizer", sim_args.randomizer},
                        {"T", sim_args.rounds},
                        {"trials", sim_args.trials},
                        {"seed", sim_args.seed}}
                       .dump()
                << "\n";
      return cmd_simulate(sim_graph, sim_args, out);
    }
    if (verify_cmd->parsed()) {
      overlay(*verify_cmd, cfg, "topology", verify_args.graph.topology);
      overlay(*verify_cmd, cfg, "n", verify_args.graph.n);
      overlay(*verify_cmd, cfg, "eps0", verify_args.eps0);
      overlay(*verify_cmd, cfg, "delta", verify_args.delta);
      overlay(*verify_cmd, cfg, "trials", verify_args.trials);
      overlay(*verify_cmd, cfg, "seed", verify_args.seed);
      verify_args.graph.seed = verify_args.seed;
      std::cerr << "config: "
                << json{{"command", "verify"},
                        {"suite", suite},
                        {"graph", verify_args.graph.describe()},
                        {"eps0", verify_args.eps0},
                        {"seed", verify_args.seed}}
                       .dump()
                << "\n";
      return cmd_verify(suite, verify_args, out);
    }
    throw CLI::ValidationError("command", "no subcommand given");
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
