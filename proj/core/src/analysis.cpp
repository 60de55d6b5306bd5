#include "netshuffle/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "netshuffle/bounds.hpp"

namespace netshuffle {

namespace {

// Per-client destination distributions q_u for the requested protocol.
std::vector<Eigen::VectorXd> destination_distributions(
    ProtocolKind kind, const ProtocolConfig& cfg,
    const std::vector<int>* restricted_clients) {
  const Graph& g = cfg.graph;
  std::vector<Eigen::VectorXd> q(g.n);
  if (kind == ProtocolKind::Infinite) {
    auto pi = stationary_distribution(g);
    for (int u = 0; u < g.n; ++u) q[u] = pi.probs;
  } else {
    int rounds = resolve_rounds(cfg);
    for (int u = 0; u < g.n; ++u)
      q[u] = walk_distribution(g, u, rounds).probs;
  }
  if (kind == ProtocolKind::Restricted) {
    if (restricted_clients == nullptr)
      throw std::invalid_argument("analysis: restricted protocol needs a subset");
  }
  return q;
}

std::vector<bool> release_mask(ProtocolKind kind, int n,
                               const std::vector<int>* restricted_clients) {
  if (kind != ProtocolKind::Restricted) return std::vector<bool>(n, true);
  std::vector<bool> mask(n, false);
  for (int u : *restricted_clients) {
    if (u < 0 || u >= n)
      throw std::invalid_argument("analysis: restricted client out of range");
    mask[u] = true;
  }
  return mask;
}

}  // namespace

OutcomeDistribution exact_output_distribution(
    ProtocolKind kind, const ProtocolConfig& cfg, const std::vector<int>& data,
    const std::vector<int>* restricted_clients, std::uint64_t budget) {
  const Graph& g = cfg.graph;
  if (static_cast<int>(data.size()) != g.n)
    throw std::invalid_argument("analysis: data length does not match n");
  if (kind == ProtocolKind::RndWlk || kind == ProtocolKind::Restricted) {
    if (!validate_ergodic(g).ergodic && !cfg.rounds.has_value())
      throw std::invalid_argument("analysis: T=auto requires an ergodic graph");
  }
  auto mask = release_mask(kind, g.n, restricted_clients);
  auto q = destination_distributions(kind, cfg, restricted_clients);
  const Randomizer& r = cfg.randomizer;

  // Per releasing client, the reachable (output, destination) pairs with
  // their probabilities.
  struct Choice {
    int symbol;
    int dest;
    double prob;
  };
  std::vector<std::vector<Choice>> choices;
  std::vector<int> releasing;
  double total_atoms = 1.0;
  for (int u = 0; u < g.n; ++u) {
    if (!mask[u]) continue;
    releasing.push_back(u);
    std::vector<Choice> cs;
    for (int y = 0; y < r.output_size; ++y) {
      double py = r.table[data[u]][y];
      if (py == 0.0) continue;
      for (int dest = 0; dest < g.n; ++dest) {
        double pd = q[u][dest];
        if (pd == 0.0) continue;
        cs.push_back({y, dest, py * pd});
      }
    }
    choices.push_back(std::move(cs));
    total_atoms *= static_cast<double>(choices.back().size());
    if (total_atoms > static_cast<double>(budget))
      throw std::runtime_error(
          "analysis: enumeration budget exceeded; use Monte Carlo mode");
  }

  OutcomeDistribution out;
  std::vector<std::vector<int>> partition(g.n);
  std::vector<size_t> index(choices.size(), 0);
  // Odometer over the product space; depth-first accumulation of the weight.
  std::function<void(size_t, double)> recurse = [&](size_t depth, double w) {
    if (depth == choices.size()) {
      MultisetPartition part;
      part.per_client = partition;
      for (auto& s : part.per_client) std::sort(s.begin(), s.end());
      out.atoms[part.canonical()] += w;
      return;
    }
    for (const Choice& c : choices[depth]) {
      partition[c.dest].push_back(c.symbol);
      recurse(depth + 1, w * c.prob);
      partition[c.dest].pop_back();
    }
  };
  recurse(0, 1.0);
  return out;
}

double hockey_stick(const OutcomeDistribution& p, const OutcomeDistribution& q,
                    double eps) {
  double e = std::exp(eps);
  double div = 0.0;
  for (const auto& [atom, pp] : p.atoms) {
    auto it = q.atoms.find(atom);
    double qq = it == q.atoms.end() ? 0.0 : it->second;
    div += std::max(pp - e * qq, 0.0);
  }
  return div;
}

double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  double l1 = 0.0;
  for (const auto& [atom, pp] : p.atoms) {
    auto it = q.atoms.find(atom);
    l1 += std::abs(pp - (it == q.atoms.end() ? 0.0 : it->second));
  }
  for (const auto& [atom, qq] : q.atoms)
    if (!p.atoms.contains(atom)) l1 += qq;
  return 0.5 * l1;
}

double empirical_epsilon(const OutcomeDistribution& p,
                         const OutcomeDistribution& q, double delta) {
  auto two_sided = [&](double eps) {
    return std::max(hockey_stick(p, q, eps), hockey_stick(q, p, eps));
  };
  if (two_sided(0.0) <= delta) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (two_sided(hi) > delta) {
    hi *= 2.0;
    if (hi > 1e9)
      throw std::runtime_error("empirical_epsilon: divergence never reaches delta");
  }
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    (two_sided(mid) <= delta ? hi : lo) = mid;
  }
  return hi;
}

Lemma1Report lemma1_ratio_check(const Graph& g, int rounds, double eps0,
                                std::uint64_t budget) {
  double assignments = std::pow(static_cast<double>(g.n), g.n);
  if (assignments > static_cast<double>(budget))
    throw std::runtime_error("lemma1_ratio_check: enumeration budget exceeded");
  auto pi = stationary_distribution(g);
  std::vector<Eigen::VectorXd> q(g.n);
  Lemma1Report rep;
  for (int u = 0; u < g.n; ++u) {
    q[u] = walk_distribution(g, u, rounds).probs;
    rep.max_walk_deviation =
        std::max(rep.max_walk_deviation, (q[u] - pi.probs).lpNorm<1>());
  }
  rep.deviation_bound = eps0 / std::pow(static_cast<double>(g.n), 4);
  rep.deviation_pass = rep.max_walk_deviation <= rep.deviation_bound;

  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = 0.0;
  std::vector<int> dest(g.n, 0);
  while (true) {
    double ratio = 1.0;
    for (int u = 0; u < g.n; ++u) ratio *= q[u][dest[u]] / pi.probs[dest[u]];
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    int pos = 0;
    while (pos < g.n && ++dest[pos] == g.n) dest[pos++] = 0;
    if (pos == g.n) break;
  }
  double lo = std::exp(-eps0 / (2.0 * g.n));
  double hi = std::exp(eps0 / (2.0 * g.n));
  rep.ratios_pass = rep.min_ratio >= lo && rep.max_ratio <= hi;
  rep.pass = rep.ratios_pass && rep.deviation_pass;
  return rep;
}

ConcentrationReport sampling_concentration_check(double p, long n, double delta,
                                                 long trials,
                                                 std::mt19937_64& rng) {
  if (trials < 1)
    throw std::invalid_argument("sampling_concentration_check: trials >= 1");
  ConcentrationReport rep;
  rep.trials = trials;
  rep.radius = bernstein_radius(n * p * (1.0 - p), 1.0, delta);
  double mean = n * p;
  std::binomial_distribution<long> binom(n, p);
  for (long t = 0; t < trials; ++t) {
    long count = binom(rng);
    if (std::abs(static_cast<double>(count) - mean) > rep.radius)
      rep.violations++;
  }
  rep.violation_fraction =
      static_cast<double>(rep.violations) / static_cast<double>(trials);
  return rep;
}

DpCheckReport empirical_dp_check(ProtocolKind kind, const ProtocolConfig& cfg,
                                 const std::vector<int>& data,
                                 const std::vector<int>& neighbor, double delta,
                                 std::uint64_t budget) {
  if (data.size() != neighbor.size())
    throw std::invalid_argument("empirical_dp_check: dataset sizes differ");
  int diffs = 0;
  for (size_t i = 0; i < data.size(); ++i)
    if (data[i] != neighbor[i]) diffs++;
  if (diffs > 1)
    throw std::invalid_argument(
        "empirical_dp_check: datasets differ in more than one position");

  auto p = exact_output_distribution(kind, cfg, data, nullptr, budget);
  auto q = exact_output_distribution(kind, cfg, neighbor, nullptr, budget);
  DpCheckReport rep;
  rep.emp_eps = empirical_epsilon(p, q, delta);

  BoundInputs in;
  in.eps0 = cfg.randomizer.claimed_eps0;
  in.delta0 = cfg.randomizer.claimed_delta0;
  in.n = cfg.graph.n;
  in.delta = delta;
  PrivacyBound theory = kind == ProtocolKind::Infinite ? fmt_shuffle_bound(in)
                                                       : netshuffle_bound(in);
  rep.theory_valid = theory.valid;
  rep.theory_eps = theory.valid ? theory.eps : 0.0;
  rep.pass = rep.emp_eps <= in.eps0 + 1e-9 &&
             (!theory.valid || rep.emp_eps <= theory.eps + 1e-9);
  return rep;
}

}  // namespace netshuffle
