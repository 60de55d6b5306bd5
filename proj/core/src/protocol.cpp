#include "netshuffle/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "netshuffle/rng.hpp"

namespace netshuffle {

namespace {

// Stream purposes; each (trial, client, purpose) gets an independent engine
// so the output is a pure function of (cfg, data, seed, trial).
constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kRandomizeStream = 2;
constexpr std::uint64_t kWalkStream = 3;

std::mt19937_64 client_stream(const ProtocolConfig& cfg, std::uint64_t trial,
                              std::uint64_t purpose, int client) {
  return substream(mix64(cfg.seed ^ mix64(trial)), purpose,
                   static_cast<std::uint64_t>(client));
}

void check_data(const ProtocolConfig& cfg, const std::vector<int>& data) {
  if (static_cast<int>(data.size()) != cfg.graph.n)
    throw std::invalid_argument("protocol: data length does not match n");
  for (int x : data)
    if (x < 0 || x >= cfg.randomizer.input_size)
      throw std::invalid_argument("protocol: datum outside randomizer domain");
}

MultisetPartition canonicalize(std::vector<std::vector<int>> per_client) {
  for (auto& s : per_client) std::sort(s.begin(), s.end());
  return MultisetPartition{std::move(per_client)};
}

// Releases the values of `clients` via T-step uniform-neighbor walks.
MultisetPartition walk_release(const ProtocolConfig& cfg,
                               const std::vector<int>& data,
                               const std::vector<bool>& releases,
                               std::uint64_t trial) {
  const Graph& g = cfg.graph;
  auto report = validate_ergodic(g);
  if (!report.ergodic && !cfg.rounds.has_value())
    throw std::invalid_argument(
        "protocol: T=auto requires an ergodic graph");
  int rounds = resolve_rounds(cfg);
  std::vector<std::vector<int>> per_client(g.n);
  for (int u = 0; u < g.n; ++u) {
    if (!releases[u]) continue;
    auto perturb = client_stream(cfg, trial, kRandomizeStream, u);
    int y = apply(cfg.randomizer, data[u], perturb);
    auto walk = client_stream(cfg, trial, kWalkStream, u);
    int pos = u;
    for (int t = 0; t < rounds; ++t) {
      const auto& nbrs = g.adjacency[pos];
      if (nbrs.empty())
        throw std::invalid_argument("protocol: walk hit isolated vertex");
      std::uniform_int_distribution<size_t> pick(0, nbrs.size() - 1);
      pos = nbrs[pick(walk)];
    }
    per_client[pos].push_back(y);
  }
  return canonicalize(std::move(per_client));
}

}  // namespace

int resolve_rounds(const ProtocolConfig& cfg) {
  if (cfg.rounds.has_value()) {
    if (*cfg.rounds < 0)
      throw std::invalid_argument("protocol: negative round count");
    return *cfg.rounds;
  }
  double gap = spectral_gap(cfg.graph).gap;
  return recommended_rounds(gap, cfg.graph.n, cfg.randomizer.claimed_eps0);
}

std::string MultisetPartition::canonical() const {
  std::string out;
  for (size_t u = 0; u < per_client.size(); ++u) {
    if (u > 0) out += '|';
    for (size_t i = 0; i < per_client[u].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(per_client[u][i]);
    }
  }
  return out;
}

MultisetPartition run_rnd_wlk(const ProtocolConfig& cfg,
                              const std::vector<int>& data,
                              std::uint64_t trial) {
  check_data(cfg, data);
  return walk_release(cfg, data, std::vector<bool>(cfg.graph.n, true), trial);
}

MultisetPartition run_infinite(const ProtocolConfig& cfg,
                               const std::vector<int>& data,
                               std::uint64_t trial) {
  check_data(cfg, data);
  const Graph& g = cfg.graph;
  auto pi = stationary_distribution(g);
  std::vector<std::vector<int>> per_client(g.n);
  for (int u = 0; u < g.n; ++u) {
    auto perturb = client_stream(cfg, trial, kRandomizeStream, u);
    int y = apply(cfg.randomizer, data[u], perturb);
    auto place = client_stream(cfg, trial, kWalkStream, u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = unit(place);
    double acc = 0.0;
    int dest = g.n - 1;
    for (int v = 0; v < g.n; ++v) {
      acc += pi.probs[v];
      if (r < acc) {
        dest = v;
        break;
      }
    }
    per_client[dest].push_back(y);
  }
  return canonicalize(std::move(per_client));
}

MultisetPartition run_smpl_wlk(const ProtocolConfig& cfg,
                               const std::vector<int>& data, double p,
                               std::uint64_t trial) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("protocol: sampling probability outside [0,1]");
  check_data(cfg, data);
  std::vector<bool> releases(cfg.graph.n, false);
  for (int u = 0; u < cfg.graph.n; ++u) {
    auto coin = client_stream(cfg, trial, kSampleStream, u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    releases[u] = unit(coin) < p;
  }
  return walk_release(cfg, data, releases, trial);
}

MultisetPartition run_restricted(const ProtocolConfig& cfg,
                                 const std::vector<int>& data,
                                 const std::vector<int>& clients,
                                 std::uint64_t trial) {
  check_data(cfg, data);
  std::vector<bool> releases(cfg.graph.n, false);
  for (int u : clients) {
    if (u < 0 || u >= cfg.graph.n)
      throw std::invalid_argument("protocol: restricted client out of range");
    releases[u] = true;
  }
  return walk_release(cfg, data, releases, trial);
}

}  // namespace netshuffle
