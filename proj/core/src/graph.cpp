#include "netshuffle/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netshuffle/rng.hpp"

namespace netshuffle {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
  Graph g;
  g.n = n;
  g.degrees.assign(n, 0);
  g.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: endpoint out of range in edge " +
                                  edge_str(u, v));
    if (u == v)
      throw std::invalid_argument("graph: self-loop " + edge_str(u, v));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("graph: duplicate edge " + edge_str(u, v));
    g.edges.push_back(key);
    g.degrees[u]++;
    g.degrees[v]++;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  g.m = static_cast<int>(g.edges.size());
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

ErgodicityReport validate_ergodic(const Graph& g) {
  ErgodicityReport r;
  // BFS 2-coloring decides connectivity and bipartiteness together.
  std::vector<int> color(g.n, -1);
  std::deque<int> queue{0};
  color[0] = 0;
  int visited = 1;
  bool odd_cycle = false;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[u]) {
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        visited++;
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        odd_cycle = true;
      }
    }
  }
  r.connected = (visited == g.n);
  r.bipartite = !odd_cycle;
  r.ergodic = r.connected && !r.bipartite;
  return r;
}

Eigen::MatrixXd transition_matrix(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    if (g.degrees[u] == 0)
      throw std::invalid_argument("graph: isolated vertex " +
                                  std::to_string(u) + ", walk undefined");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    p(u, v) = 1.0 / g.degrees[v];
    p(v, u) = 1.0 / g.degrees[u];
  }
  return p;
}

VertexDistribution stationary_distribution(const Graph& g) {
  if (g.m == 0)
    throw std::invalid_argument("graph: stationary distribution needs m >= 1");
  VertexDistribution d;
  d.probs.resize(g.n);
  for (int u = 0; u < g.n; ++u)
    d.probs[u] = static_cast<double>(g.degrees[u]) / (2.0 * g.m);
  return d;
}

SpectralInfo spectral_gap(const Graph& g) {
  // P = A D^{-1} is similar to the symmetric D^{-1/2} A D^{-1/2}, so the
  // spectrum is real and a self-adjoint solver applies on any graph.
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u)
    if (g.degrees[u] == 0)
      throw std::invalid_argument("graph: isolated vertex " +
                                  std::to_string(u) + ", walk undefined");
  for (auto [u, v] : g.edges) {
    double w = 1.0 / std::sqrt(static_cast<double>(g.degrees[u]) * g.degrees[v]);
    sym(u, v) = w;
    sym(v, u) = w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("graph: eigensolver failed to converge");
  SpectralInfo info;
  info.eigenvalues = solver.eigenvalues().reverse();  // non-increasing
  if (g.n == 1) {
    info.gap = 0.0;
    return info;
  }
  double a2 = info.eigenvalues[1];
  double an = info.eigenvalues[g.n - 1];
  info.gap = std::max(0.0, std::min(1.0 - a2, 1.0 - std::abs(an)));
  return info;
}

VertexDistribution walk_distribution(const Graph& g, int start, int t) {
  if (start < 0 || start >= g.n)
    throw std::invalid_argument("graph: start vertex out of range");
  if (t < 0) throw std::invalid_argument("graph: negative step count");
  Eigen::MatrixXd p = transition_matrix(g);
  VertexDistribution d;
  d.probs = Eigen::VectorXd::Zero(g.n);
  d.probs[start] = 1.0;
  for (int step = 0; step < t; ++step) d.probs = p * d.probs;
  return d;
}

double mixing_bound(int n, double gap, int t) {
  if (gap <= 0.0 || gap > 1.0)
    throw std::invalid_argument("mixing_bound: gap must be in (0,1]");
  if (t < 0) throw std::invalid_argument("mixing_bound: negative step count");
  return std::sqrt(static_cast<double>(n)) * std::pow(1.0 - gap, t);
}

int recommended_rounds(double gap, int n, double eps0) {
  if (gap <= 0.0 || gap > 1.0)
    throw std::invalid_argument("recommended_rounds: graph is not ergodic");
  if (eps0 <= 0.0) throw std::invalid_argument("recommended_rounds: eps0 <= 0");
  if (n < 2) throw std::invalid_argument("recommended_rounds: n must be >= 2");
  double t = (1.0 / gap) * (4.5 * std::log(static_cast<double>(n)) -
                            std::log(eps0));
  return t <= 0.0 ? 0 : static_cast<int>(std::ceil(t));
}

TopologyKind parse_topology_kind(const std::string& name) {
  if (name == "complete") return TopologyKind::Complete;
  if (name == "cycle") return TopologyKind::Cycle;
  if (name == "path") return TopologyKind::Path;
  if (name == "star") return TopologyKind::Star;
  if (name == "erdos_renyi") return TopologyKind::ErdosRenyi;
  if (name == "random_regular") return TopologyKind::RandomRegular;
  throw std::invalid_argument("unknown topology kind: " + name);
}

namespace {

Graph erdos_renyi_draw(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

// Configuration-model pairing; returns nullopt when the pairing produces a
// self-loop or parallel edge.
std::optional<Graph> random_regular_draw(int n, int d, std::mt19937_64& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < d; ++i) stubs.push_back(u);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return std::nullopt;
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) return std::nullopt;
    edges.push_back(key);
  }
  return build_graph(n, edges);
}

}  // namespace

Graph generate_topology(TopologyKind kind, int n, std::uint64_t seed,
                        double param) {
  if (n < 1) throw std::invalid_argument("topology: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case TopologyKind::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return build_graph(n, edges);
    case TopologyKind::Cycle:
      if (n < 3) throw std::invalid_argument("topology: cycle needs n >= 3");
      for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      return build_graph(n, edges);
    case TopologyKind::Path:
      for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      return build_graph(n, edges);
    case TopologyKind::Star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      return build_graph(n, edges);
    case TopologyKind::ErdosRenyi: {
      if (param <= 0.0 || param > 1.0)
        throw std::invalid_argument("topology: erdos_renyi needs p in (0,1]");
      auto rng = substream(seed, 0x4552u /* "ER" */);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = erdos_renyi_draw(n, param, rng);
        if (validate_ergodic(g).ergodic) return g;
      }
      throw std::runtime_error(
          "topology: no ergodic erdos_renyi(p=" + std::to_string(param) +
          ") graph on n=" + std::to_string(n) + " after 1000 attempts");
    }
    case TopologyKind::RandomRegular: {
      int d = static_cast<int>(param);
      if (d < 1 || d >= n || (static_cast<long>(n) * d) % 2 != 0)
        throw std::invalid_argument(
            "topology: random_regular needs 1 <= d < n with nd even");
      auto rng = substream(seed, 0x5252u /* "RR" */);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        auto g = random_regular_draw(n, d, rng);
        if (g && validate_ergodic(*g).ergodic) return *g;
      }
      throw std::runtime_error(
          "topology: no ergodic random_regular(d=" + std::to_string(d) +
          ") graph on n=" + std::to_string(n) + " after 1000 attempts");
    }
  }
  throw std::logic_error("topology: unreachable");
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int declared_n = -1;
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    line_no++;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (first_content) {
      first_content = false;
      std::string tok;
      fields >> tok;
      if (tok == "n") {
        if (!(fields >> declared_n) || declared_n < 1)
          throw std::invalid_argument("edge list: bad vertex count at line " +
                                      std::to_string(line_no));
        continue;
      }
      fields.clear();
      fields.seekg(0);
    }
    int u, v;
    if (!(fields >> u >> v))
      throw std::invalid_argument("edge list: malformed line " +
                                  std::to_string(line_no));
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  int n = declared_n >= 0 ? declared_n : max_index + 1;
  if (n < 1) throw std::invalid_argument("edge list: no vertices");
  return build_graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return read_edge_list(in);
}

}  // namespace netshuffle
