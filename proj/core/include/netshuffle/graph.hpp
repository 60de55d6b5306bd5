#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace netshuffle {

/// Undirected simple graph. Vertices are 0-indexed.
struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> edges;  // endpoints stored (min, max)
  std::vector<int> degrees;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
};

struct ErgodicityReport {
  bool connected = false;
  bool bipartite = false;
  bool ergodic = false;  // connected && !bipartite
};

/// Eigenvalues of the transition matrix, sorted non-increasing, plus the
/// spectral gap min(1 - a2, 1 - |an|).
struct SpectralInfo {
  Eigen::VectorXd eigenvalues;
  double gap = 0.0;
};

/// Probability vector over vertices; entries sum to 1.
struct VertexDistribution {
  Eigen::VectorXd probs;
};

/// Validates and builds a graph. Throws std::invalid_argument on self-loops,
/// duplicate edges, or out-of-range endpoints (the message names the edge).
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

ErgodicityReport validate_ergodic(const Graph& g);

/// Column-stochastic walk operator: entry (u, v) = 1/deg(v) if {u,v} is an
/// edge, else 0. Throws if some vertex is isolated.
Eigen::MatrixXd transition_matrix(const Graph& g);

/// Degree-proportional fixed point d_u / (2m). Throws if m = 0.
VertexDistribution stationary_distribution(const Graph& g);

/// Spectrum of the walk operator, computed on the similar symmetric matrix
/// D^{-1/2} A D^{-1/2}. Tiny negative gaps are clamped to 0.
SpectralInfo spectral_gap(const Graph& g);

/// Exact distribution of a t-step walk from `start`.
VertexDistribution walk_distribution(const Graph& g, int start, int t);

/// Worst-case L1 distance to stationarity after t steps: sqrt(n) (1-gap)^t.
double mixing_bound(int n, double gap, int t);

/// Round count making every walk distribution eps0/n^4-close to stationary:
/// ceil((1/gap) ln(n^4.5 / eps0)), floored at 0.
int recommended_rounds(double gap, int n, double eps0);

enum class TopologyKind { Complete, Cycle, Path, Star, ErdosRenyi, RandomRegular };

TopologyKind parse_topology_kind(const std::string& name);

/// Deterministic given (kind, n, seed, param). `param` is the edge
/// probability for erdos_renyi and the degree for random_regular. Random
/// families are re-drawn until connected and non-bipartite; throws after
/// 1000 failed attempts.
Graph generate_topology(TopologyKind kind, int n, std::uint64_t seed = 0,
                        double param = 0.0);

/// Parses the "u v" edge-list format; '#' lines are comments and an optional
/// leading "n <count>" declares the vertex count. Throws with the offending
/// line number on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace netshuffle
