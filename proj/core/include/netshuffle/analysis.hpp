#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "netshuffle/protocol.hpp"

namespace netshuffle {

/// Exact distribution over canonical partition encodings.
struct OutcomeDistribution {
  std::map<std::string, double> atoms;
};

enum class ProtocolKind { RndWlk, Infinite, Restricted };

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Exact output distribution by enumerating every (outputs, destinations)
/// pair: weight = prod_u R[x_u][y_u] * prod_u q_u[dest_u], where q_u is the
/// T-step walk distribution (rnd_wlk) or the stationary distribution
/// (infinite). Zero-probability outputs are skipped. Throws when the
/// enumeration exceeds `budget` weighted atoms.
OutcomeDistribution exact_output_distribution(
    ProtocolKind kind, const ProtocolConfig& cfg, const std::vector<int>& data,
    const std::vector<int>* restricted_clients = nullptr,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// Hockey-stick divergence sum_z max(P(z) - e^eps Q(z), 0) over the union of
/// supports.
double hockey_stick(const OutcomeDistribution& p, const OutcomeDistribution& q,
                    double eps);

/// Total variation distance (half the L1 distance over the atom union).
double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Smallest eps with max(HS(P,Q,eps), HS(Q,P,eps)) <= delta, by bisection to
/// 1e-6.
double empirical_epsilon(const OutcomeDistribution& p,
                         const OutcomeDistribution& q, double delta);

struct Lemma1Report {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double max_walk_deviation = 0.0;  // max_u ||q_u - pi||_1
  double deviation_bound = 0.0;     // eps0 / n^4
  bool ratios_pass = false;
  bool deviation_pass = false;
  bool pass = false;
};

/// Enumerates all n^n destination assignments and reports the extremes of
/// prod_u q_u[dest_u] / prod_u pi[dest_u] against [e^{-eps0/2n}, e^{eps0/2n}],
/// plus the walk-deviation precondition.
Lemma1Report lemma1_ratio_check(const Graph& g, int rounds, double eps0,
                                std::uint64_t budget = kDefaultEnumerationBudget);

struct ConcentrationReport {
  long trials = 0;
  long violations = 0;
  double violation_fraction = 0.0;
  double radius = 0.0;  // Bernstein interval half-width around np
};

/// Draws Binomial(n, p) participant counts and counts how often they leave
/// the Bernstein interval np +/- radius(np(1-p), 1, delta).
ConcentrationReport sampling_concentration_check(double p, long n, double delta,
                                                 long trials,
                                                 std::mt19937_64& rng);

struct DpCheckReport {
  double emp_eps = 0.0;
  double theory_eps = 0.0;
  bool theory_valid = false;
  bool pass = false;
};

/// Exact-enumeration empirical eps between two neighboring datasets, compared
/// with the closed-form bound when valid and with the eps0 post-processing
/// ceiling always.
DpCheckReport empirical_dp_check(ProtocolKind kind, const ProtocolConfig& cfg,
                                 const std::vector<int>& data,
                                 const std::vector<int>& neighbor, double delta,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace netshuffle
