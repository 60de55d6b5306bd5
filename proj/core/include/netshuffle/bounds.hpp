#pragma once

#include <optional>
#include <string>

#include "netshuffle/graph.hpp"

namespace netshuffle {

/// An (eps, delta) pair plus the predicate under which the formula applies.
/// When valid is false, eps and delta are zero and must not be reported.
struct PrivacyBound {
  double eps = 0.0;
  double delta = 0.0;
  bool valid = false;
  std::string validity_condition;
};

struct BoundInputs {
  double eps0 = 0.0;
  double delta0 = 0.0;
  long n = 0;
  double delta = 0.0;
  std::optional<double> p;  // Poisson sampling probability
  std::optional<long> l;    // restricted / subsampled cohort size
};

/// delta + (e^eps + 1)(1 + e^{-eps0}/2) n delta0.
double delta_prime(double eps, const BoundInputs& in);

/// Uniform-shuffle amplification: requires eps0 <= ln(n / (16 ln(2/delta))).
/// eps = ln(1 + ((e^e0-1)/(e^e0+1)) (8 sqrt(e^e0 ln(4/delta))/sqrt(n) + 8 e^e0/n)).
PrivacyBound fmt_shuffle_bound(const BoundInputs& in);

/// Network-shuffle amplification: the shuffle eps plus eps0/n, with
/// delta = e^{eps0/(2n)} delta'.
PrivacyBound netshuffle_bound(const BoundInputs& in);

/// Amplification by subsampling l of n without replacement:
/// eps' = ln(1 + (l/n)(e^eps - 1)), delta' = (l/n) delta.
PrivacyBound subsample_wor(double eps, double delta, long l, long n);

/// Bernstein slack sqrt((2p(1-p)/n) ln(2/delta)) + (2/(3n)) ln(2/delta).
double lambda_p(double p, long n, double delta);

/// Subsampled network shuffle (requires in.p). k = np; validity needs
/// eps0 <= ln((k - n lambda(p)) / (16 ln(2/delta))).
PrivacyBound smpl_wlk_bound(const BoundInputs& in);

/// Restricted protocol where exactly l of n clients report (requires in.l).
PrivacyBound partial_shuffle_bound(const BoundInputs& in);

/// Topology-dependent quantity sqrt(sum_i pi[i]^2 + (1-gap)^{2T}) from the
/// prior topology-sensitive bound. Computed from the degree-based pi even on
/// bipartite graphs; callers should surface a non-ergodicity warning.
double liew_topology_metric(const Graph& g, long T);

/// sqrt(2 variance ln(2/beta)) + 2 c ln(2/beta) / 3.
double bernstein_radius(double variance, double c, double beta);

}  // namespace netshuffle
