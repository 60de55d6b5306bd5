#include "netshuffle/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace netshuffle {

namespace {

void check_common(const BoundInputs& in) {
  if (in.eps0 <= 0.0) throw std::invalid_argument("bounds: eps0 must be > 0");
  if (in.delta0 < 0.0 || in.delta0 > 1.0)
    throw std::invalid_argument("bounds: delta0 outside [0,1]");
  if (in.n < 2) throw std::invalid_argument("bounds: n must be >= 2");
  if (in.delta <= 0.0 || in.delta > 1.0)
    throw std::invalid_argument("bounds: delta outside (0,1]");
}

// ln(1 + ((e^e0-1)/(e^e0+1)) (scale * 8 sqrt(e^e0 ln(4/d)) / sqrt(n) + 8 e^e0 / n))
// with n standing for the shuffled cohort size. log1p keeps the 1 + small
// form accurate for large cohorts.
double shuffle_eps_term(double eps0, double cohort, double delta,
                        double scale = 1.0) {
  double e = std::exp(eps0);
  double lead = std::expm1(eps0) / (e + 1.0);
  double term = scale * 8.0 * std::sqrt(e * std::log(4.0 / delta)) /
                    std::sqrt(cohort) +
                8.0 * e / cohort;
  return std::log1p(lead * term);
}

// eps0 <= ln(cohort / (16 ln(2/delta)))
bool shuffle_valid(double eps0, double cohort, double delta) {
  double cap = cohort / (16.0 * std::log(2.0 / delta));
  return cap > 0.0 && eps0 <= std::log(cap);
}

std::string shuffle_condition(const char* cohort_name) {
  return std::string("eps0 <= ln(") + cohort_name + " / (16 ln(2/delta)))";
}

}  // namespace

double delta_prime(double eps, const BoundInputs& in) {
  if (eps < 0.0) throw std::invalid_argument("delta_prime: eps must be >= 0");
  return in.delta + (std::exp(eps) + 1.0) * (1.0 + std::exp(-in.eps0) / 2.0) *
                        static_cast<double>(in.n) * in.delta0;
}

PrivacyBound fmt_shuffle_bound(const BoundInputs& in) {
  check_common(in);
  PrivacyBound b;
  b.validity_condition = shuffle_condition("n");
  if (!shuffle_valid(in.eps0, static_cast<double>(in.n), in.delta)) return b;
  b.eps = shuffle_eps_term(in.eps0, static_cast<double>(in.n), in.delta);
  b.delta = delta_prime(b.eps, in);
  b.valid = true;
  return b;
}

PrivacyBound netshuffle_bound(const BoundInputs& in) {
  PrivacyBound b = fmt_shuffle_bound(in);
  if (!b.valid) return b;
  // delta' is applied at the idealized-partition stage, before the eps0/n
  // walk penalty, so it uses the shuffle eps.
  b.eps += in.eps0 / static_cast<double>(in.n);
  b.delta = std::exp(in.eps0 / (2.0 * in.n)) * b.delta;
  return b;
}

PrivacyBound subsample_wor(double eps, double delta, long l, long n) {
  if (eps < 0.0) throw std::invalid_argument("subsample_wor: eps must be >= 0");
  if (l < 0 || l > n)
    throw std::invalid_argument("subsample_wor: need 0 <= l <= n");
  double frac = static_cast<double>(l) / static_cast<double>(n);
  PrivacyBound b;
  b.eps = std::log1p(frac * std::expm1(eps));
  b.delta = frac * delta;
  b.valid = true;
  b.validity_condition = "0 <= l <= n";
  return b;
}

double lambda_p(double p, long n, double delta) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("lambda_p: p outside [0,1]");
  if (n < 1) throw std::invalid_argument("lambda_p: n must be >= 1");
  if (delta <= 0.0 || delta >= 1.0)
    throw std::invalid_argument("lambda_p: delta outside (0,1)");
  double log_term = std::log(2.0 / delta);
  return std::sqrt(2.0 * p * (1.0 - p) / n * log_term) +
         2.0 / (3.0 * n) * log_term;
}

PrivacyBound smpl_wlk_bound(const BoundInputs& in) {
  check_common(in);
  if (!in.p.has_value())
    throw std::invalid_argument("smpl_wlk_bound: sampling probability required");
  double p = *in.p;
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("smpl_wlk_bound: p outside [0,1]");
  double n = static_cast<double>(in.n);
  double k = n * p;
  double lam = lambda_p(p, in.n, in.delta);
  PrivacyBound b;
  b.validity_condition = shuffle_condition("k - n*lambda(p)");
  if (!shuffle_valid(in.eps0, k - n * lam, in.delta)) return b;
  double shuffle_eps = shuffle_eps_term(in.eps0, n, in.delta, std::sqrt(p + lam));
  b.eps = in.eps0 / n + shuffle_eps;
  double inner = in.delta + (std::exp(shuffle_eps) + 1.0) *
                                (1.0 + std::exp(-in.eps0) / 2.0) *
                                (k + n * lam) * in.delta0;
  b.delta = in.delta + (p + lam) * std::exp(in.eps0 / (2.0 * n)) * inner;
  b.valid = true;
  return b;
}

PrivacyBound partial_shuffle_bound(const BoundInputs& in) {
  check_common(in);
  if (!in.l.has_value())
    throw std::invalid_argument("partial_shuffle_bound: cohort size l required");
  long l = *in.l;
  if (l < 1 || l > in.n)
    throw std::invalid_argument("partial_shuffle_bound: need 1 <= l <= n");
  PrivacyBound b;
  b.validity_condition = shuffle_condition("l");
  if (!shuffle_valid(in.eps0, static_cast<double>(l), in.delta)) return b;
  double shuffle_eps = shuffle_eps_term(in.eps0, static_cast<double>(l), in.delta);
  b.eps = in.eps0 / static_cast<double>(in.n) + shuffle_eps;
  double inner = in.delta + (std::exp(shuffle_eps) + 1.0) *
                                (1.0 + std::exp(-in.eps0) / 2.0) *
                                static_cast<double>(l) * in.delta0;
  b.delta = std::exp(in.eps0 / (2.0 * in.n)) * inner;
  b.valid = true;
  return b;
}

double liew_topology_metric(const Graph& g, long T) {
  if (T < 0) throw std::invalid_argument("liew_topology_metric: negative T");
  auto pi = stationary_distribution(g);
  double sum_sq = pi.probs.squaredNorm();
  double gap = spectral_gap(g).gap;
  return std::sqrt(sum_sq + std::pow(1.0 - gap, 2.0 * static_cast<double>(T)));
}

double bernstein_radius(double variance, double c, double beta) {
  if (variance < 0.0)
    throw std::invalid_argument("bernstein_radius: negative variance");
  if (c <= 0.0) throw std::invalid_argument("bernstein_radius: c must be > 0");
  if (beta <= 0.0 || beta >= 1.0)
    throw std::invalid_argument("bernstein_radius: beta outside (0,1)");
  double log_term = std::log(2.0 / beta);
  return std::sqrt(2.0 * variance * log_term) + 2.0 * c * log_term / 3.0;
}

}  // namespace netshuffle
