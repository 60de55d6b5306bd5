#include "netshuffle/randomizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace netshuffle {

Randomizer binary_rr(double eps0) { return kary_rr(eps0, 2); }

Randomizer kary_rr(double eps0, int k) {
  if (eps0 <= 0.0) throw std::invalid_argument("kary_rr: eps0 must be > 0");
  if (k < 2) throw std::invalid_argument("kary_rr: k must be >= 2");
  double e = std::exp(eps0);
  double keep = e / (e + k - 1);
  double other = 1.0 / (e + k - 1);
  Randomizer r;
  r.input_size = k;
  r.output_size = k;
  r.table.assign(k, std::vector<double>(k, other));
  for (int x = 0; x < k; ++x) r.table[x][x] = keep;
  r.claimed_eps0 = eps0;
  r.claimed_delta0 = 0.0;
  return r;
}

Randomizer identity_randomizer(int k) {
  if (k < 1) throw std::invalid_argument("identity_randomizer: k must be >= 1");
  Randomizer r;
  r.input_size = k;
  r.output_size = k;
  r.table.assign(k, std::vector<double>(k, 0.0));
  for (int x = 0; x < k; ++x) r.table[x][x] = 1.0;
  r.claimed_eps0 = std::numeric_limits<double>::infinity();
  r.claimed_delta0 = 0.0;
  return r;
}

int apply(const Randomizer& r, int x, std::mt19937_64& rng) {
  if (x < 0 || x >= r.input_size)
    throw std::invalid_argument("randomizer: input symbol out of range");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  double acc = 0.0;
  for (int y = 0; y < r.output_size; ++y) {
    acc += r.table[x][y];
    if (u < acc) return y;
  }
  return r.output_size - 1;  // guards against rounding in the row sum
}

double verify_ldp(const Randomizer& r) {
  double worst = 0.0;
  for (int y = 0; y < r.output_size; ++y) {
    for (int x = 0; x < r.input_size; ++x) {
      for (int x2 = 0; x2 < r.input_size; ++x2) {
        double num = r.table[x][y], den = r.table[x2][y];
        if (num == 0.0 && den == 0.0) continue;  // output unreachable from both
        if (den == 0.0) return std::numeric_limits<double>::infinity();
        if (num == 0.0) continue;  // covered by the swapped pair
        worst = std::max(worst, std::log(num / den));
      }
    }
  }
  return worst;
}

}  // namespace netshuffle
