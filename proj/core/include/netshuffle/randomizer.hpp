#pragma once

#include <random>
#include <vector>

namespace netshuffle {

/// Finite-range local randomizer given as a row-stochastic probability table:
/// table[x][y] = P[output = y | input = x].
struct Randomizer {
  int input_size = 0;
  int output_size = 0;
  std::vector<std::vector<double>> table;
  double claimed_eps0 = 0.0;
  double claimed_delta0 = 0.0;
};

/// Binary randomized response: keeps the bit with probability e^e0/(e^e0+1).
Randomizer binary_rr(double eps0);

/// k-ary randomized response: keeps the symbol with probability
/// e^e0/(e^e0+k-1), otherwise uniform over the k-1 others.
Randomizer kary_rr(double eps0, int k);

/// Deterministic pass-through over k symbols. Not private (claimed eps0 is
/// infinity); exists so partition distributions can be tested in isolation.
Randomizer identity_randomizer(int k);

/// Samples one output from row x. Throws on out-of-range x.
int apply(const Randomizer& r, int x, std::mt19937_64& rng);

/// Tight pure-DP parameter of the table: max over outputs y and input pairs
/// of ln(table[x][y] / table[x'][y]); p/0 ratios give +infinity, 0/0 is
/// excluded.
double verify_ldp(const Randomizer& r);

}  // namespace netshuffle
