#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "netshuffle/randomizer.hpp"
#include "netshuffle/rng.hpp"

using namespace netshuffle;

TEST_CASE("binary_rr keep probability") {
  auto r = binary_rr(1.0);
  CHECK(r.table[0][0] == doctest::Approx(std::exp(1.0) / (1.0 + std::exp(1.0)))
                             .epsilon(1e-12));
  CHECK(r.table[0][0] == doctest::Approx(0.731059).epsilon(1e-6));
  CHECK(binary_rr(1e-9).table[0][0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(binary_rr(std::log(3.0)).table[0][0] == doctest::Approx(0.75));
  CHECK_THROWS_AS(binary_rr(0.0), std::invalid_argument);
  CHECK_THROWS_AS(binary_rr(-1.0), std::invalid_argument);
}

TEST_CASE("kary_rr table") {
  auto r2 = kary_rr(1.0, 2);
  auto b = binary_rr(1.0);
  CHECK(r2.table == b.table);

  auto r4 = kary_rr(std::log(3.0), 4);
  CHECK(r4.table[0][0] == doctest::Approx(0.5));
  CHECK(r4.table[0][1] == doctest::Approx(1.0 / 6));

  // every row sums to 1
  for (const auto& row : r4.table) {
    double sum = 0.0;
    for (double v : row) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(kary_rr(1.0, 1), std::invalid_argument);
}

TEST_CASE("apply is deterministic and respects the table") {
  auto id = identity_randomizer(3);
  auto rng = substream(1, 2);
  CHECK(apply(id, 2, rng) == 2);
  CHECK_THROWS_AS(apply(id, 3, rng), std::invalid_argument);

  auto r = binary_rr(1.0);
  auto a = substream(42, 0);
  auto b = substream(42, 0);
  CHECK(apply(r, 0, a) == apply(r, 0, b));

  // Monte Carlo frequency vs closed form.
  long keep = 0;
  const long trials = 1'000'000;
  auto mc = substream(7, 0);
  for (long i = 0; i < trials; ++i)
    if (apply(r, 0, mc) == 0) keep++;
  double freq = static_cast<double>(keep) / trials;
  CHECK(freq == doctest::Approx(0.7311).epsilon(0.003));
}

TEST_CASE("apply chi-squared goodness of fit") {
  auto r = kary_rr(1.0, 4);
  const long trials = 100'000;
  std::vector<long> counts(4, 0);
  auto rng = substream(99, 0);
  for (long i = 0; i < trials; ++i) counts[apply(r, 1, rng)]++;
  double chi2 = 0.0;
  for (int y = 0; y < 4; ++y) {
    double expected = trials * r.table[1][y];
    chi2 += (counts[y] - expected) * (counts[y] - expected) / expected;
  }
  // chi^2(3 dof) 0.001 critical value
  CHECK(chi2 < 16.27);
}

TEST_CASE("verify_ldp") {
  CHECK(verify_ldp(binary_rr(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  for (double e : {0.1, 0.5, 1.0, 2.0, 3.0})
    CHECK(verify_ldp(binary_rr(e)) == doctest::Approx(e).epsilon(1e-12));
  for (int k : {3, 8})
    for (double e : {0.5, 1.0, 2.0})
      CHECK(verify_ldp(kary_rr(e, k)) == doctest::Approx(e).epsilon(1e-12));

  CHECK(std::isinf(verify_ldp(identity_randomizer(2))));

  Randomizer uniform;
  uniform.input_size = uniform.output_size = 3;
  uniform.table.assign(3, std::vector<double>(3, 1.0 / 3));
  CHECK(verify_ldp(uniform) == 0.0);
}
