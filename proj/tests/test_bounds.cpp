#include <cmath>

#include "doctest.h"
#include "netshuffle/bounds.hpp"

using namespace netshuffle;

namespace {

BoundInputs reference_inputs() {
  BoundInputs in;
  in.eps0 = 1.0;
  in.delta0 = 0.0;
  in.n = 10000;
  in.delta = 1e-6;
  return in;
}

// Independent route: the shuffle eps coded from scratch in long double,
// term by term, without log1p/expm1.
long double shuffle_eps_oracle(long double eps0, long double n,
                               long double delta) {
  long double e = std::exp(eps0);
  long double a = (e - 1.0L) / (e + 1.0L);
  long double b = 8.0L * std::sqrt(e * std::log(4.0L / delta)) / std::sqrt(n);
  long double c = 8.0L * e / n;
  return std::log(1.0L + a * (b + c));
}

}  // namespace

TEST_CASE("fmt_shuffle_bound reference point") {
  auto b = fmt_shuffle_bound(reference_inputs());
  REQUIRE(b.valid);
  CHECK(b.eps == doctest::Approx(0.214021).epsilon(5e-5));
  CHECK(b.eps ==
        doctest::Approx(static_cast<double>(shuffle_eps_oracle(1.0L, 10000.0L,
                                                               1e-6L)))
            .epsilon(1e-12));
  CHECK(b.delta == doctest::Approx(1e-6));
}

TEST_CASE("fmt_shuffle_bound validity region") {
  auto in = reference_inputs();
  in.n = 100;
  auto b = fmt_shuffle_bound(in);
  CHECK_FALSE(b.valid);
  CHECK(b.validity_condition.find("16 ln(2/delta)") != std::string::npos);

  // eps -> 0 monotonically as n grows
  double prev = 10.0;
  for (long n : {1000L, 10000L, 100000L, 1000000L}) {
    auto bi = reference_inputs();
    bi.n = n;
    auto bb = fmt_shuffle_bound(bi);
    REQUIRE(bb.valid);
    CHECK(bb.eps < prev);
    prev = bb.eps;
  }
}

TEST_CASE("delta_prime") {
  auto in = reference_inputs();
  CHECK(delta_prime(0.3, in) == doctest::Approx(1e-6));

  BoundInputs lim;
  lim.eps0 = 50.0;  // e^{-eps0} ~ 0
  lim.delta0 = 1e-9;
  lim.n = 10;
  lim.delta = 0.0;
  CHECK(delta_prime(0.0, lim) == doctest::Approx(2e-8).epsilon(1e-6));

  BoundInputs one;
  one.eps0 = std::log(2.0);
  one.delta0 = 1e-9;
  one.n = 1;
  one.delta = 1e-9;
  CHECK(delta_prime(std::log(2.0), one) == doctest::Approx(4.75e-9));
}

TEST_CASE("netshuffle_bound adds eps0/n and inflates delta") {
  auto in = reference_inputs();
  auto fmt = fmt_shuffle_bound(in);
  auto net = netshuffle_bound(in);
  REQUIRE(net.valid);
  CHECK(net.eps - fmt.eps == doctest::Approx(1e-4).epsilon(1e-9));
  CHECK(net.eps == doctest::Approx(0.2141).epsilon(5e-4));
  CHECK(net.delta == doctest::Approx(std::exp(0.5e-4) * 1e-6).epsilon(1e-12));

  in.n = 100;
  CHECK_FALSE(netshuffle_bound(in).valid);
}

TEST_CASE("subsample_wor") {
  auto same = subsample_wor(0.7, 1e-6, 10, 10);
  CHECK(same.eps == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(same.delta == doctest::Approx(1e-6));

  auto half = subsample_wor(std::log(2.0), 1e-6, 50, 100);
  CHECK(half.eps == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(half.delta == doctest::Approx(0.5e-6));

  auto none = subsample_wor(1.0, 1e-6, 0, 100);
  CHECK(none.eps == 0.0);
  CHECK(none.delta == 0.0);

  CHECK_THROWS_AS(subsample_wor(1.0, 1e-6, 101, 100), std::invalid_argument);
}

TEST_CASE("lambda_p") {
  CHECK(lambda_p(0.1, 10000, 1e-6) == doctest::Approx(0.017127).epsilon(1e-3));
  double edge = 2.0 / (3.0 * 100) * std::log(2.0 / 0.01);
  CHECK(lambda_p(0.0, 100, 0.01) == doctest::Approx(edge).epsilon(1e-12));
  CHECK(lambda_p(1.0, 100, 0.01) == doctest::Approx(edge).epsilon(1e-12));
  for (double p : {0.1, 0.25, 0.4})
    CHECK(lambda_p(p, 500, 1e-4) ==
          doctest::Approx(lambda_p(1.0 - p, 500, 1e-4)).epsilon(1e-12));
  // vanishes as n grows
  CHECK(lambda_p(0.3, 100000000, 1e-6) < 1e-3);
}

TEST_CASE("smpl_wlk_bound") {
  auto in = reference_inputs();
  in.p = 0.1;
  auto b = smpl_wlk_bound(in);
  REQUIRE(b.valid);
  CHECK(b.eps == doctest::Approx(0.0792).epsilon(1e-2));
  CHECK(b.delta == doctest::Approx(1.1171e-6).epsilon(1e-3));

  auto net = netshuffle_bound(reference_inputs());
  CHECK(b.eps < net.eps);

  // monotone increasing in p on [1/2, 1]
  double prev = 0.0;
  for (double p : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    auto bi = reference_inputs();
    bi.p = p;
    auto bb = smpl_wlk_bound(bi);
    REQUIRE(bb.valid);
    CHECK(bb.eps > prev);
    prev = bb.eps;
  }

  // k - n lambda(p) <= 0 regime
  auto tiny = reference_inputs();
  tiny.n = 100;
  tiny.p = 0.01;
  CHECK_FALSE(smpl_wlk_bound(tiny).valid);
}

TEST_CASE("partial_shuffle_bound") {
  auto in = reference_inputs();
  in.l = 10000;
  auto full = partial_shuffle_bound(in);
  auto net = netshuffle_bound(reference_inputs());
  REQUIRE(full.valid);
  CHECK(full.eps == doctest::Approx(net.eps).epsilon(1e-12));
  CHECK(full.delta == doctest::Approx(net.delta).epsilon(1e-12));

  in.l = 1000;
  auto b = partial_shuffle_bound(in);
  REQUIRE(b.valid);
  CHECK(b.eps == doctest::Approx(0.5663).epsilon(1e-3));

  in.l = 100;
  CHECK_FALSE(partial_shuffle_bound(in).valid);
}

TEST_CASE("liew_topology_metric") {
  auto k10 = generate_topology(TopologyKind::Complete, 10);
  CHECK(liew_topology_metric(k10, 10000) ==
        doctest::Approx(std::sqrt(0.1)).epsilon(1e-6));

  // T=0 gives sqrt(sum pi^2 + 1)
  auto pi = stationary_distribution(k10);
  CHECK(liew_topology_metric(k10, 0) ==
        doctest::Approx(std::sqrt(pi.probs.squaredNorm() + 1.0)));

  // star: the pi part alone tends to 1/2 (worst case); the gap is 0 so the
  // walk term never decays.
  for (int n : {10, 100, 1000}) {
    auto star = generate_topology(TopologyKind::Star, n);
    auto ps = stationary_distribution(star);
    CHECK(std::sqrt(ps.probs.squaredNorm()) ==
          doctest::Approx(std::sqrt(0.25 + 1.0 / (4.0 * (n - 1)))));
  }
}

TEST_CASE("bernstein_radius") {
  CHECK(bernstein_radius(0.0, 1.0, 0.05) ==
        doctest::Approx(2.0 / 3.0 * std::log(40.0)));
  CHECK(bernstein_radius(25.0, 1.0, 0.05) == doctest::Approx(16.040).epsilon(1e-4));
  CHECK(bernstein_radius(25.0, 1.0, 0.01) > bernstein_radius(25.0, 1.0, 0.05));
  CHECK_THROWS_AS(bernstein_radius(-1.0, 1.0, 0.05), std::invalid_argument);
}

TEST_CASE("bounds monotone over the valid grid, never NaN or inf") {
  for (double eps0 : {0.25, 0.5, 1.0, 2.0}) {
    double prev_n = 1e9;
    for (long n : {10000L, 40000L, 160000L}) {
      for (double delta : {1e-8, 1e-6, 1e-4}) {
        BoundInputs in;
        in.eps0 = eps0;
        in.n = n;
        in.delta = delta;
        auto b = netshuffle_bound(in);
        CHECK(std::isfinite(b.eps));
        CHECK(std::isfinite(b.delta));
      }
      BoundInputs in;
      in.eps0 = eps0;
      in.n = n;
      in.delta = 1e-6;
      auto b = netshuffle_bound(in);
      if (b.valid) {
        CHECK(b.eps < prev_n);
        prev_n = b.eps;
      }
    }
  }
  // non-decreasing in eps0
  double prev = 0.0;
  for (double eps0 : {0.25, 0.5, 1.0, 2.0}) {
    BoundInputs in;
    in.eps0 = eps0;
    in.n = 100000;
    in.delta = 1e-6;
    auto b = netshuffle_bound(in);
    REQUIRE(b.valid);
    CHECK(b.eps >= prev);
    prev = b.eps;
  }
}
