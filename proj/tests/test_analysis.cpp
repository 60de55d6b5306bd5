#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "netshuffle/analysis.hpp"
#include "netshuffle/rng.hpp"

using namespace netshuffle;

namespace {

ProtocolConfig k3_cfg(const Randomizer& r, int rounds) {
  ProtocolConfig cfg;
  cfg.graph = generate_topology(TopologyKind::Complete, 3);
  cfg.randomizer = r;
  cfg.rounds = rounds;
  cfg.seed = 0;
  return cfg;
}

OutcomeDistribution two_atoms(double pa, double pb) {
  OutcomeDistribution d;
  d.atoms["a"] = pa;
  d.atoms["b"] = pb;
  return d;
}

double atom_sum(const OutcomeDistribution& d) {
  double s = 0.0;
  for (const auto& [_, p] : d.atoms) s += p;
  return s;
}

}  // namespace

TEST_CASE("exact_output_distribution on K3") {
  auto id = identity_randomizer(3);

  SUBCASE("infinite with identity randomizer") {
    auto d = exact_output_distribution(ProtocolKind::Infinite, k3_cfg(id, 0),
                                       {0, 1, 2});
    CHECK(atom_sum(d) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.atoms.at("0,1,2||") == doctest::Approx(1.0 / 27).epsilon(1e-12));
  }

  SUBCASE("rnd_wlk at T=0 is a point mass") {
    auto d = exact_output_distribution(ProtocolKind::RndWlk, k3_cfg(id, 0),
                                       {0, 1, 2});
    CHECK(d.atoms.size() == 1);
    CHECK(d.atoms.at("0|1|2") == doctest::Approx(1.0));
  }

  SUBCASE("rnd_wlk converges to infinite") {
    auto cfg = k3_cfg(binary_rr(1.0), 10);
    auto walk =
        exact_output_distribution(ProtocolKind::RndWlk, cfg, {0, 0, 1});
    auto inf =
        exact_output_distribution(ProtocolKind::Infinite, cfg, {0, 0, 1});
    CHECK(tv_distance(walk, inf) <= 1e-3);
  }

  SUBCASE("budget enforcement") {
    CHECK_THROWS_AS(exact_output_distribution(ProtocolKind::RndWlk,
                                              k3_cfg(binary_rr(1.0), 5),
                                              {0, 0, 0}, nullptr, 10),
                    std::runtime_error);
  }

  SUBCASE("restricted subset") {
    std::vector<int> subset = {0, 2};
    auto d = exact_output_distribution(ProtocolKind::Restricted, k3_cfg(id, 2),
                                       {0, 1, 2}, &subset);
    CHECK(atom_sum(d) == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& [atom, _] : d.atoms)
      CHECK(atom.find('1') == std::string::npos);  // client 1 never reports
  }
}

TEST_CASE("hockey_stick") {
  auto p = two_atoms(0.75, 0.25);
  auto q = two_atoms(0.25, 0.75);
  CHECK(hockey_stick(p, p, 0.0) == 0.0);
  CHECK(hockey_stick(p, p, 1.0) == 0.0);

  OutcomeDistribution left, right;
  left.atoms["x"] = 1.0;
  right.atoms["y"] = 1.0;
  CHECK(hockey_stick(left, right, 0.0) == 1.0);

  CHECK(hockey_stick(p, q, std::log(2.0)) == doctest::Approx(0.25));
}

TEST_CASE("tv_distance") {
  auto p = two_atoms(0.75, 0.25);
  auto q = two_atoms(0.25, 0.75);
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, q) == doctest::Approx(0.5));
  OutcomeDistribution left, right;
  left.atoms["x"] = 1.0;
  right.atoms["y"] = 1.0;
  CHECK(tv_distance(left, right) == 1.0);
}

TEST_CASE("empirical_epsilon") {
  auto p = two_atoms(0.75, 0.25);
  auto q = two_atoms(0.25, 0.75);
  CHECK(empirical_epsilon(p, q, 0.25) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-5));
  CHECK(empirical_epsilon(p, p, 0.1) == 0.0);

  // single binary_rr(1) report: tight eps is exactly eps0
  double keep = std::exp(1.0) / (1.0 + std::exp(1.0));
  auto pr = two_atoms(keep, 1.0 - keep);
  auto qr = two_atoms(1.0 - keep, keep);
  CHECK(empirical_epsilon(pr, qr, 1e-12) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("empirical_epsilon / hockey_stick round trip") {
  auto rng = substream(5, 0);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    OutcomeDistribution p, q;
    double ps = 0.0, qs = 0.0;
    for (int a = 0; a < 6; ++a) {
      p.atoms[std::to_string(a)] = unit(rng);
      q.atoms[std::to_string(a)] = unit(rng);
      ps += p.atoms[std::to_string(a)];
      qs += q.atoms[std::to_string(a)];
    }
    for (int a = 0; a < 6; ++a) {
      p.atoms[std::to_string(a)] /= ps;
      q.atoms[std::to_string(a)] /= qs;
    }
    double delta = 0.05;
    double eps = empirical_epsilon(p, q, delta);
    CHECK(hockey_stick(p, q, eps) <= delta + 1e-12);
    if (eps > 1e-4)
      CHECK(std::max(hockey_stick(p, q, eps - 1e-4),
                     hockey_stick(q, p, eps - 1e-4)) > delta);
  }
}

TEST_CASE("lemma1_ratio_check") {
  auto g = generate_topology(TopologyKind::Complete, 3);
  int rounds = recommended_rounds(0.5, 3, 1.0);
  REQUIRE(rounds == 10);
  auto rep = lemma1_ratio_check(g, rounds, 1.0);
  CHECK(rep.pass);
  CHECK(rep.max_walk_deviation <= 1.0 / 81.0);
  CHECK(rep.min_ratio >= std::exp(-1.0 / 6.0));
  CHECK(rep.max_ratio <= std::exp(1.0 / 6.0));

  auto fail = lemma1_ratio_check(g, 0, 1.0);
  CHECK_FALSE(fail.pass);

  // vertex-transitive symmetry: extremes are within float noise of each other
  // across relabelings (here: spot check that they are symmetric around 1).
  CHECK(rep.max_ratio >= 1.0 - 1e-12);
  CHECK(rep.min_ratio <= 1.0 + 1e-12);
}

TEST_CASE("sampling_concentration_check") {
  auto rng = substream(31, 0);
  auto zero = sampling_concentration_check(0.0, 100, 0.05, 1000, rng);
  CHECK(zero.violations == 0);
  auto one = sampling_concentration_check(1.0, 100, 0.05, 1000, rng);
  CHECK(one.violations == 0);
  auto half = sampling_concentration_check(0.5, 100, 0.05, 10000, rng);
  CHECK(half.radius == doctest::Approx(16.040).epsilon(1e-3));
  CHECK(half.violation_fraction <= 0.05);
}

TEST_CASE("empirical_dp_check on K3") {
  auto cfg = k3_cfg(binary_rr(1.0), 10);
  auto rep = empirical_dp_check(ProtocolKind::RndWlk, cfg, {0, 0, 0}, {1, 0, 0},
                                1e-6);
  CHECK(rep.pass);
  CHECK(rep.emp_eps <= 1.0 + 1e-9);

  auto same = empirical_dp_check(ProtocolKind::RndWlk, cfg, {0, 0, 0},
                                 {0, 0, 0}, 1e-6);
  CHECK(same.emp_eps == 0.0);

  auto inf = empirical_dp_check(ProtocolKind::Infinite, cfg, {0, 0, 0},
                                {1, 0, 0}, 1e-6);
  CHECK(std::abs(rep.emp_eps - inf.emp_eps) <= 1e-3);

  CHECK_THROWS_AS(empirical_dp_check(ProtocolKind::RndWlk, cfg, {0, 0, 0},
                                     {1, 1, 0}, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("infinite distribution is permutation invariant") {
  auto cfg = k3_cfg(binary_rr(1.0), 0);
  std::vector<int> data = {0, 0, 1};
  auto base = exact_output_distribution(ProtocolKind::Infinite, cfg, data);
  std::sort(data.begin(), data.end());
  do {
    auto perm = exact_output_distribution(ProtocolKind::Infinite, cfg, data);
    REQUIRE(perm.atoms.size() == base.atoms.size());
    for (const auto& [atom, prob] : base.atoms)
      CHECK(perm.atoms.at(atom) == doctest::Approx(prob).epsilon(1e-12));
  } while (std::next_permutation(data.begin(), data.end()));
}

TEST_CASE("event ratio bound between rnd_wlk and infinite") {
  auto cfg = k3_cfg(identity_randomizer(3), recommended_rounds(0.5, 3, 1.0));
  auto walk = exact_output_distribution(ProtocolKind::RndWlk, cfg, {0, 1, 2});
  auto inf = exact_output_distribution(ProtocolKind::Infinite, cfg, {0, 1, 2});
  double lo = std::exp(-1.0 / 6.0), hi = std::exp(1.0 / 6.0);
  for (const auto& [atom, p] : walk.atoms) {
    double q = inf.atoms.at(atom);
    CHECK(p / q >= lo);
    CHECK(p / q <= hi);
  }
}
