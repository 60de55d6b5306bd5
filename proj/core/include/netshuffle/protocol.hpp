#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netshuffle/graph.hpp"
#include "netshuffle/randomizer.hpp"

namespace netshuffle {

struct ProtocolConfig {
  Graph graph;
  Randomizer randomizer;
  std::optional<int> rounds;  // nullopt = "auto" via recommended_rounds
  std::uint64_t seed = 0;
};

/// Resolves T: the explicit value if set, otherwise
/// recommended_rounds(gap, n, claimed_eps0). Auto requires an ergodic graph.
int resolve_rounds(const ProtocolConfig& cfg);

/// Protocol output: one multiset of randomized values per client, held in
/// canonical form (values sorted ascending). Carries no provenance.
struct MultisetPartition {
  std::vector<std::vector<int>> per_client;

  /// Canonical string encoding, e.g. "1,2|0|" — stable across runs, used as
  /// the atom key for exact enumeration.
  std::string canonical() const;

  bool operator==(const MultisetPartition&) const = default;
};

/// Each client perturbs its value once and forwards it along T independent
/// uniform-neighbor steps; the partition is indexed by final position.
/// `trial` selects an independent substream of the config seed.
MultisetPartition run_rnd_wlk(const ProtocolConfig& cfg,
                              const std::vector<int>& data,
                              std::uint64_t trial = 0);

/// Idealized infinite-walk model: each perturbed value lands on client v
/// with probability pi[v], independently.
MultisetPartition run_infinite(const ProtocolConfig& cfg,
                               const std::vector<int>& data,
                               std::uint64_t trial = 0);

/// Poisson-subsampled walk: each client participates independently with
/// probability p; only sampled values walk. p = 1 reproduces run_rnd_wlk
/// on the same seed path.
MultisetPartition run_smpl_wlk(const ProtocolConfig& cfg,
                               const std::vector<int>& data, double p,
                               std::uint64_t trial = 0);

/// Only clients in C release values; mechanics otherwise identical to
/// run_rnd_wlk.
MultisetPartition run_restricted(const ProtocolConfig& cfg,
                                 const std::vector<int>& data,
                                 const std::vector<int>& clients,
                                 std::uint64_t trial = 0);

}  // namespace netshuffle
