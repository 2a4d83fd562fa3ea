#pragma once

#include "bifnet/graph.hpp"

#include <cstdint>
#include <random>

namespace bifnet {

/// Deterministic random source for the generators: a seeded mt19937_64 with
/// bit-portable draws and no global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased draw from [0, bound); bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Splitmix-style hash of (seed, stream, salt) for independent substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t salt = 0);

/// Each unordered pair is an edge of weight 1 with probability p_edge.
Graph erdos_renyi(int n, double p_edge, std::uint64_t seed);

/// Preferential attachment from an m_attach-clique; every new node brings
/// m_attach edges to distinct existing nodes, so the final edge count is
/// C(m_attach, 2) + (n - m_attach) * m_attach.
Graph barabasi_albert(int n, int m_attach, std::uint64_t seed);

/// Hub-flood attack: picks hub_count highest-degree nodes (ties to the lower
/// index), rewires an `intensity` fraction of the edges between non-hub nodes
/// so one endpoint becomes a random hub, then adds weight-10 flood edges from
/// a random 20% of nodes to each hub. intensity 0 returns the input unchanged
/// (flood included).
Graph attack_inject(const Graph& g, double intensity, int hub_count, std::uint64_t seed);

enum class GeneratorFamily { ErdosRenyi, BarabasiAlbert };

struct ScenarioConfig {
  int n = 400;
  int steps = 12;
  GeneratorFamily family = GeneratorFamily::ErdosRenyi;
  double edge_prob = 0.025;  // ER mean degree ~10 at the default n
  int attach = 5;            // BA edges per new node
  int attack_start = 7;      // 1-based step at which the attack begins
  double intensity = 0.3;
  int hub_count = 3;
  std::uint64_t seed = 1;
};

struct ScenarioPair {
  TemporalSequence normal;
  TemporalSequence abnormal;
};

/// Paired sequences over timestamps 0..steps-1: `normal` is fresh draws of
/// the base family per step; `abnormal` shares the per-step base graphs and
/// applies attack_inject from step attack_start on.
ScenarioPair scenario(const ScenarioConfig& cfg);

}  // namespace bifnet
