#include "bifnet/synthgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bifnet {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::next_below: zero bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t cutoff = max - (max % bound + 1) % bound;
  std::uint64_t x = engine_();
  while (x > cutoff) x = engine_();
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t salt) {
  std::uint64_t x = seed;
  x += 0x9e3779b97f4a7c15ull * (stream + 1);
  x += 0xd1b54a32d192ed03ull * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

Graph erdos_renyi(int n, double p_edge, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("erdos_renyi: negative size");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw std::invalid_argument("erdos_renyi: p_edge must be in [0, 1]");
  }
  Rng rng(seed);
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (rng.next_double() < p_edge) {
        w(i, j) = 1.0;
        w(j, i) = 1.0;
      }
    }
  }
  return Graph(n, std::move(w));
}

Graph barabasi_albert(int n, int m_attach, std::uint64_t seed) {
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument("barabasi_albert: requires 1 <= m_attach < n");
  }
  Rng rng(seed);
  Matrix w = Matrix::Zero(n, n);
  std::vector<int> urn;  // node index repeated once per incident edge
  urn.reserve(2u * static_cast<std::size_t>(n) * static_cast<std::size_t>(m_attach));
  for (int i = 0; i < m_attach; ++i) {
    for (int j = i + 1; j < m_attach; ++j) {
      w(i, j) = 1.0;
      w(j, i) = 1.0;
      urn.push_back(i);
      urn.push_back(j);
    }
  }
  std::vector<int> targets;
  for (int v = m_attach; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m_attach) {
      const int t = urn.empty()
                        ? static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)))
                        : urn[rng.next_below(urn.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (int t : targets) {
      w(v, t) = 1.0;
      w(t, v) = 1.0;
      urn.push_back(v);
      urn.push_back(t);
    }
  }
  return Graph(n, std::move(w));
}

Graph attack_inject(const Graph& g, double intensity, int hub_count, std::uint64_t seed) {
  if (!(intensity >= 0.0 && intensity <= 1.0)) {
    throw std::invalid_argument("attack_inject: intensity must be in [0, 1]");
  }
  if (hub_count < 1) throw std::invalid_argument("attack_inject: hub_count must be >= 1");
  if (intensity == 0.0) return g;

  const int n = static_cast<int>(g.size());
  Rng rng(seed);

  const Vector deg = g.degrees();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&deg](int a, int b) {
    if (deg(a) != deg(b)) return deg(a) > deg(b);
    return a < b;
  });
  const std::size_t n_hubs = std::min<std::size_t>(static_cast<std::size_t>(hub_count),
                                                   static_cast<std::size_t>(n));
  std::vector<int> hubs(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_hubs));
  std::vector<char> is_hub(static_cast<std::size_t>(n), 0);
  for (int h : hubs) is_hub[static_cast<std::size_t>(h)] = 1;

  Matrix w = g.weights();
  const auto add = [&w](int i, int j, double delta) {
    w(i, j) += delta;
    w(j, i) = w(i, j);
  };

  std::vector<std::pair<int, int>> pool;
  for (const auto& [u, v] : g.edges()) {
    if (!is_hub[static_cast<std::size_t>(u)] && !is_hub[static_cast<std::size_t>(v)]) {
      pool.emplace_back(u, v);
    }
  }
  const std::size_t n_rewire =
      static_cast<std::size_t>(intensity * static_cast<double>(pool.size()));
  for (std::size_t k = 0; k < n_rewire; ++k) {
    const std::size_t pick = rng.next_below(pool.size());
    const auto [u, v] = pool[pick];
    pool[pick] = pool.back();
    pool.pop_back();

    const double weight = w(u, v);
    w(u, v) = 0.0;
    w(v, u) = 0.0;
    const int keep = rng.next_below(2) == 0 ? u : v;
    const int hub = hubs[rng.next_below(hubs.size())];
    add(keep, hub, weight);
  }

  const std::size_t n_flood = static_cast<std::size_t>(0.2 * n);
  std::vector<int> nodes(static_cast<std::size_t>(n));
  std::iota(nodes.begin(), nodes.end(), 0);
  for (std::size_t k = 0; k < n_flood; ++k) {
    const std::size_t j = k + rng.next_below(static_cast<std::uint64_t>(n) - k);
    std::swap(nodes[k], nodes[j]);
    for (int h : hubs) {
      if (nodes[k] != h) add(nodes[k], h, 10.0);
    }
  }
  return Graph(n, std::move(w));
}

ScenarioPair scenario(const ScenarioConfig& cfg) {
  if (cfg.n < 1 || cfg.steps < 1) throw std::invalid_argument("scenario: n and steps must be >= 1");
  if (cfg.attack_start < 1) throw std::invalid_argument("scenario: attack_start must be >= 1");

  std::vector<Graph> normal;
  std::vector<Graph> abnormal;
  std::vector<long> timestamps;
  normal.reserve(static_cast<std::size_t>(cfg.steps));
  abnormal.reserve(static_cast<std::size_t>(cfg.steps));
  for (int t = 0; t < cfg.steps; ++t) {
    const std::uint64_t base_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t), 0);
    Graph base = cfg.family == GeneratorFamily::ErdosRenyi
                     ? erdos_renyi(cfg.n, cfg.edge_prob, base_seed)
                     : barabasi_albert(cfg.n, cfg.attach, base_seed);
    const bool attacked = t >= cfg.attack_start - 1;
    abnormal.push_back(attacked ? attack_inject(base, cfg.intensity, cfg.hub_count,
                                                mix_seed(cfg.seed, static_cast<std::uint64_t>(t), 1))
                                : base);
    normal.push_back(std::move(base));
    timestamps.push_back(t);
  }
  return ScenarioPair{TemporalSequence(std::move(normal), timestamps),
                      TemporalSequence(std::move(abnormal), std::move(timestamps))};
}

}  // namespace bifnet
