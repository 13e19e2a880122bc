#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ecd.hpp"
#include "error.hpp"
#include "events.hpp"
#include "topology.hpp"

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(ECDSIM_TEST_DATA_DIR) + "/" + name;
}

// Error code of the exception `fn` throws, or nullopt when it returns.
template <typename Fn>
std::optional<ecdsim::Errc> errc_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const ecdsim::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Exponential-time reference: minimum direct-link cost over every simple
// path. Every station pair counts as linked at its matrix weight.
inline double brute_force_distance(const ecdsim::BaseStationGraph& g, std::size_t from,
                                   std::size_t to) {
  const std::size_t n = g.stations.size();
  std::vector<char> visited(n, 0);
  double best = std::numeric_limits<double>::infinity();
  auto walk = [&](auto&& self, std::size_t at, double cost) -> void {
    if (cost > best) return;
    if (at == to) {
      best = cost;
      return;
    }
    visited[at] = 1;
    for (std::size_t m = 0; m < n; ++m)
      if (!visited[m]) self(self, m, cost + g.weights[at][m]);
    visited[at] = 0;
  };
  walk(walk, from, 0.0);
  return best;
}

// Direct-link cost of a station sequence.
inline double path_cost(const ecdsim::BaseStationGraph& g, const ecdsim::DistanceMatrix& d,
                        const std::vector<std::string>& path) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto a = static_cast<std::size_t>(d.require_index(path[i]));
    const auto b = static_cast<std::size_t>(d.require_index(path[i + 1]));
    total += g.weights[a][b];
  }
  return total;
}

// All side effects recorded in an event log, in order.
inline std::vector<ecdsim::SideEffect> effects_of(const std::vector<ecdsim::LogRecord>& log) {
  std::vector<ecdsim::SideEffect> out;
  for (const auto& rec : log)
    if (const auto* e = std::get_if<ecdsim::SideEffect>(&rec.body)) out.push_back(*e);
  return out;
}

inline std::size_t count_kind(const std::vector<ecdsim::SideEffect>& effects,
                              ecdsim::EffectKind kind) {
  std::size_t n = 0;
  for (const auto& e : effects)
    if (e.kind == kind) ++n;
  return n;
}

inline const ecdsim::SideEffect* find_kind(const std::vector<ecdsim::SideEffect>& effects,
                                           ecdsim::EffectKind kind) {
  for (const auto& e : effects)
    if (e.kind == kind) return &e;
  return nullptr;
}

// The worked example's five stations with the direction conflict in the D
// row smoothed out, so the matrix is symmetric and already metric.
inline ecdsim::BaseStationGraph five_station_graph() {
  return ecdsim::validate_graph({"A", "B", "C", "D", "E"},
                                {{0, 10, 35, 50, 15},
                                 {10, 0, 30, 45, 20},
                                 {35, 30, 0, 75, 50},
                                 {50, 45, 75, 0, 50},
                                 {15, 20, 50, 50, 0}});
}

// The same five stations with the distance table taken as printed (D's
// row disagrees with its column and is not metric).
inline ecdsim::DistanceMatrix five_station_printed() {
  return ecdsim::distance_matrix_from_closed({"A", "B", "C", "D", "E"},
                                             {{0, 10, 35, 50, 15},
                                              {10, 0, 30, 45, 20},
                                              {35, 30, 0, 75, 50},
                                              {65, 45, 75, 0, 50},
                                              {15, 20, 50, 50, 0}});
}

inline ecdsim::EcdWorld five_station_world(ecdsim::ScenarioParams params,
                                           std::int64_t capacity = 10,
                                           std::int64_t n_contents = 29) {
  const ecdsim::BaseStationGraph g = five_station_graph();
  const ecdsim::DistanceMatrix d = ecdsim::all_pairs_shortest_paths(g);
  const ecdsim::PoolRanking r = ecdsim::rank_pools(d);
  ecdsim::EcdWorld world(d, r, params, std::vector<std::int64_t>(5, capacity));
  std::vector<std::string> ids;
  for (std::int64_t i = 1; i <= n_contents; ++i) ids.push_back("v" + std::to_string(i));
  world.seed_cloud_contents(ids);
  return world;
}

}  // namespace testsupport
