#include "topology.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ecdsim {

namespace {

void check_matrix(const std::vector<std::string>& stations,
                  const std::vector<std::vector<Cost>>& m, bool directed,
                  const char* what) {
  const std::size_t n = stations.size();
  if (n == 0) fail(Errc::invalid_argument, "topology needs at least one station");
  std::unordered_set<std::string> seen;
  for (const auto& s : stations) {
    if (s.empty()) fail(Errc::invalid_argument, "station id must be non-empty");
    if (!seen.insert(s).second)
      fail(Errc::invalid_argument, "duplicate station id '" + s + "'");
  }
  if (m.size() != n)
    fail(Errc::invalid_argument, std::string(what) + " matrix must have one row per station");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      fail(Errc::invalid_argument,
           std::string(what) + " matrix row for '" + stations[i] + "' has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const Cost w = m[i][j];
      if (!std::isfinite(w) || w < 0)
        fail(Errc::invalid_argument, std::string(what) + " entry (" + stations[i] + "," +
                                         stations[j] + ") must be finite and non-negative");
      if (i == j && w != 0)
        fail(Errc::invalid_argument,
             std::string(what) + " diagonal entry for '" + stations[i] + "' must be zero");
    }
  }
  if (!directed) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m[i][j] != m[j][i])
          fail(Errc::invalid_argument, std::string(what) + " not symmetric at (" + stations[i] +
                                           "," + stations[j] + ")");
  }
}

// Every pair starts out directly connected; relaxations reroute below.
std::vector<std::vector<int>> direct_hops(std::size_t n) {
  std::vector<std::vector<int>> next(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) next[i][j] = static_cast<int>(j);
  return next;
}

}  // namespace

BaseStationGraph validate_graph(std::vector<std::string> stations,
                                std::vector<std::vector<Cost>> weights, bool directed) {
  check_matrix(stations, weights, directed, "weight");
  return BaseStationGraph{std::move(stations), std::move(weights), directed};
}

int DistanceMatrix::index_of(const std::string& station) const {
  for (std::size_t i = 0; i < stations.size(); ++i)
    if (stations[i] == station) return static_cast<int>(i);
  return -1;
}

int DistanceMatrix::require_index(const std::string& station) const {
  const int i = index_of(station);
  if (i < 0) fail(Errc::invalid_argument, "unknown station '" + station + "'");
  return i;
}

DistanceMatrix all_pairs_shortest_paths(const BaseStationGraph& g) {
  const std::size_t n = g.stations.size();
  std::vector<std::vector<Cost>> dist = g.weights;
  std::vector<std::vector<int>> next = direct_hops(n);
  // Rerouting only on strict improvement keeps every next_hop entry the
  // first move of a direct-link route that achieves dist[i][j], including
  // through zero-weight links.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Cost via = dist[i][k] + dist[k][j];
        if (via < dist[i][j]) {
          dist[i][j] = via;
          next[i][j] = next[i][k];
        }
      }
  DistanceMatrix d;
  d.stations = g.stations;
  d.next_hop = std::move(next);
  d.dist = std::move(dist);
  return d;
}

DistanceMatrix distance_matrix_from_closed(std::vector<std::string> stations,
                                           std::vector<std::vector<Cost>> dist) {
  check_matrix(stations, dist, /*directed=*/true, "distance");
  DistanceMatrix d;
  d.next_hop = direct_hops(stations.size());
  d.stations = std::move(stations);
  d.dist = std::move(dist);
  return d;
}

int PoolRanking::rank_of(const std::string& station) const {
  for (const auto& e : entries)
    if (e.station == station) return e.rank;
  return -1;
}

const std::string& PoolRanking::station_at_rank(int rank) const {
  if (rank < 1 || rank > static_cast<int>(entries.size()))
    fail(Errc::invalid_argument, "rank out of range");
  return entries[static_cast<std::size_t>(rank - 1)].station;
}

PoolRanking rank_pools(const DistanceMatrix& d) {
  PoolRanking r;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Cost total = 0;
    for (std::size_t j = 0; j < d.size(); ++j) total += d.dist[i][j];
    r.entries.push_back({d.stations[i], total, 0});
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const PoolRankEntry& a, const PoolRankEntry& b) {
    if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
    return a.station < b.station;
  });
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i].rank = static_cast<int>(i) + 1;
  return r;
}

RouteResult route_request(const DistanceMatrix& d, const std::string& requester,
                          const std::vector<std::string>& holders) {
  if (holders.empty()) fail(Errc::invalid_argument, "route_request needs at least one holder");
  const int r = d.require_index(requester);
  bool found = false;
  RouteResult best;
  for (const auto& h : holders) {
    const int hi = d.require_index(h);
    const Cost c = d.dist[r][hi];
    if (!found || c < best.transit_cost || (c == best.transit_cost && h < best.holder)) {
      best = {h, c};
      found = true;
    }
  }
  return best;
}

std::vector<std::string> shortest_path(const DistanceMatrix& d, const std::string& from,
                                       const std::string& to) {
  int at = d.require_index(from);
  const int goal = d.require_index(to);
  std::vector<std::string> path{d.stations[at]};
  while (at != goal) {
    at = d.next_hop[at][goal];
    path.push_back(d.stations[at]);
  }
  return path;
}

}  // namespace ecdsim
