#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace ecdsim {

using Cost = double;

// Weighted graph over base stations. Weight w(i,j) is the cost of moving one
// content between stations i and j over a direct link. A symmetric input is
// stored mirrored; a directed input keeps the matrix as given.
struct BaseStationGraph {
  std::vector<std::string> stations;
  std::vector<std::vector<Cost>> weights;  // weights[i][j], diagonal zero
  bool directed = false;
};

// Validates station names (non-empty, unique) and the weight matrix
// (square, matching size, zero diagonal, non-negative finite entries,
// symmetric unless `directed`). Throws Errc::invalid_argument.
BaseStationGraph validate_graph(std::vector<std::string> stations,
                                std::vector<std::vector<Cost>> weights,
                                bool directed = false);

// All-pairs shortest-path closure plus first-hop table for path recovery.
struct DistanceMatrix {
  std::vector<std::string> stations;
  std::vector<std::vector<Cost>> dist;
  // next_hop[i][j]: station after i on a cost-minimal route i -> j over
  // direct links; next_hop[i][i] == i. Ties keep the direct link.
  std::vector<std::vector<int>> next_hop;

  int index_of(const std::string& station) const;  // -1 when unknown
  int require_index(const std::string& station) const;
  std::size_t size() const { return stations.size(); }
};

DistanceMatrix all_pairs_shortest_paths(const BaseStationGraph& g);

// Wraps an externally supplied distance table without running the closure:
// entries are authoritative pairwise distances (row totals are taken exactly
// as given) and every route is the direct connection. Validation matches
// validate_graph with directed entries allowed.
DistanceMatrix distance_matrix_from_closed(std::vector<std::string> stations,
                                           std::vector<std::vector<Cost>> dist);

struct PoolRankEntry {
  std::string station;
  Cost total_cost = 0;  // row sum of shortest-path distances to all stations
  int rank = 0;         // 1-based, 1 = cheapest total
};

// Stations ordered best-first by (total_cost asc, station id asc).
struct PoolRanking {
  std::vector<PoolRankEntry> entries;

  int rank_of(const std::string& station) const;  // -1 when unknown
  const std::string& station_at_rank(int rank) const;
};

PoolRanking rank_pools(const DistanceMatrix& d);

struct RouteResult {
  std::string holder;
  Cost transit_cost = 0;
};

// Cheapest holder to serve `requester`; ties broken by holder id ascending.
// Throws on empty holder list or unknown station.
RouteResult route_request(const DistanceMatrix& d, const std::string& requester,
                          const std::vector<std::string>& holders);

// Station sequence of the reconstructed shortest path, endpoints included.
std::vector<std::string> shortest_path(const DistanceMatrix& d, const std::string& from,
                                       const std::string& to);

}  // namespace ecdsim
