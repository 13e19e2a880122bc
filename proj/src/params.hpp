#pragma once

#include <optional>
#include <string>

#include "catalog.hpp"
#include "error.hpp"

namespace ecdsim {

// Behavioural knobs of the edge-delivery model.
struct ScenarioParams {
  int k = 2;                       // number of top-ranked pools
  double delta = 0.1;              // migration hysteresis: promote when r > (1+delta)*r_least
  double eps_fill = 1.0 / 3.0;     // initial fill fraction for non-top pools
  double eps_share = 1.0 / 3.0;    // per-station demand share that triggers replication
  double p_cloud_upload = 0.2;     // expected fraction of uploads that reach the cloud
  bool price_migrations = true;    // charge inter-station migration legs
  std::optional<TimeWindow> priority_window;  // when set, demand comparisons count only
                                              // requests timestamped inside this window

  void validate(std::size_t station_count) const {
    if (k < 1 || static_cast<std::size_t>(k) > station_count)
      fail(Errc::invalid_argument, "k must be between 1 and the station count");
    if (delta < 0) fail(Errc::invalid_argument, "delta must be non-negative");
    if (!(eps_fill > 0) || eps_fill > 1)
      fail(Errc::invalid_argument, "eps_fill must lie in (0, 1]");
    if (!(eps_share > 0) || eps_share > 1)
      fail(Errc::invalid_argument, "eps_share must lie in (0, 1]");
    if (p_cloud_upload < 0 || p_cloud_upload > 1)
      fail(Errc::invalid_argument, "p_cloud_upload must lie in [0, 1]");
    if (priority_window && priority_window->from > priority_window->to)
      fail(Errc::invalid_argument, "priority window must have from <= to");
  }
};

// Fixed per-leg transfer distances used by the cost model.
struct DistanceParams {
  double user_cloud = 1000;
  double user_proxy = 500;
  double proxy_cloud = 500;
  double user_edge = 100;
  double edge_cloud = 900;

  void validate() const {
    for (double v : {user_cloud, user_proxy, proxy_cloud, user_edge, edge_cloud})
      if (!(v >= 0)) fail(Errc::invalid_argument, "distances must be non-negative");
  }
};

}  // namespace ecdsim
