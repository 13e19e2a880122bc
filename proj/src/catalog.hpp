#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace ecdsim {

using ContentIdx = std::uint32_t;
using StationIdx = std::uint32_t;
using EventTime = std::int64_t;

struct ContentMeta {
  std::string id;
  std::int64_t size = 1;
  bool origin_cloud = true;        // false: uploaded at origin_station's content server
  StationIdx origin_station = 0;   // meaningful only when !origin_cloud
  EventTime created_at = 0;
  std::uint64_t total_requests = 0;
  std::vector<std::uint64_t> per_station;  // request counts indexed by StationIdx
  std::vector<EventTime> request_times;    // non-decreasing
};

struct TimeWindow {
  EventTime from = 0;
  EventTime to = 0;  // inclusive bounds
};

// Demand bookkeeping for every content the system has ever seen. The station
// universe is fixed at construction; contents only accumulate.
class Catalog {
 public:
  explicit Catalog(std::vector<std::string> stations);

  ContentIdx add_cloud_content(const std::string& id, std::int64_t size = 1, EventTime at = 0);
  ContentIdx add_uploaded_content(const std::string& id, StationIdx origin_station,
                                  std::int64_t size = 1, EventTime at = 0);

  bool contains(const std::string& id) const { return by_id_.count(id) != 0; }
  std::optional<ContentIdx> find(const std::string& id) const;
  ContentIdx require(const std::string& id) const;

  // Request times must be fed non-decreasing; throws Errc::invalid_argument
  // otherwise so windowed counts stay well defined.
  void record_request(ContentIdx c, StationIdx via, EventTime at);

  // Fraction of c's requests issued via `via`. Throws Errc::state when the
  // content has no requests at all.
  double station_share(ContentIdx c, StationIdx via) const;

  std::uint64_t requests_in_window(ContentIdx c, const TimeWindow& w) const;

  const ContentMeta& meta(ContentIdx c) const;
  std::size_t content_count() const { return metas_.size(); }
  std::size_t station_count() const { return stations_.size(); }
  StationIdx station_index(const std::string& id) const;
  const std::string& station_id(StationIdx s) const;
  const std::vector<std::string>& stations() const { return stations_; }

 private:
  ContentIdx insert(ContentMeta meta);

  std::vector<std::string> stations_;
  std::unordered_map<std::string, StationIdx> station_by_id_;
  std::vector<ContentMeta> metas_;
  std::unordered_map<std::string, ContentIdx> by_id_;
};

// Contents ordered by descending request count, tie-broken by content id
// ascending. With a window, only requests timestamped inside it count.
std::vector<ContentIdx> priority_order(const Catalog& catalog,
                                       const std::vector<ContentIdx>& contents,
                                       std::optional<TimeWindow> window = std::nullopt);

}  // namespace ecdsim
