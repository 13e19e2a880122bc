#include "catalog.hpp"

#include <algorithm>

namespace ecdsim {

Catalog::Catalog(std::vector<std::string> stations) : stations_(std::move(stations)) {
  if (stations_.empty()) fail(Errc::invalid_argument, "catalog needs at least one station");
  for (StationIdx i = 0; i < stations_.size(); ++i) {
    if (stations_[i].empty()) fail(Errc::invalid_argument, "station id must be non-empty");
    if (!station_by_id_.emplace(stations_[i], i).second)
      fail(Errc::invalid_argument, "duplicate station id '" + stations_[i] + "'");
  }
}

ContentIdx Catalog::insert(ContentMeta meta) {
  if (meta.id.empty()) fail(Errc::invalid_argument, "content id must be non-empty");
  if (contains(meta.id)) fail(Errc::invalid_argument, "duplicate content id '" + meta.id + "'");
  if (meta.size < 1) fail(Errc::invalid_argument, "content '" + meta.id + "' needs size >= 1");
  meta.per_station.assign(stations_.size(), 0);
  const ContentIdx idx = static_cast<ContentIdx>(metas_.size());
  by_id_.emplace(meta.id, idx);
  metas_.push_back(std::move(meta));
  return idx;
}

ContentIdx Catalog::add_cloud_content(const std::string& id, std::int64_t size, EventTime at) {
  ContentMeta m;
  m.id = id;
  m.size = size;
  m.origin_cloud = true;
  m.created_at = at;
  return insert(std::move(m));
}

ContentIdx Catalog::add_uploaded_content(const std::string& id, StationIdx origin_station,
                                         std::int64_t size, EventTime at) {
  if (origin_station >= stations_.size())
    fail(Errc::invalid_argument, "origin station index out of range");
  ContentMeta m;
  m.id = id;
  m.size = size;
  m.origin_cloud = false;
  m.origin_station = origin_station;
  m.created_at = at;
  return insert(std::move(m));
}

std::optional<ContentIdx> Catalog::find(const std::string& id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

ContentIdx Catalog::require(const std::string& id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) fail(Errc::invalid_argument, "unknown content '" + id + "'");
  return it->second;
}

void Catalog::record_request(ContentIdx c, StationIdx via, EventTime at) {
  if (c >= metas_.size()) fail(Errc::invalid_argument, "content index out of range");
  ContentMeta& m = metas_[c];
  if (via >= stations_.size()) fail(Errc::invalid_argument, "station index out of range");
  if (!m.request_times.empty() && at < m.request_times.back())
    fail(Errc::invalid_argument,
         "request times for '" + m.id + "' must be non-decreasing");
  m.total_requests += 1;
  m.per_station[via] += 1;
  m.request_times.push_back(at);
}

double Catalog::station_share(ContentIdx c, StationIdx via) const {
  const ContentMeta& m = meta(c);
  if (via >= stations_.size()) fail(Errc::invalid_argument, "station index out of range");
  if (m.total_requests == 0)
    fail(Errc::state, "content '" + m.id + "' has no requests; share undefined");
  return static_cast<double>(m.per_station[via]) / static_cast<double>(m.total_requests);
}

std::uint64_t Catalog::requests_in_window(ContentIdx c, const TimeWindow& w) const {
  const ContentMeta& m = meta(c);
  const auto lo = std::lower_bound(m.request_times.begin(), m.request_times.end(), w.from);
  const auto hi = std::upper_bound(m.request_times.begin(), m.request_times.end(), w.to);
  return hi > lo ? static_cast<std::uint64_t>(hi - lo) : 0;
}

const ContentMeta& Catalog::meta(ContentIdx c) const {
  if (c >= metas_.size()) fail(Errc::invalid_argument, "content index out of range");
  return metas_[c];
}

StationIdx Catalog::station_index(const std::string& id) const {
  const auto it = station_by_id_.find(id);
  if (it == station_by_id_.end()) fail(Errc::invalid_argument, "unknown station '" + id + "'");
  return it->second;
}

const std::string& Catalog::station_id(StationIdx s) const {
  if (s >= stations_.size()) fail(Errc::invalid_argument, "station index out of range");
  return stations_[s];
}

std::vector<ContentIdx> priority_order(const Catalog& catalog,
                                       const std::vector<ContentIdx>& contents,
                                       std::optional<TimeWindow> window) {
  std::vector<std::pair<std::uint64_t, ContentIdx>> keyed;
  keyed.reserve(contents.size());
  for (ContentIdx c : contents) {
    const std::uint64_t n =
        window ? catalog.requests_in_window(c, *window) : catalog.meta(c).total_requests;
    keyed.emplace_back(n, c);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return catalog.meta(a.second).id < catalog.meta(b.second).id;
  });
  std::vector<ContentIdx> out;
  out.reserve(keyed.size());
  for (const auto& [n, c] : keyed) out.push_back(c);
  return out;
}

}  // namespace ecdsim
