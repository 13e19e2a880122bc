#include "cdn.hpp"

#include <algorithm>

namespace ecdsim {

CdnWorld::CdnWorld(std::vector<std::string> stations, std::vector<std::int64_t> capacities,
                   bool passthrough)
    : catalog_(std::move(stations)), passthrough_(passthrough) {
  if (capacities.size() != catalog_.station_count())
    fail(Errc::invalid_argument, "need one proxy capacity per station");
  proxies_.resize(capacities.size());
  for (std::size_t i = 0; i < capacities.size(); ++i) {
    if (capacities[i] < 0) fail(Errc::invalid_argument, "proxy capacity must be non-negative");
    proxies_[i].capacity = capacities[i];
  }
}

void CdnWorld::seed_cloud_contents(const std::vector<std::string>& ids, std::int64_t size) {
  for (const auto& id : ids) cloud_.insert(catalog_.add_cloud_content(id, size));
}

// Same tie rule as the edge pools: equal counts shed the newest entry.
std::optional<ContentIdx> CdnWorld::least_requested(const Proxy& p) const {
  std::optional<ContentIdx> best;
  for (ContentIdx c : p.cache) {
    if (!best) {
      best = c;
      continue;
    }
    const auto rc = catalog_.meta(c).total_requests, rb = catalog_.meta(*best).total_requests;
    if (rc < rb || (rc == rb && c > *best)) best = c;
  }
  return best;
}

ServeOutcome CdnWorld::handle_request(const std::string& station, const std::string& content,
                                      EventTime at) {
  ++event_index_;
  const StationIdx s = catalog_.station_index(station);
  const auto found = catalog_.find(content);
  if (!found) fail(Errc::invalid_argument, "unknown content '" + content + "'");
  const ContentIdx c = *found;
  if (!cloud_.count(c)) fail(Errc::state, "content '" + content + "' missing from cloud");
  catalog_.record_request(c, s, at);

  ServeOutcome out;
  Proxy& p = proxies_[s];
  if (p.cache.count(c)) {
    out.source = SourceKind::LocalPool;
    out.source_station = station;
  } else {
    out.source = SourceKind::Cloud;
    if (!passthrough_ && catalog_.meta(c).size <= p.capacity) {
      while (p.capacity - p.occupied < catalog_.meta(c).size) {
        const auto victim = least_requested(p);
        if (!victim) break;
        p.cache.erase(*victim);
        p.occupied -= catalog_.meta(*victim).size;
        SideEffect e;
        e.kind = EffectKind::Evict;
        e.content = catalog_.meta(*victim).id;
        e.from = station;
        out.side_effects.push_back(std::move(e));
      }
      p.cache.insert(c);
      p.occupied += catalog_.meta(c).size;
      SideEffect e;
      e.kind = EffectKind::CloudDeliver;
      e.content = content;
      e.from = "cloud";
      e.to = station;
      out.side_effects.push_back(std::move(e));
    }
  }
  log_.push_back({event_index_, at,
                  ServeRecord{station, content, out.source, out.source_station, out.transit}});
  for (const auto& e : out.side_effects) log_.push_back({event_index_, at, e});
  return out;
}

std::vector<SideEffect> CdnWorld::handle_upload(const std::string& station,
                                                const std::string& content, EventTime at) {
  ++event_index_;
  const StationIdx s = catalog_.station_index(station);
  const ContentIdx c = catalog_.add_uploaded_content(content, s, 1, at);
  cloud_.insert(c);
  SideEffect e;
  e.kind = EffectKind::UserUpload;
  e.content = content;
  e.from = "user";
  e.to = "cloud";
  log_.push_back({event_index_, at, e});
  return {e};
}

bool CdnWorld::proxy_holds(const std::string& station, const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return false;
  return proxies_[catalog_.station_index(station)].cache.count(*c) != 0;
}

bool CdnWorld::in_cloud(const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return false;
  return cloud_.count(*c) != 0;
}

std::vector<std::string> CdnWorld::proxy_contents(const std::string& station) const {
  std::vector<std::string> out;
  for (ContentIdx c : proxies_[catalog_.station_index(station)].cache)
    out.push_back(catalog_.meta(c).id);
  std::sort(out.begin(), out.end());
  return out;
}

void CdnWorld::violate(const std::string& what) const {
  fail(Errc::state, "invariant violation: " + what);
}

void CdnWorld::check_invariants() const {
  for (std::size_t i = 0; i < proxies_.size(); ++i) {
    const Proxy& p = proxies_[i];
    std::int64_t used = 0;
    for (ContentIdx c : p.cache) used += catalog_.meta(c).size;
    if (used != p.occupied)
      violate("proxy '" + catalog_.station_id(static_cast<StationIdx>(i)) +
              "' occupancy counter drifted");
    if (p.occupied > p.capacity)
      violate("proxy '" + catalog_.station_id(static_cast<StationIdx>(i)) +
              "' exceeds its capacity");
    for (ContentIdx c : p.cache)
      if (!cloud_.count(c))
        violate("proxy cached '" + catalog_.meta(c).id + "' which is not in cloud");
  }
  for (std::size_t i = log_checked_; i < log_.size(); ++i) {
    const auto* e = std::get_if<SideEffect>(&log_[i].body);
    if (e && (e->kind == EffectKind::Promote || e->kind == EffectKind::Demote ||
              e->kind == EffectKind::ReplicaDeliver))
      violate("inter-proxy transfer appeared in the log");
    const auto* sr = std::get_if<ServeRecord>(&log_[i].body);
    if (sr && sr->source == SourceKind::RemotePool)
      violate("request served from a remote proxy");
  }
  log_checked_ = log_.size();
}

}  // namespace ecdsim
