#include "ecd.hpp"

#include <algorithm>
#include <cmath>

namespace ecdsim {

namespace {

std::int64_t effective_bound(std::int64_t capacity, bool top_k, double eps_fill) {
  if (top_k) return capacity;
  // Small slack so exact fractions like (1/3)*3 do not round below the
  // intended slot count.
  return static_cast<std::int64_t>(
      std::floor(eps_fill * static_cast<double>(capacity) + 1e-9));
}

}  // namespace

EcdWorld::EcdWorld(DistanceMatrix dist, PoolRanking ranking, ScenarioParams params,
                   std::vector<std::int64_t> capacities)
    : dist_(std::move(dist)),
      ranking_(std::move(ranking)),
      params_(params),
      catalog_(dist_.stations) {
  const std::size_t n = dist_.size();
  params_.validate(n);
  if (capacities.size() != n)
    fail(Errc::invalid_argument, "need one pool capacity per station");
  if (ranking_.entries.size() != n)
    fail(Errc::invalid_argument, "ranking must cover every station exactly once");

  pools_.resize(n);
  by_rank_.assign(n, 0);
  servers_.resize(n);
  std::vector<bool> ranked(n, false);
  for (const auto& e : ranking_.entries) {
    const StationIdx s = catalog_.station_index(e.station);
    if (ranked[s]) fail(Errc::invalid_argument, "station '" + e.station + "' ranked twice");
    ranked[s] = true;
    if (e.rank < 1 || static_cast<std::size_t>(e.rank) > n)
      fail(Errc::invalid_argument, "rank out of range for station '" + e.station + "'");
    by_rank_[static_cast<std::size_t>(e.rank - 1)] = s;
    Pool& p = pools_[s];
    p.rank = e.rank;
    p.top_k = e.rank <= params_.k;
    if (capacities[s] < 0)
      fail(Errc::invalid_argument, "pool capacity must be non-negative");
    p.capacity = capacities[s];
    p.effective = effective_bound(p.capacity, p.top_k, params_.eps_fill);
  }
}

void EcdWorld::seed_cloud_contents(const std::vector<std::string>& ids, std::int64_t size) {
  for (const auto& id : ids) {
    const ContentIdx c = catalog_.add_cloud_content(id, size);
    residency_.emplace_back();
    residency_.back().cloud = true;
    cloud_.insert(c);
    seeded_.push_back(c);
  }
}

std::map<std::string, std::vector<std::string>> EcdWorld::initial_placement() {
  if (placed_) fail(Errc::state, "initial placement already performed");
  if (served_any_) fail(Errc::state, "initial placement must precede events");
  placed_ = true;

  std::map<std::string, std::vector<std::string>> out;
  auto it = seeded_.begin();
  for (StationIdx s : by_rank_) {
    Pool& p = pools_[s];
    auto& filled = out[station_id(s)];
    while (it != seeded_.end()) {
      const ContentIdx c = *it;
      if (p.occupied + size_of(c) > p.effective) break;
      pool_insert(s, c, /*replica=*/false);
      filled.push_back(catalog_.meta(c).id);
      ++it;
    }
  }
  return out;
}

std::uint64_t EcdWorld::requests_of(ContentIdx c) const {
  if (params_.priority_window)
    return catalog_.requests_in_window(c, *params_.priority_window);
  return catalog_.meta(c).total_requests;
}

// Ties on the request count go to the newest catalog entry, i.e. the lowest
// initial priority: a full pool of never-requested contents sheds the last
// one placed, not an arbitrary id.
std::optional<ContentIdx> EcdWorld::least_requested(const Pool& p,
                                                    const std::set<ContentIdx>& exclude) const {
  std::optional<ContentIdx> best;
  for (ContentIdx c : p.members) {
    if (exclude.count(c)) continue;
    if (!best) {
      best = c;
      continue;
    }
    const std::uint64_t rc = requests_of(c), rb = requests_of(*best);
    if (rc < rb || (rc == rb && c > *best)) best = c;
  }
  return best;
}

void EcdWorld::pool_insert(StationIdx s, ContentIdx c, bool replica) {
  Pool& p = pools_[s];
  if (p.members.count(c)) violate("pool '" + station_id(s) + "' already holds '" +
                                  catalog_.meta(c).id + "'");
  p.members.insert(c);
  p.occupied += size_of(c);
  Residency& res = residency_[c];
  if (replica) {
    p.replicas.insert(c);
    res.replica_pools.insert(s);
  } else {
    if (res.primary_pool)
      violate("content '" + catalog_.meta(c).id + "' already has a primary pool");
    res.primary_pool = s;
  }
}

void EcdWorld::pool_remove(StationIdx s, ContentIdx c) {
  Pool& p = pools_[s];
  if (!p.members.erase(c))
    violate("pool '" + station_id(s) + "' does not hold '" + catalog_.meta(c).id + "'");
  p.occupied -= size_of(c);
  p.replicas.erase(c);
  Residency& res = residency_[c];
  if (res.primary_pool && *res.primary_pool == s)
    res.primary_pool.reset();
  else
    res.replica_pools.erase(s);
}

void EcdWorld::evict_until_fits(StationIdx s, std::int64_t need,
                                const std::set<ContentIdx>& keep,
                                std::vector<SideEffect>& effects) {
  Pool& p = pools_[s];
  while (pool_free(p) < need) {
    const auto victim = least_requested(p, keep);
    if (!victim) break;
    pool_remove(s, *victim);
    SideEffect e;
    e.kind = EffectKind::Evict;
    e.content = catalog_.meta(*victim).id;
    e.from = station_id(s);
    effects.push_back(std::move(e));
  }
}

void EcdWorld::demote_until_fits(StationIdx s, std::int64_t need, const SideEffect& trigger,
                                 std::vector<SideEffect>& effects) {
  Pool& p = pools_[s];
  while (pool_free(p) < need) {
    const auto victim = least_requested(p);
    if (!victim) break;
    const ContentIdx v = *victim;
    const std::string vid = catalog_.meta(v).id;
    const bool was_replica = p.replicas.count(v) != 0;
    if (static_cast<std::size_t>(p.rank) == pools_.size()) {
      // Lowest-ranked pool has nowhere to push; it deletes outright.
      pool_remove(s, v);
      SideEffect e;
      e.kind = EffectKind::Evict;
      e.content = vid;
      e.from = station_id(s);
      effects.push_back(std::move(e));
      continue;
    }
    const StationIdx w = by_rank_[static_cast<std::size_t>(p.rank)];
    Pool& pw = pools_[w];
    pool_remove(s, v);
    if (pw.members.count(v)) {
      // The worse pool already holds a copy; dropping ours suffices.
      if (!was_replica && pw.replicas.count(v)) {
        pw.replicas.erase(v);
        residency_[v].replica_pools.erase(w);
        residency_[v].primary_pool = w;
      }
      SideEffect e = trigger;
      e.kind = EffectKind::Demote;
      e.content = vid;
      e.from = station_id(s);
      e.to = station_id(w);
      e.transit = 0;
      effects.push_back(std::move(e));
      continue;
    }
    if (size_of(v) > pw.effective) {
      SideEffect e;
      e.kind = EffectKind::Evict;
      e.content = vid;
      e.from = station_id(s);
      effects.push_back(std::move(e));
      continue;
    }
    evict_until_fits(w, size_of(v), {}, effects);
    pool_insert(w, v, was_replica);
    SideEffect e = trigger;
    e.kind = EffectKind::Demote;
    e.content = vid;
    e.from = station_id(s);
    e.to = station_id(w);
    e.transit = dist_.dist[s][w];
    effects.push_back(std::move(e));
  }
}

Cost EcdWorld::move_between_pools(ContentIdx c, StationIdx from, StationIdx to) {
  Pool& dst = pools_[to];
  const bool was_replica = pools_[from].replicas.count(c) != 0;
  pool_remove(from, c);
  if (dst.members.count(c)) {
    // Copy already present; promote its status when a primary moved in.
    if (!was_replica && dst.replicas.count(c)) {
      dst.replicas.erase(c);
      residency_[c].replica_pools.erase(to);
      residency_[c].primary_pool = to;
    }
    return 0;
  }
  pool_insert(to, c, was_replica);
  return dist_.dist[from][to];
}

void EcdWorld::note_pool_entry(ContentIdx c, StationIdx s, std::vector<SideEffect>& effects) {
  if (!pools_[s].top_k || residency_[c].cloud) return;
  cloud_.insert(c);
  residency_[c].cloud = true;
  SideEffect e;
  e.kind = EffectKind::CloudUpload;
  e.content = catalog_.meta(c).id;
  e.from = station_id(s);
  e.to = "cloud";
  effects.push_back(std::move(e));
}

std::vector<SideEffect> EcdWorld::promote_chain(ContentIdx c) {
  std::vector<SideEffect> effects;
  if (!residency_[c].primary_pool) return effects;
  StationIdx h = *residency_[c].primary_pool;
  while (true) {
    Pool& ph = pools_[h];
    if (ph.rank == 1) break;
    const StationIdx n = by_rank_[static_cast<std::size_t>(ph.rank - 2)];
    Pool& pn = pools_[n];
    const auto ref = least_requested(pn, {c});
    const std::uint64_t r_ref = ref ? requests_of(*ref) : 0;
    const double threshold = (1.0 + params_.delta) * static_cast<double>(r_ref);
    const std::uint64_t rc = requests_of(c);
    if (!(static_cast<double>(rc) > threshold)) break;
    if (size_of(c) > pn.effective) break;

    SideEffect up;
    up.kind = EffectKind::Promote;
    up.content = catalog_.meta(c).id;
    up.from = station_id(h);
    up.to = station_id(n);
    up.r_content = rc;
    up.r_reference = r_ref;
    up.threshold = threshold;

    if (pn.members.count(c) || pool_free(pn) >= size_of(c)) {
      up.transit = move_between_pools(c, h, n);
      effects.push_back(up);
    } else {
      // Swap: push the worse half down first, then lift c.
      pool_remove(h, c);
      std::set<ContentIdx> arrived;
      while (pool_free(pn) < size_of(c)) {
        const auto victim = least_requested(pn);
        if (!victim) break;
        const ContentIdx v = *victim;
        const std::string vid = catalog_.meta(v).id;
        const bool was_replica = pn.replicas.count(v) != 0;
        pool_remove(n, v);
        if (ph.members.count(v)) {
          if (!was_replica && ph.replicas.count(v)) {
            ph.replicas.erase(v);
            residency_[v].replica_pools.erase(h);
            residency_[v].primary_pool = h;
          }
          arrived.insert(v);
          SideEffect down = up;
          down.kind = EffectKind::Demote;
          down.content = vid;
          down.from = station_id(n);
          down.to = station_id(h);
          down.transit = 0;
          effects.push_back(std::move(down));
          continue;
        }
        if (size_of(v) > ph.effective) {
          SideEffect e;
          e.kind = EffectKind::Evict;
          e.content = vid;
          e.from = station_id(n);
          effects.push_back(std::move(e));
          continue;
        }
        evict_until_fits(h, size_of(v), arrived, effects);
        if (pool_free(ph) < size_of(v)) {
          SideEffect e;
          e.kind = EffectKind::Evict;
          e.content = vid;
          e.from = station_id(n);
          effects.push_back(std::move(e));
          continue;
        }
        pool_insert(h, v, was_replica);
        arrived.insert(v);
        SideEffect down = up;
        down.kind = EffectKind::Demote;
        down.content = vid;
        down.from = station_id(n);
        down.to = station_id(h);
        down.transit = dist_.dist[n][h];
        effects.push_back(std::move(down));
      }
      pool_insert(n, c, /*replica=*/false);
      up.transit = dist_.dist[h][n];
      effects.push_back(up);
    }
    note_pool_entry(c, n, effects);
    h = n;
  }
  return effects;
}

std::vector<SideEffect> EcdWorld::replicate(ContentIdx c) {
  std::vector<SideEffect> effects;
  const Residency& res = residency_[c];
  if (!res.cloud) return effects;
  bool in_top = false;
  if (res.primary_pool && pools_[*res.primary_pool].top_k) in_top = true;
  for (StationIdx s : res.replica_pools)
    if (pools_[s].top_k) in_top = true;
  if (!in_top) return effects;
  if (catalog_.meta(c).total_requests == 0) return effects;

  std::vector<StationIdx> order(pools_.size());
  for (StationIdx s = 0; s < pools_.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(),
            [&](StationIdx a, StationIdx b) { return station_id(a) < station_id(b); });

  for (StationIdx s : order) {
    if (res.primary_pool && *res.primary_pool == s) continue;
    if (res.replica_pools.count(s)) continue;
    const double share = catalog_.station_share(c, s);
    if (!(share > params_.eps_share)) continue;
    Pool& ps = pools_[s];
    if (size_of(c) > ps.effective) continue;

    SideEffect e;
    e.kind = EffectKind::ReplicaDeliver;
    e.content = catalog_.meta(c).id;
    e.from = "cloud";
    e.to = station_id(s);
    e.r_content = catalog_.meta(c).per_station[s];
    e.r_reference = catalog_.meta(c).total_requests;
    e.threshold = params_.eps_share;
    e.share = share;

    if (pool_free(ps) < size_of(c)) demote_until_fits(s, size_of(c), e, effects);
    if (pool_free(ps) < size_of(c)) continue;
    pool_insert(s, c, /*replica=*/true);
    residency_[c].ever_replicated = true;
    effects.push_back(std::move(e));
  }
  return effects;
}

std::vector<SideEffect> EcdWorld::cloud_miss(ContentIdx c) {
  std::vector<SideEffect> effects;
  const Residency& res = residency_[c];
  if (!res.cloud || res.primary_pool || !res.replica_pools.empty() || !res.servers.empty())
    return effects;
  const StationIdx low = by_rank_.back();
  Pool& pl = pools_[low];
  if (size_of(c) > pl.effective) return effects;
  evict_until_fits(low, size_of(c), {}, effects);
  pool_insert(low, c, /*replica=*/false);
  SideEffect e;
  e.kind = EffectKind::CloudDeliver;
  e.content = catalog_.meta(c).id;
  e.from = "cloud";
  e.to = station_id(low);
  effects.push_back(std::move(e));
  return effects;
}

std::vector<SideEffect> EcdWorld::admit(ContentIdx c) {
  std::vector<SideEffect> effects;
  const Residency& res = residency_[c];
  if (res.cloud || res.primary_pool || !res.replica_pools.empty() || res.servers.empty())
    return effects;
  const StationIdx low = by_rank_.back();
  Pool& pl = pools_[low];
  const auto ref = least_requested(pl, {c});
  const std::uint64_t r_ref = ref ? requests_of(*ref) : 0;
  const double threshold = (1.0 + params_.delta) * static_cast<double>(r_ref);
  const std::uint64_t rc = requests_of(c);
  if (!(static_cast<double>(rc) > threshold)) return effects;
  if (size_of(c) > pl.effective) return effects;
  evict_until_fits(low, size_of(c), {}, effects);
  pool_insert(low, c, /*replica=*/false);
  const StationIdx origin = catalog_.meta(c).origin_station;
  SideEffect e;
  e.kind = EffectKind::AdmitCopy;
  e.content = catalog_.meta(c).id;
  e.from = station_id(origin);
  e.to = station_id(low);
  e.transit = dist_.dist[origin][low];
  e.r_content = rc;
  e.r_reference = r_ref;
  e.threshold = threshold;
  effects.push_back(std::move(e));
  note_pool_entry(c, low, effects);
  return effects;
}

std::vector<SideEffect> EcdWorld::promote_if_eligible(const std::string& content) {
  const ContentIdx c = catalog_.require(content);
  auto effects = promote_chain(c);
  append_log(0, effects);
  return effects;
}

std::vector<SideEffect> EcdWorld::replicate_if_popular(const std::string& content) {
  const ContentIdx c = catalog_.require(content);
  auto effects = replicate(c);
  append_log(0, effects);
  return effects;
}

std::vector<SideEffect> EcdWorld::handle_cloud_miss(const std::string& content) {
  const ContentIdx c = catalog_.require(content);
  auto effects = cloud_miss(c);
  append_log(0, effects);
  return effects;
}

std::vector<SideEffect> EcdWorld::admit_uploaded(const std::string& content) {
  const ContentIdx c = catalog_.require(content);
  auto effects = admit(c);
  append_log(0, effects);
  return effects;
}

ServeOutcome EcdWorld::handle_request(const std::string& station_name,
                                      const std::string& content, EventTime at) {
  ++event_index_;
  served_any_ = true;
  const StationIdx r = station(station_name);
  const auto found = catalog_.find(content);
  if (!found) fail(Errc::invalid_argument, "unknown content '" + content + "'");
  const ContentIdx c = *found;
  catalog_.record_request(c, r, at);

  ServeOutcome out;
  const Residency& res = residency_[c];
  const bool local =
      (res.primary_pool && *res.primary_pool == r) || res.replica_pools.count(r) != 0;
  if (local) {
    out.source = SourceKind::LocalPool;
    out.source_station = station_name;
  } else if (res.primary_pool || !res.replica_pools.empty()) {
    std::vector<std::string> holders;
    if (res.primary_pool) holders.push_back(station_id(*res.primary_pool));
    for (StationIdx s : res.replica_pools) holders.push_back(station_id(s));
    const RouteResult route = route_request(dist_, station_name, holders);
    out.source = SourceKind::RemotePool;
    out.source_station = route.holder;
    out.transit = route.transit_cost;
  } else if (!res.servers.empty()) {
    std::vector<std::string> holders;
    for (StationIdx s : res.servers) holders.push_back(station_id(s));
    const RouteResult route = route_request(dist_, station_name, holders);
    out.source = SourceKind::ContentServer;
    out.source_station = route.holder;
    out.transit = route.transit_cost;
  } else if (res.cloud) {
    out.source = SourceKind::Cloud;
    out.side_effects = cloud_miss(c);
  } else {
    violate("content '" + content + "' is unreachable");
  }

  log_.push_back({event_index_, at,
                  ServeRecord{station_name, content, out.source, out.source_station,
                              out.transit}});
  append_log(at, out.side_effects);

  // Count-driven follow-ups for the requested content only.
  std::vector<SideEffect> more;
  const Residency& now = residency_[c];
  if (!now.primary_pool && now.replica_pools.empty() && !now.servers.empty()) {
    more = admit(c);
  } else {
    if (now.primary_pool && pools_[*now.primary_pool].rank > 1) {
      auto ups = promote_chain(c);
      more.insert(more.end(), ups.begin(), ups.end());
    }
    auto reps = replicate(c);
    more.insert(more.end(), reps.begin(), reps.end());
  }
  append_log(at, more);
  out.side_effects.insert(out.side_effects.end(), more.begin(), more.end());
  return out;
}

std::vector<SideEffect> EcdWorld::handle_upload(const std::string& station_name,
                                                const std::string& content, EventTime at) {
  ++event_index_;
  served_any_ = true;
  const StationIdx s = station(station_name);
  const ContentIdx c = catalog_.add_uploaded_content(content, s, 1, at);
  residency_.emplace_back();
  residency_.back().servers.insert(s);
  servers_[s].insert(c);

  std::vector<SideEffect> effects;
  SideEffect stored;
  stored.kind = EffectKind::UserUpload;
  stored.content = content;
  stored.from = "user";
  stored.to = station_name;
  effects.push_back(std::move(stored));

  const StationIdx best = by_rank_.front();
  descriptions_[c] = best;
  SideEffect desc;
  desc.kind = EffectKind::RegisterDescription;
  desc.content = content;
  desc.from = station_name;
  desc.to = station_id(best);
  effects.push_back(std::move(desc));

  append_log(at, effects);
  return effects;
}

std::int64_t EcdWorld::capacity(const std::string& station_name) const {
  return pools_[station(station_name)].capacity;
}

std::int64_t EcdWorld::effective_capacity(const std::string& station_name) const {
  return pools_[station(station_name)].effective;
}

bool EcdWorld::pool_holds(const std::string& station_name, const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return false;
  return pools_[station(station_name)].members.count(*c) != 0;
}

bool EcdWorld::server_holds(const std::string& station_name, const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return false;
  return servers_[station(station_name)].count(*c) != 0;
}

bool EcdWorld::in_cloud(const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return false;
  return cloud_.count(*c) != 0;
}

std::vector<std::string> EcdWorld::pool_contents(const std::string& station_name) const {
  std::vector<std::string> out;
  for (ContentIdx c : pools_[station(station_name)].members)
    out.push_back(catalog_.meta(c).id);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> EcdWorld::description_site(const std::string& content) const {
  const auto c = catalog_.find(content);
  if (!c) return std::nullopt;
  const auto it = descriptions_.find(*c);
  if (it == descriptions_.end()) return std::nullopt;
  return station_id(it->second);
}

void EcdWorld::append_log(EventTime at, const std::vector<SideEffect>& effects) {
  for (const auto& e : effects) log_.push_back({event_index_, at, e});
}

void EcdWorld::violate(const std::string& what) const {
  fail(Errc::state, "invariant violation: " + what);
}

void EcdWorld::check_invariants() const {
  if (residency_.size() != catalog_.content_count())
    violate("residency table out of step with the catalog");
  const std::size_t n = pools_.size();
  for (StationIdx s = 0; s < n; ++s) {
    const Pool& p = pools_[s];
    std::int64_t used = 0;
    for (ContentIdx c : p.members) used += size_of(c);
    if (used != p.occupied)
      violate("pool '" + station_id(s) + "' occupancy counter drifted");
    if (p.occupied > p.effective)
      violate("pool '" + station_id(s) + "' exceeds its effective capacity");
    for (ContentIdx c : p.replicas)
      if (!p.members.count(c))
        violate("pool '" + station_id(s) + "' replica set lists a non-member");
    for (ContentIdx c : p.members) {
      const Residency& res = residency_[c];
      const bool primary_here = res.primary_pool && *res.primary_pool == s;
      const bool replica_here = res.replica_pools.count(s) != 0;
      if (p.replicas.count(c) ? !replica_here : !primary_here)
        violate("pool '" + station_id(s) + "' and residency disagree about '" +
                catalog_.meta(c).id + "'");
      if (p.top_k && !residency_[c].cloud)
        violate("top pool '" + station_id(s) + "' holds '" + catalog_.meta(c).id +
                "' which is not in cloud");
    }
  }

  for (ContentIdx c = 0; c < residency_.size(); ++c) {
    const Residency& res = residency_[c];
    const ContentMeta& m = catalog_.meta(c);
    if (res.cloud != (cloud_.count(c) != 0))
      violate("cloud residency out of sync for '" + m.id + "'");
    if (!m.origin_cloud && !servers_[m.origin_station].count(c))
      violate("origin content server lost raw copy of '" + m.id + "'");
    for (StationIdx s : res.servers)
      if (!servers_[s].count(c))
        violate("server residency out of sync for '" + m.id + "'");
    if (res.primary_pool && !pools_[*res.primary_pool].members.count(c))
      violate("primary pool residency out of sync for '" + m.id + "'");
    for (StationIdx s : res.replica_pools)
      if (!pools_[s].members.count(c) || !pools_[s].replicas.count(c))
        violate("replica residency out of sync for '" + m.id + "'");
    const std::size_t copies =
        (res.primary_pool ? 1 : 0) + res.replica_pools.size();
    if (copies > 1 && !res.ever_replicated)
      violate("'" + m.id + "' occupies several pools without a replication event");
    if (!res.cloud && res.servers.empty() && copies == 0)
      violate("'" + m.id + "' vanished from cloud, servers and pools");
  }

  // Trigger soundness for records not yet validated.
  for (std::size_t i = trigger_checked_; i < log_.size(); ++i) {
    const auto* e = std::get_if<SideEffect>(&log_[i].body);
    if (!e) continue;
    switch (e->kind) {
      case EffectKind::Promote:
      case EffectKind::AdmitCopy:
        if (!(static_cast<double>(e->r_content) > e->threshold) ||
            e->threshold != (1.0 + params_.delta) * static_cast<double>(e->r_reference))
          violate("count trigger for '" + e->content + "' does not justify " +
                  effect_kind_name(e->kind));
        break;
      case EffectKind::ReplicaDeliver:
        if (!(e->share > e->threshold) || e->r_reference == 0 ||
            e->share != static_cast<double>(e->r_content) /
                            static_cast<double>(e->r_reference))
          violate("share trigger for '" + e->content + "' does not justify replication");
        break;
      case EffectKind::Demote:
        // Carries the snapshot of whichever trigger caused the room-making.
        if (e->share > 0) {
          if (!(e->share > e->threshold))
            violate("demotion of '" + e->content + "' lacks a satisfied share trigger");
        } else if (!(static_cast<double>(e->r_content) > e->threshold)) {
          violate("demotion of '" + e->content + "' lacks a satisfied count trigger");
        }
        break;
      default:
        break;
    }
  }
  trigger_checked_ = log_.size();
}

}  // namespace ecdsim
