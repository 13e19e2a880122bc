#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "events.hpp"
#include "params.hpp"
#include "topology.hpp"

namespace ecdsim {

// Three-layer delivery state: cloud (never evicts), one unbounded content
// server per station (never evicts), one capacity-limited cache pool per
// station. Pool membership moves via rank promotion (Case 1), demand-share
// replication (Case 2), cloud-miss delivery and upload admission. All
// operations are sequential; every state change is appended to the log.
class EcdWorld {
 public:
  // `capacities` are raw pool sizes in topology order; the operative bound is
  // the full capacity for top-K pools and floor(eps_fill * capacity) for the
  // rest, enforced after every event.
  EcdWorld(DistanceMatrix dist, PoolRanking ranking, ScenarioParams params,
           std::vector<std::int64_t> capacities);

  // Registers contents that exist in the cloud before the run starts.
  // Declaration order is the initial priority order.
  void seed_cloud_contents(const std::vector<std::string>& ids, std::int64_t size = 1);

  // Greedy fill: top-K pools to full capacity in rank order, the rest to
  // their effective capacity, consuming contents in priority order without
  // duplication. Callable once, before any events. Returns station -> fill
  // order.
  std::map<std::string, std::vector<std::string>> initial_placement();

  ServeOutcome handle_request(const std::string& station, const std::string& content,
                              EventTime at);
  std::vector<SideEffect> handle_upload(const std::string& station, const std::string& content,
                                        EventTime at);

  // Update rules, exposed for direct driving in tests. Each returns the side
  // effects it produced (empty when its precondition or trigger fails).
  std::vector<SideEffect> promote_if_eligible(const std::string& content);
  std::vector<SideEffect> replicate_if_popular(const std::string& content);
  std::vector<SideEffect> handle_cloud_miss(const std::string& content);
  std::vector<SideEffect> admit_uploaded(const std::string& content);

  // Throws Errc::state naming the violated rule. Verifies capacity bounds,
  // top-K membership implying cloud residency, origin-server retention,
  // duplication accounting, reachability conservation and internal indexes.
  void check_invariants() const;

  const Catalog& catalog() const { return catalog_; }
  const DistanceMatrix& distances() const { return dist_; }
  const PoolRanking& ranking() const { return ranking_; }
  const ScenarioParams& params() const { return params_; }
  const std::vector<LogRecord>& log() const { return log_; }

  std::int64_t capacity(const std::string& station) const;
  std::int64_t effective_capacity(const std::string& station) const;
  bool pool_holds(const std::string& station, const std::string& content) const;
  bool server_holds(const std::string& station, const std::string& content) const;
  bool in_cloud(const std::string& content) const;
  std::vector<std::string> pool_contents(const std::string& station) const;  // id-sorted
  std::size_t cloud_size() const { return cloud_.size(); }
  // Station registered as holding the description of an upload, if any.
  std::optional<std::string> description_site(const std::string& content) const;

 private:
  struct Pool {
    std::set<ContentIdx> members;
    std::set<ContentIdx> replicas;  // subset of members delivered by Case 2
    std::int64_t capacity = 0;
    std::int64_t effective = 0;
    std::int64_t occupied = 0;
    int rank = 0;
    bool top_k = false;
  };

  struct Residency {
    bool cloud = false;
    std::set<StationIdx> servers;
    std::optional<StationIdx> primary_pool;
    std::set<StationIdx> replica_pools;
    bool ever_replicated = false;
  };

  StationIdx station(const std::string& id) const { return catalog_.station_index(id); }
  const std::string& station_id(StationIdx s) const { return catalog_.station_id(s); }
  std::int64_t size_of(ContentIdx c) const { return catalog_.meta(c).size; }
  std::uint64_t requests_of(ContentIdx c) const;
  std::int64_t pool_free(const Pool& p) const { return p.effective - p.occupied; }

  // Least-requested member; count ties keep the longest-held copy, so the
  // newest catalog entry sheds first. Skips `exclude`.
  std::optional<ContentIdx> least_requested(const Pool& p,
                                            const std::set<ContentIdx>& exclude = {}) const;

  void pool_insert(StationIdx s, ContentIdx c, bool replica);
  void pool_remove(StationIdx s, ContentIdx c);

  // Evicts least-requested members of pool s (never `keep` ones) until
  // `need` units fit. Eviction discards the pool copy only.
  void evict_until_fits(StationIdx s, std::int64_t need, const std::set<ContentIdx>& keep,
                        std::vector<SideEffect>& effects);

  // Case-2 overflow path: demotes least-requested members of pool s to the
  // next-worse pool (which evicts its own least to fit) until `need` units
  // fit; the lowest pool deletes outright.
  void demote_until_fits(StationIdx s, std::int64_t need, const SideEffect& trigger,
                         std::vector<SideEffect>& effects);

  // Moves c from pool `from` into pool `to`, deduplicating when `to` already
  // holds a copy. Room at `to` must already exist.
  Cost move_between_pools(ContentIdx c, StationIdx from, StationIdx to);

  // First entry of c into a top-K pool uploads one copy to the cloud.
  void note_pool_entry(ContentIdx c, StationIdx s, std::vector<SideEffect>& effects);

  std::vector<SideEffect> promote_chain(ContentIdx c);
  std::vector<SideEffect> replicate(ContentIdx c);
  std::vector<SideEffect> cloud_miss(ContentIdx c);
  std::vector<SideEffect> admit(ContentIdx c);

  void append_log(EventTime at, const std::vector<SideEffect>& effects);
  [[noreturn]] void violate(const std::string& what) const;

  DistanceMatrix dist_;
  PoolRanking ranking_;
  ScenarioParams params_;
  Catalog catalog_;
  std::vector<Pool> pools_;             // by StationIdx
  std::vector<StationIdx> by_rank_;     // by_rank_[0] is the rank-1 station
  std::vector<std::set<ContentIdx>> servers_;  // by StationIdx
  std::set<ContentIdx> cloud_;
  std::vector<Residency> residency_;    // by ContentIdx
  std::vector<ContentIdx> seeded_;      // cloud catalog in priority order
  std::map<ContentIdx, StationIdx> descriptions_;
  std::vector<LogRecord> log_;
  mutable std::size_t trigger_checked_ = 0;  // log prefix already trigger-validated
  std::int64_t event_index_ = -1;  // trace position of the event in progress
  bool placed_ = false;
  bool served_any_ = false;
};

}  // namespace ecdsim
