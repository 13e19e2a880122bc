#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "events.hpp"

namespace ecdsim {

// Comparison model: per-station proxy caches fetch from the cloud on miss and
// never talk to each other; uploads go straight to the cloud. In passthrough
// mode proxies cache nothing, so every request pays the full cloud round trip.
class CdnWorld {
 public:
  CdnWorld(std::vector<std::string> stations, std::vector<std::int64_t> capacities,
           bool passthrough);

  void seed_cloud_contents(const std::vector<std::string>& ids, std::int64_t size = 1);

  ServeOutcome handle_request(const std::string& station, const std::string& content,
                              EventTime at);
  std::vector<SideEffect> handle_upload(const std::string& station, const std::string& content,
                                        EventTime at);

  void check_invariants() const;

  const Catalog& catalog() const { return catalog_; }
  const std::vector<LogRecord>& log() const { return log_; }
  bool proxy_holds(const std::string& station, const std::string& content) const;
  bool in_cloud(const std::string& content) const;
  std::size_t cloud_size() const { return cloud_.size(); }
  std::vector<std::string> proxy_contents(const std::string& station) const;  // id-sorted

 private:
  struct Proxy {
    std::set<ContentIdx> cache;
    std::int64_t capacity = 0;
    std::int64_t occupied = 0;
  };

  std::optional<ContentIdx> least_requested(const Proxy& p) const;
  [[noreturn]] void violate(const std::string& what) const;

  Catalog catalog_;
  std::vector<Proxy> proxies_;
  std::set<ContentIdx> cloud_;
  std::vector<LogRecord> log_;
  mutable std::size_t log_checked_ = 0;  // log prefix already validated
  std::int64_t event_index_ = -1;
  bool passthrough_ = false;
};

}  // namespace ecdsim
