#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "events.hpp"
#include "params.hpp"
#include "topology.hpp"

namespace ecdsim {

enum class CostKind { ServeLocal, ServeRemote, CloudFetch, Migration, Upload, Replication };
inline constexpr std::size_t kCostKinds = 6;

const char* cost_kind_name(CostKind k);

struct CostLedger {
  std::array<double, kCostKinds> by_kind{};
  double total = 0;

  void add(CostKind kind, double amount);
  double kind(CostKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
};

// Price of one ECD log record. Serving: local pool or content-server hit
// costs d_user_edge; a remote holder adds the inter-station transit; a cloud
// fetch costs d_user_edge + d_edge_cloud. Side effects: pool-to-pool moves
// and server-to-pool admission cost their transit (zero when migrations are
// unpriced), replication and the one-time cloud copy cost d_edge_cloud, a
// user upload costs d_user_edge. Evictions, the pool copy made on a cloud
// fetch and description registration are free (nullopt).
std::optional<std::pair<CostKind, double>> ecd_record_cost(const LogRecord& record,
                                                           const DistanceParams& dist,
                                                           const ScenarioParams& params);

// CDN pricing: proxy hit d_user_proxy; miss d_user_proxy + d_proxy_cloud;
// upload d_user_cloud; cache fills and evictions free.
std::optional<std::pair<CostKind, double>> cdn_record_cost(const LogRecord& record,
                                                           const DistanceParams& dist);

void accrue_ecd(CostLedger& ledger, const LogRecord& record, const DistanceParams& dist,
                const ScenarioParams& params);
void accrue_cdn(CostLedger& ledger, const LogRecord& record, const DistanceParams& dist);

// Serving-cost arithmetic of the five-station worked example, reproduced as
// printed rather than derived from event simulation: CDN pays every row
// total twice at proxy distance; the edge model pays one row total per video
// at edge distance, bounded by the worst and best ranked stations.
struct ServingCaseCosts {
  double cdn = 0;
  double ecd_worst = 0;
  double ecd_best = 0;
  double saving_worst = 0;
  double saving_best = 0;
};

ServingCaseCosts casestudy_serving_costs(const DistanceMatrix& dist, int n_videos = 10,
                                         const DistanceParams& params = {});

// Upload-cost comparison: CDN always pays the user-to-cloud distance; the
// edge model pays user-to-edge plus the cloud leg for the fraction of
// contents popular enough to be uploaded. Affine in p_cloud_upload.
struct UploadCaseCosts {
  double cdn = 0;
  double ecd = 0;
  double saving = 0;
};

UploadCaseCosts casestudy_upload_costs(const DistanceParams& params = {},
                                       double p_cloud_upload = 0.2);

struct ComparisonReport {
  double ecd_total = 0;
  double cdn_total = 0;
  double saving_fraction = 0;  // 1 - ecd_total / cdn_total
  CostLedger ecd;
  CostLedger cdn;
};

// Throws Errc::invalid_argument when cdn_total is zero.
ComparisonReport comparison_report(const CostLedger& ecd, const CostLedger& cdn);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

}  // namespace ecdsim
