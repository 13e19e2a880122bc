#include "metrics.hpp"

#include <algorithm>
#include <charconv>

namespace ecdsim {

const char* cost_kind_name(CostKind k) {
  switch (k) {
    case CostKind::ServeLocal: return "serve_local";
    case CostKind::ServeRemote: return "serve_remote";
    case CostKind::CloudFetch: return "cloud_fetch";
    case CostKind::Migration: return "migration";
    case CostKind::Upload: return "upload";
    case CostKind::Replication: return "replication";
  }
  return "unknown";
}

void CostLedger::add(CostKind kind, double amount) {
  if (!(amount >= 0)) fail(Errc::invalid_argument, "cost amounts must be non-negative");
  by_kind[static_cast<std::size_t>(kind)] += amount;
  total += amount;
}

std::optional<std::pair<CostKind, double>> ecd_record_cost(const LogRecord& record,
                                                           const DistanceParams& dist,
                                                           const ScenarioParams& params) {
  if (const auto* serve = std::get_if<ServeRecord>(&record.body)) {
    switch (serve->source) {
      case SourceKind::LocalPool:
        return std::pair{CostKind::ServeLocal, dist.user_edge};
      case SourceKind::ContentServer:
        if (serve->source_station == serve->station)
          return std::pair{CostKind::ServeLocal, dist.user_edge};
        return std::pair{CostKind::ServeRemote, dist.user_edge + serve->transit};
      case SourceKind::RemotePool:
        return std::pair{CostKind::ServeRemote, dist.user_edge + serve->transit};
      case SourceKind::Cloud:
        return std::pair{CostKind::CloudFetch, dist.user_edge + dist.edge_cloud};
    }
    return std::nullopt;
  }
  const auto& e = std::get<SideEffect>(record.body);
  switch (e.kind) {
    case EffectKind::Promote:
    case EffectKind::Demote:
    case EffectKind::AdmitCopy:
      return std::pair{CostKind::Migration, params.price_migrations ? e.transit : 0.0};
    case EffectKind::ReplicaDeliver:
      return std::pair{CostKind::Replication, dist.edge_cloud};
    case EffectKind::CloudUpload:
      return std::pair{CostKind::Upload, dist.edge_cloud};
    case EffectKind::UserUpload:
      return std::pair{CostKind::Upload, dist.user_edge};
    case EffectKind::Evict:
    case EffectKind::CloudDeliver:
    case EffectKind::RegisterDescription:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::pair<CostKind, double>> cdn_record_cost(const LogRecord& record,
                                                           const DistanceParams& dist) {
  if (const auto* serve = std::get_if<ServeRecord>(&record.body)) {
    switch (serve->source) {
      case SourceKind::LocalPool:
        return std::pair{CostKind::ServeLocal, dist.user_proxy};
      case SourceKind::Cloud:
        return std::pair{CostKind::CloudFetch, dist.user_proxy + dist.proxy_cloud};
      default:
        fail(Errc::state, "unexpected serve source in a proxy log");
    }
  }
  const auto& e = std::get<SideEffect>(record.body);
  if (e.kind == EffectKind::UserUpload) return std::pair{CostKind::Upload, dist.user_cloud};
  return std::nullopt;
}

void accrue_ecd(CostLedger& ledger, const LogRecord& record, const DistanceParams& dist,
                const ScenarioParams& params) {
  if (const auto cost = ecd_record_cost(record, dist, params))
    ledger.add(cost->first, cost->second);
}

void accrue_cdn(CostLedger& ledger, const LogRecord& record, const DistanceParams& dist) {
  if (const auto cost = cdn_record_cost(record, dist))
    ledger.add(cost->first, cost->second);
}

ServingCaseCosts casestudy_serving_costs(const DistanceMatrix& dist, int n_videos,
                                         const DistanceParams& params) {
  if (dist.size() == 0) fail(Errc::invalid_argument, "distance matrix is empty");
  if (n_videos < 1) fail(Errc::invalid_argument, "n_videos must be >= 1");
  double sum = 0;
  double max_total = 0, min_total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    double row = 0;
    for (std::size_t j = 0; j < dist.size(); ++j) row += dist.dist[i][j];
    sum += row;
    if (i == 0) {
      max_total = min_total = row;
    } else {
      max_total = std::max(max_total, row);
      min_total = std::min(min_total, row);
    }
  }
  ServingCaseCosts out;
  out.cdn = sum * 2 * params.user_proxy;
  out.ecd_worst = max_total * n_videos * params.user_edge;
  out.ecd_best = min_total * n_videos * params.user_edge;
  if (out.cdn > 0) {
    out.saving_worst = 1 - out.ecd_worst / out.cdn;
    out.saving_best = 1 - out.ecd_best / out.cdn;
  }
  return out;
}

UploadCaseCosts casestudy_upload_costs(const DistanceParams& params, double p_cloud_upload) {
  if (p_cloud_upload < 0 || p_cloud_upload > 1)
    fail(Errc::invalid_argument, "p_cloud_upload must lie in [0, 1]");
  UploadCaseCosts out;
  out.cdn = params.user_cloud;
  out.ecd = params.user_edge + p_cloud_upload * params.edge_cloud;
  if (out.cdn > 0) out.saving = 1 - out.ecd / out.cdn;
  return out;
}

ComparisonReport comparison_report(const CostLedger& ecd, const CostLedger& cdn) {
  if (cdn.total == 0)
    fail(Errc::invalid_argument, "saving fraction undefined: baseline total is zero");
  ComparisonReport out;
  out.ecd = ecd;
  out.cdn = cdn;
  out.ecd_total = ecd.total;
  out.cdn_total = cdn.total;
  out.saving_fraction = 1 - ecd.total / cdn.total;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) fail(Errc::state, "failed to format a number");
  return std::string(buf, ptr);
}

}  // namespace ecdsim
