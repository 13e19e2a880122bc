#include "ecdsim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "engine.hpp"
#include "error.hpp"
#include "scenario.hpp"
#include "workload.hpp"

using ecdsim::Errc;
using ecdsim::Error;

struct ecd_scenario {
  ecdsim::Scenario scenario;
};

struct ecd_trace {
  ecdsim::Trace trace;
};

struct ecd_report {
  nlohmann::ordered_json json;
};

namespace {

thread_local std::string g_last_error;

ecd_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return ECD_ERROR_INVALID_ARGUMENT;
    case Errc::parse: return ECD_ERROR_PARSE;
    case Errc::io: return ECD_ERROR_IO;
    case Errc::state: return ECD_ERROR_STATE;
  }
  return ECD_ERROR_STATE;
}

template <typename Fn>
ecd_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ECD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ECD_ERROR_STATE;
  }
}

ecd_status require(bool ok, const char* what) {
  if (ok) return ECD_OK;
  g_last_error = what;
  return ECD_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ecd_status emit(const std::string& text, char** out) {
  *out = dup_string(text);
  if (!*out) {
    g_last_error = "out of memory";
    return ECD_ERROR_STATE;
  }
  return ECD_OK;
}

}  // namespace

extern "C" {

const char* ecd_version(void) { return "1.0.0"; }

const char* ecd_status_name(ecd_status status) {
  switch (status) {
    case ECD_OK: return "ok";
    case ECD_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case ECD_ERROR_PARSE: return "parse";
    case ECD_ERROR_IO: return "io";
    case ECD_ERROR_STATE: return "state";
  }
  return "unknown";
}

const char* ecd_last_error(void) { return g_last_error.c_str(); }

void ecd_string_free(char* s) { std::free(s); }

ecd_status ecd_scenario_parse(const char* json_text, ecd_scenario** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      ecdsim::fail(Errc::parse, std::string("invalid JSON: ") + e.what());
    }
    *out = new ecd_scenario{ecdsim::parse_scenario(doc)};
  });
}

ecd_status ecd_scenario_load(const char* path, ecd_scenario** out) {
  if (auto st = require(path && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] { *out = new ecd_scenario{ecdsim::load_scenario(path)}; });
}

void ecd_scenario_free(ecd_scenario* s) { delete s; }

ecd_status ecd_scenario_ranking_json(const ecd_scenario* s, char** out_json) {
  if (auto st = require(s && out_json, "null argument")) return st;
  *out_json = nullptr;
  return guarded([&] {
    const auto graph = ecdsim::realize_topology(s->scenario.topology);
    const auto dist = ecdsim::all_pairs_shortest_paths(graph);
    const auto ranking = ecdsim::rank_pools(dist);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : ranking.entries)
      arr.push_back({{"station", e.station}, {"total_cost", e.total_cost}, {"rank", e.rank}});
    const ecd_status st = emit(arr.dump(2), out_json);
    if (st != ECD_OK) ecdsim::fail(Errc::state, "out of memory");
  });
}

ecd_status ecd_scenario_placement_json(const ecd_scenario* s, char** out_json) {
  if (auto st = require(s && out_json, "null argument")) return st;
  *out_json = nullptr;
  return guarded([&] {
    const auto& sc = s->scenario;
    const auto graph = ecdsim::realize_topology(sc.topology);
    const auto dist = ecdsim::all_pairs_shortest_paths(graph);
    const auto ranking = ecdsim::rank_pools(dist);
    sc.params.validate(graph.stations.size());
    std::vector<std::int64_t> caps;
    for (const auto& station : graph.stations) {
      const auto it = sc.per_station_capacity.find(station);
      caps.push_back(it != sc.per_station_capacity.end() ? it->second : sc.default_capacity);
    }
    ecdsim::EcdWorld world(dist, ranking, sc.params, caps);
    std::vector<std::string> ids;
    const std::string prefix =
        sc.workload.from_trace ? std::string("v") : sc.workload.generator.content_prefix;
    for (std::int64_t i = 1; i <= sc.catalog_size(); ++i)
      ids.push_back(prefix + std::to_string(i));
    world.seed_cloud_contents(ids);
    const auto placement = world.initial_placement();

    nlohmann::ordered_json out;
    nlohmann::ordered_json rank_arr = nlohmann::ordered_json::array();
    for (const auto& e : ranking.entries)
      rank_arr.push_back(
          {{"station", e.station}, {"total_cost", e.total_cost}, {"rank", e.rank}});
    out["ranking"] = std::move(rank_arr);
    nlohmann::ordered_json p;
    for (const auto& e : ranking.entries) p[e.station] = placement.at(e.station);
    out["placement"] = std::move(p);
    if (emit(out.dump(2), out_json) != ECD_OK) ecdsim::fail(Errc::state, "out of memory");
  });
}

ecd_status ecd_scenario_run(const ecd_scenario* s, ecd_report** out) {
  if (auto st = require(s && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    auto result = ecdsim::run_scenario(s->scenario);
    *out = new ecd_report{std::move(result.report)};
  });
}

ecd_status ecd_scenario_run_trace(const ecd_scenario* s, const ecd_trace* trace,
                                  ecd_report** out) {
  if (auto st = require(s && trace && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    auto result = ecdsim::run_scenario_with_trace(s->scenario, trace->trace);
    *out = new ecd_report{std::move(result.report)};
  });
}

ecd_status ecd_report_json(const ecd_report* r, char** out_json) {
  if (auto st = require(r && out_json, "null argument")) return st;
  *out_json = nullptr;
  return guarded([&] {
    if (emit(r->json.dump(2), out_json) != ECD_OK) ecdsim::fail(Errc::state, "out of memory");
  });
}

void ecd_report_free(ecd_report* r) { delete r; }

ecd_status ecd_sweep_csv(const ecd_scenario* base, const int32_t* stations, size_t n_stations,
                         const int64_t* requests, size_t n_requests, const uint64_t* seeds,
                         size_t n_seeds, char** out_csv, char** out_failures) {
  if (auto st = require(base && stations && requests && seeds && out_csv, "null argument"))
    return st;
  *out_csv = nullptr;
  if (out_failures) *out_failures = nullptr;
  return guarded([&] {
    ecdsim::SweepGrid grid;
    grid.stations.assign(stations, stations + n_stations);
    grid.requests.assign(requests, requests + n_requests);
    grid.seeds.assign(seeds, seeds + n_seeds);
    const auto result = ecdsim::sweep(base->scenario, grid);
    std::string failures;
    for (const auto& row : result.rows) {
      if (row.ok) continue;
      failures += "stations=" + std::to_string(row.stations) +
                  " requests=" + std::to_string(row.requests) +
                  " seed=" + std::to_string(row.seed) + ": " + row.error + "\n";
    }
    if (emit(ecdsim::sweep_csv(result.rows), out_csv) != ECD_OK)
      ecdsim::fail(Errc::state, "out of memory");
    if (out_failures && emit(failures, out_failures) != ECD_OK) {
      ecd_string_free(*out_csv);
      *out_csv = nullptr;
      ecdsim::fail(Errc::state, "out of memory");
    }
  });
}

ecd_status ecd_trace_generate(int64_t n_contents, int64_t n_requests, double zipf_exponent,
                              double upload_probability, const char* const* stations,
                              size_t n_stations, uint64_t seed, ecd_trace** out) {
  if (auto st = require(stations && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] {
    ecdsim::ZipfParams params;
    params.n_contents = n_contents;
    params.n_requests = n_requests;
    params.exponent = zipf_exponent;
    params.upload_probability = upload_probability;
    params.seed = seed;
    std::vector<std::string> names;
    for (size_t i = 0; i < n_stations; ++i) {
      if (!stations[i]) ecdsim::fail(Errc::invalid_argument, "null station name");
      names.emplace_back(stations[i]);
    }
    *out = new ecd_trace{ecdsim::generate_zipf_trace(params, names)};
  });
}

ecd_status ecd_trace_load(const char* path, ecd_trace** out) {
  if (auto st = require(path && out, "null argument")) return st;
  *out = nullptr;
  return guarded([&] { *out = new ecd_trace{ecdsim::load_trace(path)}; });
}

ecd_status ecd_trace_save(const ecd_trace* t, const char* path) {
  if (auto st = require(t && path, "null argument")) return st;
  return guarded([&] { ecdsim::save_trace(t->trace, path); });
}

ecd_status ecd_trace_text(const ecd_trace* t, char** out_text) {
  if (auto st = require(t && out_text, "null argument")) return st;
  *out_text = nullptr;
  return guarded([&] {
    if (emit(ecdsim::trace_to_string(t->trace), out_text) != ECD_OK)
      ecdsim::fail(Errc::state, "out of memory");
  });
}

size_t ecd_trace_event_count(const ecd_trace* t) { return t ? t->trace.events.size() : 0; }

void ecd_trace_free(ecd_trace* t) { delete t; }

ecd_status ecd_rank_topology_json(const char* topology_json, char** out_json) {
  if (auto st = require(topology_json && out_json, "null argument")) return st;
  *out_json = nullptr;
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(topology_json);
    } catch (const nlohmann::json::exception& e) {
      ecdsim::fail(Errc::parse, std::string("invalid JSON: ") + e.what());
    }
    nlohmann::json wrapper;
    wrapper["topology"] = doc;
    wrapper["workload"] = {{"generator", {{"n_contents", 1}, {"n_requests", 0}}}};
    const auto scenario = ecdsim::parse_scenario(wrapper);
    const auto graph = ecdsim::realize_topology(scenario.topology);
    const auto dist = ecdsim::all_pairs_shortest_paths(graph);
    const auto ranking = ecdsim::rank_pools(dist);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : ranking.entries)
      arr.push_back({{"station", e.station}, {"total_cost", e.total_cost}, {"rank", e.rank}});
    if (emit(arr.dump(2), out_json) != ECD_OK) ecdsim::fail(Errc::state, "out of memory");
  });
}

ecd_status ecd_casestudy_json(char** out_json) {
  if (auto st = require(out_json != nullptr, "null argument")) return st;
  *out_json = nullptr;
  return guarded([&] {
    if (emit(ecdsim::casestudy_report().dump(2), out_json) != ECD_OK)
      ecdsim::fail(Errc::state, "out of memory");
  });
}

}  // extern "C"
