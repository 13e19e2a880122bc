#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

namespace ecdsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<std::string> catalog_ids(const Scenario& s) {
  const std::string prefix =
      s.workload.from_trace ? std::string("v") : s.workload.generator.content_prefix;
  const std::int64_t n = s.catalog_size();
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  for (std::int64_t i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

std::vector<std::int64_t> resolve_capacities(const Scenario& s,
                                             const BaseStationGraph& graph) {
  for (const auto& [station, cap] : s.per_station_capacity) {
    if (std::find(graph.stations.begin(), graph.stations.end(), station) ==
        graph.stations.end())
      fail(Errc::invalid_argument, "capacity given for unknown station '" + station + "'");
    if (cap < 0) fail(Errc::invalid_argument, "capacity for '" + station + "' must be >= 0");
  }
  std::vector<std::int64_t> caps;
  caps.reserve(graph.stations.size());
  for (const auto& station : graph.stations) {
    const auto it = s.per_station_capacity.find(station);
    caps.push_back(it != s.per_station_capacity.end() ? it->second : s.default_capacity);
  }
  return caps;
}

nlohmann::ordered_json ledger_json(const CostLedger& ledger) {
  nlohmann::ordered_json j;
  for (std::size_t k = 0; k < kCostKinds; ++k)
    j[cost_kind_name(static_cast<CostKind>(k))] = ledger.by_kind[k];
  j["total"] = ledger.total;
  return j;
}

std::string log_digest(const std::vector<LogRecord>& log,
                       const std::function<double(const LogRecord&)>& cost_of) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (const auto& rec : log) {
    const std::string line = log_record_json(rec, cost_of(rec)).dump();
    for (unsigned char b : line) {
      h ^= b;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  }
  return digest_hex(h);
}

nlohmann::ordered_json ranking_json(const PoolRanking& ranking) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : ranking.entries) {
    nlohmann::ordered_json row;
    row["station"] = e.station;
    row["total_cost"] = e.total_cost;
    row["rank"] = e.rank;
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

nlohmann::ordered_json log_record_json(const LogRecord& record, double cost) {
  nlohmann::ordered_json j;
  j["event"] = record.event_index;
  j["at"] = record.at;
  if (const auto* serve = std::get_if<ServeRecord>(&record.body)) {
    j["type"] = "serve";
    j["station"] = serve->station;
    j["content"] = serve->content;
    j["source"] = source_kind_name(serve->source);
    j["source_station"] = serve->source_station;
    j["transit"] = serve->transit;
  } else {
    const auto& e = std::get<SideEffect>(record.body);
    j["type"] = effect_kind_name(e.kind);
    j["content"] = e.content;
    j["from"] = e.from;
    j["to"] = e.to;
    j["transit"] = e.transit;
    j["r_content"] = e.r_content;
    j["r_reference"] = e.r_reference;
    j["threshold"] = e.threshold;
    j["share"] = e.share;
  }
  j["cost"] = cost;
  return j;
}

RunResult run_scenario_with_trace(const Scenario& s, const Trace& trace,
                                  const RunOptions& options) {
  if (!s.run_ecd && !s.run_cdn)
    fail(Errc::invalid_argument, "scenario selects no model to run");
  const BaseStationGraph graph = realize_topology(s.topology);
  const DistanceMatrix dist = all_pairs_shortest_paths(graph);
  const PoolRanking ranking = rank_pools(dist);
  s.params.validate(graph.stations.size());
  s.distances.validate();
  const std::vector<std::int64_t> caps = resolve_capacities(s, graph);
  const std::vector<std::string> ids = catalog_ids(s);

  RunResult result;
  result.trace = trace;
  std::map<std::string, std::vector<std::string>> placement;
  if (s.run_ecd) {
    result.ecd = std::make_unique<EcdWorld>(dist, ranking, s.params, caps);
    result.ecd->seed_cloud_contents(ids);
    placement = result.ecd->initial_placement();
  }
  if (s.run_cdn) {
    result.cdn = std::make_unique<CdnWorld>(graph.stations, caps, s.cdn_passthrough);
    result.cdn->seed_cloud_contents(ids);
  }

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& ev = trace.events[i];
    try {
      if (ev.kind == TraceEventKind::Request) {
        if (result.ecd) result.ecd->handle_request(ev.station, ev.content, ev.at);
        if (result.cdn) result.cdn->handle_request(ev.station, ev.content, ev.at);
      } else {
        if (result.ecd) result.ecd->handle_upload(ev.station, ev.content, ev.at);
        if (result.cdn) result.cdn->handle_upload(ev.station, ev.content, ev.at);
      }
      if (options.check_invariants) {
        if (result.ecd) result.ecd->check_invariants();
        if (result.cdn) result.cdn->check_invariants();
      }
    } catch (const Error& e) {
      const char* kind = ev.kind == TraceEventKind::Request ? "request" : "upload";
      fail(e.code(), "event " + std::to_string(i) + " (" + kind + " of '" + ev.content +
                         "' at '" + ev.station + "'): " + e.what());
    }
  }

  CostLedger ecd_ledger, cdn_ledger;
  if (result.ecd)
    for (const auto& rec : result.ecd->log()) accrue_ecd(ecd_ledger, rec, s.distances, s.params);
  if (result.cdn)
    for (const auto& rec : result.cdn->log()) accrue_cdn(cdn_ledger, rec, s.distances);

  nlohmann::ordered_json rep;
  rep["schema"] = "ecd-run-report v1";
  nlohmann::ordered_json scen = scenario_echo(s, graph);
  {
    nlohmann::ordered_json w;
    w["trace_digest"] = trace_digest(trace);
    w["events"] = static_cast<std::int64_t>(trace.events.size());
    scen["workload"] = std::move(w);
  }
  rep["scenario"] = std::move(scen);
  rep["ranking"] = ranking_json(ranking);

  if (result.ecd) {
    nlohmann::ordered_json p;
    for (const auto& e : ranking.entries) p[e.station] = placement[e.station];
    rep["initial_placement"] = std::move(p);
  }

  {
    nlohmann::ordered_json fin;
    if (result.ecd) {
      nlohmann::ordered_json pools, servers;
      std::size_t servers_total = 0;
      for (const auto& st : graph.stations) {
        pools[st] = result.ecd->pool_contents(st);
        nlohmann::ordered_json held = nlohmann::ordered_json::array();
        for (const auto& id : ids)
          if (result.ecd->server_holds(st, id)) held.push_back(id);
        // Uploaded contents are not in `ids`; collect them from the catalog.
        const Catalog& cat = result.ecd->catalog();
        for (ContentIdx c = 0; c < cat.content_count(); ++c) {
          const auto& m = cat.meta(c);
          if (!m.origin_cloud && cat.station_id(m.origin_station) == st)
            held.push_back(m.id);
        }
        servers_total += held.size();
        servers[st] = std::move(held);
      }
      nlohmann::ordered_json e;
      e["pools"] = std::move(pools);
      e["servers"] = std::move(servers);
      e["server_contents"] = static_cast<std::int64_t>(servers_total);
      e["cloud_size"] = static_cast<std::int64_t>(result.ecd->cloud_size());
      fin["ecd"] = std::move(e);
    }
    if (result.cdn) {
      nlohmann::ordered_json proxies;
      for (const auto& st : graph.stations) proxies[st] = result.cdn->proxy_contents(st);
      nlohmann::ordered_json c;
      c["proxies"] = std::move(proxies);
      c["cloud_size"] = static_cast<std::int64_t>(result.cdn->cloud_size());
      fin["cdn"] = std::move(c);
    }
    rep["final_placement"] = std::move(fin);
  }

  {
    nlohmann::ordered_json ev;
    ev["count"] = static_cast<std::int64_t>(trace.events.size());
    if (result.ecd) {
      ev["ecd_log_records"] = static_cast<std::int64_t>(result.ecd->log().size());
      ev["ecd_log_digest"] = log_digest(result.ecd->log(), [&](const LogRecord& r) {
        const auto c = ecd_record_cost(r, s.distances, s.params);
        return c ? c->second : 0.0;
      });
    }
    if (result.cdn) {
      ev["cdn_log_records"] = static_cast<std::int64_t>(result.cdn->log().size());
      ev["cdn_log_digest"] = log_digest(result.cdn->log(), [&](const LogRecord& r) {
        const auto c = cdn_record_cost(r, s.distances);
        return c ? c->second : 0.0;
      });
    }
    rep["events"] = std::move(ev);
  }

  {
    nlohmann::ordered_json costs;
    if (result.ecd) costs["ecd"] = ledger_json(ecd_ledger);
    if (result.cdn) costs["cdn"] = ledger_json(cdn_ledger);
    rep["costs"] = std::move(costs);
  }

  if (result.ecd && result.cdn && cdn_ledger.total > 0) {
    const ComparisonReport cmp = comparison_report(ecd_ledger, cdn_ledger);
    nlohmann::ordered_json c;
    c["ecd_total"] = cmp.ecd_total;
    c["cdn_total"] = cmp.cdn_total;
    c["saving_fraction"] = cmp.saving_fraction;
    rep["comparison"] = std::move(c);
  } else {
    rep["comparison"] = nullptr;
  }

  {
    nlohmann::ordered_json inv;
    inv["checked"] = options.check_invariants;
    inv["violations"] = 0;  // a violation aborts the run before reporting
    rep["invariants"] = std::move(inv);
  }

  if (options.include_event_log) {
    nlohmann::ordered_json logs;
    if (result.ecd) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& rec : result.ecd->log()) {
        const auto c = ecd_record_cost(rec, s.distances, s.params);
        arr.push_back(log_record_json(rec, c ? c->second : 0.0));
      }
      logs["ecd"] = std::move(arr);
    }
    if (result.cdn) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& rec : result.cdn->log()) {
        const auto c = cdn_record_cost(rec, s.distances);
        arr.push_back(log_record_json(rec, c ? c->second : 0.0));
      }
      logs["cdn"] = std::move(arr);
    }
    rep["event_log"] = std::move(logs);
  }

  result.report = std::move(rep);
  return result;
}

RunResult run_scenario(const Scenario& s, const RunOptions& options) {
  if (s.workload.from_trace)
    return run_scenario_with_trace(s, load_trace(s.workload.trace_path), options);
  const BaseStationGraph graph = realize_topology(s.topology);
  const Trace trace = generate_zipf_trace(s.workload.generator, graph.stations);
  return run_scenario_with_trace(s, trace, options);
}

Scenario derive_cell_scenario(const Scenario& base, int stations, std::int64_t requests,
                              std::uint64_t seed) {
  Scenario cell = base;
  cell.per_station_capacity.clear();
  TopologySpec topo;
  topo.generated = true;
  topo.gen_stations = stations;
  if (base.topology.generated) {
    topo.weight_min = base.topology.weight_min;
    topo.weight_max = base.topology.weight_max;
  }
  topo.gen_seed = splitmix64(seed ^ (0x746f706full * static_cast<std::uint64_t>(stations)));
  cell.topology = topo;

  WorkloadSpec w;
  w.from_trace = false;
  if (!base.workload.from_trace) w.generator = base.workload.generator;
  w.generator.n_contents = base.catalog_size();
  w.generator.n_requests = requests;
  w.generator.seed = seed;
  cell.workload = std::move(w);
  return cell;
}

SweepResult sweep(const Scenario& base, const SweepGrid& grid, const RunOptions& options) {
  if (grid.stations.empty() || grid.requests.empty() || grid.seeds.empty())
    fail(Errc::invalid_argument, "sweep grid must list stations, requests and seeds");

  struct Cell {
    int stations;
    std::int64_t requests;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (int st : grid.stations)
    for (std::int64_t rq : grid.requests)
      for (std::uint64_t sd : grid.seeds) cells.push_back({st, rq, sd});

  SweepResult out;
  out.rows.resize(cells.size());
  out.reports.resize(cells.size());

  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < cells.size(); begin += workers) {
    const std::size_t end = std::min(cells.size(), begin + workers);
    std::vector<std::future<void>> futures;
    for (std::size_t i = begin; i < end; ++i) {
      futures.push_back(std::async(std::launch::async, [&, i] {
        const Cell& cell = cells[i];
        SweepRow row;
        row.stations = cell.stations;
        row.requests = cell.requests;
        row.seed = cell.seed;
        try {
          const Scenario sc = derive_cell_scenario(base, cell.stations, cell.requests,
                                                   cell.seed);
          RunResult rr = run_scenario(sc, options);
          const auto& costs = rr.report["costs"];
          if (costs.contains("ecd")) row.ecd_total = costs["ecd"]["total"].get<double>();
          if (costs.contains("cdn")) row.cdn_total = costs["cdn"]["total"].get<double>();
          if (row.cdn_total > 0) row.saving = 1 - row.ecd_total / row.cdn_total;
          row.ok = true;
          out.reports[i] = std::move(rr.report);
        } catch (const std::exception& e) {
          row.ok = false;
          row.error = e.what();
          out.reports[i] = nullptr;
        }
        out.rows[i] = std::move(row);
      }));
    }
    for (auto& f : futures) f.get();
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "stations,requests,seed,ecd_total,cdn_total,saving\n";
  for (const auto& r : rows) {
    if (!r.ok) continue;
    out << r.stations << ',' << r.requests << ',' << r.seed << ',' << format_double(r.ecd_total)
        << ',' << format_double(r.cdn_total) << ',' << format_double(r.saving) << '\n';
  }
  return out.str();
}

DistanceMatrix casestudy_distances() {
  return distance_matrix_from_closed({"A", "B", "C", "D", "E"},
                                     {{0, 10, 35, 50, 15},
                                      {10, 0, 30, 45, 20},
                                      {35, 30, 0, 75, 50},
                                      {65, 45, 75, 0, 50},
                                      {15, 20, 50, 50, 0}});
}

nlohmann::ordered_json casestudy_report() {
  const DistanceMatrix dist = casestudy_distances();
  const PoolRanking ranking = rank_pools(dist);

  ScenarioParams params;  // defaults: k=2, delta=0.1, eps=1/3
  EcdWorld world(dist, ranking, params, std::vector<std::int64_t>(5, 10));
  std::vector<std::string> ids;
  for (int i = 1; i <= 1000; ++i) ids.push_back("v" + std::to_string(i));
  world.seed_cloud_contents(ids);
  const auto placement = world.initial_placement();

  const ServingCaseCosts serving = casestudy_serving_costs(dist, 10, DistanceParams{});
  const UploadCaseCosts upload = casestudy_upload_costs(DistanceParams{}, 0.2);

  nlohmann::ordered_json out;
  out["ranking"] = ranking_json(ranking);
  {
    nlohmann::ordered_json p;
    for (const auto& e : ranking.entries) p[e.station] = placement.at(e.station);
    out["placement"] = std::move(p);
  }
  {
    nlohmann::ordered_json s;
    s["cdn"] = serving.cdn;
    s["ecd_worst"] = serving.ecd_worst;
    s["ecd_best"] = serving.ecd_best;
    s["saving_worst"] = serving.saving_worst;
    s["saving_best"] = serving.saving_best;
    out["serving_costs"] = std::move(s);
  }
  {
    nlohmann::ordered_json u;
    u["cdn"] = upload.cdn;
    u["ecd"] = upload.ecd;
    u["saving"] = upload.saving;
    out["upload_costs"] = std::move(u);
  }

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool all_pass = true;
  const auto add_check = [&](const std::string& name, nlohmann::ordered_json expected,
                             nlohmann::ordered_json actual, bool pass) {
    nlohmann::ordered_json c;
    c["name"] = name;
    c["expected"] = std::move(expected);
    c["actual"] = std::move(actual);
    c["pass"] = pass;
    all_pass = all_pass && pass;
    checks.push_back(std::move(c));
  };

  {
    std::string order;
    for (const auto& e : ranking.entries) {
      if (!order.empty()) order += ", ";
      order += e.station;
    }
    add_check("ranking_order", "B, A, E, C, D", order, order == "B, A, E, C, D");
  }
  {
    nlohmann::ordered_json expected = {{"A", 110}, {"B", 105}, {"C", 190},
                                       {"D", 235}, {"E", 135}};
    nlohmann::ordered_json actual;
    bool pass = true;
    for (const char* st : {"A", "B", "C", "D", "E"}) {
      double total = 0;
      for (const auto& e : ranking.entries)
        if (e.station == st) total = e.total_cost;
      actual[st] = total;
      pass = pass && total == expected[st].get<double>();
    }
    add_check("row_totals", std::move(expected), std::move(actual), pass);
  }
  {
    const auto expect_range = [](const char* prefix, int from, int to) {
      std::vector<std::string> v;
      for (int i = from; i <= to; ++i) v.push_back(prefix + std::to_string(i));
      return v;
    };
    const std::map<std::string, std::vector<std::string>> expected = {
        {"B", expect_range("v", 1, 10)},
        {"A", expect_range("v", 11, 20)},
        {"E", expect_range("v", 21, 23)},
        {"C", expect_range("v", 24, 26)},
        {"D", expect_range("v", 27, 29)}};
    bool pass = placement.size() == expected.size();
    nlohmann::ordered_json actual;
    for (const auto& e : ranking.entries) {
      actual[e.station] = placement.at(e.station);
      const auto it = expected.find(e.station);
      pass = pass && it != expected.end() && it->second == placement.at(e.station);
    }
    nlohmann::ordered_json expected_json;
    for (const auto& e : ranking.entries) expected_json[e.station] = expected.at(e.station);
    add_check("placement", std::move(expected_json), std::move(actual), pass);
  }
  add_check("serving_cdn", 775000.0, serving.cdn, serving.cdn == 775000.0);
  add_check("serving_ecd_worst", 235000.0, serving.ecd_worst, serving.ecd_worst == 235000.0);
  add_check("serving_ecd_best", 105000.0, serving.ecd_best, serving.ecd_best == 105000.0);
  add_check("saving_worst", 0.6968, serving.saving_worst,
            std::abs(serving.saving_worst - 0.6968) <= 0.0005);
  add_check("saving_best", 0.8645, serving.saving_best,
            std::abs(serving.saving_best - 0.8645) <= 0.0005);
  add_check("upload_cdn", 1000.0, upload.cdn, upload.cdn == 1000.0);
  add_check("upload_ecd", 280.0, upload.ecd, upload.ecd == 280.0);
  add_check("upload_saving", 0.72, upload.saving, upload.saving == 0.72);

  out["checks"] = std::move(checks);
  out["pass"] = all_pass;
  return out;
}

}  // namespace ecdsim
