#include "scenario.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "metrics.hpp"

namespace ecdsim {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(Errc::parse, path + " must be an object");
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(Errc::parse, "unknown key '" + key + "' in " + path);
  }
}

const json* get_opt(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(Errc::parse, path + " must be a number");
  return j.get<double>();
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(Errc::parse, path + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_seed(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) fail(Errc::parse, path + " must be a non-negative integer");
    return static_cast<std::uint64_t>(v);
  }
  fail(Errc::parse, path + " must be a non-negative integer");
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(Errc::parse, path + " must be a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(Errc::parse, path + " must be a string");
  return j.get<std::string>();
}

TopologySpec parse_topology(const json& j) {
  require_object(j, "scenario.topology");
  TopologySpec spec;
  if (get_opt(j, "generator")) {
    check_keys(j, {"generator"}, "scenario.topology");
    const json& g = j["generator"];
    require_object(g, "scenario.topology.generator");
    check_keys(g, {"stations", "weight_min", "weight_max", "seed"},
               "scenario.topology.generator");
    spec.generated = true;
    if (!get_opt(g, "stations"))
      fail(Errc::parse, "scenario.topology.generator.stations is required");
    spec.gen_stations =
        static_cast<int>(as_integer(g["stations"], "scenario.topology.generator.stations"));
    if (const json* v = get_opt(g, "weight_min"))
      spec.weight_min = as_integer(*v, "scenario.topology.generator.weight_min");
    if (const json* v = get_opt(g, "weight_max"))
      spec.weight_max = as_integer(*v, "scenario.topology.generator.weight_max");
    if (const json* v = get_opt(g, "seed"))
      spec.gen_seed = as_seed(*v, "scenario.topology.generator.seed");
    return spec;
  }
  check_keys(j, {"stations", "weights", "directed"}, "scenario.topology");
  if (!get_opt(j, "stations") || !get_opt(j, "weights"))
    fail(Errc::parse, "scenario.topology needs 'stations' and 'weights' (or a 'generator')");
  const json& st = j["stations"];
  if (!st.is_array()) fail(Errc::parse, "scenario.topology.stations must be an array");
  for (const auto& s : st)
    spec.stations.push_back(as_string(s, "scenario.topology.stations entries"));
  const json& w = j["weights"];
  if (!w.is_array()) fail(Errc::parse, "scenario.topology.weights must be an array of rows");
  for (const auto& row : w) {
    if (!row.is_array()) fail(Errc::parse, "scenario.topology.weights rows must be arrays");
    std::vector<Cost> r;
    for (const auto& v : row) r.push_back(as_number(v, "scenario.topology.weights entries"));
    spec.weights.push_back(std::move(r));
  }
  if (const json* v = get_opt(j, "directed"))
    spec.directed = as_bool(*v, "scenario.topology.directed");
  return spec;
}

WorkloadSpec parse_workload(const json& j, const std::string& base_dir) {
  require_object(j, "scenario.workload");
  WorkloadSpec spec;
  if (get_opt(j, "generator")) {
    check_keys(j, {"generator"}, "scenario.workload");
    const json& g = j["generator"];
    require_object(g, "scenario.workload.generator");
    check_keys(g,
               {"n_contents", "n_requests", "zipf_exponent", "upload_probability", "seed"},
               "scenario.workload.generator");
    if (!get_opt(g, "n_contents") || !get_opt(g, "n_requests"))
      fail(Errc::parse,
           "scenario.workload.generator needs 'n_contents' and 'n_requests'");
    spec.generator.n_contents =
        as_integer(g["n_contents"], "scenario.workload.generator.n_contents");
    spec.generator.n_requests =
        as_integer(g["n_requests"], "scenario.workload.generator.n_requests");
    if (const json* v = get_opt(g, "zipf_exponent"))
      spec.generator.exponent = as_number(*v, "scenario.workload.generator.zipf_exponent");
    if (const json* v = get_opt(g, "upload_probability"))
      spec.generator.upload_probability =
          as_number(*v, "scenario.workload.generator.upload_probability");
    if (const json* v = get_opt(g, "seed"))
      spec.generator.seed = as_seed(*v, "scenario.workload.generator.seed");
    return spec;
  }
  check_keys(j, {"trace_path", "n_contents"}, "scenario.workload");
  if (!get_opt(j, "trace_path"))
    fail(Errc::parse, "scenario.workload needs 'trace_path' (or a 'generator')");
  spec.from_trace = true;
  std::string path = as_string(j["trace_path"], "scenario.workload.trace_path");
  if (!base_dir.empty() && !std::filesystem::path(path).is_absolute())
    path = (std::filesystem::path(base_dir) / path).string();
  spec.trace_path = std::move(path);
  if (!get_opt(j, "n_contents"))
    fail(Errc::parse, "scenario.workload.n_contents is required with trace_path");
  spec.trace_contents = as_integer(j["n_contents"], "scenario.workload.n_contents");
  if (spec.trace_contents < 0)
    fail(Errc::parse, "scenario.workload.n_contents must be >= 0");
  return spec;
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& doc, const std::string& base_dir) {
  require_object(doc, "scenario");
  check_keys(doc,
             {"topology", "capacities", "params", "distances", "workload", "models", "mode"},
             "scenario");
  if (!get_opt(doc, "topology")) fail(Errc::parse, "scenario.topology is required");
  if (!get_opt(doc, "workload")) fail(Errc::parse, "scenario.workload is required");

  Scenario s;
  s.topology = parse_topology(doc["topology"]);
  s.workload = parse_workload(doc["workload"], base_dir);

  if (const json* caps = get_opt(doc, "capacities")) {
    require_object(*caps, "scenario.capacities");
    check_keys(*caps, {"default", "per_station"}, "scenario.capacities");
    if (const json* v = get_opt(*caps, "default"))
      s.default_capacity = as_integer(*v, "scenario.capacities.default");
    if (const json* per = get_opt(*caps, "per_station")) {
      require_object(*per, "scenario.capacities.per_station");
      for (const auto& [key, value] : per->items())
        s.per_station_capacity[key] =
            as_integer(value, "scenario.capacities.per_station." + key);
    }
  }
  if (s.default_capacity < 0)
    fail(Errc::parse, "scenario.capacities.default must be >= 0");

  if (const json* p = get_opt(doc, "params")) {
    require_object(*p, "scenario.params");
    check_keys(*p,
               {"k", "delta", "eps_fill", "eps_share", "p_cloud_upload", "price_migrations",
                "priority_window"},
               "scenario.params");
    if (const json* v = get_opt(*p, "k"))
      s.params.k = static_cast<int>(as_integer(*v, "scenario.params.k"));
    if (const json* v = get_opt(*p, "delta"))
      s.params.delta = as_number(*v, "scenario.params.delta");
    if (const json* v = get_opt(*p, "eps_fill"))
      s.params.eps_fill = as_number(*v, "scenario.params.eps_fill");
    if (const json* v = get_opt(*p, "eps_share"))
      s.params.eps_share = as_number(*v, "scenario.params.eps_share");
    if (const json* v = get_opt(*p, "p_cloud_upload"))
      s.params.p_cloud_upload = as_number(*v, "scenario.params.p_cloud_upload");
    if (const json* v = get_opt(*p, "price_migrations"))
      s.params.price_migrations = as_bool(*v, "scenario.params.price_migrations");
    if (const json* v = get_opt(*p, "priority_window")) {
      require_object(*v, "scenario.params.priority_window");
      check_keys(*v, {"from", "to"}, "scenario.params.priority_window");
      if (!get_opt(*v, "from") || !get_opt(*v, "to"))
        fail(Errc::parse, "scenario.params.priority_window needs 'from' and 'to'");
      TimeWindow w;
      w.from = as_integer((*v)["from"], "scenario.params.priority_window.from");
      w.to = as_integer((*v)["to"], "scenario.params.priority_window.to");
      s.params.priority_window = w;
    }
  }

  if (const json* d = get_opt(doc, "distances")) {
    require_object(*d, "scenario.distances");
    check_keys(*d, {"user_cloud", "user_proxy", "proxy_cloud", "user_edge", "edge_cloud"},
               "scenario.distances");
    if (const json* v = get_opt(*d, "user_cloud"))
      s.distances.user_cloud = as_number(*v, "scenario.distances.user_cloud");
    if (const json* v = get_opt(*d, "user_proxy"))
      s.distances.user_proxy = as_number(*v, "scenario.distances.user_proxy");
    if (const json* v = get_opt(*d, "proxy_cloud"))
      s.distances.proxy_cloud = as_number(*v, "scenario.distances.proxy_cloud");
    if (const json* v = get_opt(*d, "user_edge"))
      s.distances.user_edge = as_number(*v, "scenario.distances.user_edge");
    if (const json* v = get_opt(*d, "edge_cloud"))
      s.distances.edge_cloud = as_number(*v, "scenario.distances.edge_cloud");
    s.distances.validate();
  }

  if (const json* m = get_opt(doc, "models")) {
    if (!m->is_array() || m->empty())
      fail(Errc::parse, "scenario.models must be a non-empty array");
    s.run_ecd = false;
    s.run_cdn = false;
    for (const auto& v : *m) {
      const std::string name = as_string(v, "scenario.models entries");
      if (name == "ECD") {
        if (s.run_ecd) fail(Errc::parse, "scenario.models lists ECD twice");
        s.run_ecd = true;
      } else if (name == "CDN") {
        if (s.run_cdn) fail(Errc::parse, "scenario.models lists CDN twice");
        s.run_cdn = true;
      } else {
        fail(Errc::parse, "scenario.models entries must be 'ECD' or 'CDN', got '" + name + "'");
      }
    }
  }

  if (const json* m = get_opt(doc, "mode")) {
    const std::string mode = as_string(*m, "scenario.mode");
    if (mode == "passthrough")
      s.cdn_passthrough = true;
    else if (mode != "caching")
      fail(Errc::parse, "scenario.mode must be 'caching' or 'passthrough', got '" + mode + "'");
  }

  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open scenario file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, "invalid JSON in '" + path + "': " + e.what());
  }
  return parse_scenario(doc, std::filesystem::path(path).parent_path().string());
}

BaseStationGraph realize_topology(const TopologySpec& spec) {
  if (!spec.generated) return validate_graph(spec.stations, spec.weights, spec.directed);
  if (spec.gen_stations < 1)
    fail(Errc::invalid_argument, "topology generator needs at least one station");
  if (spec.weight_min < 0 || spec.weight_max < spec.weight_min)
    fail(Errc::invalid_argument, "topology generator weight range is invalid");

  const int n = spec.gen_stations;
  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> stations;
  stations.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::string num = std::to_string(i);
    stations.push_back("S" + std::string(width - num.size(), '0') + num);
  }

  std::mt19937_64 rng(spec.gen_seed);
  const auto span = static_cast<std::uint64_t>(spec.weight_max - spec.weight_min) + 1;
  std::vector<std::vector<Cost>> weights(static_cast<std::size_t>(n),
                                         std::vector<Cost>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto w = static_cast<Cost>(spec.weight_min +
                                       static_cast<std::int64_t>(rng() % span));
      weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
      weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
    }
  return validate_graph(std::move(stations), std::move(weights), false);
}

nlohmann::ordered_json scenario_echo(const Scenario& s, const BaseStationGraph& realized) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json topo;
  topo["stations"] = realized.stations;
  topo["directed"] = realized.directed;
  topo["weights"] = realized.weights;
  j["topology"] = std::move(topo);

  nlohmann::ordered_json caps;
  for (const auto& st : realized.stations) {
    const auto it = s.per_station_capacity.find(st);
    caps[st] = it != s.per_station_capacity.end() ? it->second : s.default_capacity;
  }
  j["capacities"] = std::move(caps);

  nlohmann::ordered_json params;
  params["k"] = s.params.k;
  params["delta"] = s.params.delta;
  params["eps_fill"] = s.params.eps_fill;
  params["eps_share"] = s.params.eps_share;
  params["p_cloud_upload"] = s.params.p_cloud_upload;
  params["price_migrations"] = s.params.price_migrations;
  if (s.params.priority_window) {
    params["priority_window"] = {{"from", s.params.priority_window->from},
                                 {"to", s.params.priority_window->to}};
  }
  j["params"] = std::move(params);

  nlohmann::ordered_json dist;
  dist["user_cloud"] = s.distances.user_cloud;
  dist["user_proxy"] = s.distances.user_proxy;
  dist["proxy_cloud"] = s.distances.proxy_cloud;
  dist["user_edge"] = s.distances.user_edge;
  dist["edge_cloud"] = s.distances.edge_cloud;
  j["distances"] = std::move(dist);

  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  if (s.run_ecd) models.push_back("ECD");
  if (s.run_cdn) models.push_back("CDN");
  j["models"] = std::move(models);
  j["mode"] = s.cdn_passthrough ? "passthrough" : "caching";
  return j;
}

}  // namespace ecdsim
