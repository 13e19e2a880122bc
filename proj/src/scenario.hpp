#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "params.hpp"
#include "topology.hpp"
#include "workload.hpp"

namespace ecdsim {

// Either an explicit station/weight matrix or a seeded generator for a
// complete graph with uniform integer weights.
struct TopologySpec {
  bool generated = false;
  // explicit form
  std::vector<std::string> stations;
  std::vector<std::vector<Cost>> weights;
  bool directed = false;
  // generator form
  int gen_stations = 0;
  std::int64_t weight_min = 10;
  std::int64_t weight_max = 100;
  std::uint64_t gen_seed = 0;
};

// Either a trace file plus the size of the pre-seeded catalog, or Zipf
// generator parameters (which carry their own catalog size).
struct WorkloadSpec {
  bool from_trace = false;
  std::string trace_path;          // resolved against the scenario file's directory
  std::int64_t trace_contents = 0; // catalog size when replaying a trace
  ZipfParams generator;
};

struct Scenario {
  TopologySpec topology;
  std::int64_t default_capacity = 10;
  std::map<std::string, std::int64_t> per_station_capacity;
  ScenarioParams params;
  DistanceParams distances;
  WorkloadSpec workload;
  bool run_ecd = true;
  bool run_cdn = true;
  bool cdn_passthrough = false;

  std::int64_t catalog_size() const {
    return workload.from_trace ? workload.trace_contents : workload.generator.n_contents;
  }
};

// Strict parse: unknown keys anywhere are rejected (Errc::parse), as are
// type mismatches and out-of-range values. `base_dir` anchors relative
// trace paths.
Scenario parse_scenario(const nlohmann::json& doc, const std::string& base_dir = "");
Scenario load_scenario(const std::string& path);

// Canonical scenario echo for reports; the workload block is summarised by
// the caller once the trace is resolved.
nlohmann::ordered_json scenario_echo(const Scenario& s, const BaseStationGraph& realized);

// Expands a generator topology (complete graph, uniform integer weights in
// [weight_min, weight_max], stations named S1..Sn zero-padded) or validates
// the explicit one.
BaseStationGraph realize_topology(const TopologySpec& spec);

}  // namespace ecdsim
