#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecdsim.h"
#include "json.hpp"

namespace {

struct OwnedString {
  char* ptr = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { ecd_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct ScenarioHandle {
  ecd_scenario* ptr = nullptr;
  ~ScenarioHandle() { ecd_scenario_free(ptr); }
};

struct TraceHandle {
  ecd_trace* ptr = nullptr;
  ~TraceHandle() { ecd_trace_free(ptr); }
};

struct ReportHandle {
  ecd_report* ptr = nullptr;
  ~ReportHandle() { ecd_report_free(ptr); }
};

// Exit codes: 0 success, 1 self-check failure, 2 usage, 3 io, 4 parse,
// 5 invalid input or inconsistent simulation state.
int exit_code(ecd_status st) {
  switch (st) {
    case ECD_OK:
      return 0;
    case ECD_ERROR_IO:
      return 3;
    case ECD_ERROR_PARSE:
      return 4;
    default:
      return 5;
  }
}

int report_failure(ecd_status st) {
  std::cerr << "ecdsim: " << ecd_status_name(st) << ": " << ecd_last_error() << "\n";
  return exit_code(st);
}

// Machine output goes to stdout unless an explicit file was requested;
// diagnostics stay on stderr.
int write_text(const std::string& text, const std::string& out_path) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << payload)) {
    std::cerr << "ecdsim: io_error: cannot write " << out_path << "\n";
    return 3;
  }
  return 0;
}

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ecdsim: io_error: cannot read " << path << "\n";
    return 3;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge content delivery simulator"};
  app.set_version_flag("--version", ecd_version());
  app.require_subcommand(1);

  std::string rank_topology, rank_scenario, rank_out;
  auto* rank = app.add_subcommand("rank", "rank cache pools by aggregate path cost");
  rank->add_option("--topology", rank_topology, "topology JSON file");
  rank->add_option("--scenario", rank_scenario, "scenario JSON file");
  rank->add_option("--out", rank_out, "output file (default stdout)");

  std::string place_scenario, place_out;
  auto* place = app.add_subcommand("place", "show pool ranking and initial placement");
  place->add_option("--scenario", place_scenario, "scenario JSON file")->required();
  place->add_option("--out", place_out, "output file (default stdout)");

  std::string run_scenario, run_trace, run_out;
  auto* run = app.add_subcommand("run", "run a scenario and emit the report");
  run->add_option("--scenario", run_scenario, "scenario JSON file")->required();
  run->add_option("--trace", run_trace, "replay this trace instead of the scenario workload");
  run->add_option("--out", run_out, "output file (default stdout)");

  std::string sweep_scenario, sweep_out;
  std::vector<int32_t> sweep_stations;
  std::vector<int64_t> sweep_requests;
  std::vector<uint64_t> sweep_seeds;
  auto* sweep = app.add_subcommand("sweep", "grid run over stations x requests x seeds");
  sweep->add_option("--scenario", sweep_scenario, "base scenario JSON file")->required();
  sweep->add_option("--stations", sweep_stations, "station counts, comma separated")
      ->required()
      ->delimiter(',');
  sweep->add_option("--requests", sweep_requests, "request counts, comma separated")
      ->required()
      ->delimiter(',');
  sweep->add_option("--seeds", sweep_seeds, "workload seeds, comma separated")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

  int64_t gen_contents = 0;
  int64_t gen_requests = 0;
  double gen_zipf = 1.0;
  double gen_upload_prob = 0.0;
  uint64_t gen_seed = 1;
  std::vector<std::string> gen_stations;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-workload", "generate a Zipf request/upload trace");
  gen->add_option("--contents", gen_contents, "catalog size")->required();
  gen->add_option("--requests", gen_requests, "number of events")->required();
  gen->add_option("--zipf", gen_zipf, "Zipf exponent (0 = uniform)");
  gen->add_option("--upload-prob", gen_upload_prob, "per-event upload probability");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--stations", gen_stations, "station names, comma separated")
      ->required()
      ->delimiter(',');
  gen->add_option("--out", gen_out, "trace output file, - for stdout")->required();

  std::string cs_out;
  auto* cs = app.add_subcommand("casestudy", "reproduce the worked example and self-check it");
  cs->add_option("--out", cs_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (rank->parsed()) {
    if (rank_topology.empty() == rank_scenario.empty()) {
      std::cerr << "ecdsim: rank needs exactly one of --topology or --scenario\n";
      return 2;
    }
    OwnedString json;
    if (!rank_topology.empty()) {
      std::string text;
      if (int rc = read_file(rank_topology, text)) return rc;
      ecd_status st = ecd_rank_topology_json(text.c_str(), &json.ptr);
      if (st != ECD_OK) return report_failure(st);
    } else {
      ScenarioHandle s;
      ecd_status st = ecd_scenario_load(rank_scenario.c_str(), &s.ptr);
      if (st != ECD_OK) return report_failure(st);
      st = ecd_scenario_ranking_json(s.ptr, &json.ptr);
      if (st != ECD_OK) return report_failure(st);
    }
    return write_text(json.str(), rank_out);
  }

  if (place->parsed()) {
    ScenarioHandle s;
    ecd_status st = ecd_scenario_load(place_scenario.c_str(), &s.ptr);
    if (st != ECD_OK) return report_failure(st);
    OwnedString json;
    st = ecd_scenario_placement_json(s.ptr, &json.ptr);
    if (st != ECD_OK) return report_failure(st);
    return write_text(json.str(), place_out);
  }

  if (run->parsed()) {
    ScenarioHandle s;
    ecd_status st = ecd_scenario_load(run_scenario.c_str(), &s.ptr);
    if (st != ECD_OK) return report_failure(st);
    ReportHandle report;
    if (!run_trace.empty()) {
      TraceHandle t;
      st = ecd_trace_load(run_trace.c_str(), &t.ptr);
      if (st != ECD_OK) return report_failure(st);
      st = ecd_scenario_run_trace(s.ptr, t.ptr, &report.ptr);
    } else {
      st = ecd_scenario_run(s.ptr, &report.ptr);
    }
    if (st != ECD_OK) return report_failure(st);
    OwnedString json;
    st = ecd_report_json(report.ptr, &json.ptr);
    if (st != ECD_OK) return report_failure(st);
    return write_text(json.str(), run_out);
  }

  if (sweep->parsed()) {
    ScenarioHandle s;
    ecd_status st = ecd_scenario_load(sweep_scenario.c_str(), &s.ptr);
    if (st != ECD_OK) return report_failure(st);
    OwnedString csv, failures;
    st = ecd_sweep_csv(s.ptr, sweep_stations.data(), sweep_stations.size(),
                       sweep_requests.data(), sweep_requests.size(), sweep_seeds.data(),
                       sweep_seeds.size(), &csv.ptr, &failures.ptr);
    if (st != ECD_OK) return report_failure(st);
    if (int rc = write_text(csv.str(), sweep_out)) return rc;
    std::string failed = failures.str();
    if (!failed.empty()) {
      if (failed.back() != '\n') failed += '\n';
      std::cerr << "ecdsim: failed cells:\n" << failed;
      return 5;
    }
    return 0;
  }

  if (gen->parsed()) {
    std::vector<const char*> names;
    names.reserve(gen_stations.size());
    for (const auto& s : gen_stations) names.push_back(s.c_str());
    TraceHandle t;
    ecd_status st = ecd_trace_generate(gen_contents, gen_requests, gen_zipf, gen_upload_prob,
                                       names.data(), names.size(), gen_seed, &t.ptr);
    if (st != ECD_OK) return report_failure(st);
    if (gen_out == "-") {
      OwnedString text;
      st = ecd_trace_text(t.ptr, &text.ptr);
      if (st != ECD_OK) return report_failure(st);
      return write_text(text.str(), "-");
    }
    st = ecd_trace_save(t.ptr, gen_out.c_str());
    if (st != ECD_OK) return report_failure(st);
    std::cerr << "wrote " << ecd_trace_event_count(t.ptr) << " events to " << gen_out << "\n";
    return 0;
  }

  if (cs->parsed()) {
    OwnedString json;
    ecd_status st = ecd_casestudy_json(&json.ptr);
    if (st != ECD_OK) return report_failure(st);
    if (int rc = write_text(json.str(), cs_out)) return rc;
    auto doc = nlohmann::json::parse(json.str());
    if (!doc.value("pass", false)) {
      std::cerr << "ecdsim: casestudy checks failed\n";
      return 1;
    }
    return 0;
  }

  return 2;
}
