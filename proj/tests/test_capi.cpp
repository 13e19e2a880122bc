// Exercises the shared-library surface only: every call goes through the
// C header, and results come back as strings or opaque handles.
#include <doctest.h>

#include <cstdio>
#include <string>

#include <ecdsim.h>
#include <json.hpp>

using nlohmann::json;

namespace {

std::string data_path(const std::string& name) {
  return std::string(ECDSIM_TEST_DATA_DIR) + "/" + name;
}

const char* kTwoStationScenario = R"({
  "topology": {"stations": ["A", "B"], "weights": [[0, 5], [5, 0]]},
  "capacities": {"default": 4},
  "workload": {"generator": {"n_contents": 10, "n_requests": 0}}
})";

struct Owned {
  char* ptr = nullptr;
  ~Owned() { ecd_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("version and status names are stable") {
  REQUIRE(ecd_version() != nullptr);
  CHECK(std::string(ecd_version()) == "1.0.0");
  CHECK(std::string(ecd_status_name(ECD_OK)) == "ok");
  CHECK(std::string(ecd_status_name(ECD_ERROR_INVALID_ARGUMENT)) == "invalid_argument");
  CHECK(std::string(ecd_status_name(ECD_ERROR_PARSE)) == "parse");
  CHECK(std::string(ecd_status_name(ECD_ERROR_IO)) == "io");
  CHECK(std::string(ecd_status_name(ECD_ERROR_STATE)) == "state");
  CHECK(std::string(ecd_status_name(static_cast<ecd_status>(99))) == "unknown");
}

TEST_CASE("scenario text parses, ranks, places and runs") {
  ecd_scenario* s = nullptr;
  REQUIRE(ecd_scenario_parse(kTwoStationScenario, &s) == ECD_OK);
  REQUIRE(s != nullptr);
  CHECK(std::string(ecd_last_error()).empty());

  Owned ranking;
  REQUIRE(ecd_scenario_ranking_json(s, &ranking.ptr) == ECD_OK);
  const json rank = json::parse(ranking.str());
  REQUIRE(rank.size() == 2);
  CHECK(rank[0]["station"] == "A");
  CHECK(rank[0]["total_cost"] == 5.0);
  CHECK(rank[0]["rank"] == 1);

  Owned placement;
  REQUIRE(ecd_scenario_placement_json(s, &placement.ptr) == ECD_OK);
  const json p = json::parse(placement.str());
  CHECK(p["ranking"].size() == 2);
  CHECK(p["placement"]["A"].size() == 4);
  CHECK(p["placement"]["A"][0] == "v1");

  ecd_report* rep = nullptr;
  REQUIRE(ecd_scenario_run(s, &rep) == ECD_OK);
  Owned rep_text;
  REQUIRE(ecd_report_json(rep, &rep_text.ptr) == ECD_OK);
  const json r = json::parse(rep_text.str());
  CHECK(r["schema"] == "ecd-run-report v1");
  CHECK(r["events"]["count"] == 0);
  ecd_report_free(rep);
  ecd_scenario_free(s);
}

TEST_CASE("null arguments are rejected with a message") {
  ecd_scenario* s = nullptr;
  CHECK(ecd_scenario_parse(nullptr, &s) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(ecd_last_error()) == "null argument");
  CHECK(ecd_scenario_parse("{}", nullptr) == ECD_ERROR_INVALID_ARGUMENT);

  char* text = nullptr;
  CHECK(ecd_report_json(nullptr, &text) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(ecd_trace_text(nullptr, &text) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(ecd_trace_save(nullptr, "x.trace") == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(ecd_rank_topology_json(nullptr, &text) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(ecd_casestudy_json(nullptr) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(ecd_trace_event_count(nullptr) == 0);

  // Freeing nulls is a no-op.
  ecd_string_free(nullptr);
  ecd_scenario_free(nullptr);
  ecd_trace_free(nullptr);
  ecd_report_free(nullptr);
}

TEST_CASE("failures carry a status and a readable message") {
  ecd_scenario* s = nullptr;
  CHECK(ecd_scenario_parse("{not json", &s) == ECD_ERROR_PARSE);
  CHECK(std::string(ecd_last_error()).find("invalid JSON") != std::string::npos);
  CHECK(s == nullptr);

  CHECK(ecd_scenario_parse(R"({"workload": {}})", &s) == ECD_ERROR_PARSE);
  CHECK(std::string(ecd_last_error()).find("scenario.topology is required") !=
        std::string::npos);

  CHECK(ecd_scenario_load("no_such_scenario.json", &s) == ECD_ERROR_IO);

  ecd_trace* t = nullptr;
  CHECK(ecd_trace_load(data_path("malformed.trace").c_str(), &t) == ECD_ERROR_PARSE);
  const std::string msg = ecd_last_error();
  CHECK(msg.find("malformed.trace:3:") != std::string::npos);
  CHECK(msg.find("FOO") != std::string::npos);
  CHECK(ecd_trace_load("no_such.trace", &t) == ECD_ERROR_IO);

  // A run that trips model validation reports the offending event.
  REQUIRE(ecd_scenario_load(data_path("bad_station_scenario.json").c_str(), &s) == ECD_OK);
  ecd_report* rep = nullptr;
  CHECK(ecd_scenario_run(s, &rep) == ECD_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(ecd_last_error()).find("ghost") != std::string::npos);
  CHECK(rep == nullptr);
  ecd_scenario_free(s);

  // The next success clears the sticky message.
  Owned cs;
  REQUIRE(ecd_casestudy_json(&cs.ptr) == ECD_OK);
  CHECK(std::string(ecd_last_error()).empty());
}

TEST_CASE("traces generate, save, reload and drive runs") {
  const char* stations[] = {"A", "B"};
  ecd_trace* t = nullptr;
  REQUIRE(ecd_trace_generate(10, 50, 1.0, 0.0, stations, 2, 42, &t) == ECD_OK);
  REQUIRE(t != nullptr);
  CHECK(ecd_trace_event_count(t) == 50);

  Owned text;
  REQUIRE(ecd_trace_text(t, &text.ptr) == ECD_OK);
  CHECK(text.str().rfind("# ecd-trace v1\n", 0) == 0);

  const std::string path = "capi_roundtrip_tmp.trace";
  REQUIRE(ecd_trace_save(t, path.c_str()) == ECD_OK);
  ecd_trace* back = nullptr;
  REQUIRE(ecd_trace_load(path.c_str(), &back) == ECD_OK);
  CHECK(ecd_trace_event_count(back) == 50);
  Owned back_text;
  REQUIRE(ecd_trace_text(back, &back_text.ptr) == ECD_OK);
  CHECK(back_text.str() == text.str());
  std::remove(path.c_str());

  ecd_scenario* s = nullptr;
  REQUIRE(ecd_scenario_parse(kTwoStationScenario, &s) == ECD_OK);
  ecd_report* rep = nullptr;
  REQUIRE(ecd_scenario_run_trace(s, back, &rep) == ECD_OK);
  Owned rep_text;
  REQUIRE(ecd_report_json(rep, &rep_text.ptr) == ECD_OK);
  const json r = json::parse(rep_text.str());
  CHECK(r["events"]["count"] == 50);
  CHECK(r["costs"]["ecd"]["total"].get<double>() > 0);
  ecd_report_free(rep);
  ecd_scenario_free(s);
  ecd_trace_free(back);
  ecd_trace_free(t);

  // Generator bounds are enforced across the boundary too.
  CHECK(ecd_trace_generate(0, 5, 1.0, 0.0, stations, 2, 1, &t) ==
        ECD_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("a scenario file resolves its trace beside itself") {
  ecd_scenario* s = nullptr;
  REQUIRE(ecd_scenario_load(data_path("fivestation_scenario.json").c_str(), &s) == ECD_OK);
  ecd_report* rep = nullptr;
  REQUIRE(ecd_scenario_run(s, &rep) == ECD_OK);
  Owned text;
  REQUIRE(ecd_report_json(rep, &text.ptr) == ECD_OK);
  const json r = json::parse(text.str());
  CHECK(r["events"]["count"] == 3);
  CHECK(r["ranking"][0]["station"] == "B");
  ecd_report_free(rep);
  ecd_scenario_free(s);
}

TEST_CASE("sweeps aggregate to CSV and report failed cells") {
  ecd_scenario* base = nullptr;
  REQUIRE(ecd_scenario_parse(R"({
    "topology": {"generator": {"stations": 3}},
    "capacities": {"default": 3},
    "workload": {"generator": {"n_contents": 12, "n_requests": 60}},
    "params": {"k": 3}
  })", &base) == ECD_OK);

  const int32_t stations[] = {2, 3};
  const int64_t requests[] = {40};
  const uint64_t seeds[] = {1, 2};
  Owned csv, failures;
  REQUIRE(ecd_sweep_csv(base, stations, 2, requests, 1, seeds, 2, &csv.ptr,
                        &failures.ptr) == ECD_OK);
  CHECK(csv.str().rfind("stations,requests,seed,ecd_total,cdn_total,saving\n", 0) == 0);
  // Two-station cells cannot hold three top pools and fail; the rest succeed.
  CHECK(failures.str().find("stations=2 requests=40 seed=1:") != std::string::npos);
  CHECK(csv.str().find("\n3,40,1,") != std::string::npos);
  CHECK(csv.str().find("\n3,40,2,") != std::string::npos);
  ecd_scenario_free(base);
}

TEST_CASE("explicit topologies rank without a full scenario") {
  Owned out;
  REQUIRE(ecd_rank_topology_json(R"({
    "stations": ["X", "Y", "Z"],
    "weights": [[0, 1, 2], [1, 0, 3], [2, 3, 0]]
  })", &out.ptr) == ECD_OK);
  const json rank = json::parse(out.str());
  REQUIRE(rank.size() == 3);
  CHECK(rank[0]["station"] == "X");
  CHECK(rank[0]["total_cost"] == 3.0);
  CHECK(rank[1]["total_cost"] == 4.0);
  CHECK(rank[2]["total_cost"] == 5.0);

  char* bad = nullptr;
  CHECK(ecd_rank_topology_json("[1, 2]", &bad) == ECD_ERROR_PARSE);
}

TEST_CASE("the worked example passes through the C interface") {
  Owned out;
  REQUIRE(ecd_casestudy_json(&out.ptr) == ECD_OK);
  const json rep = json::parse(out.str());
  CHECK(rep["pass"] == true);
  CHECK(rep["serving_costs"]["cdn"] == 775000.0);
  CHECK(rep["upload_costs"]["saving"] == 0.72);
}
