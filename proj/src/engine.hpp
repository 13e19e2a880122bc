#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cdn.hpp"
#include "ecd.hpp"
#include "json.hpp"
#include "metrics.hpp"
#include "scenario.hpp"
#include "workload.hpp"

namespace ecdsim {

struct RunOptions {
  bool check_invariants = true;
  bool include_event_log = false;  // embed full logs in the report (large)
};

struct RunResult {
  nlohmann::ordered_json report;
  std::unique_ptr<EcdWorld> ecd;  // null when the model did not run
  std::unique_ptr<CdnWorld> cdn;
  Trace trace;
};

// Applies the scenario's trace to the selected models event by event,
// checking invariants after each event when enabled. The report is
// deterministic for a fixed (scenario, trace): no timestamps, and the
// workload echo carries only the trace digest and event count.
RunResult run_scenario(const Scenario& s, const RunOptions& options = {});
RunResult run_scenario_with_trace(const Scenario& s, const Trace& trace,
                                  const RunOptions& options = {});

// JSON form of one log record, including its priced cost.
nlohmann::ordered_json log_record_json(const LogRecord& record, double cost);

struct SweepGrid {
  std::vector<int> stations;
  std::vector<std::int64_t> requests;
  std::vector<std::uint64_t> seeds;
};

struct SweepRow {
  int stations = 0;
  std::int64_t requests = 0;
  std::uint64_t seed = 0;
  double ecd_total = 0;
  double cdn_total = 0;
  double saving = 0;
  bool ok = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;                    // grid order: stations, requests, seeds
  std::vector<nlohmann::ordered_json> reports;   // null json for failed cells
};

// The grid cell scenario: generated complete topology sized to the cell
// (weights drawn from a seed derived from the cell seed and station count),
// a generated workload with the cell's request count and seed, and the base
// scenario's parameters, distances, capacity default, models and mode.
Scenario derive_cell_scenario(const Scenario& base, int stations, std::int64_t requests,
                              std::uint64_t seed);

// Cells run in parallel; per-cell failures are captured in their row instead
// of aborting the sweep. Results are ordered by grid coordinates.
SweepResult sweep(const Scenario& base, const SweepGrid& grid, const RunOptions& options = {});

// Header line plus one line per successful row:
// stations,requests,seed,ecd_total,cdn_total,saving
std::string sweep_csv(const std::vector<SweepRow>& rows);

// The five-station worked example's distance table, taken as printed (its
// row totals are used as-is; the table is not re-closed).
DistanceMatrix casestudy_distances();

// Ranking, placement and cost figures of the worked example, with pass/fail
// checks against the expected figures.
nlohmann::ordered_json casestudy_report();

}  // namespace ecdsim
