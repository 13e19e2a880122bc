/* C interface to the edge-content-delivery simulator.
 *
 * All functions returning ecd_status set a thread-local error message
 * readable via ecd_last_error() on failure. Strings returned through char**
 * are heap-allocated; release them with ecd_string_free(). Handles are
 * opaque and freed with their matching *_free function.
 */
#ifndef ECDSIM_H
#define ECDSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecd_status {
  ECD_OK = 0,
  ECD_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or malformed model input */
  ECD_ERROR_PARSE = 2,            /* scenario/trace syntax or schema error */
  ECD_ERROR_IO = 3,               /* file system failure */
  ECD_ERROR_STATE = 4             /* simulation reached an inconsistent state */
} ecd_status;

typedef struct ecd_scenario ecd_scenario;
typedef struct ecd_trace ecd_trace;
typedef struct ecd_report ecd_report;

const char* ecd_version(void);
const char* ecd_status_name(ecd_status status);

/* Message of the most recent failure on this thread; empty string if none. */
const char* ecd_last_error(void);

void ecd_string_free(char* s);

/* ---- scenarios ---- */

/* Parse a scenario document from JSON text. Relative trace paths resolve
 * against the current working directory. */
ecd_status ecd_scenario_parse(const char* json_text, ecd_scenario** out);

/* Load a scenario file; relative trace paths resolve against its directory. */
ecd_status ecd_scenario_load(const char* path, ecd_scenario** out);

void ecd_scenario_free(ecd_scenario* s);

/* Pool ranking of the scenario's (realized) topology as a JSON array of
 * {station, total_cost, rank}. */
ecd_status ecd_scenario_ranking_json(const ecd_scenario* s, char** out_json);

/* Ranking plus the initial placement produced by the scenario's catalog,
 * as {"ranking": [...], "placement": {station: [content, ...]}}. */
ecd_status ecd_scenario_placement_json(const ecd_scenario* s, char** out_json);

/* ---- runs ---- */

/* Run the scenario (generating or loading its workload) with invariant
 * checking enabled. */
ecd_status ecd_scenario_run(const ecd_scenario* s, ecd_report** out);

/* Run the scenario against an explicit trace, ignoring the scenario's own
 * workload source but keeping its catalog size. */
ecd_status ecd_scenario_run_trace(const ecd_scenario* s, const ecd_trace* trace,
                                  ecd_report** out);

ecd_status ecd_report_json(const ecd_report* r, char** out_json);
void ecd_report_free(ecd_report* r);

/* ---- sweeps ---- */

/* Grid run over stations x requests x seeds derived from the base scenario;
 * returns the aggregate CSV (stations,requests,seed,ecd_total,cdn_total,
 * saving). Failed cells are reported through out_failures (a newline-
 * separated list, empty string when all cells succeeded). */
ecd_status ecd_sweep_csv(const ecd_scenario* base, const int32_t* stations, size_t n_stations,
                         const int64_t* requests, size_t n_requests, const uint64_t* seeds,
                         size_t n_seeds, char** out_csv, char** out_failures);

/* ---- traces ---- */

ecd_status ecd_trace_generate(int64_t n_contents, int64_t n_requests, double zipf_exponent,
                              double upload_probability, const char* const* stations,
                              size_t n_stations, uint64_t seed, ecd_trace** out);
ecd_status ecd_trace_load(const char* path, ecd_trace** out);
ecd_status ecd_trace_save(const ecd_trace* t, const char* path);
ecd_status ecd_trace_text(const ecd_trace* t, char** out_text);
size_t ecd_trace_event_count(const ecd_trace* t);
void ecd_trace_free(ecd_trace* t);

/* ---- one-shot helpers ---- */

/* Rank an explicit topology given as JSON: {"stations": [...],
 * "weights": [[...]], "directed": bool}. */
ecd_status ecd_rank_topology_json(const char* topology_json, char** out_json);

/* Worked-example reproduction (ranking, placement, cost figures) with
 * pass/fail checks against the expected figures. */
ecd_status ecd_casestudy_json(char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ECDSIM_H */
