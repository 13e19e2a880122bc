#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"

namespace ecdsim {

enum class TraceEventKind { Request, Upload };

struct TraceEvent {
  EventTime at = 0;
  TraceEventKind kind = TraceEventKind::Request;
  std::string station;
  std::string content;

  bool operator==(const TraceEvent&) const = default;
};

// seed/descriptor are provenance metadata and are not part of the file
// format; equality compares the event list only, so save/load round-trips
// compare equal.
struct Trace {
  std::vector<TraceEvent> events;
  std::uint64_t seed = 0;
  std::string descriptor;

  bool operator==(const Trace& other) const { return events == other.events; }
};

struct ZipfParams {
  std::int64_t n_contents = 1;
  std::int64_t n_requests = 0;
  double exponent = 1.0;
  double upload_probability = 0.0;
  std::uint64_t seed = 0;
  std::string content_prefix = "v";  // requested ids are <prefix>1..<prefix>n
  std::string upload_prefix = "u";   // upload ids are <prefix>1, <prefix>2, ...
};

// Content of popularity rank i is drawn with probability proportional to
// i^(-exponent); stations are uniform; each event is independently an upload
// with the configured probability. Event times are the event indices.
// Deterministic for a fixed (params, stations, seed).
Trace generate_zipf_trace(const ZipfParams& params, const std::vector<std::string>& stations);

// Exact probability that one request draws a content of rank <= top_ranks.
double zipf_head_share(std::int64_t n_contents, double exponent, std::int64_t top_ranks);

// File format: first line "# ecd-trace v1", then one event per line as
// "time,kind,station,content" with kind REQ or UPL; UTF-8, '\n' endings.
void save_trace(const Trace& trace, std::ostream& out);
void save_trace(const Trace& trace, const std::string& path);
std::string trace_to_string(const Trace& trace);

// Parse errors report the 1-based line number and reject: bad header, wrong
// field counts, unknown kinds, non-numeric or decreasing times, empty ids.
Trace load_trace(std::istream& in, const std::string& origin = "<stream>");
Trace load_trace(const std::string& path);

// Stable 64-bit digest of the serialized trace bytes, as 16 hex digits.
std::string trace_digest(const Trace& trace);

}  // namespace ecdsim
