#include "workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace ecdsim {

namespace {

constexpr const char* kHeader = "# ecd-trace v1";

double unit_interval(std::mt19937_64& rng) {
  // 53-bit mantissa draw in [0, 1).
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_id(const std::string& id, const char* what) {
  if (id.empty()) fail(Errc::invalid_argument, std::string(what) + " id must be non-empty");
  if (id.find(',') != std::string::npos || id.find('\n') != std::string::npos ||
      id.find('\r') != std::string::npos)
    fail(Errc::invalid_argument,
         std::string(what) + " id '" + id + "' may not contain commas or line breaks");
}

}  // namespace

double zipf_head_share(std::int64_t n_contents, double exponent, std::int64_t top_ranks) {
  if (n_contents < 1) fail(Errc::invalid_argument, "n_contents must be >= 1");
  if (top_ranks < 0 || top_ranks > n_contents)
    fail(Errc::invalid_argument, "top_ranks out of range");
  double head = 0, total = 0;
  for (std::int64_t i = 1; i <= n_contents; ++i) {
    const double w = std::pow(static_cast<double>(i), -exponent);
    total += w;
    if (i <= top_ranks) head += w;
  }
  return head / total;
}

Trace generate_zipf_trace(const ZipfParams& p, const std::vector<std::string>& stations) {
  if (p.n_contents < 1) fail(Errc::invalid_argument, "n_contents must be >= 1");
  if (p.n_requests < 0) fail(Errc::invalid_argument, "n_requests must be >= 0");
  if (!(p.exponent >= 0)) fail(Errc::invalid_argument, "exponent must be >= 0");
  if (p.upload_probability < 0 || p.upload_probability > 1)
    fail(Errc::invalid_argument, "upload_probability must lie in [0, 1]");
  if (stations.empty()) fail(Errc::invalid_argument, "need at least one station");
  for (const auto& s : stations) check_id(s, "station");
  check_id(p.content_prefix + "1", "content");
  check_id(p.upload_prefix + "1", "content");

  std::vector<double> cumulative(static_cast<std::size_t>(p.n_contents));
  double total = 0;
  for (std::int64_t i = 1; i <= p.n_contents; ++i) {
    total += std::pow(static_cast<double>(i), -p.exponent);
    cumulative[static_cast<std::size_t>(i - 1)] = total;
  }

  std::mt19937_64 rng(p.seed);
  Trace trace;
  trace.seed = p.seed;
  {
    std::ostringstream d;
    d << "zipf(n_contents=" << p.n_contents << ",n_requests=" << p.n_requests
      << ",exponent=" << p.exponent << ",upload_probability=" << p.upload_probability
      << ",seed=" << p.seed << ")";
    trace.descriptor = d.str();
  }
  trace.events.reserve(static_cast<std::size_t>(p.n_requests));
  std::int64_t uploads = 0;
  for (std::int64_t e = 0; e < p.n_requests; ++e) {
    TraceEvent ev;
    ev.at = e;
    const bool upload = unit_interval(rng) < p.upload_probability;
    const auto si = static_cast<std::size_t>(unit_interval(rng) *
                                             static_cast<double>(stations.size()));
    ev.station = stations[std::min(si, stations.size() - 1)];
    if (upload) {
      ev.kind = TraceEventKind::Upload;
      ev.content = p.upload_prefix + std::to_string(++uploads);
    } else {
      ev.kind = TraceEventKind::Request;
      const double u = unit_interval(rng) * total;
      const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
      const auto rank = static_cast<std::size_t>(it - cumulative.begin());
      ev.content =
          p.content_prefix + std::to_string(std::min<std::size_t>(rank, cumulative.size() - 1) + 1);
    }
    trace.events.push_back(std::move(ev));
  }
  return trace;
}

void save_trace(const Trace& trace, std::ostream& out) {
  out << kHeader << '\n';
  EventTime last = 0;
  for (const auto& ev : trace.events) {
    if (ev.at < 0) fail(Errc::invalid_argument, "event times must be non-negative");
    if (ev.at < last) fail(Errc::invalid_argument, "event times must be non-decreasing");
    last = ev.at;
    check_id(ev.station, "station");
    check_id(ev.content, "content");
    out << ev.at << ',' << (ev.kind == TraceEventKind::Request ? "REQ" : "UPL") << ','
        << ev.station << ',' << ev.content << '\n';
  }
}

void save_trace(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot open '" + path + "' for writing");
  save_trace(trace, out);
  out.flush();
  if (!out) fail(Errc::io, "failed writing trace to '" + path + "'");
}

std::string trace_to_string(const Trace& trace) {
  std::ostringstream out;
  save_trace(trace, out);
  return out.str();
}

Trace load_trace(std::istream& in, const std::string& origin) {
  auto at_line = [&](std::size_t n, const std::string& msg) -> std::string {
    return origin + ":" + std::to_string(n) + ": " + msg;
  };
  std::string line;
  if (!std::getline(in, line)) fail(Errc::parse, at_line(1, "missing trace header"));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    fail(Errc::parse, at_line(1, "expected header '" + std::string(kHeader) + "'"));

  Trace trace;
  trace.descriptor = "file:" + origin;
  std::size_t lineno = 1;
  EventTime last = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 4)
      fail(Errc::parse, at_line(lineno, "expected 4 comma-separated fields, got " +
                                            std::to_string(fields.size())));
    TraceEvent ev;
    const std::string& t = fields[0];
    const auto first = t.data();
    const auto end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, end, ev.at);
    if (ec != std::errc() || ptr != end || ev.at < 0)
      fail(Errc::parse, at_line(lineno, "invalid time '" + t + "'"));
    if (ev.at < last)
      fail(Errc::parse, at_line(lineno, "event time decreases"));
    last = ev.at;
    if (fields[1] == "REQ")
      ev.kind = TraceEventKind::Request;
    else if (fields[1] == "UPL")
      ev.kind = TraceEventKind::Upload;
    else
      fail(Errc::parse, at_line(lineno, "unknown event kind '" + fields[1] + "'"));
    if (fields[2].empty()) fail(Errc::parse, at_line(lineno, "empty station id"));
    if (fields[3].empty()) fail(Errc::parse, at_line(lineno, "empty content id"));
    ev.station = fields[2];
    ev.content = fields[3];
    trace.events.push_back(std::move(ev));
  }
  return trace;
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open trace file '" + path + "'");
  return load_trace(in, path);
}

std::string trace_digest(const Trace& trace) {
  const std::string bytes = trace_to_string(trace);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ecdsim
