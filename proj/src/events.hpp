#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "catalog.hpp"
#include "topology.hpp"

namespace ecdsim {

// Where a request was served from, in lookup order.
enum class SourceKind { LocalPool, RemotePool, ContentServer, Cloud };

const char* source_kind_name(SourceKind k);

// State changes caused by handling one trace event.
enum class EffectKind {
  Promote,             // content moved to the next better-ranked pool
  Demote,              // content moved to a worse-ranked pool to make room
  Evict,               // content dropped from a pool (stays in cloud/servers)
  ReplicaDeliver,      // cloud pushed a copy to a pool with high local demand
  CloudDeliver,        // cloud-only content materialised in the lowest pool
  CloudUpload,         // content entered a top pool for the first time; copy to cloud
  UserUpload,          // upload stored at the origin content server
  AdmitCopy,           // uploaded content admitted from its server into a pool
  RegisterDescription  // upload metadata recorded at the best-ranked station
};

const char* effect_kind_name(EffectKind k);

// `from`/`to` name stations, or "cloud"/"user" for the respective endpoints;
// empty when the side has no location (e.g. an eviction discard target).
// The r_*/threshold/share fields snapshot the trigger that justified the
// effect at the moment it fired; capacity-driven effects leave them zero.
struct SideEffect {
  EffectKind kind = EffectKind::Evict;
  std::string content;
  std::string from;
  std::string to;
  Cost transit = 0;  // shortest-path cost of an inter-station move, else 0
  std::uint64_t r_content = 0;
  std::uint64_t r_reference = 0;
  double threshold = 0;
  double share = 0;

  bool operator==(const SideEffect&) const = default;
};

struct ServeOutcome {
  SourceKind source = SourceKind::Cloud;
  std::string source_station;  // empty when served from the cloud
  Cost transit = 0;            // inter-station leg, 0 for local or cloud service
  std::vector<SideEffect> side_effects;
};

struct ServeRecord {
  std::string station;  // requester's base station
  std::string content;
  SourceKind source = SourceKind::Cloud;
  std::string source_station;
  Cost transit = 0;

  bool operator==(const ServeRecord&) const = default;
};

// One entry of the append-only event log: either the service of a request or
// a single side effect. event_index is the trace position that caused it.
struct LogRecord {
  std::int64_t event_index = -1;
  EventTime at = 0;
  std::variant<ServeRecord, SideEffect> body;
};

}  // namespace ecdsim
