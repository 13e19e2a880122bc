#include <doctest.h>

#include <string>
#include <vector>

#include "ecd.hpp"
#include "support.hpp"

using namespace ecdsim;
using testsupport::count_kind;
using testsupport::effects_of;
using testsupport::errc_of;
using testsupport::five_station_world;

namespace {

// Drives one world with a single global clock.
struct Script {
  EcdWorld& w;
  EventTime t = 0;

  ServeOutcome req(const std::string& station, const std::string& content) {
    auto out = w.handle_request(station, content, t++);
    w.check_invariants();
    return out;
  }
  std::vector<SideEffect> up(const std::string& station, const std::string& content) {
    auto fx = w.handle_upload(station, content, t++);
    w.check_invariants();
    return fx;
  }
  void pump(const std::string& station, const std::string& content, int n) {
    for (int i = 0; i < n; ++i) req(station, content);
  }
};

// One request per placed content at its own station, walking pools from the
// best rank down so no count comparison trips a migration.
void prime_counts(Script& s) {
  for (const auto& e : s.w.ranking().entries)
    for (const auto& id : s.w.pool_contents(e.station)) s.req(e.station, id);
}

struct Fx {
  EffectKind kind;
  std::string content;
  std::string from;
  std::string to;
  Cost transit = 0;
};

void check_effects(const std::vector<SideEffect>& got, const std::vector<Fx>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(effect_kind_name(got[i].kind) == std::string(effect_kind_name(want[i].kind)));
    CHECK(got[i].content == want[i].content);
    CHECK(got[i].from == want[i].from);
    CHECK(got[i].to == want[i].to);
    CHECK(got[i].transit == want[i].transit);
  }
}

EcdWorld two_station_world(ScenarioParams params, std::vector<std::int64_t> caps,
                           const std::vector<std::string>& seed) {
  const auto g = validate_graph({"M", "N"}, {{0, 4}, {4, 0}});
  const auto d = all_pairs_shortest_paths(g);
  EcdWorld w(d, rank_pools(d), params, std::move(caps));
  w.seed_cloud_contents(seed);
  return w;
}

std::vector<std::string> ids(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("world construction validates ranking and capacities") {
  const auto g = testsupport::five_station_graph();
  const auto d = all_pairs_shortest_paths(g);
  const auto r = rank_pools(d);
  ScenarioParams p;

  CHECK(errc_of([&] { EcdWorld w(d, r, p, {10, 10, 10}); }) == Errc::invalid_argument);
  CHECK(errc_of([&] { EcdWorld w(d, r, p, {10, 10, 10, 10, -1}); }) == Errc::invalid_argument);

  ScenarioParams big = p;
  big.k = 6;
  CHECK(errc_of([&] { EcdWorld w(d, r, big, std::vector<std::int64_t>(5, 10)); }) ==
        Errc::invalid_argument);

  PoolRanking dup = r;
  dup.entries[1].station = dup.entries[0].station;
  CHECK(errc_of([&] { EcdWorld w(d, dup, p, std::vector<std::int64_t>(5, 10)); }) ==
        Errc::invalid_argument);

  PoolRanking shifted = r;
  shifted.entries[0].rank = 9;
  CHECK(errc_of([&] { EcdWorld w(d, shifted, p, std::vector<std::int64_t>(5, 10)); }) ==
        Errc::invalid_argument);
}

TEST_CASE("effective capacity is full for top pools and a floored fraction otherwise") {
  ScenarioParams p;  // k=2, eps_fill=1/3
  auto w = five_station_world(p);
  for (const char* s : {"A", "B", "C", "D", "E"}) CHECK(w.capacity(s) == 10);
  CHECK(w.effective_capacity("B") == 10);
  CHECK(w.effective_capacity("A") == 10);
  CHECK(w.effective_capacity("E") == 3);
  CHECK(w.effective_capacity("C") == 3);
  CHECK(w.effective_capacity("D") == 3);

  ScenarioParams q;
  q.k = 1;
  q.eps_fill = 0.5;
  auto v = two_station_world(q, {9, 9}, {});
  CHECK(v.effective_capacity("M") == 9);
  CHECK(v.effective_capacity("N") == 4);
}

TEST_CASE("initial placement fills pools in rank order") {
  auto w = five_station_world(ScenarioParams{});
  const auto placement = w.initial_placement();
  w.check_invariants();

  CHECK(placement.at("B") == ids("v", 1, 10));
  CHECK(placement.at("A") == ids("v", 11, 20));
  CHECK(placement.at("E") == ids("v", 21, 23));
  CHECK(placement.at("C") == ids("v", 24, 26));
  CHECK(placement.at("D") == ids("v", 27, 29));
  CHECK(w.pool_holds("B", "v1"));
  CHECK(w.pool_holds("D", "v29"));
  CHECK_FALSE(w.pool_holds("B", "v11"));
  CHECK(w.cloud_size() == 29);

  CHECK(errc_of([&] { w.initial_placement(); }) == Errc::state);

  auto late = five_station_world(ScenarioParams{});
  late.handle_request("A", "v1", 0);
  CHECK(errc_of([&] { late.initial_placement(); }) == Errc::state);
}

TEST_CASE("initial placement breaks to the next pool on the first non-fit") {
  ScenarioParams p;
  p.k = 1;
  p.eps_fill = 1.0 / 3.0;
  auto w = two_station_world(p, {3, 3}, {});  // effective M=3, N=1
  w.seed_cloud_contents({"c1", "c2"}, 2);
  w.seed_cloud_contents({"c3", "c4"}, 1);

  const auto placement = w.initial_placement();
  w.check_invariants();
  CHECK(placement.at("M") == std::vector<std::string>{"c1"});
  CHECK(placement.at("N").empty());
  CHECK_FALSE(w.pool_holds("M", "c2"));
  CHECK_FALSE(w.pool_holds("N", "c3"));
}

TEST_CASE("requests are served from the cheapest available tier") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();
  Script s{w};
  prime_counts(s);
  CHECK(effects_of(w.log()).empty());

  // Local pool beats everything.
  auto out = s.req("B", "v1");
  CHECK(out.source == SourceKind::LocalPool);
  CHECK(out.source_station == "B");
  CHECK(out.transit == 0);
  CHECK(out.side_effects.empty());

  // Remote pool serves over the cheapest route; the second local request at
  // C then hits the replica that the first one pulled in.
  out = s.req("C", "v2");
  CHECK(out.source == SourceKind::RemotePool);
  CHECK(out.source_station == "B");
  CHECK(out.transit == 30);
  check_effects(out.side_effects, {{EffectKind::Evict, "v29", "D", "", 0},
                                   {EffectKind::Demote, "v26", "C", "D", 75},
                                   {EffectKind::ReplicaDeliver, "v2", "cloud", "C", 0}});
  out = s.req("C", "v2");
  CHECK(out.source == SourceKind::LocalPool);
  CHECK(out.source_station == "C");

  // Uploads sit in their origin content server until admission.
  auto fx = s.up("D", "u1");
  check_effects(fx, {{EffectKind::UserUpload, "u1", "user", "D", 0},
                     {EffectKind::RegisterDescription, "u1", "D", "B", 0}});
  CHECK(w.description_site("u1") == "B");

  out = s.req("D", "u1");
  CHECK(out.source == SourceKind::ContentServer);
  CHECK(out.source_station == "D");
  CHECK(out.transit == 0);
  CHECK(out.side_effects.empty());  // r=1 not above (1+delta) * 1

  out = s.req("C", "u1");
  CHECK(out.source == SourceKind::ContentServer);
  CHECK(out.source_station == "D");
  CHECK(out.transit == 75);
  check_effects(out.side_effects, {{EffectKind::Evict, "v28", "D", "", 0},
                                   {EffectKind::AdmitCopy, "u1", "D", "D", 0}});
  CHECK(w.pool_holds("D", "u1"));
  CHECK(w.server_holds("D", "u1"));  // origin server keeps its copy
}

TEST_CASE("cloud-only content lands in the lowest pool and then climbs") {
  auto w = five_station_world(ScenarioParams{}, 10, 30);
  w.initial_placement();
  Script s{w};
  prime_counts(s);

  auto out = s.req("A", "v30");
  CHECK(out.source == SourceKind::Cloud);
  CHECK(out.source_station == "");
  CHECK(out.transit == 0);
  check_effects(out.side_effects, {{EffectKind::Evict, "v29", "D", "", 0},
                                   {EffectKind::CloudDeliver, "v30", "cloud", "D", 0}});
  CHECK(w.pool_holds("D", "v30"));

  // The second request clears every hysteresis bar (2 > 1.1 * 1), so the
  // content swaps upward level by level, then replicates to the requester.
  out = s.req("A", "v30");
  CHECK(out.source == SourceKind::RemotePool);
  CHECK(out.source_station == "D");
  CHECK(out.transit == 50);
  check_effects(out.side_effects, {{EffectKind::Demote, "v26", "C", "D", 75},
                                   {EffectKind::Promote, "v30", "D", "C", 75},
                                   {EffectKind::Demote, "v23", "E", "C", 50},
                                   {EffectKind::Promote, "v30", "C", "E", 50},
                                   {EffectKind::Demote, "v20", "A", "E", 15},
                                   {EffectKind::Promote, "v30", "E", "A", 15},
                                   {EffectKind::Demote, "v10", "B", "A", 10},
                                   {EffectKind::Promote, "v30", "A", "B", 10},
                                   {EffectKind::Evict, "v22", "E", "", 0},
                                   {EffectKind::Demote, "v19", "A", "E", 15},
                                   {EffectKind::ReplicaDeliver, "v30", "cloud", "A", 0}});

  auto a = ids("v", 10, 18);
  a.push_back("v30");
  CHECK(w.pool_contents("A") == a);
  // Contents list id-sorted, so v30 lands between v3 and v4.
  auto b = ids("v", 1, 3);
  b.push_back("v30");
  for (const auto& id : ids("v", 4, 9)) b.push_back(id);
  CHECK(w.pool_contents("B") == b);
  CHECK(w.pool_contents("E") == ids("v", 19, 21));
  CHECK(w.pool_contents("C") == ids("v", 23, 25));
  CHECK(w.pool_contents("D") == ids("v", 26, 28));

  out = s.req("A", "v30");
  CHECK(out.source == SourceKind::LocalPool);
}

TEST_CASE("promotion fires only strictly past the threshold") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();
  Script s{w};
  for (int i = 1; i <= 10; ++i) s.pump("B", "v" + std::to_string(i), 300);
  for (int i = 11; i <= 20; ++i) s.pump("A", "v" + std::to_string(i), 200);
  s.pump("E", "v21", 150);
  s.pump("E", "v22", 150);
  s.pump("E", "v23", 100);

  // r(v25) must strictly exceed (1 + 0.1) * 100, so 110 requests change
  // nothing and the 111th swaps it with v23.
  s.pump("C", "v25", 110);
  CHECK(effects_of(w.log()).empty());

  auto out = s.req("C", "v25");
  check_effects(out.side_effects, {{EffectKind::Demote, "v23", "E", "C", 50},
                                   {EffectKind::Promote, "v25", "C", "E", 50}});
  const SideEffect& promote = out.side_effects[1];
  CHECK(promote.r_content == 111);
  CHECK(promote.r_reference == 100);
  CHECK(promote.threshold == (1.0 + 0.1) * 100.0);
  CHECK(out.side_effects[0].r_content == 111);
  CHECK(out.side_effects[0].r_reference == 100);

  CHECK(w.pool_contents("E") == std::vector<std::string>{"v21", "v22", "v25"});
  CHECK(w.pool_contents("C") == std::vector<std::string>{"v23", "v24", "v26"});
}

TEST_CASE("replication pushes copies to stations with a high demand share") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();
  Script s{w};
  prime_counts(s);

  // share(C) = 1/2 > 1/3; pool C overflows, its least-requested member
  // demotes to D, and D sheds its own least-requested member to make room.
  auto out = s.req("C", "v1");
  CHECK(out.source == SourceKind::RemotePool);
  CHECK(out.source_station == "B");
  CHECK(out.transit == 30);
  check_effects(out.side_effects, {{EffectKind::Evict, "v29", "D", "", 0},
                                   {EffectKind::Demote, "v26", "C", "D", 75},
                                   {EffectKind::ReplicaDeliver, "v1", "cloud", "C", 0}});
  const SideEffect& rep = out.side_effects[2];
  CHECK(rep.share == 0.5);
  CHECK(rep.threshold == 1.0 / 3.0);
  CHECK(rep.r_content == 1);
  CHECK(rep.r_reference == 2);

  CHECK(s.req("C", "v1").source == SourceKind::LocalPool);
  CHECK(w.pool_contents("C") == std::vector<std::string>{"v1", "v24", "v25"});
  CHECK(w.pool_contents("D") == std::vector<std::string>{"v26", "v27", "v28"});
}

TEST_CASE("a demand share exactly at the threshold does not replicate") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();
  Script s{w};
  prime_counts(s);

  s.req("B", "v4");               // primary station, never a replica target
  auto out = s.req("C", "v4");    // share(C) = 1/3 exactly
  CHECK(out.side_effects.empty());
  out = s.req("C", "v4");         // share(C) = 1/2
  CHECK(count_kind(out.side_effects, EffectKind::ReplicaDeliver) == 1);
  CHECK(w.pool_holds("C", "v4"));
}

TEST_CASE("the lowest pool discards outright when replication overflows it") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();
  Script s{w};
  prime_counts(s);

  auto out = s.req("D", "v1");  // share(D) = 1/2 > 1/3
  check_effects(out.side_effects, {{EffectKind::Evict, "v29", "D", "", 0},
                                   {EffectKind::ReplicaDeliver, "v1", "cloud", "D", 0}});
  CHECK(w.pool_contents("D") == std::vector<std::string>{"v1", "v27", "v28"});
  CHECK(s.req("D", "v1").source == SourceKind::LocalPool);
}

TEST_CASE("uploads admit, climb, and register exactly one cloud copy") {
  ScenarioParams p;
  p.k = 1;
  p.eps_fill = 1.0;
  p.eps_share = 1.0;  // a share can never strictly exceed 1, so no replicas
  auto w = two_station_world(p, {1, 1}, {});
  CHECK(w.initial_placement().at("M").empty());
  Script s{w};

  auto fx = s.up("N", "u1");
  check_effects(fx, {{EffectKind::UserUpload, "u1", "user", "N", 0},
                     {EffectKind::RegisterDescription, "u1", "N", "M", 0}});
  CHECK(w.description_site("u1") == "M");
  CHECK(w.server_holds("N", "u1"));
  CHECK_FALSE(w.in_cloud("u1"));

  // Empty lowest pool: reference count 0, so the first request admits.
  auto out = s.req("N", "u1");
  CHECK(out.source == SourceKind::ContentServer);
  check_effects(out.side_effects, {{EffectKind::AdmitCopy, "u1", "N", "N", 0}});
  CHECK(out.side_effects[0].r_content == 1);
  CHECK(out.side_effects[0].r_reference == 0);

  // Empty top pool: promotion moves the copy and pushes it to the cloud.
  out = s.req("N", "u1");
  CHECK(out.source == SourceKind::LocalPool);
  check_effects(out.side_effects, {{EffectKind::Promote, "u1", "N", "M", 4},
                                   {EffectKind::CloudUpload, "u1", "M", "cloud"}});
  CHECK(w.in_cloud("u1"));
  CHECK(w.pool_holds("M", "u1"));
  CHECK(w.server_holds("N", "u1"));

  // A second upload repeats the cycle, demoting the first one.
  s.up("N", "u2");
  out = s.req("N", "u2");
  check_effects(out.side_effects, {{EffectKind::AdmitCopy, "u2", "N", "N", 0}});
  CHECK(s.req("N", "u2").side_effects.empty());  // 2 not above 1.1 * 2
  out = s.req("N", "u2");                        // 3 > 1.1 * 2
  check_effects(out.side_effects, {{EffectKind::Demote, "u1", "M", "N", 4},
                                   {EffectKind::Promote, "u2", "N", "M", 4},
                                   {EffectKind::CloudUpload, "u2", "M", "cloud"}});

  // A third upload pushes u1 out of the pools entirely.
  s.up("N", "u3");
  s.req("N", "u3");
  s.req("N", "u3");
  out = s.req("N", "u3");  // 3 > 1.1 * 2 again
  check_effects(out.side_effects, {{EffectKind::Evict, "u1", "N", "", 0},
                                   {EffectKind::AdmitCopy, "u3", "N", "N", 0}});

  // u1 now lives in the cloud and its origin server only. It is served from
  // the server and never re-admitted, because the cloud already has it.
  for (int i = 0; i < 3; ++i) {
    out = s.req("N", "u1");
    CHECK(out.source == SourceKind::ContentServer);
    CHECK(out.source_station == "N");
    CHECK(out.side_effects.empty());
  }
  CHECK_FALSE(w.pool_holds("M", "u1"));
  CHECK_FALSE(w.pool_holds("N", "u1"));
  CHECK(w.in_cloud("u1"));
  CHECK(w.server_holds("N", "u1"));

  const auto all = effects_of(w.log());
  CHECK(count_kind(all, EffectKind::CloudUpload) == 2);  // once per content
  CHECK(w.pool_contents("M") == std::vector<std::string>{"u2"});
  CHECK(w.pool_contents("N") == std::vector<std::string>{"u3"});
  CHECK(w.cloud_size() == 2);
}

TEST_CASE("swapped demotions merge with copies already downstream") {
  ScenarioParams p;
  p.k = 1;
  p.eps_fill = 1.0;
  p.eps_share = 0.4;
  const auto g = validate_graph({"X", "Y"}, {{0, 1}, {1, 0}});
  const auto d = all_pairs_shortest_paths(g);
  EcdWorld w(d, rank_pools(d), p, {1, 2});
  w.seed_cloud_contents({"c1", "c2"});
  w.initial_placement();
  Script s{w};

  auto out = s.req("Y", "c1");
  check_effects(out.side_effects, {{EffectKind::ReplicaDeliver, "c1", "cloud", "Y", 0}});

  CHECK(s.req("Y", "c2").side_effects.empty());
  out = s.req("Y", "c2");  // 2 > 1.1 * 1 promotes c2; c1 falls onto its own
  check_effects(out.side_effects, {{EffectKind::Demote, "c1", "X", "Y", 0},
                                   {EffectKind::Promote, "c2", "Y", "X", 1},
                                   {EffectKind::ReplicaDeliver, "c2", "cloud", "Y", 0}});
  CHECK(w.pool_contents("X") == std::vector<std::string>{"c2"});
  CHECK(w.pool_contents("Y") == std::vector<std::string>{"c1", "c2"});

  // The merged copy became Y's primary, so it can be promoted back.
  CHECK(s.req("Y", "c1").side_effects.empty());
  out = s.req("Y", "c1");  // 3 > 1.1 * 2
  check_effects(out.side_effects, {{EffectKind::Demote, "c2", "X", "Y", 0},
                                   {EffectKind::Promote, "c1", "Y", "X", 1},
                                   {EffectKind::ReplicaDeliver, "c1", "cloud", "Y", 0}});
  CHECK(w.pool_contents("X") == std::vector<std::string>{"c1"});
  CHECK(w.pool_contents("Y") == std::vector<std::string>{"c1", "c2"});
}

TEST_CASE("promotion into a pool holding a replica upgrades it in place") {
  ScenarioParams p;
  p.k = 2;
  p.eps_fill = 1.0;
  p.eps_share = 0.4;
  const auto g = validate_graph({"X", "Y", "Z"}, {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const auto d = all_pairs_shortest_paths(g);
  EcdWorld w(d, rank_pools(d), p, {2, 2, 2});
  w.seed_cloud_contents({"c1", "c2", "c3", "c4", "c5", "c6"});
  const auto placement = w.initial_placement();
  CHECK(placement.at("X") == std::vector<std::string>{"c1", "c2"});
  CHECK(placement.at("Y") == std::vector<std::string>{"c3", "c4"});
  CHECK(placement.at("Z") == std::vector<std::string>{"c5", "c6"});
  Script s{w};
  s.pump("X", "c1", 3);
  s.pump("X", "c2", 3);
  CHECK(effects_of(w.log()).empty());

  CHECK(s.req("Y", "c3").side_effects.empty());
  auto out = s.req("X", "c3");  // share(X) = 1/2 > 0.4 while counts stay low
  CHECK(out.source == SourceKind::RemotePool);
  check_effects(out.side_effects, {{EffectKind::Evict, "c4", "Y", "", 0},
                                   {EffectKind::Demote, "c2", "X", "Y", 1},
                                   {EffectKind::ReplicaDeliver, "c3", "cloud", "X", 0}});
  CHECK(w.pool_contents("X") == std::vector<std::string>{"c1", "c3"});
  CHECK(w.pool_contents("Y") == std::vector<std::string>{"c2", "c3"});

  CHECK(s.req("Y", "c3").side_effects.empty());
  out = s.req("Y", "c3");  // 4 > 1.1 * 3: the X replica absorbs the promotion
  CHECK(out.source == SourceKind::LocalPool);
  check_effects(out.side_effects, {{EffectKind::Promote, "c3", "Y", "X", 0},
                                   {EffectKind::ReplicaDeliver, "c3", "cloud", "Y", 0}});
  CHECK(w.pool_contents("X") == std::vector<std::string>{"c1", "c3"});
  CHECK(w.pool_contents("Y") == std::vector<std::string>{"c2", "c3"});
  CHECK(s.req("X", "c3").source == SourceKind::LocalPool);
}

TEST_CASE("a priority window restricts the counts migrations compare") {
  ScenarioParams p;
  p.k = 1;
  p.eps_fill = 1.0;
  p.eps_share = 1.0;
  p.priority_window = TimeWindow{0, 10};
  auto w = two_station_world(p, {1, 1}, {"c1", "c2"});
  w.initial_placement();

  for (EventTime t : {0, 1, 2}) w.handle_request("M", "c1", t);
  for (EventTime t : {20, 21, 22, 23}) {
    CHECK(w.handle_request("N", "c2", t).side_effects.empty());
    w.check_invariants();
  }
  CHECK(effects_of(w.log()).empty());  // windowed count of c2 stays 0

  ScenarioParams q = p;
  q.priority_window.reset();
  auto v = two_station_world(q, {1, 1}, {"c1", "c2"});
  v.initial_placement();
  for (EventTime t : {0, 1, 2}) v.handle_request("M", "c1", t);
  for (EventTime t : {20, 21, 22}) CHECK(v.handle_request("N", "c2", t).side_effects.empty());
  auto out = v.handle_request("N", "c2", 23);  // 4 > 1.1 * 3 without a window
  check_effects(out.side_effects, {{EffectKind::Demote, "c1", "M", "N", 4},
                                   {EffectKind::Promote, "c2", "N", "M", 4}});
}

TEST_CASE("zero-capacity pools never hold content") {
  ScenarioParams p;
  p.k = 1;
  p.eps_fill = 1.0;
  auto w = two_station_world(p, {0, 0}, {"c1"});
  CHECK(w.initial_placement().at("M").empty());
  Script s{w};

  for (int i = 0; i < 3; ++i) {
    auto out = s.req("M", "c1");
    CHECK(out.source == SourceKind::Cloud);
    CHECK(out.side_effects.empty());
  }
  s.up("M", "u1");
  auto out = s.req("N", "u1");
  CHECK(out.source == SourceKind::ContentServer);
  CHECK(out.transit == 4);
  CHECK(out.side_effects.empty());
  CHECK(w.pool_contents("M").empty());
  CHECK(w.pool_contents("N").empty());
}

TEST_CASE("update hooks are no-ops when their preconditions fail") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();

  CHECK(w.promote_if_eligible("v1").empty());   // already at rank 1
  CHECK(w.replicate_if_popular("v2").empty());  // no requests yet
  CHECK(w.handle_cloud_miss("v3").empty());     // already pooled
  CHECK(w.admit_uploaded("v4").empty());        // cloud content, no server copy
  CHECK(w.log().empty());
  CHECK(errc_of([&] { w.promote_if_eligible("zz"); }) == Errc::invalid_argument);
}

TEST_CASE("request bookkeeping rejects bad input") {
  auto w = five_station_world(ScenarioParams{});
  w.initial_placement();

  CHECK(errc_of([&] { w.handle_request("ghost", "v1", 0); }) == Errc::invalid_argument);
  CHECK(errc_of([&] { w.handle_request("A", "nope", 0); }) == Errc::invalid_argument);
  w.handle_request("A", "v1", 5);
  CHECK(errc_of([&] { w.handle_request("A", "v1", 3); }) == Errc::invalid_argument);
  CHECK(errc_of([&] { w.handle_upload("A", "v1", 6); }) == Errc::invalid_argument);
  CHECK(errc_of([&] { w.handle_upload("ghost", "u1", 6); }) == Errc::invalid_argument);
  CHECK_FALSE(w.description_site("v1").has_value());
}
