#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "procmap/discovery.hpp"

using namespace procmap;
using std::chrono::seconds;

namespace {

const Instant kBase = make_instant(2010, 7, 28);

Event ev(const char* c, const char* a, int s, const char* role = "Novice") {
  return {c, a, "p", kBase + seconds{s}, "Observation", role};
}

EventLog two_case_log() {
  return EventLog({ev("1", "A", 0), ev("1", "B", 10), ev("1", "C", 20), ev("2", "A", 0),
                   ev("2", "B", 5), ev("2", "B", 15)});
}

MetricBundle bundle(std::size_t abs, std::size_t cases, std::size_t rep, int total_s = 0,
                    int max_s = 0) {
  return {abs, cases, rep, seconds{total_s}, seconds{max_s}};
}

void expect_conservation(const EventLog& log, const ProcessMap& map) {
  std::size_t edge_abs = 0, starts = 0, ends = 0;
  for (const auto& [k, m] : map.edges) {
    edge_abs += m.absolute_frequency;
    EXPECT_TRUE(map.nodes.contains(k.first) && map.nodes.contains(k.second));
    EXPECT_LE(m.case_frequency, std::min(map.nodes.at(k.first).case_frequency,
                                         map.nodes.at(k.second).case_frequency));
  }
  for (const auto& [a, n] : map.start_counts) starts += n;
  for (const auto& [a, n] : map.end_counts) ends += n;
  EXPECT_EQ(edge_abs, log.size() - map.case_count);
  EXPECT_EQ(starts, map.case_count);
  EXPECT_EQ(ends, map.case_count);
  for (const auto& [a, m] : map.nodes) EXPECT_LE(m.case_frequency, map.case_count);
}

}  // namespace

TEST(DiscoverMap, EmptyLog) {
  const auto map = discover_map(EventLog{});
  EXPECT_TRUE(map.nodes.empty());
  EXPECT_TRUE(map.edges.empty());
  EXPECT_EQ(map.case_count, 0u);
}

TEST(DiscoverMap, TwoCaseExample) {
  const EventLog log = two_case_log();
  const auto map = discover_map(log);
  EXPECT_EQ(map, oracle::naive_dfg(log.events()));

  EXPECT_EQ(map.nodes.at("A"), bundle(2, 2, 1));
  EXPECT_EQ(map.nodes.at("B"), bundle(3, 2, 2));
  EXPECT_EQ(map.nodes.at("C"), bundle(1, 1, 1));
  ASSERT_EQ(map.edges.size(), 3u);
  EXPECT_EQ(map.edges.at({"A", "B"}), bundle(2, 2, 1, 15, 10));
  EXPECT_DOUBLE_EQ(map.edges.at({"A", "B"}).mean_duration(), 7.5);
  EXPECT_EQ(map.edges.at({"B", "B"}), bundle(1, 1, 1, 10, 10));
  EXPECT_EQ(map.edges.at({"B", "C"}), bundle(1, 1, 1, 10, 10));
  EXPECT_EQ(map.start_counts, (std::map<std::string, std::size_t>{{"A", 2}}));
  EXPECT_EQ(map.end_counts, (std::map<std::string, std::size_t>{{"B", 1}, {"C", 1}}));
  EXPECT_EQ(map.case_count, 2u);
  expect_conservation(log, map);
}

TEST(DiscoverMap, TiedTimestampsGiveZeroGaps) {
  const EventLog log({ev("1", "A", 5), ev("1", "B", 5), ev("1", "C", 5)});
  const auto map = discover_map(log);
  EXPECT_EQ(map.edges.at({"A", "B"}), bundle(1, 1, 1, 0, 0));
  EXPECT_EQ(map.edges.at({"B", "C"}), bundle(1, 1, 1, 0, 0));
}

TEST(DiscoverMap, MatchesNaiveOracleOnRandomLogs) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 300; ++round) {
    const EventLog log(oracle::random_events(rng));
    const auto map = discover_map(log);
    ASSERT_EQ(map, oracle::naive_dfg(log.events()));
    expect_conservation(log, map);
    for (const auto& [k, m] : map.edges) {
      EXPECT_LE(m.max_duration, m.total_duration);
      if (m.case_frequency > 0) {
        EXPECT_GE(m.max_repetitions,
                  (m.absolute_frequency + m.case_frequency - 1) / m.case_frequency);
      }
    }
  }
}

TEST(PruneMap, NoThresholdsKeepsEverything) {
  const auto map = discover_map(two_case_log());
  auto pruned = prune_map(map, PruneSpec{});
  EXPECT_TRUE(pruned.pruned);
  pruned.pruned = false;
  EXPECT_EQ(pruned, map);
}

TEST(PruneMap, EdgeCaseThreshold) {
  const auto pruned = prune_map(discover_map(two_case_log()), PruneSpec{2, std::nullopt});
  ASSERT_EQ(pruned.edges.size(), 1u);
  EXPECT_TRUE(pruned.edges.contains({"A", "B"}));
  EXPECT_EQ(pruned.nodes.size(), 3u);
}

TEST(PruneMap, NodeThresholdDropsDanglingEdges) {
  const auto pruned = prune_map(discover_map(two_case_log()), PruneSpec{std::nullopt, 3});
  ASSERT_EQ(pruned.nodes.size(), 1u);
  EXPECT_TRUE(pruned.nodes.contains("B"));
  // the B->B self-loop keeps both endpoints, so it stays
  ASSERT_EQ(pruned.edges.size(), 1u);
  EXPECT_TRUE(pruned.edges.contains({"B", "B"}));
  EXPECT_EQ(pruned.nodes.at("B"), bundle(3, 2, 2));
}

TEST(PruneMap, RejectsZeroThreshold) {
  EXPECT_THROW(prune_map(ProcessMap{}, PruneSpec{0, std::nullopt}), std::invalid_argument);
}

TEST(PerRoleMaps, SingleRole) {
  const auto maps = per_role_maps(two_case_log());
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_TRUE(maps.contains("Novice"));
}

TEST(PerRoleMaps, TwoRolesEachConserve) {
  const EventLog log({ev("1", "A", 0), ev("1", "X", 1, "Expert"), ev("1", "B", 2),
                      ev("2", "Y", 0, "Expert"), ev("2", "A", 3), ev("2", "X", 4, "Expert")});
  const auto maps = per_role_maps(log);
  ASSERT_EQ(maps.size(), 2u);
  for (const auto& [role, map] : maps) {
    std::vector<Event> subset;
    for (const auto& e : log.events()) {
      if (e.role == role) subset.push_back(e);
    }
    EXPECT_EQ(map, oracle::naive_dfg(subset)) << role;
    expect_conservation(EventLog(subset), map);
  }
}

TEST(PerRoleMaps, FallbackOnlyLog) {
  const EventLog log({{"1", "Participate in Discussions", "p", kBase, "Participation", "Inactive"},
                      {"2", "Participate in Discussions", "q", kBase, "Participation", "Inactive"}});
  const auto maps = per_role_maps(log);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps.at("Inactive").nodes.size(), 1u);
}

TEST(DiscoverMap, ShiftInvariantAndScaleCovariant) {
  std::mt19937_64 rng(31);
  const Duration year = std::chrono::hours{24 * 365};
  for (int round = 0; round < 200; ++round) {
    const auto events = oracle::random_events(rng);
    const Instant anchor = make_instant(2010, 1, 1);
    std::vector<Event> shifted = events, scaled = events;
    for (auto& e : shifted) e.timestamp = e.timestamp + year;
    for (auto& e : scaled) e.timestamp = anchor + (e.timestamp - anchor) * 2;
    const auto base = discover_map(EventLog(events));
    EXPECT_EQ(discover_map(EventLog(shifted)), base);
    const auto doubled = discover_map(EventLog(scaled));
    ASSERT_EQ(doubled.edges.size(), base.edges.size());
    for (const auto& [k, m] : base.edges) {
      const auto& d = doubled.edges.at(k);
      EXPECT_EQ(d.absolute_frequency, m.absolute_frequency);
      EXPECT_EQ(d.case_frequency, m.case_frequency);
      EXPECT_EQ(d.max_repetitions, m.max_repetitions);
      EXPECT_EQ(d.total_duration, m.total_duration * 2);
      EXPECT_EQ(d.max_duration, m.max_duration * 2);
      EXPECT_EQ(d.mean_duration(), m.mean_duration() * 2);
    }
    EXPECT_EQ(doubled.nodes, base.nodes);
  }
}
