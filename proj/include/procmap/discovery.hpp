#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "procmap/model.hpp"

namespace procmap {

// Frequency and performance metrics for one activity or one directly-follows edge.
// Events are points in time, so node durations stay zero and all delays live on edges.
struct MetricBundle {
  std::size_t absolute_frequency = 0;
  std::size_t case_frequency = 0;
  std::size_t max_repetitions = 0;
  Duration total_duration{};
  Duration max_duration{};

  // Seconds; zero when nothing was observed.
  double mean_duration() const {
    return absolute_frequency == 0
               ? 0.0
               : static_cast<double>(total_duration.count()) /
                     static_cast<double>(absolute_frequency) / static_cast<double>(kTicksPerSecond);
  }
  double total_seconds() const { return to_seconds(total_duration); }
  double max_seconds() const { return to_seconds(max_duration); }

  friend bool operator==(const MetricBundle&, const MetricBundle&) = default;
};

using EdgeKey = std::pair<std::string, std::string>;

struct ProcessMap {
  std::map<std::string, MetricBundle> nodes;
  std::map<EdgeKey, MetricBundle> edges;
  std::map<std::string, std::size_t> start_counts;
  std::map<std::string, std::size_t> end_counts;
  std::size_t case_count = 0;
  // Set by prune_map; conservation identities no longer hold once set.
  bool pruned = false;

  friend bool operator==(const ProcessMap&, const ProcessMap&) = default;
};

struct PruneSpec {
  std::optional<std::size_t> min_edge_case_frequency;
  std::optional<std::size_t> min_node_absolute_frequency;
};

namespace detail {

template <class Key>
void fold_case(std::map<Key, MetricBundle>& into, const std::map<Key, std::size_t>& counts) {
  for (const auto& [key, n] : counts) {
    MetricBundle& m = into[key];
    m.case_frequency += 1;
    m.max_repetitions = std::max(m.max_repetitions, n);
  }
}

}  // namespace detail

// Directly-follows graph over the traces of the log.
inline ProcessMap discover_map(const EventLog& log) {
  ProcessMap map;
  for (const Trace& trace : group_into_traces(log)) {
    const auto& ev = trace.events;
    ++map.case_count;
    ++map.start_counts[ev.front().activity];
    ++map.end_counts[ev.back().activity];

    std::map<std::string, std::size_t> node_counts;
    std::map<EdgeKey, std::size_t> edge_counts;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      ++map.nodes[ev[i].activity].absolute_frequency;
      ++node_counts[ev[i].activity];
      if (i == 0) continue;
      EdgeKey key{ev[i - 1].activity, ev[i].activity};
      const Duration gap = ev[i].timestamp - ev[i - 1].timestamp;
      MetricBundle& edge = map.edges[key];
      ++edge.absolute_frequency;
      edge.total_duration += gap;
      edge.max_duration = std::max(edge.max_duration, gap);
      ++edge_counts[key];
    }
    detail::fold_case(map.nodes, node_counts);
    detail::fold_case(map.edges, edge_counts);
  }
  return map;
}

// Drops nodes and edges below the thresholds, and edges that lost an endpoint.
// Surviving metrics are left untouched.
inline ProcessMap prune_map(const ProcessMap& map, const PruneSpec& spec) {
  if ((spec.min_edge_case_frequency && *spec.min_edge_case_frequency == 0) ||
      (spec.min_node_absolute_frequency && *spec.min_node_absolute_frequency == 0)) {
    throw std::invalid_argument("prune thresholds must be at least 1");
  }
  ProcessMap out;
  out.case_count = map.case_count;
  out.pruned = true;
  for (const auto& [activity, m] : map.nodes) {
    if (!spec.min_node_absolute_frequency || m.absolute_frequency >= *spec.min_node_absolute_frequency) {
      out.nodes.emplace(activity, m);
    }
  }
  for (const auto& [key, m] : map.edges) {
    if (spec.min_edge_case_frequency && m.case_frequency < *spec.min_edge_case_frequency) continue;
    if (!out.nodes.contains(key.first) || !out.nodes.contains(key.second)) continue;
    out.edges.emplace(key, m);
  }
  for (const auto& [activity, n] : map.start_counts) {
    if (out.nodes.contains(activity)) out.start_counts.emplace(activity, n);
  }
  for (const auto& [activity, n] : map.end_counts) {
    if (out.nodes.contains(activity)) out.end_counts.emplace(activity, n);
  }
  return out;
}

inline std::map<std::string, ProcessMap> per_role_maps(const EventLog& log) {
  std::set<std::string> roles;
  for (const Event& e : log.events()) roles.insert(e.role);
  std::map<std::string, ProcessMap> maps;
  for (const auto& role : roles) {
    FilterSpec spec;
    spec.roles = std::set<std::string>{role};
    maps.emplace(role, discover_map(filter_log(log, spec)));
  }
  return maps;
}

}  // namespace procmap
