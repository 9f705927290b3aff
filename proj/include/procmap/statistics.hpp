#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "procmap/model.hpp"

namespace procmap {

// Decimal with exactly two fractional digits, stored as an integer count of hundredths.
struct Fixed2 {
  std::int64_t hundredths = 0;

  // numerator / denominator rounded half-up to two decimals (non-negative inputs).
  static Fixed2 ratio(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("Fixed2::ratio: zero denominator");
    const auto num = static_cast<unsigned __int128>(numerator) * 200u + denominator;
    return Fixed2{static_cast<std::int64_t>(num / (static_cast<unsigned __int128>(denominator) * 2u))};
  }

  double value() const { return static_cast<double>(hundredths) / 100.0; }

  std::string to_string() const {
    const std::int64_t whole = hundredths / 100;
    const std::int64_t frac = hundredths % 100;
    return std::to_string(whole) + (frac < 10 ? ".0" : ".") + std::to_string(frac);
  }

  friend auto operator<=>(const Fixed2&, const Fixed2&) = default;
};

struct LogStatistics {
  std::size_t event_count = 0;
  std::size_t case_count = 0;
  std::size_t activity_count = 0;
  std::size_t participant_count = 0;
  std::optional<Instant> first_timestamp;
  std::optional<Instant> last_timestamp;
  std::optional<double> mean_case_duration;    // seconds
  std::optional<double> median_case_duration;  // seconds
};

struct RoleShare {
  std::string role;
  std::size_t events = 0;
  Fixed2 percentage;
};

// Ordered by event count (descending), then role name.
struct RoleBreakdown {
  std::vector<RoleShare> roles;
};

struct TimelineBin {
  Instant start;
  std::size_t count = 0;
};

struct TimelineSeries {
  Duration bin_width{};
  std::vector<TimelineBin> bins;
};

struct ExecutionSummary {
  Fixed2 mean;
  std::string most_executed_activity;
  std::size_t most_executed_count = 0;
};

// Median of a list of durations; even-sized lists average the two middle values.
inline double median_seconds(std::vector<Duration> values) {
  if (values.empty()) throw std::invalid_argument("median of empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return to_seconds(values[mid]);
  return (to_seconds(values[mid - 1]) + to_seconds(values[mid])) / 2.0;
}

inline LogStatistics summarize_log(const EventLog& log) {
  LogStatistics stats;
  stats.event_count = log.size();
  if (log.empty()) return stats;

  std::set<std::string> activities;
  std::set<std::string> participants;
  Instant first = log.events().front().timestamp;
  Instant last = first;
  for (const Event& e : log.events()) {
    activities.insert(e.activity);
    participants.insert(e.participant);
    first = std::min(first, e.timestamp);
    last = std::max(last, e.timestamp);
  }
  stats.activity_count = activities.size();
  stats.participant_count = participants.size();
  stats.first_timestamp = first;
  stats.last_timestamp = last;

  std::vector<Duration> durations;
  Duration total{};
  for (const Trace& t : group_into_traces(log)) {
    durations.push_back(case_duration(t));
    total += durations.back();
  }
  stats.case_count = durations.size();
  stats.mean_case_duration = to_seconds(total) / static_cast<double>(durations.size());
  stats.median_case_duration = median_seconds(std::move(durations));
  return stats;
}

inline RoleBreakdown role_breakdown(const std::map<std::string, std::size_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [role, n] : counts) total += n;
  RoleBreakdown out;
  if (total == 0) return out;
  for (const auto& [role, n] : counts) {
    out.roles.push_back({role, n, Fixed2::ratio(std::uint64_t{100} * n, total)});
  }
  std::stable_sort(out.roles.begin(), out.roles.end(),
                   [](const RoleShare& a, const RoleShare& b) { return a.events > b.events; });
  return out;
}

inline RoleBreakdown role_breakdown(const EventLog& log) {
  std::map<std::string, std::size_t> counts;
  for (const Event& e : log.events()) ++counts[e.role];
  return role_breakdown(counts);
}

inline Fixed2 mean_executions(std::size_t event_count, std::size_t activity_count) {
  if (activity_count == 0) throw std::invalid_argument("mean executions over zero activities");
  return Fixed2::ratio(event_count, activity_count);
}

// Events per distinct activity, plus the most executed activity (ties go to the
// alphabetically first).
inline ExecutionSummary mean_executions_per_activity(const EventLog& log) {
  if (log.empty()) throw std::invalid_argument("mean executions of an empty log");
  std::map<std::string, std::size_t> counts;
  for (const Event& e : log.events()) ++counts[e.activity];
  ExecutionSummary out;
  out.mean = mean_executions(log.size(), counts.size());
  for (const auto& [activity, n] : counts) {
    if (n > out.most_executed_count) {
      out.most_executed_activity = activity;
      out.most_executed_count = n;
    }
  }
  return out;
}

inline std::map<std::string, std::size_t> start_activity_attribution(const EventLog& log) {
  std::map<std::string, std::size_t> out;
  for (const Trace& t : group_into_traces(log)) ++out[t.events.front().activity];
  return out;
}

// Event counts per bin of the given width, bins anchored at the earliest event.
// Empty bins between the first and last event are kept.
inline TimelineSeries timeline(const EventLog& log, Duration bin_width) {
  if (bin_width <= Duration::zero()) throw std::invalid_argument("timeline bin width must be positive");
  TimelineSeries series;
  series.bin_width = bin_width;
  if (log.empty()) return series;

  const auto [lo, hi] = std::minmax_element(
      log.events().begin(), log.events().end(),
      [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  const Instant first = lo->timestamp;
  const auto bin_count = static_cast<std::size_t>((hi->timestamp - first) / bin_width) + 1;
  series.bins.resize(bin_count);
  for (std::size_t i = 0; i < bin_count; ++i) {
    series.bins[i].start = first + bin_width * static_cast<std::int64_t>(i);
  }
  for (const Event& e : log.events()) {
    ++series.bins[static_cast<std::size_t>((e.timestamp - first) / bin_width)].count;
  }
  return series;
}

}  // namespace procmap
