#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "procmap/statistics.hpp"
#include "procmap/timestamp.hpp"

namespace procmap {

// One JSON document with a fixed key order. Durations appear in seconds and in
// humanized form; percentages as numbers and as two-decimal text.
inline nlohmann::ordered_json stats_to_json(const LogStatistics& stats, const RoleBreakdown& breakdown,
                                            const TimelineSeries& series) {
  using nlohmann::ordered_json;
  auto instant = [](const std::optional<Instant>& i) {
    return i ? ordered_json(format_timestamp(*i)) : ordered_json(nullptr);
  };
  auto seconds = [](const std::optional<double>& s) {
    return s ? ordered_json(*s) : ordered_json(nullptr);
  };
  auto human = [](const std::optional<double>& s) {
    return s ? ordered_json(humanize_seconds(*s)) : ordered_json(nullptr);
  };

  ordered_json doc;
  doc["event_count"] = stats.event_count;
  doc["case_count"] = stats.case_count;
  doc["activity_count"] = stats.activity_count;
  doc["participant_count"] = stats.participant_count;
  doc["first_timestamp"] = instant(stats.first_timestamp);
  doc["last_timestamp"] = instant(stats.last_timestamp);
  doc["case_duration"] = {
      {"mean_seconds", seconds(stats.mean_case_duration)},
      {"mean", human(stats.mean_case_duration)},
      {"median_seconds", seconds(stats.median_case_duration)},
      {"median", human(stats.median_case_duration)},
  };
  ordered_json roles = ordered_json::array();
  for (const auto& share : breakdown.roles) {
    roles.push_back({{"role", share.role},
                     {"events", share.events},
                     {"percentage", share.percentage.value()},
                     {"percentage_text", share.percentage.to_string()}});
  }
  doc["roles"] = std::move(roles);
  ordered_json bins = ordered_json::array();
  for (const auto& bin : series.bins) {
    bins.push_back({{"start", format_timestamp(bin.start)}, {"count", bin.count}});
  }
  doc["timeline"] = {{"bin_width_seconds", to_seconds(series.bin_width)}, {"bins", std::move(bins)}};
  return doc;
}

inline std::string export_stats_json(const LogStatistics& stats, const RoleBreakdown& breakdown,
                                     const TimelineSeries& series) {
  return stats_to_json(stats, breakdown, series).dump(2) + "\n";
}

}  // namespace procmap
