#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "procmap/default_catalog.hpp"
#include "procmap/discovery.hpp"
#include "procmap/dot.hpp"
#include "procmap/error.hpp"
#include "procmap/io.hpp"
#include "procmap/log_builder.hpp"
#include "procmap/statistics.hpp"
#include "procmap/stats_json.hpp"

// Command implementations behind the procmap executable. Each returns a process
// exit status; diagnostics go to `err`, human-readable summaries to `out`, and
// data only to the declared output paths.
namespace procmap::cmd {

enum ExitCode : int { kOk = 0, kUsage = 1, kSchema = 2, kIo = 3 };

inline constexpr std::string_view kDefaultBinWidth = "1w";

// "<integer>[s|m|h|d|w]", seconds when the unit is omitted. Zero and negative
// widths are rejected.
inline std::optional<Duration> parse_bin_width(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() || value <= 0) return std::nullopt;
  const std::string_view unit(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr));
  std::int64_t scale = 1;
  if (unit.empty() || unit == "s") scale = 1;
  else if (unit == "m") scale = 60;
  else if (unit == "h") scale = 3600;
  else if (unit == "d") scale = 86400;
  else if (unit == "w") scale = 604800;
  else return std::nullopt;
  return Duration{value * scale * kTicksPerSecond};
}

inline void write_output(const std::string& path, std::string_view data) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

// Runs body, mapping library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kSchema;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kSchema;
  }
}

struct BuildLogOptions {
  std::string messages_path;
  std::string catalog_path;
  std::string synonyms_path;  // optional
  std::string phase;
  std::string out_path;
};

inline int build_log(const BuildLogOptions& opt, std::ostream& out, std::ostream& err) {
  const auto phase = parse_phase(opt.phase);
  if (!phase) {
    err << "error: unknown phase '" << opt.phase
        << "' (expected Initiation, Progression or Maturation)\n";
    return kUsage;
  }
  return guarded(err, [&] {
    const Catalog catalog =
        read_catalog_files(opt.catalog_path, opt.synonyms_path).for_phase(*phase);
    const MessageParse parsed = parse_messages_file(opt.messages_path);
    BuildCounters counters;
    const EventLog log = construct_log(parsed.records, catalog, FallbackPolicy{}, &counters);
    write_output(opt.out_path, write_event_log(log));
    out << "messages read: " << parsed.records.size() << ", skipped: " << parsed.skipped
        << ", events emitted: " << counters.events
        << ", fallback events: " << counters.fallback_events << '\n';
    return int{kOk};
  });
}

struct DiscoverOptions {
  std::string log_path;
  std::optional<std::string> role;
  std::optional<std::size_t> min_edge_cases;
  std::optional<std::size_t> min_node_events;
  std::string view = "frequency";
  std::string out_path;
};

inline int discover(const DiscoverOptions& opt, std::ostream& out, std::ostream& err) {
  const auto view = parse_metric_view(opt.view);
  if (!view) {
    err << "error: unknown view '" << opt.view << "' (expected frequency or performance)\n";
    return kUsage;
  }
  if ((opt.min_edge_cases && *opt.min_edge_cases == 0) ||
      (opt.min_node_events && *opt.min_node_events == 0)) {
    err << "error: prune thresholds must be at least 1\n";
    return kUsage;
  }
  return guarded(err, [&] {
    EventLog log = read_event_log_file(opt.log_path);
    if (opt.role) {
      const auto counts = count_role_events(log);
      if (!counts.contains(*opt.role)) {
        err << "error: role '" << *opt.role << "' not present in log; available roles:";
        for (const auto& [role, n] : counts) err << ' ' << role;
        err << '\n';
        return int{kUsage};
      }
      FilterSpec spec;
      spec.roles = std::set<std::string>{*opt.role};
      log = filter_log(log, spec);
    }
    ProcessMap map = discover_map(log);
    if (opt.min_edge_cases || opt.min_node_events) {
      map = prune_map(map, PruneSpec{opt.min_edge_cases, opt.min_node_events});
    }
    write_output(opt.out_path, export_dot(map, *view));
    out << "nodes: " << map.nodes.size() << ", edges: " << map.edges.size()
        << ", cases: " << map.case_count << '\n';
    return int{kOk};
  });
}

struct StatsOptions {
  std::string log_path;
  std::string bin_width = std::string(kDefaultBinWidth);
  std::string out_path;
};

inline void print_stats_table(std::ostream& out, const LogStatistics& stats,
                              const RoleBreakdown& breakdown, const EventLog& log) {
  auto opt_time = [](const std::optional<Instant>& i) {
    return i ? format_timestamp(*i) : std::string("-");
  };
  auto opt_dur = [](const std::optional<double>& s) {
    return s ? humanize_seconds(*s) : std::string("-");
  };
  out << "events        " << stats.event_count << '\n'
      << "cases         " << stats.case_count << '\n'
      << "activities    " << stats.activity_count << '\n'
      << "participants  " << stats.participant_count << '\n'
      << "first event   " << opt_time(stats.first_timestamp) << '\n'
      << "last event    " << opt_time(stats.last_timestamp) << '\n'
      << "mean case     " << opt_dur(stats.mean_case_duration) << '\n'
      << "median case   " << opt_dur(stats.median_case_duration) << '\n';
  if (!log.empty()) {
    const auto exec = mean_executions_per_activity(log);
    out << "mean executions per activity " << exec.mean.to_string() << " (most executed: "
        << exec.most_executed_activity << ", " << exec.most_executed_count << ")\n";
  }
  out << "role breakdown\n";
  for (const auto& share : breakdown.roles) {
    out << "  " << std::left << std::setw(12) << share.role << std::right << std::setw(10)
        << share.events << "  " << std::setw(6) << share.percentage.to_string() << "%\n";
  }
  const auto starts = start_activity_attribution(log);
  if (!starts.empty()) {
    out << "start activities\n";
    for (const auto& [activity, n] : starts) out << "  " << activity << ": " << n << '\n';
  }
}

inline int stats(const StatsOptions& opt, std::ostream& out, std::ostream& err) {
  const auto width = parse_bin_width(opt.bin_width);
  if (!width) {
    err << "error: invalid bin width '" << opt.bin_width
        << "' (positive integer with optional unit s, m, h, d or w)\n";
    return kUsage;
  }
  return guarded(err, [&] {
    const EventLog log = read_event_log_file(opt.log_path);
    const LogStatistics summary = summarize_log(log);
    const RoleBreakdown breakdown = role_breakdown(log);
    const TimelineSeries series = timeline(log, *width);
    write_output(opt.out_path, export_stats_json(summary, breakdown, series));
    print_stats_table(out, summary, breakdown, log);
    return int{kOk};
  });
}

struct SeedCatalogOptions {
  std::string out_path;
  std::string synonyms_out_path;  // optional
};

inline int seed_catalog(const SeedCatalogOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Catalog catalog = default_catalog();
    std::ostringstream rules;
    write_catalog(rules, catalog);
    write_output(opt.out_path, rules.str());
    if (!opt.synonyms_out_path.empty()) {
      std::ostringstream syn;
      write_synonyms(syn, catalog.synonyms());
      write_output(opt.synonyms_out_path, syn.str());
    }
    out << "catalog rules written: " << catalog.size() << '\n';
    return int{kOk};
  });
}

}  // namespace procmap::cmd
