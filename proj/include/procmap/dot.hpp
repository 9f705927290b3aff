#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "procmap/discovery.hpp"
#include "procmap/timestamp.hpp"

namespace procmap {

enum class MetricView { Frequency, Performance };

inline std::optional<MetricView> parse_metric_view(std::string_view text) {
  if (text == "frequency") return MetricView::Frequency;
  if (text == "performance") return MetricView::Performance;
  return std::nullopt;
}

namespace detail {

inline std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n':
      case '\r': out += ' '; break;
      default: out += c;
    }
  }
  return out + "\"";
}

inline std::string fixed2(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, end);
}

inline double displayed(const MetricBundle& m, MetricView view) {
  return view == MetricView::Frequency ? static_cast<double>(m.absolute_frequency)
                                       : m.mean_duration();
}

inline std::string display_text(const MetricBundle& m, MetricView view) {
  return view == MetricView::Frequency ? std::to_string(m.absolute_frequency)
                                       : humanize_seconds(m.mean_duration());
}

}  // namespace detail

// Graphviz rendering of a process map. Frequency view labels nodes and edges with
// absolute frequency; performance view with mean duration. Edge pen width scales
// linearly from 1 to 5 with the displayed value.
inline std::string export_dot(const ProcessMap& map, MetricView view = MetricView::Frequency) {
  std::map<std::string, std::string> ids;
  for (const auto& [activity, m] : map.nodes) ids.emplace(activity, "n" + std::to_string(ids.size()));

  std::ostringstream out;
  out << "digraph process_map {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, style=rounded];\n";
  out << "  \"__start__\" [label=\"start\", shape=circle];\n";
  out << "  \"__end__\" [label=\"end\", shape=doublecircle];\n";
  for (const auto& [activity, m] : map.nodes) {
    // the two label lines are joined with DOT's \n escape
    const std::string name = detail::dot_quote(activity);
    out << "  " << ids.at(activity) << " [label=" << name.substr(0, name.size() - 1) << "\\n"
        << detail::display_text(m, view) << "\"];\n";
  }

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& [key, m] : map.edges) {
    const double v = detail::displayed(m, view);
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }
  for (const auto& [key, m] : map.edges) {
    const auto from = ids.find(key.first);
    const auto to = ids.find(key.second);
    if (from == ids.end() || to == ids.end()) continue;
    const double v = detail::displayed(m, view);
    const double width = hi > lo ? 1.0 + 4.0 * (v - lo) / (hi - lo) : 1.0;
    out << "  " << from->second << " -> " << to->second
        << " [label=" << detail::dot_quote(detail::display_text(m, view))
        << ", penwidth=" << detail::fixed2(width) << "];\n";
  }
  for (const auto& [activity, n] : map.start_counts) {
    if (auto it = ids.find(activity); it != ids.end()) {
      out << "  \"__start__\" -> " << it->second << " [label=\"" << n << "\", style=dashed];\n";
    }
  }
  for (const auto& [activity, n] : map.end_counts) {
    if (auto it = ids.find(activity); it != ids.end()) {
      out << "  " << it->second << " -> \"__end__\" [label=\"" << n << "\", style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace procmap
