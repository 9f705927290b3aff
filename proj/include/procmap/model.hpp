#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "procmap/timestamp.hpp"

namespace procmap {

// One classified action: the (case, activity, participant, date, state, role) record.
struct Event {
  std::string case_id;
  std::string activity;
  std::string participant;
  Instant timestamp;
  std::string state;
  std::string role;

  friend bool operator==(const Event&, const Event&) = default;
};

// Ordered, immutable collection of events. Insertion order is preserved and is the
// tie-breaker when events of one case share a timestamp.
class EventLog {
 public:
  EventLog() = default;

  explicit EventLog(std::vector<Event> events, std::optional<std::string> provenance = {})
      : events_(std::move(events)), provenance_(std::move(provenance)) {
    for (std::size_t i = 0; i < events_.size(); ++i) {
      const Event& e = events_[i];
      if (e.case_id.empty() || e.activity.empty() || e.participant.empty() || e.state.empty() ||
          e.role.empty()) {
        throw std::invalid_argument("event " + std::to_string(i) +
                                    " has an empty case, activity, participant, state or role");
      }
    }
  }

  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const std::optional<std::string>& provenance() const noexcept { return provenance_; }

  friend bool operator==(const EventLog& a, const EventLog& b) { return a.events_ == b.events_; }

 private:
  std::vector<Event> events_;
  std::optional<std::string> provenance_;
};

// All events of one case, sorted by (timestamp, insertion index).
struct Trace {
  std::string case_id;
  std::vector<Event> events;
};

struct TimeWindow {
  Instant start;
  Instant end;  // inclusive
};

// Unset members place no constraint on their attribute.
struct FilterSpec {
  std::optional<std::set<std::string>> roles;
  std::optional<std::set<std::string>> states;
  std::optional<std::set<std::string>> activities;
  std::optional<std::set<std::string>> cases;
  std::optional<TimeWindow> time_window;
};

// Traces are returned ordered by case_id.
inline std::vector<Trace> group_into_traces(const EventLog& log) {
  const auto& events = log.events();
  std::map<std::string, std::vector<std::size_t>> by_case;
  for (std::size_t i = 0; i < events.size(); ++i) by_case[events[i].case_id].push_back(i);

  std::vector<Trace> traces;
  traces.reserve(by_case.size());
  for (auto& [case_id, indices] : by_case) {
    // indices are already ascending, so a stable sort on timestamp gives (timestamp, index)
    std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
      return events[a].timestamp < events[b].timestamp;
    });
    Trace trace{case_id, {}};
    trace.events.reserve(indices.size());
    for (std::size_t i : indices) trace.events.push_back(events[i]);
    traces.push_back(std::move(trace));
  }
  return traces;
}

inline bool matches(const Event& e, const FilterSpec& spec) {
  auto admits = [](const std::optional<std::set<std::string>>& set, const std::string& v) {
    return !set || set->contains(v);
  };
  if (!admits(spec.roles, e.role) || !admits(spec.states, e.state) ||
      !admits(spec.activities, e.activity) || !admits(spec.cases, e.case_id)) {
    return false;
  }
  if (spec.time_window) {
    return spec.time_window->start <= e.timestamp && e.timestamp <= spec.time_window->end;
  }
  return true;
}

inline EventLog filter_log(const EventLog& log, const FilterSpec& spec) {
  if (spec.time_window && spec.time_window->end < spec.time_window->start) {
    throw std::invalid_argument("time window starts at " +
                                format_timestamp(spec.time_window->start) + " after its end " +
                                format_timestamp(spec.time_window->end));
  }
  std::vector<Event> kept;
  for (const Event& e : log.events()) {
    if (matches(e, spec)) kept.push_back(e);
  }
  return EventLog(std::move(kept), log.provenance());
}

inline Duration case_duration(const Trace& trace) {
  if (trace.events.empty()) {
    throw std::invalid_argument("case_duration of empty trace '" + trace.case_id + "'");
  }
  return trace.events.back().timestamp - trace.events.front().timestamp;
}

}  // namespace procmap
