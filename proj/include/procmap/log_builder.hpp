#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procmap/catalog.hpp"
#include "procmap/model.hpp"

namespace procmap {

enum class SourceKind { Chat, SourceCode };

inline std::string_view to_string(SourceKind kind) {
  return kind == SourceKind::Chat ? "Chat" : "SourceCode";
}

inline std::optional<SourceKind> parse_source_kind(std::string_view text) {
  if (text == "Chat") return SourceKind::Chat;
  if (text == "SourceCode") return SourceKind::SourceCode;
  return std::nullopt;
}

// One raw input row: a chat message or a commit annotation.
struct MessageRecord {
  std::string case_ref;  // topic, thread id or file reference
  std::string sender;
  std::string body;
  Instant timestamp;
  SourceKind source_kind = SourceKind::Chat;
};

// Labels for messages that match no catalog rule.
struct FallbackPolicy {
  std::string activity = "Participate in Discussions";
  std::string state = "Participation";
  std::string role = "Inactive";
};

struct BuildCounters {
  std::size_t messages = 0;
  std::size_t matched_messages = 0;
  std::size_t fallback_events = 0;
  std::size_t events = 0;
};

// Classify every message against the catalog. A matching message yields one event
// per match result; a message matching nothing yields exactly one fallback event.
// Event order follows message order, then match order.
inline EventLog construct_log(std::span<const MessageRecord> messages, const Catalog& catalog,
                              const FallbackPolicy& fallback = {},
                              BuildCounters* counters = nullptr) {
  if (fallback.activity.empty() || fallback.state.empty() || fallback.role.empty()) {
    throw std::invalid_argument("fallback policy labels must be non-empty");
  }
  BuildCounters local;
  std::vector<Event> events;
  events.reserve(messages.size());
  for (const MessageRecord& m : messages) {
    ++local.messages;
    const auto matches = classify(m.body, catalog);
    if (matches.empty()) {
      events.push_back(
          {m.case_ref, fallback.activity, m.sender, m.timestamp, fallback.state, fallback.role});
      ++local.fallback_events;
      continue;
    }
    ++local.matched_messages;
    for (const MatchResult& r : matches) {
      events.push_back({m.case_ref, r.activity, m.sender, m.timestamp, r.state, r.role});
    }
  }
  local.events = events.size();
  if (counters) *counters = local;
  return EventLog(std::move(events));
}

inline std::map<std::string, std::size_t> count_role_events(const EventLog& log) {
  std::map<std::string, std::size_t> counts;
  for (const Event& e : log.events()) ++counts[e.role];
  return counts;
}

}  // namespace procmap
