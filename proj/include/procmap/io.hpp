#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "procmap/catalog.hpp"
#include "procmap/csv.hpp"
#include "procmap/error.hpp"
#include "procmap/log_builder.hpp"
#include "procmap/model.hpp"
#include "procmap/timestamp.hpp"

namespace procmap {

inline constexpr std::array<std::string_view, 5> kMessageColumns{"case_ref", "sender", "body",
                                                                 "timestamp", "source_kind"};
inline constexpr std::array<std::string_view, 6> kEventLogColumns{
    "Participant", "Activity", "State", "channeltopic", "submitted_date", "Role"};
inline constexpr std::array<std::string_view, 6> kCatalogColumns{"phase",  "gl_key",   "state",
                                                                 "lc_key", "activity", "role"};
inline constexpr std::array<std::string_view, 2> kSynonymColumns{"phrase", "synonym"};

namespace detail {

// Maps each required column name to its position in the header row. Extra columns
// are ignored; missing ones are reported together.
template <std::size_t N>
std::array<std::size_t, N> locate_columns(csv::Reader& reader,
                                          const std::array<std::string_view, N>& required,
                                          std::string_view what) {
  auto header = reader.next();
  if (!header) throw SchemaError(std::string(what) + ": missing header row");
  std::array<std::size_t, N> pos{};
  std::string missing;
  for (std::size_t i = 0; i < N; ++i) {
    auto it = std::find(header->begin(), header->end(), required[i]);
    if (it == header->end()) {
      missing += missing.empty() ? "" : ", ";
      missing += required[i];
    } else {
      pos[i] = static_cast<std::size_t>(it - header->begin());
    }
  }
  if (!missing.empty()) {
    std::string expected;
    for (auto c : required) expected += (expected.empty() ? "" : ",") + std::string(c);
    throw SchemaError(std::string(what) + ": header lacks column(s) " + missing +
                      " (expected " + expected + ")");
  }
  return pos;
}

inline std::string_view column(const std::vector<std::string>& row, std::size_t index) {
  return index < row.size() ? std::string_view(row[index]) : std::string_view();
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace detail

struct MessageParse {
  std::vector<MessageRecord> records;
  std::size_t skipped = 0;
};

// Rows with an empty case_ref or sender, an unparseable timestamp or an unknown
// source_kind are skipped and counted; surviving rows keep file order.
inline MessageParse parse_messages(std::istream& in) {
  csv::Reader reader(in);
  const auto col = detail::locate_columns(reader, kMessageColumns, "messages");
  MessageParse out;
  while (auto row = reader.next()) {
    const auto case_ref = detail::column(*row, col[0]);
    const auto sender = detail::column(*row, col[1]);
    const auto ts = parse_timestamp(detail::column(*row, col[3]));
    const auto kind = parse_source_kind(detail::column(*row, col[4]));
    if (case_ref.empty() || sender.empty() || !ts || !kind) {
      ++out.skipped;
      continue;
    }
    out.records.push_back({std::string(case_ref), std::string(sender),
                           std::string(detail::column(*row, col[2])), *ts, *kind});
  }
  return out;
}

inline MessageParse parse_messages_file(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_messages(in);
}

inline void write_messages(std::ostream& out, std::span<const MessageRecord> messages) {
  csv::write_row(out, {"case_ref", "sender", "body", "timestamp", "source_kind"});
  for (const auto& m : messages) {
    csv::write_row(out, {m.case_ref, m.sender, m.body, format_timestamp(m.timestamp),
                         std::string(to_string(m.source_kind))});
  }
}

inline void write_event_log(std::ostream& out, const EventLog& log) {
  csv::write_row(out, {"Participant", "Activity", "State", "channeltopic", "submitted_date", "Role"});
  for (const Event& e : log.events()) {
    csv::write_row(out, {e.participant, e.activity, e.state, e.case_id,
                         format_timestamp(e.timestamp), e.role});
  }
}

inline std::string write_event_log(const EventLog& log) {
  std::ostringstream out;
  write_event_log(out, log);
  return out.str();
}

inline EventLog read_event_log(std::istream& in) {
  csv::Reader reader(in);
  const auto col = detail::locate_columns(reader, kEventLogColumns, "event log");
  std::vector<Event> events;
  while (auto row = reader.next()) {
    const auto where = "event log record " + std::to_string(reader.record_number());
    Event e;
    e.participant = detail::column(*row, col[0]);
    e.activity = detail::column(*row, col[1]);
    e.state = detail::column(*row, col[2]);
    e.case_id = detail::column(*row, col[3]);
    e.role = detail::column(*row, col[5]);
    const auto ts = parse_timestamp(detail::column(*row, col[4]));
    if (!ts) {
      throw SchemaError(where + ": bad submitted_date '" +
                        std::string(detail::column(*row, col[4])) + "'");
    }
    e.timestamp = *ts;
    if (e.participant.empty() || e.activity.empty() || e.state.empty() || e.case_id.empty() ||
        e.role.empty()) {
      throw SchemaError(where + ": empty required field");
    }
    events.push_back(std::move(e));
  }
  return EventLog(std::move(events));
}

inline EventLog read_event_log_file(const std::string& path) {
  auto in = detail::open_input(path);
  EventLog log = read_event_log(in);
  return EventLog(std::vector<Event>(log.events()), path);
}

inline std::vector<CatalogRule> read_catalog_rules(std::istream& in) {
  csv::Reader reader(in);
  const auto col = detail::locate_columns(reader, kCatalogColumns, "catalog");
  std::vector<CatalogRule> rules;
  while (auto row = reader.next()) {
    const auto where = "catalog record " + std::to_string(reader.record_number());
    const auto phase = parse_phase(detail::column(*row, col[0]));
    if (!phase) {
      throw SchemaError(where + ": phase '" + std::string(detail::column(*row, col[0])) +
                        "' is not Initiation, Progression or Maturation");
    }
    CatalogRule rule{*phase,
                     std::string(detail::column(*row, col[1])),
                     std::string(detail::column(*row, col[2])),
                     std::string(detail::column(*row, col[3])),
                     std::string(detail::column(*row, col[4])),
                     std::string(detail::column(*row, col[5]))};
    if (rule.gl_key.empty() || rule.state.empty() || rule.lc_key.empty() ||
        rule.activity.empty() || rule.role.empty()) {
      throw SchemaError(where + ": empty required field");
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

inline SynonymTable read_synonyms(std::istream& in) {
  csv::Reader reader(in);
  const auto col = detail::locate_columns(reader, kSynonymColumns, "synonyms");
  SynonymTable table;
  while (auto row = reader.next()) {
    const auto phrase = detail::column(*row, col[0]);
    const auto synonym = detail::column(*row, col[1]);
    if (phrase.empty() || synonym.empty()) {
      throw SchemaError("synonyms record " + std::to_string(reader.record_number()) +
                        ": empty phrase or synonym");
    }
    table.add(phrase, synonym);
  }
  return table;
}

inline Catalog read_catalog_files(const std::string& rules_path, const std::string& synonyms_path = {}) {
  auto rules_in = detail::open_input(rules_path);
  auto rules = read_catalog_rules(rules_in);
  SynonymTable synonyms;
  if (!synonyms_path.empty()) {
    auto syn_in = detail::open_input(synonyms_path);
    synonyms = read_synonyms(syn_in);
  }
  return Catalog(std::move(rules), std::move(synonyms));
}

inline void write_catalog(std::ostream& out, const Catalog& catalog) {
  csv::write_row(out, {"phase", "gl_key", "state", "lc_key", "activity", "role"});
  for (const auto& r : catalog.rules()) {
    csv::write_row(out, {std::string(to_string(r.phase)), r.gl_key, r.state, r.lc_key, r.activity,
                         r.role});
  }
}

inline void write_synonyms(std::ostream& out, const SynonymTable& synonyms) {
  csv::write_row(out, {"phrase", "synonym"});
  for (const auto& [phrase, list] : synonyms.entries()) {
    for (const auto& syn : list) csv::write_row(out, {phrase, syn});
  }
}

}  // namespace procmap
