#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procmap/error.hpp"

namespace procmap::csv {

// RFC 4180 reader. Accepts LF or CRLF line ends, quoted fields with embedded
// separators, doubled quotes and line breaks. A leading UTF-8 BOM is skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (!(in_.gcount() == 3 && bom[1] == '\xBB' && bom[2] == '\xBF')) {
        throw SchemaError("stray bytes at start of CSV input");
      }
    }
  }

  // Next record, or nullopt at end of input. Blank lines are skipped.
  std::optional<std::vector<std::string>> next() {
    while (true) {
      if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
      ++record_;
      std::vector<std::string> fields;
      std::string field;
      bool quoted = false;
      bool after_quote = false;
      bool any = false;
      int ch;
      while ((ch = in_.get()) != std::char_traits<char>::eof()) {
        const char c = static_cast<char>(ch);
        any = true;
        if (quoted) {
          if (c == '"') {
            if (in_.peek() == '"') {
              in_.get();
              field += '"';
            } else {
              quoted = false;
              after_quote = true;
            }
          } else {
            field += c;
          }
          continue;
        }
        if (c == ',') {
          fields.push_back(std::move(field));
          field.clear();
          after_quote = false;
        } else if (c == '\n' || c == '\r') {
          if (c == '\r' && in_.peek() == '\n') in_.get();
          break;
        } else if (c == '"') {
          if (!field.empty() || after_quote) {
            throw SchemaError("record " + std::to_string(record_) + ": stray quote inside field");
          }
          quoted = true;
        } else {
          if (after_quote) {
            throw SchemaError("record " + std::to_string(record_) +
                              ": characters after closing quote");
          }
          field += c;
        }
      }
      if (quoted) throw SchemaError("record " + std::to_string(record_) + ": unterminated quote");
      if (!any || (fields.empty() && field.empty() && !after_quote)) {
        --record_;
        if (ch == std::char_traits<char>::eof()) return std::nullopt;
        continue;
      }
      fields.push_back(std::move(field));
      return fields;
    }
  }

  // 1-based index of the last record returned (the header is record 1).
  std::size_t record_number() const noexcept { return record_; }

 private:
  std::istream& in_;
  std::size_t record_ = 0;
};

inline bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

inline void write_field(std::ostream& out, std::string_view field) {
  if (!needs_quoting(field)) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

inline void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    write_field(out, fields[i]);
  }
  out << '\n';
}

inline void write_row(std::ostream& out, std::initializer_list<std::string> fields) {
  write_row(out, std::span<const std::string>(fields.begin(), fields.size()));
}

}  // namespace procmap::csv
