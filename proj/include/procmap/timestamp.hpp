#pragma once

#include <chrono>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <ratio>
#include <string>
#include <string_view>

namespace procmap {

// 100 ns ticks: the event-log format carries seven fractional digits.
using Duration = std::chrono::duration<std::int64_t, std::ratio<1, 10'000'000>>;

inline constexpr std::int64_t kTicksPerSecond = Duration::period::den;

inline double to_seconds(Duration d) {
  return static_cast<double>(d.count()) / static_cast<double>(kTicksPerSecond);
}

// Naive local instant (no time zone), counted from 1970-01-01 00:00:00.
struct Instant {
  Duration since_epoch{};

  friend auto operator<=>(const Instant&, const Instant&) = default;
  friend Instant operator+(Instant i, Duration d) { return Instant{i.since_epoch + d}; }
  friend Duration operator-(Instant a, Instant b) { return a.since_epoch - b.since_epoch; }
};

namespace detail {

inline bool parse_digits(std::string_view text, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > text.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
  return ec == std::errc{} && ptr == text.data() + pos + len;
}

inline void put_padded(std::string& out, std::int64_t value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width) out.append(width - digits.size(), '0');
  out += digits;
}

}  // namespace detail

inline Instant make_instant(int year, unsigned month, unsigned day, int hour = 0, int minute = 0,
                            int second = 0, std::int64_t ticks = 0) {
  using namespace std::chrono;
  const sys_days date{std::chrono::year{year} / std::chrono::month{month} / std::chrono::day{day}};
  return Instant{duration_cast<Duration>(date.time_since_epoch()) + hours{hour} + minutes{minute} +
                 seconds{second} + Duration{ticks}};
}

// Accepts "YYYY-MM-DD HH:MM:SS" and "YYYY-MM-DD HH:MM:SS.fffffff" (exactly seven
// fractional digits). Anything else, including impossible calendar dates, yields nullopt.
inline std::optional<Instant> parse_timestamp(std::string_view text) {
  if (text.size() != 19 && text.size() != 27) return std::nullopt;
  if (text[4] != '-' || text[7] != '-' || text[10] != ' ' || text[13] != ':' || text[16] != ':') {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0, frac = 0;
  if (!detail::parse_digits(text, 0, 4, y) || !detail::parse_digits(text, 5, 2, mo) ||
      !detail::parse_digits(text, 8, 2, d) || !detail::parse_digits(text, 11, 2, h) ||
      !detail::parse_digits(text, 14, 2, mi) || !detail::parse_digits(text, 17, 2, s)) {
    return std::nullopt;
  }
  if (text.size() == 27) {
    if (text[19] != '.' || !detail::parse_digits(text, 20, 7, frac)) return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                        std::chrono::day{unsigned(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  return make_instant(y, unsigned(mo), unsigned(d), h, mi, s, frac);
}

// "YYYY-MM-DD HH:MM:SS.fffffff"
inline std::string format_timestamp(Instant instant) {
  using namespace std::chrono;
  const auto days = floor<std::chrono::days>(instant.since_epoch);
  const year_month_day ymd{sys_days{days}};
  std::int64_t rest = (instant.since_epoch - duration_cast<Duration>(days)).count();
  const std::int64_t frac = rest % kTicksPerSecond;
  rest /= kTicksPerSecond;

  std::string out;
  out.reserve(27);
  detail::put_padded(out, int(ymd.year()), 4);
  out += '-';
  detail::put_padded(out, unsigned(ymd.month()), 2);
  out += '-';
  detail::put_padded(out, unsigned(ymd.day()), 2);
  out += ' ';
  detail::put_padded(out, rest / 3600, 2);
  out += ':';
  detail::put_padded(out, (rest / 60) % 60, 2);
  out += ':';
  detail::put_padded(out, rest % 60, 2);
  out += '.';
  detail::put_padded(out, frac, 7);
  return out;
}

// Human-readable duration: weeks with one decimal once the value reaches a week,
// then days, hours, minutes; below a minute plain seconds with at most three decimals.
inline std::string humanize_seconds(double seconds) {
  struct Unit {
    double size;
    const char* name;
  };
  static constexpr Unit kUnits[] = {
      {604800.0, "weeks"}, {86400.0, "days"}, {3600.0, "h"}, {60.0, "min"}};
  char buf[64];
  for (const auto& unit : kUnits) {
    if (seconds >= unit.size) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, seconds / unit.size,
                                     std::chars_format::fixed, 1);
      return std::string(buf, end) + " " + unit.name;
    }
  }
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, seconds, std::chars_format::fixed, 3);
  std::string text(buf, end);
  while (!text.empty() && text.back() == '0') text.pop_back();
  if (!text.empty() && text.back() == '.') text.pop_back();
  if (text == "-0") text = "0";
  return text + " s";
}

}  // namespace procmap
