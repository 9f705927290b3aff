#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace procmap {

enum class Phase { Initiation, Progression, Maturation };

inline constexpr std::array<Phase, 3> kAllPhases{Phase::Initiation, Phase::Progression,
                                                 Phase::Maturation};

inline std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Initiation: return "Initiation";
    case Phase::Progression: return "Progression";
    case Phase::Maturation: return "Maturation";
  }
  return "?";
}

inline std::optional<Phase> parse_phase(std::string_view text) {
  for (Phase p : kAllPhases) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

// Lowercase ASCII, turn punctuation into spaces, collapse whitespace runs, trim.
// Bytes outside ASCII pass through unchanged.
inline std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 0x80 && (std::isspace(c) || std::ispunct(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += (c < 0x80) ? static_cast<char>(std::tolower(c)) : ch;
  }
  return out;
}

using Tokens = std::vector<std::string>;

inline Tokens tokenize(std::string_view raw) {
  const std::string norm = normalize_text(raw);
  Tokens tokens;
  std::size_t start = 0;
  while (start < norm.size()) {
    std::size_t end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    tokens.emplace_back(norm, start, end - start);
    start = end + 1;
  }
  return tokens;
}

// True iff needle occurs in haystack as a contiguous token run. An empty needle
// matches nothing.
inline bool contains_tokens(const Tokens& haystack, const Tokens& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

// Directed synonym registry: phrase -> phrases that count as equivalent to it.
// Keys and values are stored normalized.
class SynonymTable {
 public:
  void add(std::string_view phrase, std::string_view synonym) {
    auto& list = table_[normalize_text(phrase)];
    std::string norm = normalize_text(synonym);
    if (!norm.empty() && std::find(list.begin(), list.end(), norm) == list.end()) {
      list.push_back(std::move(norm));
    }
  }

  // Synonyms of an already-normalized phrase (empty when none are registered).
  const std::vector<std::string>& lookup(const std::string& normalized_phrase) const {
    static const std::vector<std::string> kNone;
    auto it = table_.find(normalized_phrase);
    return it == table_.end() ? kNone : it->second;
  }

  const std::map<std::string, std::vector<std::string>>& entries() const noexcept { return table_; }
  bool empty() const noexcept { return table_.empty(); }

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

inline bool phrase_matches(std::string_view body, std::string_view phrase,
                           const SynonymTable& synonyms = {}) {
  if (phrase.empty()) throw std::invalid_argument("phrase_matches: empty phrase");
  const Tokens body_tokens = tokenize(body);
  const std::string norm = normalize_text(phrase);
  if (contains_tokens(body_tokens, tokenize(norm))) return true;
  for (const auto& alt : synonyms.lookup(norm)) {
    if (contains_tokens(body_tokens, tokenize(alt))) return true;
  }
  return false;
}

struct CatalogRule {
  Phase phase = Phase::Initiation;
  std::string gl_key;  // identifies the state
  std::string state;
  std::string lc_key;  // identifies the activity and role, given the state
  std::string activity;
  std::string role;

  friend bool operator==(const CatalogRule&, const CatalogRule&) = default;
};

struct MatchResult {
  std::string state;
  std::string activity;
  std::string role;
  std::size_t rule_index = 0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Ordered keyphrase rules plus synonyms. Immutable once built; rule phrases are
// tokenized up front so classification only tokenizes the message body.
class Catalog {
 public:
  Catalog() = default;

  explicit Catalog(std::vector<CatalogRule> rules, SynonymTable synonyms = {})
      : rules_(std::move(rules)), synonyms_(std::move(synonyms)) {
    compiled_.reserve(rules_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const CatalogRule& r = rules_[i];
      if (r.gl_key.empty() || r.state.empty() || r.lc_key.empty() || r.activity.empty() ||
          r.role.empty()) {
        throw std::invalid_argument("catalog rule " + std::to_string(i) + " has an empty field");
      }
      compiled_.push_back({compile(r.gl_key), compile(r.lc_key)});
    }
  }

  const std::vector<CatalogRule>& rules() const noexcept { return rules_; }
  const SynonymTable& synonyms() const noexcept { return synonyms_; }
  std::size_t size() const noexcept { return rules_.size(); }

  // The sub-catalog holding only rules of one phase, in the original order.
  Catalog for_phase(Phase phase) const {
    std::vector<CatalogRule> kept;
    for (const auto& r : rules_) {
      if (r.phase == phase) kept.push_back(r);
    }
    return Catalog(std::move(kept), synonyms_);
  }

  friend std::vector<MatchResult> classify(std::string_view body, const Catalog& catalog);

 private:
  using Alternatives = std::vector<Tokens>;

  Alternatives compile(const std::string& phrase) const {
    const std::string norm = normalize_text(phrase);
    Alternatives alts{tokenize(norm)};
    for (const auto& syn : synonyms_.lookup(norm)) alts.push_back(tokenize(syn));
    return alts;
  }

  static bool any_match(const Tokens& body, const Alternatives& alts) {
    return std::any_of(alts.begin(), alts.end(),
                       [&](const Tokens& alt) { return contains_tokens(body, alt); });
  }

  struct CompiledRule {
    Alternatives gl;
    Alternatives lc;
  };

  std::vector<CatalogRule> rules_;
  SynonymTable synonyms_;
  std::vector<CompiledRule> compiled_;
};

// Rules whose gl_key and lc_key both match the body, in catalog order. Repeated
// (state, activity, role) triples keep only their first occurrence.
inline std::vector<MatchResult> classify(std::string_view body, const Catalog& catalog) {
  const Tokens tokens = tokenize(body);
  std::vector<MatchResult> out;
  std::set<std::tuple<std::string_view, std::string_view, std::string_view>> seen;
  for (std::size_t i = 0; i < catalog.rules_.size(); ++i) {
    const auto& compiled = catalog.compiled_[i];
    if (!Catalog::any_match(tokens, compiled.gl) || !Catalog::any_match(tokens, compiled.lc)) {
      continue;
    }
    const CatalogRule& r = catalog.rules_[i];
    if (!seen.emplace(r.state, r.activity, r.role).second) continue;
    out.push_back({r.state, r.activity, r.role, i});
  }
  return out;
}

}  // namespace procmap
