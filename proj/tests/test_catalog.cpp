#include <random>

#include <gtest/gtest.h>

#include "procmap/catalog.hpp"
#include "procmap/default_catalog.hpp"

using namespace procmap;

TEST(NormalizeText, Examples) {
  EXPECT_EQ(normalize_text("Does ANYONE  know?"), "does anyone know");
  EXPECT_EQ(normalize_text(""), "");
  EXPECT_EQ(normalize_text("a-b_c"), "a b c");
  EXPECT_EQ(normalize_text("  ...  "), "");
  EXPECT_EQ(normalize_text("line\r\nbreak\ttab"), "line break tab");
  EXPECT_EQ(normalize_text("caf\xc3\xa9!"), "caf\xc3\xa9");
}

TEST(PhraseMatches, TokenWindow) {
  EXPECT_TRUE(phrase_matches("can anyone know how this works", "anyone know"));
  EXPECT_FALSE(phrase_matches("unknowable", "know"));
  EXPECT_TRUE(phrase_matches("anyone know", "anyone know"));
  EXPECT_FALSE(phrase_matches("know anyone", "anyone know"));
  EXPECT_FALSE(phrase_matches("anyone really know", "anyone know"));
  EXPECT_FALSE(phrase_matches("", "know"));
}

TEST(PhraseMatches, CaseAndPunctuationInsensitive) {
  EXPECT_TRUE(phrase_matches("ANYONE, know?!", "anyone know"));
  EXPECT_TRUE(phrase_matches("anyone_know", "Anyone-Know"));
}

TEST(PhraseMatches, EmptyPhraseRejected) {
  EXPECT_THROW(phrase_matches("body", ""), std::invalid_argument);
  EXPECT_FALSE(phrase_matches("body", "???"));
}

TEST(PhraseMatches, Synonyms) {
  SynonymTable syn;
  syn.add("anyone", "Anybody");
  EXPECT_TRUE(phrase_matches("does anybody know", "anyone", syn));
  EXPECT_FALSE(phrase_matches("does anyone know", "anybody", syn));  // directed
  EXPECT_FALSE(phrase_matches("does somebody know", "anyone", syn));
}

TEST(PhraseMatches, InvariantUnderCaseAndPunctuation) {
  std::mt19937_64 rng(17);
  const std::string words[] = {"anyone", "know", "how", "this", "works", "help", "me"};
  const std::string seps[] = {" ", "  ", ", ", "-", "_", "? ", "\t"};
  std::uniform_int_distribution<int> w(0, 6), len(1, 8);
  for (int round = 0; round < 500; ++round) {
    std::string plain, noisy;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      std::string word = words[w(rng)];
      plain += (i ? " " : "") + word;
      if (rng() % 2) for (auto& c : word) c = static_cast<char>(std::toupper(c));
      noisy += (i ? seps[w(rng)] : "") + word;
    }
    for (const char* phrase : {"anyone know", "help me", "works", "this how"}) {
      EXPECT_EQ(phrase_matches(plain, phrase), phrase_matches(noisy, phrase)) << noisy;
    }
  }
}

namespace {

Catalog observation_catalog() {
  return Catalog({
      {Phase::Initiation, "anyone", "Observation", "anyone know", "Comment Post", "Novice"},
      {Phase::Initiation, "anyone", "Observation", "anyone", "Post Message", "Novice"},
      {Phase::Initiation, "anyone", "Observation", "know", "Identify Expert", "Novice"},
      {Phase::Initiation, "help", "ContactEstablishment", "help me", "Contact Expert", "Novice"},
  });
}

}  // namespace

TEST(Classify, GlobalKeyWithoutLocalKeyYieldsNothing) {
  EXPECT_TRUE(classify("please help", observation_catalog()).empty());
}

TEST(Classify, SingleRule) {
  const auto out = classify("can you help me", observation_catalog());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], (MatchResult{"ContactEstablishment", "Contact Expert", "Novice", 3}));
}

TEST(Classify, SharedGlobalKeyEmitsInRuleOrder) {
  const auto out = classify("Does anyone know how to deploy swift?", observation_catalog());
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].activity, "Comment Post");
  EXPECT_EQ(out[1].activity, "Post Message");
  EXPECT_EQ(out[2].activity, "Identify Expert");
  for (const auto& m : out) EXPECT_EQ(m.state, "Observation");
}

TEST(Classify, CollapsesDuplicateTriples) {
  const Catalog cat({
      {Phase::Initiation, "anyone", "Observation", "anyone", "Post Message", "Novice"},
      {Phase::Initiation, "know", "Observation", "know", "Post Message", "Novice"},
      {Phase::Initiation, "know", "Observation", "know", "Post Message", "Expert"},
  });
  const auto out = classify("anyone know", cat);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].rule_index, 0u);
  EXPECT_EQ(out[1].rule_index, 2u);
}

TEST(Classify, UsesCatalogSynonyms) {
  SynonymTable syn;
  syn.add("anyone", "anybody");
  syn.add("anyone know", "anybody know");
  const Catalog cat({{Phase::Initiation, "anyone", "Observation", "anyone know", "Comment Post",
                      "Novice"}},
                    syn);
  EXPECT_EQ(classify("does ANYBODY know?", cat).size(), 1u);
}

TEST(Classify, PureAndBounded) {
  const Catalog cat = default_catalog();
  for (const char* body : {"anyone know? can you help me with this", "", "good morning",
                           "I reviewed the code and found a bug, my feedback follows"}) {
    const auto a = classify(body, cat);
    EXPECT_EQ(a, classify(body, cat));
    EXPECT_LE(a.size(), cat.size());
  }
}

TEST(Catalog, RejectsEmptyFields) {
  EXPECT_THROW(Catalog({{Phase::Initiation, "", "S", "k", "A", "R"}}), std::invalid_argument);
}

TEST(Catalog, ForPhaseKeepsOrder) {
  const Catalog cat = default_catalog();
  std::size_t total = 0;
  for (Phase p : kAllPhases) {
    const Catalog sub = cat.for_phase(p);
    EXPECT_GT(sub.size(), 0u);
    for (const auto& r : sub.rules()) EXPECT_EQ(r.phase, p);
    total += sub.size();
  }
  EXPECT_EQ(total, cat.size());
}

TEST(Phase, RoundTripNames) {
  for (Phase p : kAllPhases) EXPECT_EQ(parse_phase(to_string(p)), p);
  EXPECT_FALSE(parse_phase("initiation"));
}
