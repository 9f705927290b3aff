#pragma once

#include <vector>

#include "procmap/catalog.hpp"

namespace procmap {

// Shipped starter catalog for the three learning phases.
//
// Activity names come from the published descriptions of the Initiation,
// Progression and Maturation phases. The key phrases are a reconstruction chosen
// to be self-evident; they are not the original research catalog and should be
// tuned against real data before drawing conclusions.
inline Catalog default_catalog() {
  using P = Phase;
  std::vector<CatalogRule> rules = {
      // Initiation: Novice observes, then establishes contact.
      {P::Initiation, "anyone", "Observation", "anyone know", "Comment Post", "Novice"},
      {P::Initiation, "anyone", "Observation", "anyone", "Post Message", "Novice"},
      {P::Initiation, "anyone", "Observation", "anyone know", "Identify Expert", "Novice"},
      {P::Initiation, "how do i", "Observation", "how do i", "Formulate Question", "Novice"},
      {P::Initiation, "question", "Observation", "i have a question", "Post Question", "Novice"},
      {P::Initiation, "help", "ContactEstablishment", "can you help", "Contact Expert", "Novice"},
      {P::Initiation, "help", "ContactEstablishment", "help me with", "Send Detailed Request",
       "Novice"},
      // Initiation: Expert reads, then reaches out.
      {P::Initiation, "i read", "Observation", "read your message", "Read Messages", "Expert"},
      {P::Initiation, "i read", "Observation", "read the post", "Read Post", "Expert"},
      {P::Initiation, "looked at", "Observation", "looked at the code", "Read Source Code",
       "Expert"},
      {P::Initiation, "you should", "Observation", "you should", "Comment Post", "Expert"},
      {P::Initiation, "i can help", "ContactEstablishment", "i can help", "Contact Novice",
       "Expert"},

      // Progression: Expert reviews and answers, Novice reacts.
      {P::Progression, "your question", "Revert", "to answer your question", "Send Reply",
       "Expert"},
      {P::Progression, "your question", "Revert", "regarding your question",
       "Reply Posted Question", "Expert"},
      {P::Progression, "thread", "Review", "in this thread", "Review Thread Posts", "Expert"},
      {P::Progression, "your patch", "Review", "looking at your patch", "Review Thread Code",
       "Expert"},
      {P::Progression, "feedback", "Revert", "my feedback", "Send Feedback", "Expert"},
      {P::Progression, "i ran", "Monitoring", "i ran your code", "Run Source Code", "Expert"},
      {P::Progression, "bug", "Monitoring", "found a bug", "Report Bugs", "Expert"},
      {P::Progression, "thanks", "Apply", "that worked", "Provide Feedback", "Novice"},
      {P::Progression, "another question", "Apply", "another question", "Post Questions",
       "Novice"},
      {P::Progression, "this code", "Apply", "comment on this code", "Comment On Code", "Novice"},
      {P::Progression, "this code", "Apply", "analysing this code", "Analyse Source Code",
       "Novice"},

      // Maturation: Novice contributes, Expert monitors.
      {P::Maturation, "submitted", "Commit", "submitted a patch", "Submit Code", "Novice"},
      {P::Maturation, "submitted", "Commit", "submitted a bug report", "Submit Bug Report",
       "Novice"},
      {P::Maturation, "documentation", "Commit", "updated the documentation",
       "Submit Documentation", "Novice"},
      {P::Maturation, "fix", "Develop", "fixes bug", "Fix Bugs", "Novice"},
      {P::Maturation, "refactor", "Develop", "refactor", "Modify Source Code", "Novice"},
      {P::Maturation, "suggest", "Develop", "i suggest", "Give Suggestion", "Novice"},
      {P::Maturation, "review", "Review", "reviewed the code", "Review Code", "Expert"},
      {P::Maturation, "review", "Review", "reviewed the docs", "Review Documentation", "Expert"},
      {P::Maturation, "review", "Review", "review comments", "Send Feedback", "Expert"},
  };

  SynonymTable synonyms;
  synonyms.add("anyone", "anybody");
  synonyms.add("anyone", "someone");
  synonyms.add("anyone know", "anybody know");
  synonyms.add("anyone know", "someone know");
  synonyms.add("help", "assist");
  synonyms.add("bug", "defect");
  synonyms.add("fix", "fixes");
  synonyms.add("documentation", "docs");
  return Catalog(std::move(rules), std::move(synonyms));
}

}  // namespace procmap
