#ifndef KPAS_SUMMARIZER_HPP
#define KPAS_SUMMARIZER_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kpas/candidates.hpp"
#include "kpas/features.hpp"
#include "kpas/lda.hpp"

namespace kpas {

enum class Heuristic { sum, count, coverage, merged };

std::string_view to_string(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

struct RankedKeyphrase {
  std::string abstract_form;
  double lda_score = 0;
  double normalized_score = 0;  // min-max over the top k, mapped into (0.01, 1]
  int candidate_index = -1;
};

struct KeyphraseRanking {
  std::vector<RankedKeyphrase> entries;  // sorted by lda_score descending
  int k = 0;                             // requested cut-off
};

struct SentenceScoreRow {
  double nss_raw = 0, ncs_raw = 0, nks_raw = 0;
  double nss = 0, ncs = 0, nks = 0, merged = 0;
  std::set<std::string> contained;   // top-k abstract forms found in the sentence
  std::set<std::string> first_hits;  // forms whose first containing sentence is this one
};

struct SentenceScores {
  std::vector<SentenceScoreRow> rows;

  double value(std::size_t sentence, Heuristic h) const;
};

struct Summary {
  std::vector<int> selected;  // strictly increasing sentence indices
  Heuristic heuristic = Heuristic::merged;
  double ratio = 0.25;
};

struct SummarizeOptions {
  int top_k = 12;
  Heuristic heuristic = Heuristic::merged;
  double ratio = 0.25;
  SyntaxRuleSet rules = SyntaxRuleSet::defaults();
  int max_n = 3;
  // Count a keyphrase once per sentence (set semantics) or per occurrence.
  bool count_occurrences = false;
};

// True iff the keyphrase lemma sequence occurs as consecutive token lemmas.
// Throws ArgumentEmpty for an empty keyphrase.
bool contains_keyphrase(const Sentence& sentence, const std::vector<std::string>& lemmas);
int count_keyphrase(const Sentence& sentence, const std::vector<std::string>& lemmas);

std::vector<std::string> split_abstract_form(const std::string& abstract_form);

// Top-k by LDA score; ties break on earlier first occurrence, then shorter,
// then lexicographically smaller abstract form.
KeyphraseRanking rank_keyphrases(const std::vector<CandidatePhrase>& candidates,
                                 const std::vector<double>& lda_scores, int k);

SentenceScores score_sentences(const AnalyzedDocument& doc, const KeyphraseRanking& ranking,
                               bool count_occurrences = false, Exec exec = Exec::serial);

// Picks nonzero-score sentences by descending score (ties to the earlier
// sentence) up to ceil(ratio * sentence_count), output in text order.
// Throws EmptyDocument when the document has no sentences.
Summary assemble_summary(const SentenceScores& scores, Heuristic heuristic, double ratio);

struct SummarizeResult {
  Summary summary;
  KeyphraseRanking ranking;
  SentenceScores scores;
  std::vector<CandidatePhrase> candidates;
  std::vector<FeatureVector> features;
  std::vector<double> lda_scores;
};

// Full pipeline: candidates → features → classifier → ranking → sentence
// scores → assembly. Deterministic for fixed inputs and options.
SummarizeResult summarize(const AnalyzedDocument& doc, const LdaModel& model,
                          const SummarizeOptions& opts = {}, Exec exec = Exec::serial);

// Selected sentences joined in text order, each closed by its original
// terminator.
std::string summary_text(const AnalyzedDocument& doc, const Summary& summary);

std::string sentence_text(const Sentence& sentence);

}  // namespace kpas

#endif  // KPAS_SUMMARIZER_HPP
