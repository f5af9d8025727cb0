#include "kpas/features.hpp"

#include <algorithm>

#include "kpas/errors.hpp"

namespace kpas {

const std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "npw", "prf", "wrf", "nsl", "npl", "nplen", "scv", "iit"};

DocumentStats compute_stats(const AnalyzedDocument& doc,
                            const std::vector<CandidatePhrase>& candidates,
                            int max_phrase_words) {
  DocumentStats stats;
  stats.max_phrase_words = max_phrase_words;
  stats.sentence_count = static_cast<int>(doc.sentences.size());
  stats.sentence_token_counts.reserve(doc.sentences.size());
  for (const Sentence& s : doc.sentences) {
    stats.sentence_token_counts.push_back(static_cast<int>(s.tokens.size()));
  }

  // Word repetitions are counted over the token positions covered by kept
  // candidate windows, the same population PRF is normalized on. This keeps
  // wrf = 1 attainable: the most repeated covered lemma sits in some
  // candidate by construction.
  std::vector<std::vector<char>> covered(doc.sentences.size());
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    covered[s].assign(doc.sentences[s].tokens.size(), 0);
  }
  stats.max_phrase_freq = 0;
  for (const CandidatePhrase& c : candidates) {
    stats.max_phrase_freq =
        std::max(stats.max_phrase_freq, static_cast<int>(c.occurrences.size()));
    for (const PhraseOccurrence& occ : c.occurrences) {
      for (int i = 0; i < occ.length; ++i) covered[occ.sent_index][occ.word_index + i] = 1;
    }
  }
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& tokens = doc.sentences[s].tokens;
    for (std::size_t w = 0; w < tokens.size(); ++w) {
      if (covered[s][w] && !is_function_word(tokens[w].pos)) {
        ++stats.content_lemma_freq[tokens[w].lemma];
      }
    }
  }
  stats.max_word_freq = 0;
  for (const auto& [lemma, freq] : stats.content_lemma_freq) {
    stats.max_word_freq = std::max(stats.max_word_freq, freq);
  }
  return stats;
}

FeatureVector compute_features(const CandidatePhrase& cand, const AnalyzedDocument& doc,
                               const DocumentStats& stats, const FeatureOptions& opts) {
  if (cand.occurrences.empty()) throw Error("candidate has no occurrences");
  const PhraseOccurrence& first = cand.occurrences.front();
  const int s = first.sent_index;
  const int w = first.word_index;
  const int n = first.length;
  const int S = stats.sentence_count;
  if (S <= 0 || s >= S) throw InconsistentStats("sentence count does not match document");
  const int L = stats.sentence_token_counts[s];
  if (L <= 0) throw InconsistentStats("empty sentence in stats");
  if (stats.max_phrase_words <= 0 || stats.max_phrase_freq <= 0 || stats.max_word_freq <= 0) {
    throw InconsistentStats("zero denominator in document stats");
  }

  FeatureVector fv;
  fv.npw = static_cast<double>(n) / stats.max_phrase_words;
  fv.prf = static_cast<double>(cand.occurrences.size()) / stats.max_phrase_freq;

  const auto& tokens = doc.sentences[s].tokens;
  int best_word_freq = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[w + i];
    if (is_function_word(t.pos)) continue;
    const auto it = stats.content_lemma_freq.find(t.lemma);
    if (it != stats.content_lemma_freq.end()) best_word_freq = std::max(best_word_freq, it->second);
  }
  // Zero only under custom rule sets admitting function-word-only phrases.
  fv.wrf = static_cast<double>(best_word_freq) / stats.max_word_freq;

  fv.nsl = opts.nsl_early_high ? static_cast<double>(S - s) / S
                               : static_cast<double>(s + 1) / S;
  fv.npl = opts.npl_early_high ? static_cast<double>(L - w) / L
                               : static_cast<double>(w + 1) / L;
  fv.nplen = static_cast<double>(n) / L;
  fv.scv = doc.sentences[s].contains_verb ? 0.0 : 1.0;
  fv.iit = doc.sentences[s].is_question ? 1.0 : 0.0;
  return fv;
}

std::vector<FeatureVector> compute_all_features(const std::vector<CandidatePhrase>& candidates,
                                                const AnalyzedDocument& doc,
                                                const DocumentStats& stats,
                                                const FeatureOptions& opts, Exec exec) {
  std::vector<FeatureVector> out(candidates.size());
  parallel_for(candidates.size(), exec,
               [&](std::size_t i) { out[i] = compute_features(candidates[i], doc, stats, opts); });
  return out;
}

}  // namespace kpas
