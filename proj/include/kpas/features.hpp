#ifndef KPAS_FEATURES_HPP
#define KPAS_FEATURES_HPP

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpas/analysis.hpp"
#include "kpas/candidates.hpp"
#include "kpas/parallel.hpp"

namespace kpas {

constexpr int kFeatureCount = 8;

extern const std::array<std::string_view, kFeatureCount> kFeatureNames;

// Per-document denominators shared by every candidate's feature vector.
struct DocumentStats {
  int max_phrase_words = 3;
  int max_phrase_freq = 1;  // occurrences of the most frequent abstract form
  int max_word_freq = 1;    // repetitions of the most repeated content lemma
  int sentence_count = 0;
  std::vector<int> sentence_token_counts;
  std::unordered_map<std::string, int> content_lemma_freq;
};

DocumentStats compute_stats(const AnalyzedDocument& doc,
                            const std::vector<CandidatePhrase>& candidates,
                            int max_phrase_words = 3);

struct FeatureVector {
  double npw = 0;    // phrase word count / max phrase words
  double prf = 0;    // abstract-form frequency / most frequent phrase
  double wrf = 0;    // most repeated content lemma in phrase / max repetitions
  double nsl = 0;    // sentence position within document
  double npl = 0;    // phrase position within sentence
  double nplen = 0;  // phrase words / sentence words
  double scv = 0;    // 0 when the sentence contains a verb
  double iit = 0;    // 1 when the sentence is a question

  std::array<double, kFeatureCount> to_array() const {
    return {npw, prf, wrf, nsl, npl, nplen, scv, iit};
  }
  static FeatureVector from_array(const std::array<double, kFeatureCount>& a) {
    return FeatureVector{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
  }
};

struct FeatureOptions {
  // Position features score earlier sentences/words higher by default; the
  // flags let a model trained with the opposite convention be used as-is.
  bool nsl_early_high = true;
  bool npl_early_high = true;
};

// Position features anchor on the candidate's first occurrence.
// Throws InconsistentStats when a denominator is zero.
FeatureVector compute_features(const CandidatePhrase& cand, const AnalyzedDocument& doc,
                               const DocumentStats& stats, const FeatureOptions& opts = {});

std::vector<FeatureVector> compute_all_features(const std::vector<CandidatePhrase>& candidates,
                                                const AnalyzedDocument& doc,
                                                const DocumentStats& stats,
                                                const FeatureOptions& opts = {},
                                                Exec exec = Exec::serial);

}  // namespace kpas

#endif  // KPAS_FEATURES_HPP
