#ifndef KPAS_EVAL_HPP
#define KPAS_EVAL_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kpas {

struct GoldKeyphrases {
  std::string document_id;
  std::vector<std::string> phrases;  // lemma forms, deduplicated, load order

  bool matches(const std::string& extracted, bool fuzzy) const;
};

// One lemma-form phrase per line. Throws EmptyGold when no phrase remains.
GoldKeyphrases load_gold(std::istream& in, const std::string& document_id = "");
GoldKeyphrases load_gold_file(const std::string& path);

// precision = matches / |extracted|, recall = matches / |gold|.
// With fuzzy set, a pair matches when either lemma sequence is a contiguous
// subsequence of the other.
std::pair<double, double> keyphrase_pr(const std::vector<std::string>& extracted,
                                       const GoldKeyphrases& gold, bool fuzzy = false);

struct SimilarityReport {
  int overlap_count = 0;
  double precision = 0;  // overlap / |a|
  double recall = 0;     // overlap / |b|
  double jaccard = 0;
  double dice = 0;
};

// Sentence-set overlap between two summaries over the same index space.
// Throws EmptySummary when either side is empty.
SimilarityReport summary_similarity(const std::set<int>& a, const std::set<int>& b);

}  // namespace kpas

#endif  // KPAS_EVAL_HPP
