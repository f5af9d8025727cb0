#include "kpas/eval.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "kpas/errors.hpp"
#include "kpas/summarizer.hpp"

namespace kpas {

namespace {

// True when `inner` occurs as a contiguous run inside `outer`.
bool subsequence(const std::vector<std::string>& inner, const std::vector<std::string>& outer) {
  if (inner.empty() || inner.size() > outer.size()) return false;
  for (std::size_t start = 0; start + inner.size() <= outer.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (outer[start + i] != inner[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

bool GoldKeyphrases::matches(const std::string& extracted, bool fuzzy) const {
  for (const std::string& g : phrases) {
    if (g == extracted) return true;
  }
  if (!fuzzy) return false;
  const auto ext = split_abstract_form(extracted);
  for (const std::string& g : phrases) {
    const auto gl = split_abstract_form(g);
    if (subsequence(ext, gl) || subsequence(gl, ext)) return true;
  }
  return false;
}

GoldKeyphrases load_gold(std::istream& in, const std::string& document_id) {
  GoldKeyphrases gold;
  gold.document_id = document_id;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t");
    std::string phrase = line.substr(b, e - b + 1);
    if (phrase[0] == '#') continue;
    if (std::find(gold.phrases.begin(), gold.phrases.end(), phrase) == gold.phrases.end()) {
      gold.phrases.push_back(std::move(phrase));
    }
  }
  if (gold.phrases.empty()) throw EmptyGold("gold keyphrase list is empty");
  return gold;
}

GoldKeyphrases load_gold_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gold file: " + path);
  return load_gold(in, path);
}

std::pair<double, double> keyphrase_pr(const std::vector<std::string>& extracted,
                                       const GoldKeyphrases& gold, bool fuzzy) {
  if (gold.phrases.empty()) throw EmptyGold("gold keyphrase list is empty");
  if (extracted.empty()) return {0.0, 0.0};
  int matched_extracted = 0;
  for (const std::string& e : extracted) {
    if (gold.matches(e, fuzzy)) ++matched_extracted;
  }
  // Recall counts covered gold phrases, so a fuzzy many-to-one match cannot
  // push it past 1.
  int matched_gold = 0;
  for (const std::string& g : gold.phrases) {
    const auto gl = split_abstract_form(g);
    for (const std::string& e : extracted) {
      const bool hit = fuzzy ? (g == e || subsequence(split_abstract_form(e), gl) ||
                                subsequence(gl, split_abstract_form(e)))
                             : g == e;
      if (hit) {
        ++matched_gold;
        break;
      }
    }
  }
  return {static_cast<double>(matched_extracted) / static_cast<double>(extracted.size()),
          static_cast<double>(matched_gold) / static_cast<double>(gold.phrases.size())};
}

SimilarityReport summary_similarity(const std::set<int>& a, const std::set<int>& b) {
  if (a.empty()) throw EmptySummary("first summary is empty");
  if (b.empty()) throw EmptySummary("second summary is empty");
  int overlap = 0;
  for (int idx : a) overlap += b.count(idx);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  SimilarityReport report;
  report.overlap_count = overlap;
  report.precision = overlap / na;
  report.recall = overlap / nb;
  report.jaccard = overlap / (na + nb - overlap);
  report.dice = 2.0 * overlap / (na + nb);
  return report;
}

}  // namespace kpas
