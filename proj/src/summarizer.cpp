#include "kpas/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "kpas/errors.hpp"
#include "kpas/utf8.hpp"

namespace kpas {

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::sum:
      return "sum";
    case Heuristic::count:
      return "count";
    case Heuristic::coverage:
      return "coverage";
    case Heuristic::merged:
      return "merged";
  }
  return "merged";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  if (name == "sum") return Heuristic::sum;
  if (name == "count") return Heuristic::count;
  if (name == "coverage") return Heuristic::coverage;
  if (name == "merged") return Heuristic::merged;
  return std::nullopt;
}

double SentenceScores::value(std::size_t sentence, Heuristic h) const {
  const SentenceScoreRow& row = rows[sentence];
  switch (h) {
    case Heuristic::sum:
      return row.nss;
    case Heuristic::count:
      return row.ncs;
    case Heuristic::coverage:
      return row.nks;
    case Heuristic::merged:
      return row.merged;
  }
  return row.merged;
}

std::vector<std::string> split_abstract_form(const std::string& abstract_form) {
  std::vector<std::string> lemmas;
  std::size_t pos = 0;
  while (pos <= abstract_form.size()) {
    const std::size_t space = abstract_form.find(' ', pos);
    if (space == std::string::npos) {
      if (pos < abstract_form.size()) lemmas.push_back(abstract_form.substr(pos));
      break;
    }
    if (space > pos) lemmas.push_back(abstract_form.substr(pos, space - pos));
    pos = space + 1;
  }
  return lemmas;
}

bool contains_keyphrase(const Sentence& sentence, const std::vector<std::string>& lemmas) {
  return count_keyphrase(sentence, lemmas) > 0;
}

int count_keyphrase(const Sentence& sentence, const std::vector<std::string>& lemmas) {
  if (lemmas.empty()) throw ArgumentEmpty("keyphrase has no lemmas");
  const auto& tokens = sentence.tokens;
  const std::size_t n = lemmas.size();
  if (tokens.size() < n) return 0;
  int hits = 0;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
    bool match = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (tokens[start + i].lemma != lemmas[i]) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  }
  return hits;
}

KeyphraseRanking rank_keyphrases(const std::vector<CandidatePhrase>& candidates,
                                 const std::vector<double>& lda_scores, int k) {
  if (candidates.size() != lda_scores.size()) {
    throw Error("candidate/score length mismatch");
  }
  if (k < 1) throw Error("top_k must be at least 1");

  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lda_scores[a] != lda_scores[b]) return lda_scores[a] > lda_scores[b];
    const PhraseOccurrence& fa = candidates[a].occurrences.front();
    const PhraseOccurrence& fb = candidates[b].occurrences.front();
    if (fa.sent_index != fb.sent_index) return fa.sent_index < fb.sent_index;
    if (fa.word_index != fb.word_index) return fa.word_index < fb.word_index;
    const std::string& sa = candidates[a].abstract_form;
    const std::string& sb = candidates[b].abstract_form;
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });

  KeyphraseRanking ranking;
  ranking.k = k;
  const std::size_t take = std::min<std::size_t>(k, order.size());
  ranking.entries.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    RankedKeyphrase entry;
    entry.candidate_index = order[i];
    entry.abstract_form = candidates[order[i]].abstract_form;
    entry.lda_score = lda_scores[order[i]];
    ranking.entries.push_back(std::move(entry));
  }
  if (ranking.entries.empty()) return ranking;

  // Raw discriminant scores can be negative; map them into (0.01, 1] so the
  // summing heuristic always adds positive mass in rank order.
  constexpr double kEps = 0.01;
  const double hi = ranking.entries.front().lda_score;
  const double lo = ranking.entries.back().lda_score;
  for (RankedKeyphrase& e : ranking.entries) {
    e.normalized_score = hi > lo ? kEps + (1.0 - kEps) * (e.lda_score - lo) / (hi - lo) : 1.0;
  }
  return ranking;
}

SentenceScores score_sentences(const AnalyzedDocument& doc, const KeyphraseRanking& ranking,
                               bool count_occurrences, Exec exec) {
  SentenceScores scores;
  scores.rows.assign(doc.sentences.size(), SentenceScoreRow{});

  std::vector<std::vector<std::string>> lemma_seqs;
  lemma_seqs.reserve(ranking.entries.size());
  for (const RankedKeyphrase& e : ranking.entries) {
    lemma_seqs.push_back(split_abstract_form(e.abstract_form));
  }

  // hit_counts[s][j]: occurrences of ranked phrase j in sentence s.
  std::vector<std::vector<int>> hit_counts(doc.sentences.size());
  parallel_for(doc.sentences.size(), exec, [&](std::size_t s) {
    auto& row = hit_counts[s];
    row.assign(lemma_seqs.size(), 0);
    for (std::size_t j = 0; j < lemma_seqs.size(); ++j) {
      row[j] = count_keyphrase(doc.sentences[s], lemma_seqs[j]);
    }
  });

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    SentenceScoreRow& row = scores.rows[s];
    for (std::size_t j = 0; j < lemma_seqs.size(); ++j) {
      const int hits = hit_counts[s][j];
      if (hits == 0) continue;
      const double mult = count_occurrences ? hits : 1;
      row.contained.insert(ranking.entries[j].abstract_form);
      row.nss_raw += mult * ranking.entries[j].normalized_score;
      row.ncs_raw += mult;
    }
  }

  // Coverage credits only the first sentence containing each phrase.
  for (std::size_t j = 0; j < lemma_seqs.size(); ++j) {
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      if (hit_counts[s][j] > 0) {
        scores.rows[s].nks_raw += 1;
        scores.rows[s].first_hits.insert(ranking.entries[j].abstract_form);
        break;
      }
    }
  }

  double max_nss = 0, max_ncs = 0, max_nks = 0;
  for (const SentenceScoreRow& row : scores.rows) {
    max_nss = std::max(max_nss, row.nss_raw);
    max_ncs = std::max(max_ncs, row.ncs_raw);
    max_nks = std::max(max_nks, row.nks_raw);
  }
  for (SentenceScoreRow& row : scores.rows) {
    row.nss = max_nss > 0 ? row.nss_raw / max_nss : 0;
    row.ncs = max_ncs > 0 ? row.ncs_raw / max_ncs : 0;
    row.nks = max_nks > 0 ? row.nks_raw / max_nks : 0;
    row.merged = row.nss + row.ncs + row.nks;
  }
  return scores;
}

Summary assemble_summary(const SentenceScores& scores, Heuristic heuristic, double ratio) {
  if (!(ratio > 0) || ratio > 1) throw Error("ratio must be in (0, 1]");
  const std::size_t sentence_count = scores.rows.size();
  if (sentence_count == 0) throw EmptyDocument("document has no sentences");

  const int budget = static_cast<int>(std::ceil(ratio * static_cast<double>(sentence_count) - 1e-9));

  std::vector<int> order(sentence_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores.value(a, heuristic) > scores.value(b, heuristic);
  });

  Summary summary;
  summary.heuristic = heuristic;
  summary.ratio = ratio;
  for (int idx : order) {
    if (static_cast<int>(summary.selected.size()) >= budget) break;
    if (scores.value(idx, heuristic) <= 0) break;
    summary.selected.push_back(idx);
  }
  std::sort(summary.selected.begin(), summary.selected.end());
  return summary;
}

SummarizeResult summarize(const AnalyzedDocument& doc, const LdaModel& model,
                          const SummarizeOptions& opts, Exec exec) {
  SummarizeResult result;
  result.summary.heuristic = opts.heuristic;
  result.summary.ratio = opts.ratio;
  result.candidates = extract_candidates(doc, opts.rules, opts.max_n, exec);
  if (result.candidates.empty()) {
    result.scores.rows.assign(doc.sentences.size(), SentenceScoreRow{});
    result.ranking.k = opts.top_k;
    return result;
  }
  const DocumentStats stats = compute_stats(doc, result.candidates, opts.max_n);
  result.features =
      compute_all_features(result.candidates, doc, stats, model.feature_options(), exec);
  result.lda_scores = score_all(model, result.features, exec);
  result.ranking = rank_keyphrases(result.candidates, result.lda_scores, opts.top_k);
  result.scores = score_sentences(doc, result.ranking, opts.count_occurrences, exec);
  result.summary = assemble_summary(result.scores, opts.heuristic, opts.ratio);
  return result;
}

std::string sentence_text(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence.tokens[i].surface;
  }
  return out;
}

std::string summary_text(const AnalyzedDocument& doc, const Summary& summary) {
  std::string out;
  for (std::size_t i = 0; i < summary.selected.size(); ++i) {
    const Sentence& s = doc.sentences[summary.selected[i]];
    if (i > 0) out += ' ';
    out += sentence_text(s);
    if (s.terminator != 0) out += utf8::encode(s.terminator);
  }
  return out;
}

}  // namespace kpas
