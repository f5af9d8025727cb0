#include "kpas/features.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "kpas/errors.hpp"
#include "oracles.hpp"

using namespace kpas;

namespace {

const std::string kFixtureDir = KPAS_FIXTURE_DIR;

AnalyzedDocument three_sentence_doc() {
  // Sentence 0: 2 tokens, sentence 1: 6 tokens, sentence 2: 3 tokens.
  std::istringstream in(
      "كتاب\tكتاب\tNN\t0\n"
      "قديم\tقديم\tJJ\t0\n"
      "#SENT\t.\n"
      "درس\tدرس\tVV\t0\n"
      "في\tفي\tIN\t0\n"
      "مشروع\tمشروع\tNN\t0\n"
      "تعليم\tتعليم\tNN\t0\n"
      "بعيد\tبعيد\tJJ\t0\n"
      "مفيد\tمفيد\tJJ\t0\n"
      "#SENT\t.\n"
      "خاتمة\tخاتمة\tNN\t0\n"
      "عن\tعن\tIN\t0\n"
      "مشروع\tمشروع\tNN\t0\n"
      "#SENT\t.\n");
  return read_pretagged(in);
}

}  // namespace

TEST_CASE("feature vector of a hand-positioned candidate") {
  const auto doc = three_sentence_doc();
  const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
  const DocumentStats stats = compute_stats(doc, candidates);

  // The 2-gram "مشروع تعليم" first occurs at sentence 1, word 2, in a
  // 6-token sentence: nsl = 2/3, npl = 4/6, nplen = 2/6, npw = 2/3.
  const CandidatePhrase* target = nullptr;
  for (const auto& c : candidates) {
    if (c.abstract_form == "مشروع تعليم") target = &c;
  }
  REQUIRE(target != nullptr);
  const FeatureVector fv = compute_features(*target, doc, stats);
  CHECK(fv.nsl == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(fv.npl == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
  CHECK(fv.nplen == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
  CHECK(fv.npw == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(fv.scv == 0.0);  // درس is a verb
  CHECK(fv.iit == 0.0);

  // Brute-force recomputation agrees bitwise.
  const FeatureVector ref = oracle::features_bruteforce(*target, candidates, doc);
  CHECK(fv.npw == ref.npw);
  CHECK(fv.prf == ref.prf);
  CHECK(fv.wrf == ref.wrf);
  CHECK(fv.nsl == ref.nsl);
  CHECK(fv.npl == ref.npl);
  CHECK(fv.nplen == ref.nplen);
  CHECK(fv.scv == ref.scv);
  CHECK(fv.iit == ref.iit);
}

TEST_CASE("sample sentence: most frequent phrase self-normalizes") {
  const auto doc = read_pretagged_file(kFixtureDir + "/table2.tok");
  const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
  const DocumentStats stats = compute_stats(doc, candidates);
  for (const auto& c : candidates) {
    const FeatureVector fv = compute_features(c, doc, stats);
    if (c.abstract_form == "تعليم") {
      CHECK(fv.prf == 1.0);  // every candidate occurs once here
      CHECK(fv.nsl == 1.0);  // only sentence
      CHECK(fv.scv == 0.0);  // تعتبر is a verb
    }
  }
}

TEST_CASE("single-candidate document self-normalizes") {
  std::istringstream in("نظام\tنظام\tNN\t0\n#SENT\t.\n");
  const auto doc = read_pretagged(in);
  const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
  REQUIRE(candidates.size() == 1);
  const DocumentStats stats = compute_stats(doc, candidates);
  const FeatureVector fv = compute_features(candidates[0], doc, stats);
  CHECK(fv.prf == 1.0);
  CHECK(fv.wrf == 1.0);
}

TEST_CASE("zero denominators raise InconsistentStats") {
  const auto doc = three_sentence_doc();
  const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
  DocumentStats stats = compute_stats(doc, candidates);
  stats.max_word_freq = 0;
  CHECK_THROWS_AS(compute_features(candidates[0], doc, stats), InconsistentStats);

  DocumentStats stats2 = compute_stats(doc, candidates);
  stats2.sentence_count = 0;
  CHECK_THROWS_AS(compute_features(candidates[0], doc, stats2), InconsistentStats);
}

TEST_CASE("direction flags flip the position features") {
  const auto doc = three_sentence_doc();
  const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
  const DocumentStats stats = compute_stats(doc, candidates);
  FeatureOptions late;
  late.nsl_early_high = false;
  late.npl_early_high = false;
  for (const auto& c : candidates) {
    const FeatureVector early_fv = compute_features(c, doc, stats);
    const FeatureVector late_fv = compute_features(c, doc, stats, late);
    const auto& first = c.occurrences.front();
    const int S = stats.sentence_count;
    const int L = stats.sentence_token_counts[first.sent_index];
    CHECK(late_fv.nsl == doctest::Approx((first.sent_index + 1.0) / S).epsilon(1e-15));
    CHECK(late_fv.npl == doctest::Approx((first.word_index + 1.0) / L).epsilon(1e-15));
    CHECK(early_fv.nplen == late_fv.nplen);
    CHECK(early_fv.prf == late_fv.prf);
  }
}

TEST_CASE("feature invariants hold over generated documents") {
  std::mt19937 rng(991);
  for (int iter = 0; iter < 300; ++iter) {
    const auto doc = oracle::random_document(rng, 5, 8);
    const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
    if (candidates.empty()) continue;
    const DocumentStats stats = compute_stats(doc, candidates);
    CHECK(stats.max_word_freq >= stats.max_phrase_freq);

    bool any_prf_one = false, any_wrf_one = false;
    for (const auto& c : candidates) {
      const FeatureVector fv = compute_features(c, doc, stats);
      for (double v : {fv.npw, fv.prf, fv.wrf, fv.nsl, fv.npl, fv.nplen}) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
      }
      CHECK((fv.scv == 0.0 || fv.scv == 1.0));
      CHECK((fv.iit == 0.0 || fv.iit == 1.0));
      const bool npw_exact =
          fv.npw == 1.0 / 3.0 || fv.npw == 2.0 / 3.0 || fv.npw == 1.0;
      CHECK(npw_exact);
      any_prf_one = any_prf_one || fv.prf == 1.0;
      any_wrf_one = any_wrf_one || fv.wrf == 1.0;
      // scv complements the verb flag of the anchoring sentence.
      const auto& sent = doc.sentences[c.occurrences.front().sent_index];
      CHECK(fv.scv + (sent.contains_verb ? 1.0 : 0.0) == 1.0);
    }
    CHECK(any_prf_one);
    CHECK(any_wrf_one);
  }
}

TEST_CASE("pipeline features equal the brute-force oracle bitwise") {
  std::mt19937 rng(20217);
  for (int iter = 0; iter < 120; ++iter) {
    const auto doc = oracle::random_document(rng, 5, 8);
    const auto candidates = extract_candidates(doc, SyntaxRuleSet::defaults());
    const DocumentStats stats = compute_stats(doc, candidates);
    for (const auto& c : candidates) {
      const FeatureVector fv = compute_features(c, doc, stats);
      const FeatureVector ref = oracle::features_bruteforce(c, candidates, doc);
      CHECK(fv.npw == ref.npw);
      CHECK(fv.prf == ref.prf);
      CHECK(fv.wrf == ref.wrf);
      CHECK(fv.nsl == ref.nsl);
      CHECK(fv.npl == ref.npl);
      CHECK(fv.nplen == ref.nplen);
      CHECK(fv.scv == ref.scv);
      CHECK(fv.iit == ref.iit);
    }
  }
}
