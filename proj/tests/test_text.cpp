#include "kpas/text.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "kpas/errors.hpp"
#include "kpas/utf8.hpp"

using namespace kpas;

namespace {

// Character-level oracle: drop tatweel, map Arabic-Indic digits, squeeze
// whitespace. Written against codepoints directly, independent of
// normalize_text's single-pass logic.
std::string normalize_oracle(const std::string& raw) {
  std::u32string cps = utf8::decode(raw);
  std::u32string filtered;
  for (char32_t cp : cps) {
    if (cp == U'ـ') continue;
    if (cp >= U'٠' && cp <= U'٩') cp = U'0' + (cp - 0x0660);
    filtered.push_back(cp);
  }
  std::u32string out;
  for (char32_t cp : filtered) {
    const bool ws = cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
                    cp == U'\v' || cp == U' ';
    if (ws) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  while (!out.empty() && out.back() == U' ') out.pop_back();
  return utf8::encode(out);
}

std::string strip_ws_and_delims(const std::string& text) {
  std::u32string out;
  for (char32_t cp : utf8::decode(text)) {
    if (cp == U' ' || is_sentence_delimiter(cp) || cp == U'-' || cp == U'–') continue;
    out.push_back(cp);
  }
  return utf8::encode(out);
}

}  // namespace

TEST_CASE("normalize_text basics") {
  CHECK(normalize_text("") == "");
  CHECK(normalize_text("a  b") == "a b");
  CHECK(normalize_text("  a \t\n b  ") == "a b");
  CHECK(normalize_text("الـــحاسب") == normalize_oracle("الـــحاسب"));
  CHECK(normalize_text("الـــحاسب") == "الحاسب");
  CHECK(normalize_text("عام ٢٠١٠") == "عام 2010");
}

TEST_CASE("normalize_text is idempotent") {
  const std::vector<std::string> cases = {
      "", "a  b", "الـــحاسب", "عام ٢٠١٠ ،  ونص\tآخر", "x\n\n\ny", "ـ ـ ـ",
  };
  for (const auto& c : cases) {
    const std::string once = normalize_text(c);
    CHECK(normalize_text(once) == once);
    CHECK(once == normalize_oracle(c));
  }
}

TEST_CASE("normalize_text rejects invalid UTF-8") {
  std::string bad = "ok";
  bad.push_back(static_cast<char>(0xC3));  // truncated sequence
  CHECK_THROWS_AS(normalize_text(bad), InvalidEncoding);
  CHECK_THROWS_AS(normalize_text("\xFF\xFE"), InvalidEncoding);
  CHECK_THROWS_AS(normalize_text("\xED\xA0\x80"), InvalidEncoding);  // surrogate
}

TEST_CASE("segment_sentences on empty input") {
  CHECK(segment_sentences("").empty());
  CHECK(segment_sentences("   ").empty());
  CHECK(segment_sentences(".،؛").empty());  // delimiter runs yield no sentences
}

TEST_CASE("segment_sentences splits on the Arabic delimiter set") {
  // Hand-segmented oracle for the three-delimiter input.
  const std::string text = normalize_text("أ، ب. ج؟");
  const auto spans = segment_sentences(text);
  REQUIRE(spans.size() == 3);
  CHECK(span_text(text, spans[0]) == "أ");
  CHECK(span_text(text, spans[1]) == "ب");
  CHECK(span_text(text, spans[2]) == "ج");
  CHECK(spans[0].terminator == U'،');
  CHECK(spans[1].terminator == U'.');
  CHECK(spans[2].terminator == U'؟');
  for (std::size_t i = 0; i < spans.size(); ++i) CHECK(spans[i].index == static_cast<int>(i));
}

TEST_CASE("whitespace-surrounded hyphens split, intra-word hyphens do not") {
  const std::string text = normalize_text("قال - بعد تفكير - نعم.");
  const auto spans = segment_sentences(text);
  REQUIRE(spans.size() == 3);
  CHECK(span_text(text, spans[0]) == "قال");
  CHECK(span_text(text, spans[1]) == "بعد تفكير");
  CHECK(span_text(text, spans[2]) == "نعم");

  const std::string hyphenated = normalize_text("e-learning works.");
  const auto spans2 = segment_sentences(hyphenated);
  REQUIRE(spans2.size() == 1);
  CHECK(span_text(hyphenated, spans2[0]) == "e-learning works");
}

TEST_CASE("en dash between spaces is a clause break") {
  const std::string text = normalize_text("خلال استجابة – مع دمج الحد.");
  const auto spans = segment_sentences(text);
  REQUIRE(spans.size() == 2);
  CHECK(span_text(text, spans[0]) == "خلال استجابة");
  CHECK(spans[0].terminator == U'–');
}

TEST_CASE("empty segments between delimiters are dropped") {
  const std::string text = normalize_text("أ.. ب");
  const auto spans = segment_sentences(text);
  REQUIRE(spans.size() == 2);
  CHECK(span_text(text, spans[0]) == "أ");
  CHECK(span_text(text, spans[1]) == "ب");
  CHECK(spans[1].terminator == 0);
}

TEST_CASE("strong-terminator mode keeps clause delimiters inside sentences") {
  const std::string text = normalize_text("أولا، ثانيا. ثالثا؟");
  SegmenterOptions opts;
  opts.strong_only = true;
  const auto spans = segment_sentences(text, opts);
  REQUIRE(spans.size() == 2);
  CHECK(span_text(text, spans[0]) == "أولا، ثانيا");
  CHECK(span_text(text, spans[1]) == "ثالثا");
}

TEST_CASE("segmentation covers all non-delimiter text") {
  std::mt19937 rng(20240817);
  const std::vector<std::string> atoms = {"كلمة", "نص",  "تجربة", "word", "٣٤",
                                          "،",    ".",   "؟",     "-",    " - ",
                                          " ",    "  ",  ";",     "؛",    "!",
                                          "e-x",  "ـكلـ"};
  for (int iter = 0; iter < 200; ++iter) {
    std::string raw;
    const int pieces = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < pieces; ++i) {
      raw += atoms[rng() % atoms.size()];
      raw += ' ';
    }
    const std::string text = normalize_text(raw);
    const auto spans = segment_sentences(text);
    std::string joined;
    for (const auto& s : spans) joined += std::string(span_text(text, s));
    CHECK(strip_ws_and_delims(joined) == strip_ws_and_delims(text));
    // Spans are ordered, non-overlapping, indexed consecutively.
    for (std::size_t i = 0; i < spans.size(); ++i) {
      CHECK(spans[i].index == static_cast<int>(i));
      CHECK(spans[i].start < spans[i].end);
      if (i > 0) CHECK(spans[i - 1].end <= spans[i].start);
    }
    // No span text contains a splitting delimiter.
    for (const auto& s : spans) {
      for (char32_t cp : utf8::decode(std::string(span_text(text, s)))) {
        CHECK(!is_sentence_delimiter(cp));
      }
    }
  }
}
