#ifndef KPAS_TEXT_HPP
#define KPAS_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace kpas {

struct RawDocument {
  std::string text;       // UTF-8
  std::string source_id;  // opaque identifier (usually the input path)
};

// One sentence unit of the normalized text. start/end are byte offsets,
// [start, end) never includes the terminator itself.
struct SentenceSpan {
  int index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  char32_t terminator = 0;  // 0 = closed by end of text
};

struct SegmenterOptions {
  // When set, only { . ؟ ? ! } terminate a unit; the clause-level delimiters
  // (Arabic/Latin comma, semicolon, colon, dash) are left inside sentences.
  bool strong_only = false;
};

// Collapses whitespace runs to a single space, trims the ends, converts
// Arabic-Indic digits to ASCII digits and drops tatweel. Idempotent.
// Throws InvalidEncoding if raw is not valid UTF-8.
std::string normalize_text(std::string_view raw);

// Splits normalized text into sentence units on the delimiter set.
// Empty units (whitespace only) are dropped; indices are consecutive from 0.
std::vector<SentenceSpan> segment_sentences(std::string_view text,
                                            const SegmenterOptions& opts = {});

bool is_sentence_delimiter(char32_t cp);  // the non-dash delimiter set
bool is_strong_delimiter(char32_t cp);
bool is_question_terminator(char32_t cp);

inline std::string_view span_text(std::string_view text, const SentenceSpan& s) {
  return text.substr(s.start, s.end - s.start);
}

}  // namespace kpas

#endif  // KPAS_TEXT_HPP
