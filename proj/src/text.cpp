#include "kpas/text.hpp"

#include "kpas/errors.hpp"
#include "kpas/utf8.hpp"

namespace kpas {
namespace utf8 {

namespace {

constexpr char32_t kReplacementLimit = 0x10FFFF;

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

bool decode_next(std::string_view s, std::size_t& i, char32_t& cp) {
  if (i >= s.size()) return false;
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    cp = b0;
    i += 1;
    return true;
  }
  int len;
  char32_t value;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
  } else {
    return false;
  }
  if (i + len > s.size()) return false;
  for (int k = 1; k < len; ++k) {
    const unsigned char b = static_cast<unsigned char>(s[i + k]);
    if (!is_continuation(b)) return false;
    value = (value << 6) | (b & 0x3F);
  }
  // Overlong encodings, surrogates and values beyond U+10FFFF are invalid.
  static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMinByLen[len]) return false;
  if (value >= 0xD800 && value <= 0xDFFF) return false;
  if (value > kReplacementLimit) return false;
  cp = value;
  i += len;
  return true;
}

bool is_valid(std::string_view s) {
  std::size_t i = 0;
  char32_t cp;
  while (i < s.size()) {
    if (!decode_next(s, i, cp)) return false;
  }
  return true;
}

std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  char32_t cp;
  while (i < s.size()) {
    if (!decode_next(s, i, cp)) throw InvalidEncoding(i);
    out.push_back(cp);
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) out += encode(cp);
  return out;
}

}  // namespace utf8

namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kArabicComma = 0x060C;      // ،
constexpr char32_t kArabicSemicolon = 0x061B;  // ؛
constexpr char32_t kArabicQuestion = 0x061F;   // ؟
constexpr char32_t kEnDash = 0x2013;           // – used as a clause break

inline bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == 0x00A0;
}

inline bool is_dash(char32_t cp) { return cp == U'-' || cp == kEnDash; }

}  // namespace

bool is_sentence_delimiter(char32_t cp) {
  switch (cp) {
    case U'.':
    case U',':
    case U';':
    case U':':
    case U'?':
    case U'!':
    case kArabicComma:
    case kArabicSemicolon:
    case kArabicQuestion:
      return true;
    default:
      return false;
  }
}

bool is_strong_delimiter(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == kArabicQuestion;
}

bool is_question_terminator(char32_t cp) {
  return cp == U'?' || cp == kArabicQuestion;
}

std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  char32_t cp;
  bool pending_space = false;
  bool at_start = true;
  while (i < raw.size()) {
    if (!utf8::decode_next(raw, i, cp)) throw InvalidEncoding(i);
    if (is_space_cp(cp)) {
      pending_space = true;
      continue;
    }
    if (cp == kTatweel) continue;
    if (cp >= 0x0660 && cp <= 0x0669) cp = U'0' + (cp - 0x0660);
    if (pending_space && !at_start) out.push_back(' ');
    pending_space = false;
    at_start = false;
    out += utf8::encode(cp);
  }
  return out;
}

std::vector<SentenceSpan> segment_sentences(std::string_view text,
                                            const SegmenterOptions& opts) {
  std::vector<SentenceSpan> spans;

  // One decoding pass, keeping byte offsets so spans can slice the original.
  std::vector<char32_t> cps;
  std::vector<std::size_t> offsets;  // offsets[k] = byte offset of cps[k]
  {
    std::size_t i = 0;
    char32_t cp;
    while (i < text.size()) {
      offsets.push_back(i);
      if (!utf8::decode_next(text, i, cp)) throw InvalidEncoding(i);
      cps.push_back(cp);
    }
    offsets.push_back(text.size());
  }

  auto splits_here = [&](std::size_t k) {
    const char32_t cp = cps[k];
    if (opts.strong_only) return is_strong_delimiter(cp);
    if (is_sentence_delimiter(cp)) return true;
    if (is_dash(cp)) {
      // Dashes split only between whitespace, so hyphenated words survive.
      const bool left_ok = k == 0 || is_space_cp(cps[k - 1]);
      const bool right_ok = k + 1 == cps.size() || is_space_cp(cps[k + 1]);
      return left_ok && right_ok;
    }
    return false;
  };

  auto emit = [&](std::size_t from_cp, std::size_t to_cp, char32_t terminator) {
    while (from_cp < to_cp && is_space_cp(cps[from_cp])) ++from_cp;
    while (to_cp > from_cp && is_space_cp(cps[to_cp - 1])) --to_cp;
    if (from_cp == to_cp) return;
    SentenceSpan span;
    span.index = static_cast<int>(spans.size());
    span.start = offsets[from_cp];
    span.end = offsets[to_cp];
    span.terminator = terminator;
    spans.push_back(span);
  };

  std::size_t seg_start = 0;
  for (std::size_t k = 0; k < cps.size(); ++k) {
    if (splits_here(k)) {
      emit(seg_start, k, cps[k]);
      seg_start = k + 1;
    }
  }
  emit(seg_start, cps.size(), 0);
  return spans;
}

}  // namespace kpas
