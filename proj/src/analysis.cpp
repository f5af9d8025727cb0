#include "kpas/analysis.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kpas/errors.hpp"
#include "kpas/utf8.hpp"

namespace kpas {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kTagNames = {
    "VV", "NN", "NNS", "DTNN", "DTNNS", "JJ", "DTJJ", "RB", "IN", "PART", "NUM", "FW", "PUNC"};

constexpr char32_t kWaw = 0x0648;   // و
constexpr char32_t kFa = 0x0641;    // ف
constexpr char32_t kAlef = 0x0627;  // ا
constexpr char32_t kLam = 0x0644;   // ل

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

bool is_arabic_letter(char32_t cp) {
  if (cp >= 0x0621 && cp <= 0x064A) return true;  // base letters
  if (cp >= 0x064B && cp <= 0x0655) return true;  // harakat
  if (cp >= 0x0670 && cp <= 0x06D3) return true;  // extended letters
  return false;
}

bool is_latin_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

bool is_digit_cp(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Tags for the closed particle list of the naive analyzer.
struct ClosedEntry {
  const char* surface;
  PosTag tag;
};

const ClosedEntry kClosedList[] = {
    // prepositions
    {"في", PosTag::IN},
    {"من", PosTag::IN},
    {"إلى", PosTag::IN},
    {"الى", PosTag::IN},
    {"على", PosTag::IN},
    {"عن", PosTag::IN},
    {"مع", PosTag::IN},
    {"حتى", PosTag::IN},
    {"منذ", PosTag::IN},
    {"خلال", PosTag::IN},
    {"نحو", PosTag::IN},
    {"بين", PosTag::IN},
    {"عند", PosTag::IN},
    {"لدى", PosTag::IN},
    {"ضد", PosTag::IN},
    {"دون", PosTag::IN},
    {"حول", PosTag::IN},
    {"أمام", PosTag::IN},
    {"خلف", PosTag::IN},
    {"فوق", PosTag::IN},
    {"تحت", PosTag::IN},
    // particles, pronouns, connectives
    {"إن", PosTag::PART},
    {"أن", PosTag::PART},
    {"ان", PosTag::PART},
    {"لا", PosTag::PART},
    {"ما", PosTag::PART},
    {"لم", PosTag::PART},
    {"لن", PosTag::PART},
    {"قد", PosTag::PART},
    {"هل", PosTag::PART},
    {"بل", PosTag::PART},
    {"أو", PosTag::PART},
    {"او", PosTag::PART},
    {"ثم", PosTag::PART},
    {"لكن", PosTag::PART},
    {"إذا", PosTag::PART},
    {"كما", PosTag::PART},
    {"أي", PosTag::PART},
    {"سوف", PosTag::PART},
    {"معظم", PosTag::PART},
    {"هذا", PosTag::PART},
    {"هذه", PosTag::PART},
    {"ذلك", PosTag::PART},
    {"تلك", PosTag::PART},
    {"التي", PosTag::PART},
    {"الذي", PosTag::PART},
    {"الذين", PosTag::PART},
    {"هو", PosTag::PART},
    {"هي", PosTag::PART},
    {"هم", PosTag::PART},
    {"بها", PosTag::PART},
    {"به", PosTag::PART},
    {"لها", PosTag::PART},
    {"له", PosTag::PART},
    {"ماذا", PosTag::PART},
    {"لماذا", PosTag::PART},
    {"كيف", PosTag::PART},
    {"متى", PosTag::PART},
    {"أين", PosTag::PART},
    // adverbs
    {"الآن", PosTag::RB},
    {"أيضا", PosTag::RB},
    {"أيضاً", PosTag::RB},
    {"فقط", PosTag::RB},
    {"هنا", PosTag::RB},
    {"هناك", PosTag::RB},
};

const std::unordered_map<std::string, PosTag>& closed_list() {
  static const std::unordered_map<std::string, PosTag> map = [] {
    std::unordered_map<std::string, PosTag> m;
    for (const auto& e : kClosedList) m.emplace(e.surface, e.tag);
    return m;
  }();
  return map;
}

}  // namespace

std::string_view to_string(PosTag tag) { return kTagNames[static_cast<int>(tag)]; }

std::optional<PosTag> parse_pos_tag(std::string_view text) {
  for (int i = 0; i < kPosTagCount; ++i) {
    if (kTagNames[i] == text) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

const std::vector<std::string>& default_interrogatives() {
  static const std::vector<std::string> words = {
      "هل", "ماذا", "لماذا", "كيف", "متى", "أين", "من", "ما", "أ"};
  return words;
}

bool detect_question(const Sentence& sentence, char32_t terminator,
                     const std::vector<std::string>& interrogatives) {
  if (is_question_terminator(terminator)) return true;
  if (sentence.tokens.empty()) return false;
  const Token& head = sentence.tokens.front();
  std::string surface = head.surface;
  if (head.conj_prefix) {
    // Compare past the attached conjunction letter.
    std::size_t i = 0;
    char32_t cp;
    if (utf8::decode_next(surface, i, cp) && (cp == kWaw || cp == kFa)) {
      surface = surface.substr(i);
    }
  }
  for (const auto& w : interrogatives) {
    if (surface == w) return true;
  }
  return false;
}

void refresh_sentence_flags(Sentence& sentence, const std::vector<std::string>& interrogatives) {
  sentence.contains_verb = false;
  for (const Token& t : sentence.tokens) {
    if (t.pos == PosTag::VV) {
      sentence.contains_verb = true;
      break;
    }
  }
  sentence.is_question = detect_question(sentence, sentence.terminator, interrogatives);
}

AnalyzedDocument read_pretagged(std::istream& in) {
  AnalyzedDocument doc;
  Sentence current;
  std::string line;
  std::size_t line_no = 0;

  auto close_sentence = [&](char32_t terminator) {
    if (current.tokens.empty()) return;
    current.terminator = terminator;
    for (std::size_t i = 0; i < current.tokens.size(); ++i) {
      current.tokens[i].sent_index = static_cast<int>(doc.sentences.size());
      current.tokens[i].word_index = static_cast<int>(i);
    }
    refresh_sentence_flags(current);
    doc.token_count += current.tokens.size();
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields[0] == "#SENT") {
      char32_t terminator = 0;
      if (fields.size() > 2) throw ParseError(line_no, "too many fields on #SENT line");
      if (fields.size() == 2 && !fields[1].empty()) {
        std::size_t i = 0;
        if (!utf8::decode_next(fields[1], i, terminator) || i != fields[1].size()) {
          throw ParseError(line_no, "terminator must be a single character");
        }
      }
      close_sentence(terminator);
      continue;
    }
    if (fields.size() < 4 || fields.size() > 6) {
      throw ParseError(line_no, "expected 4-6 tab-separated fields");
    }
    if (fields[0].empty()) throw ParseError(line_no, "empty surface form");
    const auto tag = parse_pos_tag(fields[2]);
    if (!tag) throw UnknownTag(line_no, fields[2]);
    if (fields[3] != "0" && fields[3] != "1") {
      throw ParseError(line_no, "conj flag must be 0 or 1");
    }
    Token tok;
    tok.surface = fields[0];
    tok.lemma = fields[1];
    tok.pos = *tag;
    tok.conj_prefix = fields[3] == "1";
    if (fields.size() >= 5) tok.root = fields[4];
    if (fields.size() >= 6) tok.pattern = fields[5];
    current.tokens.push_back(std::move(tok));
  }
  close_sentence(0);
  return doc;
}

AnalyzedDocument read_pretagged_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open token file: " + path);
  return read_pretagged(in);
}

void write_pretagged(const AnalyzedDocument& doc, std::ostream& out) {
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) {
      out << t.surface << '\t' << t.lemma << '\t' << to_string(t.pos) << '\t'
          << (t.conj_prefix ? '1' : '0');
      if (!t.root.empty() || !t.pattern.empty()) {
        out << '\t' << t.root << '\t' << t.pattern;
      }
      out << '\n';
    }
    out << "#SENT\t";
    if (s.terminator != 0) out << utf8::encode(s.terminator);
    out << '\n';
  }
}

void Lexicon::add(const std::string& form, const std::string& lemma, PosTag pos) {
  entries_[form] = Entry{lemma, pos};
}

const Lexicon::Entry* Lexicon::find(const std::string& form) const {
  const auto it = entries_.find(form);
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::from_stream(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw ParseError(line_no, "expected form<TAB>lemma<TAB>pos");
    const auto tag = parse_pos_tag(fields[2]);
    if (!tag) throw UnknownTag(line_no, fields[2]);
    lex.add(fields[0], fields[1], *tag);
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  return from_stream(in);
}

namespace {

struct WordReading {
  std::string lemma;
  PosTag pos = PosTag::NN;
  bool conj = false;
};

bool all_numeric(const std::u32string& w) {
  bool digit_seen = false;
  for (char32_t cp : w) {
    if (is_digit_cp(cp)) {
      digit_seen = true;
    } else if (cp != U'.' && cp != U',' && cp != U'%') {
      return false;
    }
  }
  return digit_seen;
}

bool has_arabic(const std::u32string& w) {
  for (char32_t cp : w) {
    if (is_arabic_letter(cp)) return true;
  }
  return false;
}

PosTag definite_variant(PosTag base) {
  switch (base) {
    case PosTag::NN:
      return PosTag::DTNN;
    case PosTag::NNS:
      return PosTag::DTNNS;
    case PosTag::JJ:
      return PosTag::DTJJ;
    default:
      return base;
  }
}

bool starts_with_article(const std::u32string& w) {
  return w.size() >= 4 && w[0] == kAlef && w[1] == kLam;
}

// Closed list, numeral, foreign-word and lexicon checks on the exact form.
std::optional<WordReading> direct_reading(const std::u32string& w, const std::string& w8,
                                          const Lexicon& lexicon) {
  const auto closed = closed_list().find(w8);
  if (closed != closed_list().end()) {
    return WordReading{w8, closed->second, false};
  }
  if (all_numeric(w)) return WordReading{w8, PosTag::NUM, false};
  if (!has_arabic(w)) return WordReading{w8, PosTag::FW, false};
  if (const auto* e = lexicon.find(w8)) return WordReading{e->lemma, e->pos, false};
  return std::nullopt;
}

// Article-stripped lexicon lookup: ال + form.
std::optional<WordReading> article_reading(const std::u32string& w, const Lexicon& lexicon) {
  if (!starts_with_article(w)) return std::nullopt;
  const std::u32string core(w.begin() + 2, w.end());
  const std::string core8 = utf8::encode(core);
  if (const auto* e = lexicon.find(core8)) {
    return WordReading{e->lemma, definite_variant(e->pos), false};
  }
  return std::nullopt;
}

WordReading analyze_word(const std::u32string& w, const Lexicon& lexicon) {
  const std::string w8 = utf8::encode(w);
  if (auto r = direct_reading(w, w8, lexicon)) return *r;
  if (auto r = article_reading(w, lexicon)) return *r;

  const bool conj_candidate = w.size() >= 2 && (w[0] == kWaw || w[0] == kFa);
  if (conj_candidate) {
    const std::u32string rest(w.begin() + 1, w.end());
    const std::string rest8 = utf8::encode(rest);
    if (auto r = direct_reading(rest, rest8, lexicon)) {
      r->conj = true;
      return *r;
    }
    if (auto r = article_reading(rest, lexicon)) {
      r->conj = true;
      return *r;
    }
  }

  // Unknown word: keep the clitic analysis, fall back to noun.
  WordReading r;
  std::u32string rest = w;
  if (conj_candidate && w.size() >= 3) {
    rest.erase(rest.begin());
    r.conj = true;
  }
  if (starts_with_article(rest)) {
    r.pos = PosTag::DTNN;
    r.lemma = utf8::encode(std::u32string(rest.begin() + 2, rest.end()));
  } else {
    r.pos = PosTag::NN;
    r.lemma = utf8::encode(rest);
  }
  return r;
}

bool keep_in_word(char32_t cp) {
  return is_arabic_letter(cp) || is_latin_letter(cp) || is_digit_cp(cp);
}

// Splits a sentence span into words, trimming surrounding punctuation.
std::vector<std::u32string> split_words(std::u32string_view text) {
  std::vector<std::u32string> words;
  std::u32string word;
  auto flush = [&] {
    // Trim anything that is not letter/digit from the edges.
    std::size_t b = 0, e = word.size();
    while (b < e && !keep_in_word(word[b])) ++b;
    while (e > b && !keep_in_word(word[e - 1])) --e;
    if (e > b) words.emplace_back(word.begin() + b, word.begin() + e);
    word.clear();
  };
  for (char32_t cp : text) {
    if (cp == U' ') {
      flush();
    } else {
      word.push_back(cp);
    }
  }
  flush();
  return words;
}

}  // namespace

AnalyzedDocument naive_analyze(const RawDocument& doc, const std::vector<SentenceSpan>& spans,
                               const Lexicon& lexicon, const AnalyzerOptions& opts) {
  AnalyzedDocument out;
  for (const SentenceSpan& span : spans) {
    const std::u32string text = utf8::decode(span_text(doc.text, span));
    Sentence sentence;
    sentence.terminator = span.terminator;
    for (const std::u32string& w : split_words(text)) {
      const WordReading r = analyze_word(w, lexicon);
      Token tok;
      tok.surface = utf8::encode(w);
      tok.lemma = r.lemma;
      tok.pos = r.pos;
      tok.conj_prefix = r.conj;
      tok.sent_index = static_cast<int>(out.sentences.size());
      tok.word_index = static_cast<int>(sentence.tokens.size());
      sentence.tokens.push_back(std::move(tok));
    }
    if (sentence.tokens.empty()) continue;
    refresh_sentence_flags(sentence, opts.interrogatives);
    out.token_count += sentence.tokens.size();
    out.sentences.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace kpas
