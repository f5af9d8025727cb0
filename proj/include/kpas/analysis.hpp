#ifndef KPAS_ANALYSIS_HPP
#define KPAS_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpas/text.hpp"

namespace kpas {

// Closed tag set. DT-prefixed tags assert the definite-article clitic is
// present on the surface form.
enum class PosTag {
  VV,
  NN,
  NNS,
  DTNN,
  DTNNS,
  JJ,
  DTJJ,
  RB,
  IN,
  PART,
  NUM,
  FW,
  PUNC,
};

constexpr int kPosTagCount = 13;

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view text);

inline bool is_definite(PosTag t) {
  return t == PosTag::DTNN || t == PosTag::DTNNS || t == PosTag::DTJJ;
}

// Function words are excluded when counting content-word repetitions.
inline bool is_function_word(PosTag t) {
  return t == PosTag::IN || t == PosTag::PART || t == PosTag::RB || t == PosTag::PUNC;
}

struct Token {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::NN;
  bool conj_prefix = false;  // leading و/ف clitic
  std::string root;          // optional
  std::string pattern;       // optional
  int sent_index = 0;
  int word_index = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  char32_t terminator = 0;
  bool contains_verb = false;
  bool is_question = false;
};

struct AnalyzedDocument {
  std::vector<Sentence> sentences;
  std::size_t token_count = 0;
};

// The default interrogative head words; a sentence starting with one of these
// is treated as a question even without a question mark.
const std::vector<std::string>& default_interrogatives();

bool detect_question(const Sentence& sentence, char32_t terminator,
                     const std::vector<std::string>& interrogatives = default_interrogatives());

// Recomputes contains_verb / is_question from the tokens and terminator.
void refresh_sentence_flags(Sentence& sentence,
                            const std::vector<std::string>& interrogatives = default_interrogatives());

// Pre-tagged token file: one token per line as
//   surface<TAB>lemma<TAB>pos<TAB>conj(0|1)[<TAB>root[<TAB>pattern]]
// and a line "#SENT<TAB><terminator>" closing each sentence (empty terminator
// field = end of text). Throws ParseError / UnknownTag.
AnalyzedDocument read_pretagged(std::istream& in);
AnalyzedDocument read_pretagged_file(const std::string& path);
void write_pretagged(const AnalyzedDocument& doc, std::ostream& out);

class Lexicon {
 public:
  struct Entry {
    std::string lemma;
    PosTag pos;
  };

  void add(const std::string& form, const std::string& lemma, PosTag pos);
  const Entry* find(const std::string& form) const;
  std::size_t size() const { return entries_.size(); }

  // One entry per line: form<TAB>lemma<TAB>pos
  static Lexicon from_stream(std::istream& in);
  static Lexicon from_file(const std::string& path);

 private:
  std::unordered_map<std::string, Entry> entries_;
};

struct AnalyzerOptions {
  std::vector<std::string> interrogatives = default_interrogatives();
};

// Shallow fallback analyzer: clitic stripping plus lexicon lookup. Total over
// any input; unknown Arabic words become nouns.
AnalyzedDocument naive_analyze(const RawDocument& doc, const std::vector<SentenceSpan>& spans,
                               const Lexicon& lexicon, const AnalyzerOptions& opts = {});

}  // namespace kpas

#endif  // KPAS_ANALYSIS_HPP
