#ifndef KPAS_CANDIDATES_HPP
#define KPAS_CANDIDATES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kpas/analysis.hpp"
#include "kpas/parallel.hpp"

namespace kpas {

// One n-gram window; never crosses a sentence boundary.
struct PhraseOccurrence {
  int sent_index = 0;
  int word_index = 0;  // position of the first word within the sentence
  int length = 1;      // 1..max_n
};

struct CandidatePhrase {
  std::string abstract_form;    // space-joined lemma sequence
  std::string surface_example;  // surfaces of the first occurrence
  std::vector<PhraseOccurrence> occurrences;
  int n = 1;  // word count of the abstract form
};

// Small fixed set of POS tags.
class TagSet {
 public:
  void add(PosTag t) { bits_ |= bit(t); }
  bool contains(PosTag t) const { return bits_ & bit(t); }
  bool empty() const { return bits_ == 0; }
  TagSet intersect(TagSet other) const { return TagSet{static_cast<std::uint16_t>(bits_ & other.bits_)}; }
  bool subset_of(TagSet other) const { return (bits_ & ~other.bits_) == 0; }

  TagSet() = default;
  explicit TagSet(std::uint16_t bits) : bits_(bits) {}
  static TagSet of(std::initializer_list<PosTag> tags) {
    TagSet s;
    for (PosTag t : tags) s.add(t);
    return s;
  }

 private:
  static std::uint16_t bit(PosTag t) { return static_cast<std::uint16_t>(1u << static_cast<int>(t)); }
  std::uint16_t bits_ = 0;
};

struct SyntaxRuleSet {
  TagSet boundary;  // allowed at the first/last position
  TagSet content;   // allowed at any position
  TagSet bridge;    // allowed only at interior positions
  bool allow_conj_start = false;

  static SyntaxRuleSet defaults();

  // Throws Error if boundary ⊄ content or bridge ∩ boundary ≠ ∅.
  void validate() const;

  // Rules file with lines "boundary:", "content:", "bridge:" followed by
  // comma-separated tag names, plus optional "allow_conj_start: true|false".
  static SyntaxRuleSet from_stream(std::istream& in);
  static SyntaxRuleSet from_file(const std::string& path);
};

// Emits every within-sentence window of length 1..max_n, ordered by
// (sentence, start position, length).
std::vector<PhraseOccurrence> generate_ngrams(const AnalyzedDocument& doc, int max_n = 3);

bool window_passes(const AnalyzedDocument& doc, const PhraseOccurrence& w,
                   const SyntaxRuleSet& rules);

std::vector<PhraseOccurrence> filter_by_syntax(const AnalyzedDocument& doc,
                                               const std::vector<PhraseOccurrence>& windows,
                                               const SyntaxRuleSet& rules);

std::string abstract_form_of(const AnalyzedDocument& doc, const PhraseOccurrence& w);
std::string surface_form_of(const AnalyzedDocument& doc, const PhraseOccurrence& w);

// Merges windows with equal abstract form; candidates keep first-window order.
std::vector<CandidatePhrase> abstract_and_group(const AnalyzedDocument& doc,
                                                const std::vector<PhraseOccurrence>& kept);

// generate → filter → group. Window generation runs per sentence on the
// parallel route; the merge is ordered, so both routes give identical output.
std::vector<CandidatePhrase> extract_candidates(const AnalyzedDocument& doc,
                                                const SyntaxRuleSet& rules, int max_n = 3,
                                                Exec exec = Exec::serial);

}  // namespace kpas

#endif  // KPAS_CANDIDATES_HPP
