#include "kpas/candidates.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "kpas/errors.hpp"

namespace kpas {

SyntaxRuleSet SyntaxRuleSet::defaults() {
  SyntaxRuleSet rules;
  rules.boundary = TagSet::of({PosTag::NN, PosTag::NNS, PosTag::DTNN, PosTag::DTNNS, PosTag::JJ,
                               PosTag::DTJJ, PosTag::NUM, PosTag::FW});
  rules.content = rules.boundary;
  rules.bridge = TagSet::of({PosTag::IN});
  rules.allow_conj_start = false;
  return rules;
}

void SyntaxRuleSet::validate() const {
  if (!boundary.subset_of(content)) {
    throw Error("syntax rules: boundary tags must be a subset of content tags");
  }
  if (!bridge.intersect(boundary).empty()) {
    throw Error("syntax rules: bridge tags may not overlap boundary tags");
  }
}

namespace {

TagSet parse_tag_list(const std::string& value, std::size_t line_no) {
  TagSet set;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim spaces
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    const std::string name = item.substr(b, e - b + 1);
    const auto tag = parse_pos_tag(name);
    if (!tag) throw UnknownTag(line_no, name);
    set.add(*tag);
  }
  return set;
}

}  // namespace

SyntaxRuleSet SyntaxRuleSet::from_stream(std::istream& in) {
  SyntaxRuleSet rules;
  std::string line;
  std::size_t line_no = 0;
  bool saw_boundary = false, saw_content = false, saw_bridge = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'key: values'");
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 1);
    if (key == "boundary") {
      rules.boundary = parse_tag_list(value, line_no);
      saw_boundary = true;
    } else if (key == "content") {
      rules.content = parse_tag_list(value, line_no);
      saw_content = true;
    } else if (key == "bridge") {
      rules.bridge = parse_tag_list(value, line_no);
      saw_bridge = true;
    } else if (key == "allow_conj_start") {
      const auto b = value.find_first_not_of(" \t");
      const std::string v = b == std::string::npos ? "" : value.substr(b);
      if (v == "true") {
        rules.allow_conj_start = true;
      } else if (v == "false") {
        rules.allow_conj_start = false;
      } else {
        throw ParseError(line_no, "allow_conj_start must be true or false");
      }
    } else {
      throw ParseError(line_no, "unknown rules key '" + key + "'");
    }
  }
  if (!saw_boundary || !saw_content || !saw_bridge) {
    throw Error("rules file must define boundary, content and bridge tag lists");
  }
  rules.validate();
  return rules;
}

SyntaxRuleSet SyntaxRuleSet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rules file: " + path);
  return from_stream(in);
}

std::vector<PhraseOccurrence> generate_ngrams(const AnalyzedDocument& doc, int max_n) {
  std::vector<PhraseOccurrence> windows;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const int len = static_cast<int>(doc.sentences[s].tokens.size());
    for (int w = 0; w < len; ++w) {
      for (int n = 1; n <= max_n && w + n <= len; ++n) {
        windows.push_back(PhraseOccurrence{static_cast<int>(s), w, n});
      }
    }
  }
  return windows;
}

bool window_passes(const AnalyzedDocument& doc, const PhraseOccurrence& w,
                   const SyntaxRuleSet& rules) {
  const auto& tokens = doc.sentences[w.sent_index].tokens;
  if (!rules.allow_conj_start && tokens[w.word_index].conj_prefix) return false;
  for (int i = 0; i < w.length; ++i) {
    const PosTag tag = tokens[w.word_index + i].pos;
    if (tag == PosTag::VV || tag == PosTag::PUNC) return false;
    const bool at_edge = i == 0 || i == w.length - 1;
    if (at_edge) {
      if (!rules.boundary.contains(tag)) return false;
    } else if (!rules.content.contains(tag) && !rules.bridge.contains(tag)) {
      return false;
    }
  }
  return true;
}

std::vector<PhraseOccurrence> filter_by_syntax(const AnalyzedDocument& doc,
                                               const std::vector<PhraseOccurrence>& windows,
                                               const SyntaxRuleSet& rules) {
  std::vector<PhraseOccurrence> kept;
  kept.reserve(windows.size());
  for (const auto& w : windows) {
    if (window_passes(doc, w, rules)) kept.push_back(w);
  }
  return kept;
}

std::string abstract_form_of(const AnalyzedDocument& doc, const PhraseOccurrence& w) {
  const auto& tokens = doc.sentences[w.sent_index].tokens;
  std::string out;
  for (int i = 0; i < w.length; ++i) {
    if (i > 0) out += ' ';
    out += tokens[w.word_index + i].lemma;
  }
  return out;
}

std::string surface_form_of(const AnalyzedDocument& doc, const PhraseOccurrence& w) {
  const auto& tokens = doc.sentences[w.sent_index].tokens;
  std::string out;
  for (int i = 0; i < w.length; ++i) {
    if (i > 0) out += ' ';
    out += tokens[w.word_index + i].surface;
  }
  return out;
}

std::vector<CandidatePhrase> abstract_and_group(const AnalyzedDocument& doc,
                                                const std::vector<PhraseOccurrence>& kept) {
  std::vector<CandidatePhrase> candidates;
  std::unordered_map<std::string, std::size_t> index_of;
  for (const auto& w : kept) {
    std::string abstract = abstract_form_of(doc, w);
    const auto it = index_of.find(abstract);
    if (it == index_of.end()) {
      CandidatePhrase cand;
      cand.surface_example = surface_form_of(doc, w);
      cand.occurrences.push_back(w);
      cand.n = 1 + static_cast<int>(std::count(abstract.begin(), abstract.end(), ' '));
      index_of.emplace(abstract, candidates.size());
      cand.abstract_form = std::move(abstract);
      candidates.push_back(std::move(cand));
    } else {
      candidates[it->second].occurrences.push_back(w);
    }
  }
  // Generation order is (sentence, word, length), so per-candidate occurrence
  // lists are already sorted by (sentence, word).
  return candidates;
}

std::vector<CandidatePhrase> extract_candidates(const AnalyzedDocument& doc,
                                                const SyntaxRuleSet& rules, int max_n,
                                                Exec exec) {
  rules.validate();
  std::vector<std::vector<PhraseOccurrence>> per_sentence(doc.sentences.size());
  parallel_for(doc.sentences.size(), exec, [&](std::size_t s) {
    const int len = static_cast<int>(doc.sentences[s].tokens.size());
    auto& kept = per_sentence[s];
    for (int w = 0; w < len; ++w) {
      for (int n = 1; n <= max_n && w + n <= len; ++n) {
        const PhraseOccurrence occ{static_cast<int>(s), w, n};
        if (window_passes(doc, occ, rules)) kept.push_back(occ);
      }
    }
  });
  std::vector<PhraseOccurrence> kept;
  for (const auto& sk : per_sentence) kept.insert(kept.end(), sk.begin(), sk.end());
  return abstract_and_group(doc, kept);
}

}  // namespace kpas
