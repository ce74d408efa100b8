#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgel/diagnostics.hpp"
#include "cgel/graph.hpp"
#include "cgel/source.hpp"

namespace cgel {

// Word-level view of one terminal. Punctuation written before the :t token
// precedes the word in the sentence; punctuation written after it follows.
struct TokenRecord {
  std::optional<std::string> surface;
  std::optional<std::string> corrected;
  std::optional<std::string> lemma;
  std::vector<std::string> pre_punct;
  std::vector<std::string> post_punct;
  std::vector<std::string> subtokens;
  bool is_gap = false;
};

inline TokenRecord token_record(const GraphNode& node) {
  TokenRecord rec;
  rec.is_gap = node.category.is_gap();
  bool seen_token = false;
  for (const Feature& f : node.features) {
    switch (f.key) {
      case FeatureKey::token:
        rec.surface = f.value;
        seen_token = true;
        break;
      case FeatureKey::punct:
        (seen_token ? rec.post_punct : rec.pre_punct).push_back(f.value);
        break;
      case FeatureKey::subtoken:
        rec.subtokens.push_back(f.value);
        break;
      case FeatureKey::correct:
        rec.corrected = f.value;
        break;
      case FeatureKey::lemma:
        rec.lemma = f.value;
        break;
      case FeatureKey::note:
        break;
    }
  }
  return rec;
}

namespace detail {

inline std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') out.push_back(c);
  }
  return out;
}

}  // namespace detail

// The `sent` line: terminals in surface order, '--' standing in for gaps,
// inserted words contributed through their corrected form. Punctuation is
// dropped and no case normalization is applied (tokens are stored as
// written).
inline std::string reconstruct_sent(const ConstituentGraph& g) {
  std::string out;
  for (NodeId id : terminals(g)) {
    TokenRecord rec = token_record(g.at(id));
    std::string word;
    if (rec.is_gap) {
      word = "--";
    } else if (rec.surface) {
      word = *rec.surface;
    } else if (rec.corrected && !rec.corrected->empty()) {
      word = *rec.corrected;
    } else {
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

struct TextReconstruction {
  std::string text;
  // The `text` header keeps the original capitalization, which the tree does
  // not store; comparisons must ignore case.
  bool case_unrecoverable = true;
};

// The `text` line: overt tokens with their punctuation reattached. A
// punctuation cluster binds to the preceding word (no space) and is
// separated from the word it was stored on by a single space.
inline TextReconstruction reconstruct_text(const ConstituentGraph& g) {
  std::string out;
  for (NodeId id : terminals(g)) {
    TokenRecord rec = token_record(g.at(id));
    if (rec.is_gap || !rec.surface) continue;
    for (const std::string& p : rec.pre_punct) out += p;
    std::string word = *rec.surface;
    for (const std::string& p : rec.post_punct) word += p;
    if (!word.empty()) {
      if (!out.empty()) out.push_back(' ');
      out += word;
    }
  }
  return {out, true};
}

// The sentence after applying corrections: prefer :correct over :t, drop
// words deleted by an empty :correct, skip gaps.
inline std::string corrected_sentence(const ConstituentGraph& g) {
  std::string out;
  for (NodeId id : terminals(g)) {
    TokenRecord rec = token_record(g.at(id));
    if (rec.is_gap) continue;
    std::string word;
    if (rec.corrected) {
      if (rec.corrected->empty()) continue;
      word = *rec.corrected;
    } else if (rec.surface) {
      word = *rec.surface;
    } else {
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

// Cross-checks the sent/text headers against the tree. The sent comparison
// is case-insensitive (header capitalization is normalized); the text
// comparison additionally ignores whitespace. Missing headers are skipped.
inline std::vector<Diagnostic> check_headers(const SourceTree& tree,
                                             const ConstituentGraph& g) {
  std::vector<Diagnostic> diags;
  if (auto sent = tree.header("sent")) {
    std::string expected = reconstruct_sent(g);
    if (detail::lower_ascii(*sent) != detail::lower_ascii(expected)) {
      diags.push_back({RuleCode::H1, Severity::error, {},
                       "sent header does not match terminals: expected '" +
                           expected + "', header says '" + std::string(*sent) +
                           "'",
                       tree.span});
    }
  }
  if (auto text = tree.header("text")) {
    std::string expected = reconstruct_text(g).text;
    if (detail::strip_spaces(detail::lower_ascii(*text)) !=
        detail::strip_spaces(detail::lower_ascii(expected))) {
      diags.push_back({RuleCode::H2, Severity::warning, {},
                       "text header does not match tokens: expected '" +
                           expected + "', header says '" + std::string(*text) +
                           "'",
                       tree.span});
    }
  }
  return diags;
}

}  // namespace cgel
