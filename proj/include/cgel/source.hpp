#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgel {

// 1-based line/column position in a source file. Columns count bytes.
struct SourcePos {
  int line = 1;
  int column = 1;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;
};

// String-valued features attachable to a constituent.
enum class FeatureKey { token, punct, subtoken, correct, lemma, note };

inline const char* feature_key_name(FeatureKey key) {
  switch (key) {
    case FeatureKey::token: return "t";
    case FeatureKey::punct: return "p";
    case FeatureKey::subtoken: return "subt";
    case FeatureKey::correct: return "correct";
    case FeatureKey::lemma: return "l";
    case FeatureKey::note: return "note";
  }
  return "?";
}

inline std::optional<FeatureKey> feature_key_from_name(std::string_view name) {
  if (name == "t") return FeatureKey::token;
  if (name == "p") return FeatureKey::punct;
  if (name == "subt") return FeatureKey::subtoken;
  if (name == "correct") return FeatureKey::correct;
  if (name == "l") return FeatureKey::lemma;
  if (name == "note") return FeatureKey::note;
  return std::nullopt;
}

// One key/value feature. Order and multiplicity are significant: repeated
// :p features keep their order, and a :p written before :t marks punctuation
// preceding the token while one written after marks trailing punctuation.
struct Feature {
  FeatureKey key;
  std::string value;
};

struct RawChild;

// One constituent exactly as written: category token, optional coindexation
// variable, features and function-tagged children in source order.
struct RawNode {
  std::string category;
  std::optional<std::string> coindex_var;
  std::vector<Feature> features;
  std::vector<RawChild> children;
  SourceSpan span;

  bool is_leaf() const { return children.empty(); }

  std::optional<std::string_view> feature(FeatureKey key) const {
    for (const Feature& f : features) {
      if (f.key == key) return std::string_view(f.value);
    }
    return std::nullopt;
  }
};

struct RawChild {
  std::string function;
  RawNode node;
};

// `# key = value` metadata line.
struct Header {
  std::string key;
  std::string value;
};

// A parsed tree entry: header lines plus the tree body.
struct SourceTree {
  std::vector<Header> headers;
  RawNode root;
  SourceSpan span;
  std::string raw_text;  // exact source slice; empty for synthesized trees

  std::optional<std::string_view> header(std::string_view key) const {
    for (const Header& h : headers) {
      if (h.key == key) return std::string_view(h.value);
    }
    return std::nullopt;
  }
};

}  // namespace cgel
