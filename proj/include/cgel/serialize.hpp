#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgel/source.hpp"

namespace cgel {

enum class SerializeStyle {
  canonical,  // 4-space indentation, one constituent per line
  preserved,  // echo the original source bytes
};

inline std::string escape_string(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

namespace detail {

inline void serialize_node_into(const RawNode& node, int depth,
                                std::string& out) {
  out.push_back('(');
  if (node.coindex_var) {
    out += *node.coindex_var;
    out += " / ";
  }
  out += node.category;
  for (const Feature& f : node.features) {
    out += " :";
    out += feature_key_name(f.key);
    out += " \"";
    out += escape_string(f.value);
    out.push_back('"');
  }
  for (const RawChild& child : node.children) {
    out.push_back('\n');
    out.append(static_cast<size_t>(4 * (depth + 1)), ' ');
    out.push_back(':');
    out += child.function;
    out.push_back(' ');
    serialize_node_into(child.node, depth + 1, out);
  }
  out.push_back(')');
}

}  // namespace detail

inline std::string serialize_node(const RawNode& node) {
  std::string out;
  detail::serialize_node_into(node, 0, out);
  return out;
}

// Serializes one tree entry, trailing newline included. Canonical output
// reparses to a structurally identical tree; preserved output replays the
// bytes the entry was parsed from (synthesized trees fall back to canonical).
inline std::string serialize(const SourceTree& tree, SerializeStyle style) {
  if (style == SerializeStyle::preserved && !tree.raw_text.empty()) {
    std::string out = tree.raw_text;
    if (out.empty() || out.back() != '\n') out.push_back('\n');
    return out;
  }
  std::string out;
  for (const Header& h : tree.headers) {
    out += "# ";
    out += h.key;
    out += " =";
    if (!h.value.empty()) {
      out.push_back(' ');
      out += h.value;
    }
    out.push_back('\n');
  }
  detail::serialize_node_into(tree.root, 0, out);
  out.push_back('\n');
  return out;
}

// Entries separated by one blank line.
inline std::string serialize_corpus(const std::vector<SourceTree>& trees,
                                    SerializeStyle style) {
  std::string out;
  for (size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += serialize(trees[i], style);
  }
  return out;
}

}  // namespace cgel
