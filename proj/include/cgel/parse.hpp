#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgel/source.hpp"

namespace cgel {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : std::runtime_error(std::to_string(pos.line) + ":" +
                           std::to_string(pos.column) + ": " + message),
        pos_(pos),
        message_(message) {}

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

namespace detail {

// Nested constituents use recursion; cap the depth so hostile input fails
// with a ParseError instead of exhausting the stack.
inline constexpr int kMaxNestingDepth = 4096;

inline bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Category and variable tokens exclude '/' (it separates the variable from
// the category); function tokens admit it for the slash notation of
// composite functions.
inline bool is_token_char(char c, bool allow_slash) {
  if (is_space_char(c)) return false;
  if (c == '(' || c == ')' || c == ':' || c == '"') return false;
  if (c == '/' && !allow_slash) return false;
  return true;
}

inline bool is_variable_name(std::string_view s) {
  if (s.empty()) return false;
  char c0 = s[0];
  if (!((c0 >= 'A' && c0 <= 'Z') || (c0 >= 'a' && c0 <= 'z'))) return false;
  for (char c : s.substr(1)) {
    if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
          (c >= '0' && c <= '9'))) {
      return false;
    }
  }
  return true;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return offset_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[offset_]; }

  char get() {
    char c = text_[offset_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space(bool include_newlines) {
    while (!eof()) {
      char c = peek();
      if (c == '\n' && !include_newlines) return;
      if (!is_space_char(c)) return;
      get();
    }
  }

  std::string read_token(bool allow_slash) {
    std::string out;
    while (!eof() && is_token_char(peek(), allow_slash)) out.push_back(get());
    return out;
  }

  SourcePos pos() const { return {line_, column_}; }
  size_t offset() const { return offset_; }

 private:
  std::string_view text_;
  size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : cur_(text), text_(text) {}

  std::vector<SourceTree> corpus() {
    std::vector<SourceTree> trees;
    while (true) {
      cur_.skip_space(true);
      if (cur_.eof()) break;
      trees.push_back(entry());
    }
    return trees;
  }

  RawNode single_node() {
    cur_.skip_space(true);
    if (cur_.peek() != '(') {
      throw ParseError(cur_.pos(), "expected '(' to start a constituent");
    }
    RawNode node = constituent(0);
    cur_.skip_space(true);
    if (!cur_.eof()) {
      throw ParseError(cur_.pos(), "unexpected text after constituent");
    }
    return node;
  }

 private:
  SourceTree entry() {
    SourceTree tree;
    SourcePos begin = cur_.pos();
    size_t begin_offset = cur_.offset();
    SourcePos last_header = begin;
    while (cur_.peek() == '#') {
      last_header = cur_.pos();
      tree.headers.push_back(header_line());
      cur_.skip_space(true);
    }
    if (cur_.eof()) {
      throw ParseError(last_header, "header block without a tree");
    }
    if (cur_.peek() != '(') {
      throw ParseError(cur_.pos(),
                       tree.headers.empty()
                           ? "junk between trees: expected '#' or '('"
                           : "expected '(' to start the tree for this entry");
    }
    tree.root = constituent(0);
    size_t end_offset = cur_.offset();
    // Only horizontal whitespace may follow the tree on its closing line.
    cur_.skip_space(false);
    if (!cur_.eof() && cur_.peek() != '\n') {
      throw ParseError(cur_.pos(), "junk between trees: unexpected text after tree");
    }
    tree.span = {begin, tree.root.span.end};
    tree.raw_text = std::string(text_.substr(begin_offset, end_offset - begin_offset));
    return tree;
  }

  Header header_line() {
    SourcePos begin = cur_.pos();
    cur_.get();  // '#'
    std::string rest;
    while (!cur_.eof() && cur_.peek() != '\n') rest.push_back(cur_.get());
    if (!rest.empty() && rest.back() == '\r') rest.pop_back();

    size_t eq = rest.find('=');
    if (eq == std::string::npos) {
      throw ParseError(begin, "header line is missing '='");
    }
    std::string key = rest.substr(0, eq);
    // trim surrounding spaces of the key
    size_t k0 = key.find_first_not_of(" \t");
    size_t k1 = key.find_last_not_of(" \t");
    key = k0 == std::string::npos ? std::string() : key.substr(k0, k1 - k0 + 1);
    if (key.empty()) {
      throw ParseError(begin, "header line has an empty key");
    }
    std::string value = rest.substr(eq + 1);
    if (!value.empty() && value.front() == ' ') value.erase(value.begin());
    return {key, value};
  }

  RawNode constituent(int depth) {
    if (depth > kMaxNestingDepth) {
      throw ParseError(cur_.pos(), "constituent nesting exceeds " +
                                       std::to_string(kMaxNestingDepth) +
                                       " levels");
    }
    SourcePos open = cur_.pos();
    cur_.get();  // '('
    RawNode node;
    node.span.begin = open;

    cur_.skip_space(true);
    SourcePos token_pos = cur_.pos();
    std::string first = cur_.read_token(false);
    if (first.empty()) {
      if (cur_.peek() == '/') {
        throw ParseError(cur_.pos(), "'/' without a preceding coindexation variable");
      }
      throw ParseError(cur_.pos(), "expected category token");
    }
    cur_.skip_space(true);
    if (cur_.peek() == '/') {
      if (!is_variable_name(first)) {
        throw ParseError(token_pos, "invalid coindexation variable '" + first + "'");
      }
      cur_.get();  // '/'
      cur_.skip_space(true);
      std::string category = cur_.read_token(false);
      if (category.empty()) {
        throw ParseError(cur_.pos(), "expected category after '/'");
      }
      node.coindex_var = first;
      node.category = category;
    } else {
      node.category = first;
    }

    while (true) {
      cur_.skip_space(true);
      if (cur_.eof()) {
        throw ParseError(open, "unbalanced parenthesis");
      }
      char c = cur_.peek();
      if (c == ')') {
        cur_.get();
        node.span.end = cur_.pos();
        return node;
      }
      if (c == ':') {
        SourcePos tag_pos = cur_.pos();
        cur_.get();
        std::string name = cur_.read_token(true);
        if (name.empty()) {
          throw ParseError(tag_pos, "expected function or feature name after ':'");
        }
        cur_.skip_space(true);
        if (cur_.peek() == '(') {
          RawNode child = constituent(depth + 1);
          node.children.push_back({std::move(name), std::move(child)});
        } else if (cur_.peek() == '"') {
          auto key = feature_key_from_name(name);
          if (!key) {
            throw ParseError(tag_pos,
                             "feature key ':" + name +
                                 "' is not one of :t :p :subt :correct :l :note");
          }
          node.features.push_back({*key, quoted_string()});
        } else {
          throw ParseError(cur_.pos(),
                           "expected '(' or '\"' after ':" + name + "'");
        }
        continue;
      }
      if (c == '(') {
        throw ParseError(cur_.pos(), "child constituent must carry a ':Function' tag");
      }
      throw ParseError(cur_.pos(), std::string("unexpected character '") + c +
                                       "' in constituent");
    }
  }

  std::string quoted_string() {
    SourcePos open = cur_.pos();
    cur_.get();  // '"'
    std::string out;
    while (true) {
      if (cur_.eof() || cur_.peek() == '\n') {
        throw ParseError(open, "unterminated string");
      }
      char c = cur_.get();
      if (c == '"') return out;
      if (c == '\\') {
        if (cur_.eof()) throw ParseError(open, "unterminated string");
        SourcePos esc_pos = cur_.pos();
        char d = cur_.get();
        if (d == '"' || d == '\\') {
          out.push_back(d);
        } else {
          throw ParseError(esc_pos, std::string("invalid escape '\\") + d +
                                        "' (only \\\" and \\\\ are recognized)");
        }
        continue;
      }
      out.push_back(c);
    }
  }

  Cursor cur_;
  std::string_view text_;
};

}  // namespace detail

// Parses a whole .cgel file: one SourceTree per entry, each entry being a
// block of '#' headers followed by a parenthesized tree. Blank lines between
// entries are insignificant; anything else between trees is an error.
inline std::vector<SourceTree> parse_corpus(std::string_view text) {
  return detail::TreeParser(text).corpus();
}

// Parses a single parenthesized constituent.
inline RawNode parse_node(std::string_view text) {
  return detail::TreeParser(text).single_node();
}

}  // namespace cgel
