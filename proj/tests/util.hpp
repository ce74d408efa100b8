#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgel/cgel.hpp"

namespace testutil {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(CGEL_FIXTURE_DIR) / name;
}

inline std::string fixture_text(const std::string& name) {
  return read_file(fixture_path(name));
}

inline cgel::SourceTree fixture_tree(const std::string& name) {
  auto trees = cgel::parse_corpus(fixture_text(name));
  if (trees.size() != 1) {
    throw std::runtime_error(name + ": expected exactly one tree");
  }
  return trees.front();
}

// All well-formed corpus fixtures (the invalid/ directory is excluded).
inline std::vector<std::string> corpus_fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry :
       std::filesystem::directory_iterator(CGEL_FIXTURE_DIR)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cgel") {
      names.push_back(entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline std::vector<std::string> invalid_fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(
           std::filesystem::path(CGEL_FIXTURE_DIR) / "invalid")) {
    if (entry.is_regular_file() && entry.path().extension() == ".cgel") {
      names.push_back("invalid/" + entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline bool has_code(const std::vector<cgel::Diagnostic>& diags,
                     cgel::RuleCode code) {
  for (const auto& d : diags) {
    if (d.code == code) return true;
  }
  return false;
}

inline bool has_code(const std::vector<cgel::Diagnostic>& diags,
                     const std::string& name) {
  for (const auto& d : diags) {
    if (name == cgel::rule_code_name(d.code)) return true;
  }
  return false;
}

inline int count_severity(const std::vector<cgel::Diagnostic>& diags,
                          cgel::Severity severity) {
  int n = 0;
  for (const auto& d : diags) n += d.severity == severity ? 1 : 0;
  return n;
}

// Structural equality over parsed trees (spans ignored).
inline bool same_structure(const cgel::RawNode& a, const cgel::RawNode& b) {
  if (a.category != b.category) return false;
  if (a.coindex_var != b.coindex_var) return false;
  if (a.features.size() != b.features.size()) return false;
  for (size_t i = 0; i < a.features.size(); ++i) {
    if (a.features[i].key != b.features[i].key) return false;
    if (a.features[i].value != b.features[i].value) return false;
  }
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].function != b.children[i].function) return false;
    if (!same_structure(a.children[i].node, b.children[i].node)) return false;
  }
  return true;
}

inline bool same_structure(const cgel::SourceTree& a,
                           const cgel::SourceTree& b) {
  if (a.headers.size() != b.headers.size()) return false;
  for (size_t i = 0; i < a.headers.size(); ++i) {
    if (a.headers[i].key != b.headers[i].key) return false;
    if (a.headers[i].value != b.headers[i].value) return false;
  }
  return same_structure(a.root, b.root);
}

// Deterministic generator for random-ish byte strings and trees; fixed seed
// so failures reproduce.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  bool chance(int percent) { return below(100) < percent; }

 private:
  uint64_t state_;
};

}  // namespace testutil
