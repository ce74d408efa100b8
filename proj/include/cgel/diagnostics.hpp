#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cgel/graph.hpp"
#include "cgel/source.hpp"

namespace cgel {

enum class Severity { error, warning, info };

inline const char* severity_name(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "?";
}

// Stable rule identifiers. R-codes are the tree well-formedness rules,
// C-codes flag unknown inventory tokens, F-codes lint features, N-codes are
// informational, H-codes report header/tree mismatches. Every code is
// described in docs/rules.md.
enum class RuleCode {
  R1,   // lexical projection
  R2,   // vacuous lexical layering
  R3,   // VP level composition
  R4,   // NP head
  R5,   // clause head
  R6,   // binarity
  R7,   // vacuous unary phrase
  R8,   // gap coindexation
  R9,   // dangling variable
  R10,  // variable reuse across overt nodes
  R11,  // coindexation level
  R12,  // gap sister tendency
  R13,  // fused function placement
  R14,  // flat/compounding and gap shape
  R15,  // complex lexeme lint
  C1,   // unknown category
  C2,   // unknown function
  F1,   // empty feature value
  N1,   // unchecked nonce region
  H1,   // sent header mismatch
  H2,   // text header mismatch
};

inline const char* rule_code_name(RuleCode code) {
  switch (code) {
    case RuleCode::R1: return "R1";
    case RuleCode::R2: return "R2";
    case RuleCode::R3: return "R3";
    case RuleCode::R4: return "R4";
    case RuleCode::R5: return "R5";
    case RuleCode::R6: return "R6";
    case RuleCode::R7: return "R7";
    case RuleCode::R8: return "R8";
    case RuleCode::R9: return "R9";
    case RuleCode::R10: return "R10";
    case RuleCode::R11: return "R11";
    case RuleCode::R12: return "R12";
    case RuleCode::R13: return "R13";
    case RuleCode::R14: return "R14";
    case RuleCode::R15: return "R15";
    case RuleCode::C1: return "C1";
    case RuleCode::C2: return "C2";
    case RuleCode::F1: return "F1";
    case RuleCode::N1: return "N1";
    case RuleCode::H1: return "H1";
    case RuleCode::H2: return "H2";
  }
  return "?";
}

struct Diagnostic {
  RuleCode code;
  Severity severity;
  std::vector<PathStep> node_path;
  std::string message;
  SourceSpan span;
};

inline std::string path_string(const std::vector<PathStep>& path) {
  if (path.empty()) return "/";
  std::string out;
  for (const PathStep& step : path) {
    out += "/";
    out += step.function;
    out += "[";
    out += std::to_string(step.index);
    out += "]";
  }
  return out;
}

// One line per finding, stable for grepping in CI:
//   FILE:LINE:COL: SEVERITY CODE PATH MESSAGE
inline std::string format_diagnostic(std::string_view file,
                                     const Diagnostic& d) {
  std::string out;
  out += file;
  out += ":";
  out += std::to_string(d.span.begin.line);
  out += ":";
  out += std::to_string(d.span.begin.column);
  out += ": ";
  out += severity_name(d.severity);
  out += " ";
  out += rule_code_name(d.code);
  out += " ";
  out += path_string(d.node_path);
  out += " ";
  out += d.message;
  return out;
}

// Orders diagnostics by position in the tree, then by code.
inline bool diagnostic_before(const Diagnostic& a, const Diagnostic& b) {
  size_t n = std::min(a.node_path.size(), b.node_path.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.node_path[i].index != b.node_path[i].index) {
      return a.node_path[i].index < b.node_path[i].index;
    }
  }
  if (a.node_path.size() != b.node_path.size()) {
    return a.node_path.size() < b.node_path.size();
  }
  if (a.code != b.code) return a.code < b.code;
  return a.message < b.message;
}

}  // namespace cgel
