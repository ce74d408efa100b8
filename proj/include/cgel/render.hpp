#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgel/graph.hpp"
#include "cgel/textops.hpp"

namespace cgel {

struct RenderOptions {
  // Subtrees below this display depth collapse into a roofed yield.
  std::optional<int> collapse_depth;
  // Wrap the forest environment in a compilable standalone document.
  bool preamble = false;
  // Horizontal shift (in em) applied to the deeper parent of a fused node,
  // keyed by the fused node. Defaults: 2em when the deeper parent has
  // another child, 1em otherwise.
  std::map<NodeId, double> shift_overrides;
};

namespace detail {

inline std::string latex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '$': out += "\\$"; break;
      case '#': out += "\\#"; break;
      case '_': out += "\\_"; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// `N_pro` prints as N with a `pro` subscript; likewise `Obj_dir`, etc.
inline std::string subscripted_atom(std::string_view token) {
  size_t us = token.find('_');
  if (us == std::string_view::npos || us == 0 || us + 1 >= token.size()) {
    return latex_escape(token);
  }
  return latex_escape(token.substr(0, us)) + "\\textsubscript{" +
         latex_escape(token.substr(us + 1)) + "}";
}

inline std::string category_display(const Category& cat) {
  if (cat.is_nonce()) {
    std::string out;
    for (size_t i = 0; i < cat.nonce_parts.size(); ++i) {
      if (i > 0) out += " + ";
      out += subscripted_atom(cat.nonce_parts[i].token);
    }
    return out;
  }
  return subscripted_atom(cat.token);
}

inline std::string function_display(const Function& fn) {
  if (fn.is_nonce()) {
    std::string out;
    for (size_t i = 0; i < fn.nonce_parts.size(); ++i) {
      if (i > 0) out += " + ";
      for (size_t j = 0; j < fn.nonce_parts[i].size(); ++j) {
        if (j > 0) out += "/";
        out += subscripted_atom(fn.nonce_parts[i][j].token);
      }
    }
    return out;
  }
  return subscripted_atom(fn.token);
}

inline std::string format_em(double value) {
  long long rounded = static_cast<long long>(value);
  if (static_cast<double>(rounded) == value) {
    return std::to_string(rounded) + "em";
  }
  std::string s = std::to_string(value);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s + "em";
}

class ForestWriter {
 public:
  ForestWriter(const ConstituentGraph& g, const RenderOptions& options)
      : g_(g), options_(options) {}

  std::string write() {
    for (NodeId id = 0; id < g_.size(); ++id) {
      const GraphNode& n = g_.at(id);
      if (n.fused && !n.fused->ok()) {
        throw std::invalid_argument(
            "cannot render: unresolved fused function at " +
            path_string(g_.path(id)) + " (" + n.fused->error + ")");
      }
    }
    std::string out;
    if (options_.preamble) {
      out +=
          "\\documentclass[border=4pt]{standalone}\n"
          "\\usepackage[linguistics]{forest}\n"
          "\\newcommand{\\Node}[2]{{\\small\\textsf{#1:}}\\\\#2}\n"
          "\\newcommand{\\Head}[1]{\\Node{Head}{#1}}\n"
          "\\newcommand{\\Subj}[1]{\\Node{Subj}{#1}}\n"
          "\\newcommand{\\Obj}[1]{\\Node{Obj}{#1}}\n"
          "\\newcommand{\\Mod}[1]{\\Node{Mod}{#1}}\n"
          "\\newcommand{\\Comp}[1]{\\Node{Comp}{#1}}\n"
          "\\newcommand{\\PredComp}[1]{\\Node{PredComp}{#1}}\n"
          "\\newcommand{\\Det}[1]{\\Node{Det}{#1}}\n"
          "\\newcommand{\\Mk}[1]{\\Node{Marker}{#1}}\n"
          "\\newcommand{\\Sup}[1]{\\Node{Supplement}{#1}}\n"
          "\\begin{document}\n";
    }
    out +=
        "\\begin{forest}\n"
        "for tree={align=center},\n"
        "where n children=0{\n"
        "    font=\\itshape,\n"
        "    tier=word\n"
        "  }{\n"
        "  },\n";
    out += node_text(g_.root, 0);
    out += "\n\\end{forest}\n";
    if (options_.preamble) out += "\\end{document}\n";
    return out;
  }

 private:
  std::string label(const GraphNode& n) const {
    std::string cat = category_display(n.category);
    if (n.coindex_var) {
      cat += "\\textsubscript{" + latex_escape(*n.coindex_var) + "}";
    }
    if (!n.parent) return cat;
    return "\\Node{" + function_display(n.function) + "}{" + cat + "}";
  }

  // Terminal text: the token, the corrected form in parentheses when a
  // correction is recorded, an en-dash for gaps.
  std::string leaf_text(const GraphNode& n) const {
    TokenRecord rec = token_record(n);
    if (rec.is_gap) return "--";
    std::string out;
    if (rec.surface) out = latex_escape(*rec.surface);
    if (rec.corrected) {
      if (!out.empty()) out += " ";
      out += "(" + latex_escape(*rec.corrected) + ")";
    }
    return out;
  }

  std::string yield_text(NodeId id) const {
    std::string out;
    collect_yield(id, out);
    return out;
  }

  void collect_yield(NodeId id, std::string& out) const {
    const GraphNode& n = g_.at(id);
    if (n.is_leaf()) {
      std::string word = leaf_text(n);
      if (word.empty()) return;
      if (!out.empty()) out.push_back(' ');
      out += word;
      return;
    }
    for (NodeId c : n.children) collect_yield(c, out);
  }

  double shift_for(NodeId fused_child, NodeId parent) const {
    auto it = options_.shift_overrides.find(fused_child);
    if (it != options_.shift_overrides.end()) return it->second;
    return g_.at(parent).children.size() > 1 ? 2.0 : 1.0;
  }

  std::string node_text(NodeId id, int depth) const {
    const GraphNode& n = g_.at(id);
    bool collapsed = options_.collapse_depth &&
                     depth >= *options_.collapse_depth && !n.is_leaf();
    std::string s = "[" + label(n);
    if (!collapsed) {
      for (NodeId c : n.children) {
        if (g_.at(c).function.is_fused()) {
          s += ", before drawing tree={x+=" + format_em(shift_for(c, id)) + "}";
          break;
        }
      }
    }
    if (n.function.is_fused()) s += ", no edge";
    if (n.is_leaf()) {
      std::string word = leaf_text(n);
      if (!word.empty()) s += "[" + word + "]";
    } else if (collapsed) {
      s += "[" + yield_text(id) + ", roof]";
    } else {
      for (NodeId c : n.children) {
        s += "\n" + std::string(static_cast<size_t>(4 * (depth + 1)), ' ') +
             node_text(c, depth + 1);
      }
    }
    s += "]";
    if (n.function.is_fused() && n.fused && n.fused->parent && !collapsed) {
      int dist = g_.distance_to_ancestor(id, *n.fused->parent);
      s += " { \\draw[-] (!" + std::string(static_cast<size_t>(dist), 'u') +
           ".south) -- (); \\draw[-] (!u.south) -- (); }";
    }
    return s;
  }

  const ConstituentGraph& g_;
  const RenderOptions& options_;
};

}  // namespace detail

// Emits forest source for one tree, drawing fused constituents below their
// deeper parent: the parent is shifted right, the fused node loses its
// regular edge, and explicit edges are drawn to both parents.
inline std::string render_forest(const ConstituentGraph& g,
                                 const RenderOptions& options = {}) {
  return detail::ForestWriter(g, options).write();
}

}  // namespace cgel
