#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgel/inventory.hpp"
#include "cgel/source.hpp"

namespace cgel {

using NodeId = int;

// Second-parent edge recovered for a fused-function constituent. Either
// `parent` is set or `error` explains why recovery failed.
struct FusedLink {
  std::optional<NodeId> parent;
  std::string error;

  bool ok() const { return parent.has_value(); }
};

struct GraphNode {
  Category category;
  std::optional<std::string> coindex_var;
  std::vector<Feature> features;
  Function function;  // incoming edge; base == none at the root
  std::optional<NodeId> parent;
  int index_in_parent = 0;
  std::vector<NodeId> children;
  std::optional<FusedLink> fused;  // present iff function.is_fused()
  SourceSpan span;

  bool is_leaf() const { return children.empty(); }

  std::optional<std::string_view> feature(FeatureKey key) const {
    for (const Feature& f : features) {
      if (f.key == key) return std::string_view(f.value);
    }
    return std::nullopt;
  }
};

struct PathStep {
  std::string function;
  int index = 0;
};

// The recovered DAG: the primary tree plus one extra parent edge per
// fused-function constituent. Immutable after build_graph.
struct ConstituentGraph {
  std::vector<GraphNode> nodes;
  NodeId root = 0;
  std::vector<NodeId> terminal_order;

  const GraphNode& at(NodeId id) const { return nodes[static_cast<size_t>(id)]; }
  GraphNode& at(NodeId id) { return nodes[static_cast<size_t>(id)]; }
  int size() const { return static_cast<int>(nodes.size()); }

  bool is_strict_ancestor(NodeId ancestor, NodeId node) const {
    std::optional<NodeId> cur = at(node).parent;
    while (cur) {
      if (*cur == ancestor) return true;
      cur = at(*cur).parent;
    }
    return false;
  }

  // Number of primary edges from `node` up to `ancestor`.
  int distance_to_ancestor(NodeId node, NodeId ancestor) const {
    int steps = 0;
    std::optional<NodeId> cur = node;
    while (cur && *cur != ancestor) {
      cur = at(*cur).parent;
      ++steps;
    }
    return cur ? steps : -1;
  }

  std::vector<PathStep> path(NodeId id) const {
    std::vector<PathStep> steps;
    NodeId cur = id;
    while (at(cur).parent) {
      steps.push_back({at(cur).function.token, at(cur).index_in_parent});
      cur = *at(cur).parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

  // True if `id` is the recovered parent of some fused constituent whose
  // role toward it is Head (a fused Head-Prenucleus heads this node).
  bool has_fused_head(NodeId id) const {
    for (const GraphNode& n : nodes) {
      if (n.fused && n.fused->parent && *n.fused->parent == id &&
          n.function.fused_role() == FunctionBase::head) {
        return true;
      }
    }
    return false;
  }
};

namespace detail {

inline bool fused_ancestor_acceptable(const ConstituentGraph& g, NodeId id,
                                      FunctionBase fused) {
  const GraphNode& n = g.at(id);
  switch (fused) {
    case FunctionBase::det_head:
    case FunctionBase::mod_head:
      return n.category.base == CategoryBase::nominal ||
             n.category.base == CategoryBase::noun_phrase;
    case FunctionBase::head_prenucleus:
      return n.category.base == CategoryBase::nominal ||
             n.category.base == CategoryBase::noun_phrase ||
             n.category.base == CategoryBase::preposition_phrase ||
             n.category.base == CategoryBase::adjective_phrase ||
             n.category.base == CategoryBase::adverb_phrase;
    case FunctionBase::marker_head:
      return n.category.base == CategoryBase::noun_phrase ||
             n.category.base == CategoryBase::nominal ||
             (n.category.is_phrasal() &&
              n.function.base == FunctionBase::coordinate);
    default:
      return false;
  }
}

}  // namespace detail

// Finds the second parent of a fused-function constituent: the nearest
// strict ancestor above the immediate parent whose category can host the
// first half of the hyphenated function. The immediate parent itself must be
// of the expected deeper category (Nom for Det-Head/Mod-Head/Marker-Head,
// Clause_rel for Head-Prenucleus).
inline FusedLink recover_fused_parent(const ConstituentGraph& g, NodeId id) {
  const GraphNode& node = g.at(id);
  const std::string& label = node.function.token;
  if (!node.parent) {
    return {std::nullopt, label + " on the root constituent"};
  }
  const GraphNode& deeper = g.at(*node.parent);
  switch (node.function.base) {
    case FunctionBase::det_head:
    case FunctionBase::mod_head:
    case FunctionBase::marker_head:
      if (deeper.category.base != CategoryBase::nominal) {
        return {std::nullopt, label + " constituent must sit under a Nom (found " +
                                  deeper.category.token + ")"};
      }
      break;
    case FunctionBase::head_prenucleus:
      if (!(deeper.category.base == CategoryBase::clause &&
            deeper.category.sub == CategorySub::relative)) {
        return {std::nullopt,
                label + " constituent must sit under a Clause_rel (found " +
                    deeper.category.token + ")"};
      }
      break;
    default:
      return {std::nullopt, "function " + label + " is not fused"};
  }
  std::optional<NodeId> ancestor = deeper.parent;
  while (ancestor) {
    if (detail::fused_ancestor_acceptable(g, *ancestor, node.function.base)) {
      return {*ancestor, ""};
    }
    ancestor = g.at(*ancestor).parent;
  }
  return {std::nullopt, "no acceptable ancestor for " + label + " constituent"};
}

namespace detail {

inline NodeId add_graph_nodes(ConstituentGraph& g, const RawNode& raw,
                              std::optional<NodeId> parent, int index,
                              const std::string& function_token) {
  NodeId id = static_cast<NodeId>(g.nodes.size());
  g.nodes.emplace_back();
  {
    GraphNode& n = g.nodes.back();
    n.category = classify_category(raw.category);
    n.coindex_var = raw.coindex_var;
    n.features = raw.features;
    n.function = function_token.empty() ? Function{}
                                        : classify_function(function_token);
    n.parent = parent;
    n.index_in_parent = index;
    n.span = raw.span;
  }
  for (size_t i = 0; i < raw.children.size(); ++i) {
    NodeId child = add_graph_nodes(g, raw.children[i].node, id,
                                   static_cast<int>(i),
                                   raw.children[i].function);
    g.at(id).children.push_back(child);
  }
  return id;
}

inline void collect_terminals(const ConstituentGraph& g, NodeId id,
                              std::vector<NodeId>& out) {
  const GraphNode& n = g.at(id);
  if (n.is_leaf()) {
    out.push_back(id);
    return;
  }
  for (NodeId child : n.children) collect_terminals(g, child, out);
}

}  // namespace detail

// Builds the constituent graph for a parsed tree: classifies every token,
// recovers one extra parent edge per fused-function node, and records the
// left-to-right terminal order.
inline ConstituentGraph build_graph(const RawNode& root) {
  ConstituentGraph g;
  g.root = detail::add_graph_nodes(g, root, std::nullopt, 0, "");
  for (NodeId id = 0; id < g.size(); ++id) {
    if (g.at(id).function.is_fused()) {
      g.at(id).fused = recover_fused_parent(g, id);
    }
  }
  detail::collect_terminals(g, g.root, g.terminal_order);
  return g;
}

inline ConstituentGraph build_graph(const SourceTree& tree) {
  return build_graph(tree.root);
}

// Leaves in surface order, gaps included.
inline const std::vector<NodeId>& terminals(const ConstituentGraph& g) {
  return g.terminal_order;
}

}  // namespace cgel
