#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgel/diagnostics.hpp"
#include "cgel/graph.hpp"
#include "cgel/inventory.hpp"

namespace cgel {

struct ValidateOptions {
  bool strict_lexicon = false;
};

namespace detail {

// Complex lexemes that are legitimately written with an internal space.
inline const std::set<std::string>& complex_lexemes() {
  static const std::set<std::string> items = {
      // determinatives
      "a certain", "a few", "a great many", "a little", "many a", "no one",
      // prepositions
      "as for", "as from", "as if", "as of", "as per", "as though", "as to",
      "in case", "in charge", "in front", "in order", "in spite", "in view",
      "no matter", "on board", "on purpose", "on to", "on top", "so as",
      "\xc3\xa0 la", "as long as", "as soon as",
      // subordinators
      "whether or not", "whether or no",
      // coordinators
      "as well as", "rather than",
  };
  return items;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

class Validator {
 public:
  Validator(const ConstituentGraph& g, ValidateOptions options)
      : g_(g), options_(options), unchecked_(g.nodes.size(), false) {}

  std::vector<Diagnostic> run() {
    mark_unchecked_regions(g_.root, false);
    for (NodeId id = 0; id < g_.size(); ++id) {
      check_node(id);
    }
    check_coindexation();
    std::sort(diags_.begin(), diags_.end(), diagnostic_before);
    return std::move(diags_);
  }

 private:
  const GraphNode& node(NodeId id) const { return g_.at(id); }

  void report(RuleCode code, Severity severity, NodeId id, std::string msg) {
    diags_.push_back({code, severity, g_.path(id), std::move(msg),
                      node(id).span});
  }

  // The branching rules R1-R7 are defined for the regular inventory only.
  // Constituents under a nonce category/function, under a Compounding branch
  // (zero-derived names keep their frozen internal structure), or under an
  // unrecognized token are left unchecked.
  void mark_unchecked_regions(NodeId id, bool inherited) {
    const GraphNode& n = node(id);
    bool root_of_region = false;
    if (!inherited) {
      if (n.category.is_nonce() || n.function.is_nonce()) {
        report(RuleCode::N1, Severity::info, id,
               "nonce constituent is not checked against branching rules");
        root_of_region = true;
      } else if (n.function.base == FunctionBase::compounding ||
                 n.category.is_unknown() || n.function.is_unknown()) {
        root_of_region = true;
      }
    }
    bool in_region = inherited || root_of_region;
    unchecked_[static_cast<size_t>(id)] = in_region;
    for (NodeId child : n.children) mark_unchecked_regions(child, in_region);
  }

  bool unchecked(NodeId id) const { return unchecked_[static_cast<size_t>(id)]; }

  // Children that count toward branching arity. Supplements hang off their
  // anchor without occupying a slot; Flat/Compounding dependents are
  // morphological and may stack freely.
  std::vector<NodeId> counted_children(NodeId id) const {
    std::vector<NodeId> out;
    for (NodeId c : node(id).children) {
      FunctionBase role = node(c).function.tree_role();
      if (role == FunctionBase::supplement || role == FunctionBase::vocative ||
          role == FunctionBase::flat || role == FunctionBase::compounding) {
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  std::vector<NodeId> non_supplement_children(NodeId id) const {
    std::vector<NodeId> out;
    for (NodeId c : node(id).children) {
      if (!is_supplement_role(c)) out.push_back(c);
    }
    return out;
  }

  bool is_supplement_role(NodeId id) const {
    FunctionBase role = node(id).function.tree_role();
    return role == FunctionBase::supplement || role == FunctionBase::vocative;
  }

  std::optional<NodeId> sole_head_child(NodeId id) const {
    std::optional<NodeId> head;
    for (NodeId c : node(id).children) {
      if (node(c).function.tree_role() == FunctionBase::head) {
        if (head) return std::nullopt;
        head = c;
      }
    }
    return head;
  }

  bool has_marker_child(NodeId id) const {
    for (NodeId c : node(id).children) {
      if (node(c).function.tree_role() == FunctionBase::marker) return true;
    }
    return false;
  }

  void check_node(NodeId id) {
    const GraphNode& n = node(id);
    if (n.category.is_unknown()) {
      report(RuleCode::C1, Severity::error, id,
             "unknown category '" + n.category.token + "'");
    }
    if (n.parent && n.function.is_unknown()) {
      report(RuleCode::C2, Severity::error, id,
             "unknown function '" + n.function.token + "'");
    }
    for (const Feature& f : n.features) {
      if (f.value.empty() && f.key != FeatureKey::correct) {
        report(RuleCode::F1, Severity::warning, id,
               std::string("empty value for :") + feature_key_name(f.key));
      }
    }
    check_flat_and_gap_shape(id);
    check_lexeme_lint(id);
    if (n.function.is_fused() && n.fused && !n.fused->ok()) {
      report(RuleCode::R13, Severity::error, id, n.fused->error);
    }
    if (!unchecked(id)) {
      check_projection(id);
      check_lexical_layering(id);
      check_vp_level(id);
      check_np_head(id);
      check_clause_head(id);
      check_binarity(id);
      check_unary_phrase(id);
    }
  }

  // R1: a lexical node that projects a phrase must head one, except V_aux
  // standing alone in Prenucleus position under subject-auxiliary inversion.
  void check_projection(NodeId id) {
    const GraphNode& n = node(id);
    if (!n.category.is_lexical()) return;
    auto projected = projection(n.category.base);
    if (!projected) return;  // Sdr and Coordinator do not project
    FunctionBase role = n.function.tree_role();
    if (role == FunctionBase::flat || role == FunctionBase::compounding) return;
    if (n.category.base == CategoryBase::verb &&
        n.category.sub == CategorySub::auxiliary &&
        n.function.base == FunctionBase::prenucleus) {
      return;
    }
    Category projected_cat;
    projected_cat.base = *projected;
    std::string want = category_token(projected_cat);
    if (!n.parent || role != FunctionBase::head ||
        node(*n.parent).category.base != *projected) {
      report(RuleCode::R1, Severity::error, id,
             n.category.token + " must serve as the head of a " + want);
    }
  }

  // R2: a lexical head inside a vacuous unary layer, i.e. its parent is a
  // unary Head constituent with the same category as the grandparent. Layers
  // forced by a Marker sibling or a Coordinate grandparent are legitimate
  // (markers attach to phrases, so a lone lexeme must project there).
  void check_lexical_layering(NodeId id) {
    const GraphNode& n = node(id);
    if (!n.category.is_lexical()) return;
    if (n.function.tree_role() != FunctionBase::head) return;
    if (!n.parent) return;
    NodeId parent = *n.parent;
    if (node(parent).function.tree_role() != FunctionBase::head) return;
    if (non_supplement_children(parent).size() != 1) return;
    if (!node(parent).parent) return;
    NodeId grand = *node(parent).parent;
    if (node(parent).category.token != node(grand).category.token) return;
    if (node(grand).function.base == FunctionBase::coordinate) return;
    if (has_marker_child(grand)) return;
    report(RuleCode::R2, Severity::error, id,
           "too many layers: '" + n.category.token +
               "' projects a unary " + node(parent).category.token +
               " inside another " + node(grand).category.token);
  }

  enum class VpLevel { unary, mod, extraposed, postnucleus, marker, comp_ind,
                       internal, irregular };

  VpLevel vp_level_kind(NodeId id) {
    std::vector<NodeId> counted = counted_children(id);
    if (counted.size() <= 1) return VpLevel::unary;
    std::vector<NodeId> rest;
    for (NodeId c : counted) {
      if (node(c).function.tree_role() != FunctionBase::head) rest.push_back(c);
    }
    if (counted.size() - rest.size() != 1) return VpLevel::irregular;
    bool internal = true, mods = true, extra = true, post = true, marker = true,
         ci = true;
    for (NodeId c : rest) {
      FunctionBase f = node(c).function.tree_role();
      internal = internal && node(c).function.is_internal_complement();
      mods = mods && f == FunctionBase::mod;
      extra = extra && (f == FunctionBase::extraposed_subj ||
                        f == FunctionBase::extraposed_obj);
      post = post && f == FunctionBase::postnucleus;
      marker = marker && f == FunctionBase::marker;
      ci = ci && f == FunctionBase::comp_ind;
    }
    if (internal) return VpLevel::internal;
    if (mods && rest.size() == 1) return VpLevel::mod;
    if (extra && rest.size() == 1) return VpLevel::extraposed;
    if (post && rest.size() == 1) return VpLevel::postnucleus;
    if (marker && rest.size() == 1) return VpLevel::marker;
    if (ci && rest.size() == 1) return VpLevel::comp_ind;
    return VpLevel::irregular;
  }

  // R3: every non-unary VP level is a Head plus exactly one of: a single
  // Mod, a single extraposed complement, a single Postnucleus, a single
  // Marker, a single Comp_ind, or any number of internal complements; and
  // internal-complement levels must not stack directly.
  void check_vp_level(NodeId id) {
    const GraphNode& n = node(id);
    if (n.category.base != CategoryBase::verb_phrase) return;
    std::vector<NodeId> counted = counted_children(id);
    if (counted.empty()) return;
    if (counted.size() == 1) {
      if (node(counted[0]).function.tree_role() != FunctionBase::head) {
        report(RuleCode::R3, Severity::error, id,
               "unary VP level must consist of a Head, found " +
                   node(counted[0]).function.token);
      }
      return;
    }
    VpLevel kind = vp_level_kind(id);
    if (kind == VpLevel::irregular) {
      report(RuleCode::R3, Severity::error, id,
             "VP level is not Head plus one Mod, one extraposed complement, "
             "or internal complements");
      return;
    }
    if (kind == VpLevel::internal) {
      if (auto head = sole_head_child(id)) {
        const GraphNode& h = node(*head);
        if (h.category.base == CategoryBase::verb_phrase && !unchecked(*head) &&
            vp_level_kind(*head) == VpLevel::internal) {
          report(RuleCode::R3, Severity::error, id,
                 "two consecutive VP levels of internal complements");
        }
      }
    }
  }

  // R4: an NP is headed by a Nom or by another NP level. A gap may stand in
  // for the head, and a fused Head-Prenucleus supplies the head of the
  // constituent it re-attaches to.
  void check_np_head(NodeId id) {
    const GraphNode& n = node(id);
    if (n.category.base != CategoryBase::noun_phrase) return;
    bool found_head = false;
    for (NodeId c : n.children) {
      if (node(c).function.tree_role() != FunctionBase::head) continue;
      found_head = true;
      CategoryBase b = node(c).category.base;
      if (b != CategoryBase::nominal && b != CategoryBase::noun_phrase &&
          b != CategoryBase::gap) {
        report(RuleCode::R4, Severity::error, id,
               "NP headed by " + node(c).category.token +
                   " (expected Nom or NP)");
      }
    }
    if (!found_head && !g_.has_fused_head(id)) {
      report(RuleCode::R4, Severity::error, id, "NP has no head");
    }
  }

  // R5: a Clause or Clause_rel is headed by a VP or by another clause level.
  void check_clause_head(NodeId id) {
    const GraphNode& n = node(id);
    if (n.category.base != CategoryBase::clause) return;
    bool found_head = false;
    for (NodeId c : n.children) {
      if (node(c).function.tree_role() != FunctionBase::head) continue;
      found_head = true;
      CategoryBase b = node(c).category.base;
      if (b != CategoryBase::verb_phrase && b != CategoryBase::clause &&
          b != CategoryBase::gap) {
        report(RuleCode::R5, Severity::error, id,
               n.category.token + " headed by " + node(c).category.token +
                   " (expected VP or a clause)");
      }
    }
    if (!found_head && !g_.has_fused_head(id)) {
      report(RuleCode::R5, Severity::error, id,
             n.category.token + " has no head");
    }
  }

  // R6: headed phrases other than VP are at most binary. Coordinations are
  // non-headed and exempt; lexical nodes are covered by R14.
  void check_binarity(NodeId id) {
    const GraphNode& n = node(id);
    if (!n.category.is_phrasal()) return;
    if (n.category.base == CategoryBase::verb_phrase ||
        n.category.base == CategoryBase::coordination) {
      return;
    }
    size_t arity = counted_children(id).size();
    if (arity > 2) {
      report(RuleCode::R6, Severity::error, id,
             n.category.token + " has " + std::to_string(arity) +
                 " children (binary at most, supplements aside)");
    }
  }

  // R7: a unary phrase headed by a same-category constituent is vacuous,
  // except around the intermediate node of a fused structure.
  void check_unary_phrase(NodeId id) {
    const GraphNode& n = node(id);
    if (!n.category.is_phrasal()) return;
    std::vector<NodeId> s = non_supplement_children(id);
    if (s.size() != 1) return;
    NodeId child = s[0];
    if (node(child).function.tree_role() != FunctionBase::head) return;
    if (node(child).category.token != n.category.token) return;
    for (NodeId grand : node(child).children) {
      if (node(grand).function.is_fused()) return;
    }
    report(RuleCode::R7, Severity::error, id,
           "vacuous unary " + n.category.token + " headed by another " +
               node(child).category.token);
  }

  // R14: Flat dependents are lexical, sit under a lexical parent of the same
  // base category, and are that parent's only kind of child. Gap nodes are
  // bare leaves.
  void check_flat_and_gap_shape(NodeId id) {
    const GraphNode& n = node(id);
    if (n.category.is_gap()) {
      if (!n.children.empty()) {
        report(RuleCode::R14, Severity::error, id, "GAP must be a leaf");
      }
      if (n.feature(FeatureKey::token)) {
        report(RuleCode::R14, Severity::error, id,
               "GAP must not carry a :t token");
      }
      return;
    }
    bool any_flat = false;
    for (NodeId c : n.children) {
      if (node(c).function.base == FunctionBase::flat) any_flat = true;
    }
    if (n.category.is_lexical() && !n.children.empty()) {
      for (NodeId c : n.children) {
        if (node(c).function.base != FunctionBase::flat) {
          report(RuleCode::R14, Severity::error, c,
                 "child of a lexical node must bear the Flat function");
        }
      }
    }
    if (!any_flat) return;
    for (NodeId c : n.children) {
      if (node(c).function.base != FunctionBase::flat) continue;
      if (!n.category.is_lexical()) {
        report(RuleCode::R14, Severity::error, c,
               "Flat dependent requires a lexical parent");
      } else if (!node(c).category.is_lexical() ||
                 node(c).category.base != n.category.base) {
        report(RuleCode::R14, Severity::error, c,
               "Flat dependent must match its parent category " +
                   n.category.token);
      }
    }
  }

  // R15 (opt-in): a token written with a space must be a known complex
  // lexeme.
  void check_lexeme_lint(NodeId id) {
    if (!options_.strict_lexicon) return;
    auto t = node(id).feature(FeatureKey::token);
    if (!t || t->find(' ') == std::string_view::npos) return;
    if (complex_lexemes().count(ascii_lower(*t))) return;
    report(RuleCode::R15, Severity::warning, id,
           "token '" + std::string(*t) +
               "' with internal space is not a listed complex lexeme");
  }

  struct VarUse {
    std::vector<NodeId> overt;
    std::vector<NodeId> gaps;
  };

  // R8-R12: gap/variable bookkeeping over the whole sentence.
  void check_coindexation() {
    std::map<std::string, VarUse> uses;
    std::vector<NodeId> all_gaps;
    for (NodeId id = 0; id < g_.size(); ++id) {
      const GraphNode& n = node(id);
      if (n.category.is_gap()) all_gaps.push_back(id);
      if (n.coindex_var) {
        VarUse& use = uses[*n.coindex_var];
        (n.category.is_gap() ? use.gaps : use.overt).push_back(id);
      }
    }

    for (NodeId gap : all_gaps) {
      const GraphNode& n = node(gap);
      if (!n.coindex_var) {
        report(RuleCode::R8, Severity::error, gap,
               "gap has no coindexation variable");
      } else {
        const VarUse& use = uses[*n.coindex_var];
        if (use.overt.empty()) {
          report(RuleCode::R8, Severity::error, gap,
                 "variable '" + *n.coindex_var +
                     "' is not shared with any overt element");
        } else if (use.overt.size() > 1) {
          report(RuleCode::R8, Severity::error, gap,
                 "variable '" + *n.coindex_var + "' is shared with " +
                     std::to_string(use.overt.size()) + " overt elements");
        }
      }
      check_gap_sisters(gap);
    }

    for (const auto& [var, use] : uses) {
      if (use.gaps.empty()) {
        for (NodeId id : use.overt) {
          report(RuleCode::R9, Severity::error, id,
                 "variable '" + var + "' does not apply to any gap");
        }
      }
      if (use.overt.size() > 1) {
        for (size_t i = 1; i < use.overt.size(); ++i) {
          report(RuleCode::R10, Severity::error, use.overt[i],
                 "variable '" + var + "' reused on a second overt element");
        }
      }
      if (use.overt.size() == 1 && !use.gaps.empty()) {
        check_coindex_level(var, use.overt[0]);
      }
    }
  }

  // R11: the overt end of a coindexation should be phrasal. Licensed
  // exceptions: the inverted auxiliary in Prenucleus position, and a noun
  // whose sister Mod/Comp_ind subtree contains the gap itself (bare
  // relatives and hollow clauses).
  void check_coindex_level(const std::string& var, NodeId id) {
    const GraphNode& n = node(id);
    if (!n.category.is_lexical()) return;
    if (n.category.base == CategoryBase::verb &&
        n.category.sub == CategorySub::auxiliary &&
        n.function.base == FunctionBase::prenucleus) {
      return;
    }
    if (n.category.base == CategoryBase::noun && n.parent) {
      for (NodeId sibling : node(*n.parent).children) {
        if (sibling == id) continue;
        FunctionBase f = node(sibling).function.tree_role();
        if (f != FunctionBase::mod && f != FunctionBase::comp_ind) continue;
        if (subtree_has_gap_with_var(sibling, var)) return;
      }
    }
    report(RuleCode::R11, Severity::warning, id,
           "coindexed element '" + var +
               "' is lexical; coindex at the phrasal level where possible");
  }

  bool subtree_has_gap_with_var(NodeId id, const std::string& var) const {
    const GraphNode& n = node(id);
    if (n.category.is_gap() && n.coindex_var && *n.coindex_var == var) {
      return true;
    }
    for (NodeId c : n.children) {
      if (subtree_has_gap_with_var(c, var)) return true;
    }
    return false;
  }

  // R12: a gap usually has at least one overt sister outside supplement
  // function.
  void check_gap_sisters(NodeId gap) {
    const GraphNode& n = node(gap);
    if (n.parent) {
      for (NodeId sibling : node(*n.parent).children) {
        if (sibling == gap || is_supplement_role(sibling)) continue;
        if (!node(sibling).category.is_gap()) return;
      }
    }
    report(RuleCode::R12, Severity::warning, gap,
           "gap has no non-gap sister");
  }

  const ConstituentGraph& g_;
  ValidateOptions options_;
  std::vector<bool> unchecked_;
  std::vector<Diagnostic> diags_;
};

}  // namespace detail

// Checks a recovered graph against the annotation scheme's constraints.
// Pure: the same graph and options always produce the same diagnostics, in
// (node path, code) order.
inline std::vector<Diagnostic> validate(const ConstituentGraph& g,
                                        ValidateOptions options = {}) {
  return detail::Validator(g, options).run();
}

}  // namespace cgel
