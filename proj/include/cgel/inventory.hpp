#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgel {

// ---------------------------------------------------------------------------
// Categories

enum class CategoryBase {
  // lexical
  noun,
  verb,
  adjective,
  adverb,
  preposition,
  determinative,
  interjection,
  subordinator,
  coordinator,
  // phrasal
  nominal,
  noun_phrase,
  verb_phrase,
  clause,
  adjective_phrase,
  adverb_phrase,
  preposition_phrase,
  determinative_phrase,
  interjection_phrase,
  coordination,
  // special
  gap,
  nonce,
  unknown,
};

enum class CategorySub { none, pronoun, auxiliary, relative, stranded };

struct Category {
  CategoryBase base = CategoryBase::unknown;
  CategorySub sub = CategorySub::none;
  std::vector<Category> nonce_parts;  // nonempty iff base == nonce
  std::string token;                  // spelling as written

  bool is_nonce() const { return base == CategoryBase::nonce; }
  bool is_gap() const { return base == CategoryBase::gap; }

  bool is_lexical() const {
    switch (base) {
      case CategoryBase::noun:
      case CategoryBase::verb:
      case CategoryBase::adjective:
      case CategoryBase::adverb:
      case CategoryBase::preposition:
      case CategoryBase::determinative:
      case CategoryBase::interjection:
      case CategoryBase::subordinator:
      case CategoryBase::coordinator:
        return true;
      default:
        return false;
    }
  }

  bool is_phrasal() const {
    switch (base) {
      case CategoryBase::nominal:
      case CategoryBase::noun_phrase:
      case CategoryBase::verb_phrase:
      case CategoryBase::clause:
      case CategoryBase::adjective_phrase:
      case CategoryBase::adverb_phrase:
      case CategoryBase::preposition_phrase:
      case CategoryBase::determinative_phrase:
      case CategoryBase::interjection_phrase:
      case CategoryBase::coordination:
        return true;
      default:
        return false;
    }
  }

  bool is_unknown() const {
    if (base == CategoryBase::unknown) return true;
    for (const Category& part : nonce_parts) {
      if (part.is_unknown()) return true;
    }
    return false;
  }
};

namespace detail {

struct CategoryEntry {
  std::string_view token;
  CategoryBase base;
  CategorySub sub;
};

inline constexpr CategoryEntry kCategoryTable[] = {
    {"N", CategoryBase::noun, CategorySub::none},
    {"N_pro", CategoryBase::noun, CategorySub::pronoun},
    {"V", CategoryBase::verb, CategorySub::none},
    {"V_aux", CategoryBase::verb, CategorySub::auxiliary},
    {"Adj", CategoryBase::adjective, CategorySub::none},
    {"Adv", CategoryBase::adverb, CategorySub::none},
    {"P", CategoryBase::preposition, CategorySub::none},
    {"D", CategoryBase::determinative, CategorySub::none},
    {"Int", CategoryBase::interjection, CategorySub::none},
    {"Sdr", CategoryBase::subordinator, CategorySub::none},
    {"Coordinator", CategoryBase::coordinator, CategorySub::none},
    {"Nom", CategoryBase::nominal, CategorySub::none},
    {"NP", CategoryBase::noun_phrase, CategorySub::none},
    {"VP", CategoryBase::verb_phrase, CategorySub::none},
    {"Clause", CategoryBase::clause, CategorySub::none},
    {"Clause_rel", CategoryBase::clause, CategorySub::relative},
    {"AdjP", CategoryBase::adjective_phrase, CategorySub::none},
    {"AdvP", CategoryBase::adverb_phrase, CategorySub::none},
    {"PP", CategoryBase::preposition_phrase, CategorySub::none},
    {"PP_strand", CategoryBase::preposition_phrase, CategorySub::stranded},
    {"DP", CategoryBase::determinative_phrase, CategorySub::none},
    {"IntP", CategoryBase::interjection_phrase, CategorySub::none},
    {"Coordination", CategoryBase::coordination, CategorySub::none},
    {"GAP", CategoryBase::gap, CategorySub::none},
};

}  // namespace detail

// Maps a raw category token to the inventory. Total: unrecognized tokens
// come back with base == unknown, composite tokens such as NP+PP become a
// nonce category whose parts are classified individually.
inline Category classify_category(std::string_view token) {
  Category cat;
  cat.token = std::string(token);
  for (const auto& entry : detail::kCategoryTable) {
    if (entry.token == token) {
      cat.base = entry.base;
      cat.sub = entry.sub;
      return cat;
    }
  }
  if (token.find('+') != std::string_view::npos) {
    cat.base = CategoryBase::nonce;
    size_t start = 0;
    while (start <= token.size()) {
      size_t plus = token.find('+', start);
      std::string_view part = token.substr(
          start, plus == std::string_view::npos ? plus : plus - start);
      cat.nonce_parts.push_back(classify_category(part));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    return cat;
  }
  return cat;
}

// Canonical spelling for a known category; nonce and unknown categories keep
// the token they were written with.
inline std::string category_token(const Category& cat) {
  for (const auto& entry : detail::kCategoryTable) {
    if (entry.base == cat.base && entry.sub == cat.sub &&
        cat.base != CategoryBase::nonce && cat.base != CategoryBase::unknown) {
      return std::string(entry.token);
    }
  }
  if (cat.is_nonce()) {
    std::string out;
    for (size_t i = 0; i < cat.nonce_parts.size(); ++i) {
      if (i > 0) out += '+';
      out += category_token(cat.nonce_parts[i]);
    }
    return out;
  }
  return cat.token;
}

// Phrasal category projected by a lexical head, if the lexeme class projects
// one (subordinators and coordinators do not).
inline std::optional<CategoryBase> projection(CategoryBase base) {
  switch (base) {
    case CategoryBase::noun: return CategoryBase::nominal;
    case CategoryBase::verb: return CategoryBase::verb_phrase;
    case CategoryBase::adjective: return CategoryBase::adjective_phrase;
    case CategoryBase::adverb: return CategoryBase::adverb_phrase;
    case CategoryBase::preposition: return CategoryBase::preposition_phrase;
    case CategoryBase::determinative: return CategoryBase::determinative_phrase;
    case CategoryBase::interjection: return CategoryBase::interjection_phrase;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Functions

enum class FunctionBase {
  head,
  det,
  comp,
  comp_ind,
  pred_comp,
  displaced_subj,
  extraposed_subj,
  extraposed_obj,
  obj,
  obj_dir,
  obj_ind,
  particle,
  prenucleus,
  postnucleus,
  subj,
  marker,
  flat,
  compounding,
  coordinate,
  mod,
  supplement,
  vocative,
  det_head,
  mod_head,
  marker_head,
  head_prenucleus,
  nonce,
  unknown,
  none,  // the root constituent carries no function
};

struct Function {
  FunctionBase base = FunctionBase::none;
  // For composites: one slot per +-joined part, each slot listing its
  // /-separated alternatives.
  std::vector<std::vector<Function>> nonce_parts;
  std::string token;

  bool is_nonce() const { return base == FunctionBase::nonce; }

  bool is_fused() const {
    return base == FunctionBase::det_head || base == FunctionBase::mod_head ||
           base == FunctionBase::marker_head ||
           base == FunctionBase::head_prenucleus;
  }

  bool is_internal_complement() const {
    switch (base) {
      case FunctionBase::comp:
      case FunctionBase::obj:
      case FunctionBase::obj_dir:
      case FunctionBase::obj_ind:
      case FunctionBase::pred_comp:
      case FunctionBase::particle:
      case FunctionBase::displaced_subj:
        return true;
      default:
        return false;
    }
  }

  bool is_supplement() const {
    return base == FunctionBase::supplement || base == FunctionBase::vocative;
  }

  // Role the constituent bears toward its immediate (deeper) parent. For a
  // fused function this is the second half of the hyphenated name.
  FunctionBase tree_role() const {
    switch (base) {
      case FunctionBase::det_head:
      case FunctionBase::mod_head:
      case FunctionBase::marker_head:
        return FunctionBase::head;
      case FunctionBase::head_prenucleus:
        return FunctionBase::prenucleus;
      default:
        return base;
    }
  }

  // Role the constituent bears toward its recovered second parent (the
  // first half of the hyphenated name). Only meaningful when is_fused().
  FunctionBase fused_role() const {
    switch (base) {
      case FunctionBase::det_head: return FunctionBase::det;
      case FunctionBase::mod_head: return FunctionBase::mod;
      case FunctionBase::marker_head: return FunctionBase::marker;
      case FunctionBase::head_prenucleus: return FunctionBase::head;
      default: return base;
    }
  }

  bool is_unknown() const {
    if (base == FunctionBase::unknown) return true;
    for (const auto& slot : nonce_parts) {
      for (const Function& alt : slot) {
        if (alt.is_unknown()) return true;
      }
    }
    return false;
  }
};

namespace detail {

struct FunctionEntry {
  std::string_view token;
  FunctionBase base;
};

inline constexpr FunctionEntry kFunctionTable[] = {
    {"Head", FunctionBase::head},
    {"Det", FunctionBase::det},
    {"Comp", FunctionBase::comp},
    {"Comp_ind", FunctionBase::comp_ind},
    {"PredComp", FunctionBase::pred_comp},
    {"DisplacedSubj", FunctionBase::displaced_subj},
    {"ExtraposedSubj", FunctionBase::extraposed_subj},
    {"ExtraposedObj", FunctionBase::extraposed_obj},
    {"Obj", FunctionBase::obj},
    {"Obj_dir", FunctionBase::obj_dir},
    {"Obj_ind", FunctionBase::obj_ind},
    {"Particle", FunctionBase::particle},
    {"Prenucleus", FunctionBase::prenucleus},
    {"Postnucleus", FunctionBase::postnucleus},
    {"Subj", FunctionBase::subj},
    {"Marker", FunctionBase::marker},
    {"Flat", FunctionBase::flat},
    {"Compounding", FunctionBase::compounding},
    {"Coordinate", FunctionBase::coordinate},
    {"Mod", FunctionBase::mod},
    {"Supplement", FunctionBase::supplement},
    {"Vocative", FunctionBase::vocative},
    {"Det-Head", FunctionBase::det_head},
    {"Mod-Head", FunctionBase::mod_head},
    {"Marker-Head", FunctionBase::marker_head},
    {"Head-Prenucleus", FunctionBase::head_prenucleus},
};

inline std::optional<FunctionBase> lookup_function(std::string_view token) {
  for (const auto& entry : kFunctionTable) {
    if (entry.token == token) return entry.base;
  }
  return std::nullopt;
}

}  // namespace detail

// Maps a raw function token to the inventory, handling + composites and
// per-coordinate / alternatives. Total via the unknown marker.
inline Function classify_function(std::string_view token) {
  Function fn;
  fn.token = std::string(token);
  if (auto base = detail::lookup_function(token)) {
    fn.base = *base;
    return fn;
  }
  if (token.find('+') != std::string_view::npos ||
      token.find('/') != std::string_view::npos) {
    fn.base = FunctionBase::nonce;
    size_t start = 0;
    while (start <= token.size()) {
      size_t plus = token.find('+', start);
      std::string_view slot = token.substr(
          start, plus == std::string_view::npos ? plus : plus - start);
      std::vector<Function> alternatives;
      size_t alt_start = 0;
      while (alt_start <= slot.size()) {
        size_t slash = slot.find('/', alt_start);
        std::string_view alt = slot.substr(
            alt_start, slash == std::string_view::npos ? slash
                                                       : slash - alt_start);
        Function alt_fn;
        alt_fn.token = std::string(alt);
        if (auto base = detail::lookup_function(alt)) alt_fn.base = *base;
        else alt_fn.base = FunctionBase::unknown;
        alternatives.push_back(std::move(alt_fn));
        if (slash == std::string_view::npos) break;
        alt_start = slash + 1;
      }
      fn.nonce_parts.push_back(std::move(alternatives));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    return fn;
  }
  fn.base = FunctionBase::unknown;
  return fn;
}

inline std::string function_token(const Function& fn) {
  for (const auto& entry : detail::kFunctionTable) {
    if (entry.base == fn.base) return std::string(entry.token);
  }
  return fn.token;
}

}  // namespace cgel
