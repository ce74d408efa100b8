#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cgel/parse.hpp"
#include "cgel/validate.hpp"
#include "util.hpp"

using namespace cgel;

namespace {

std::vector<Diagnostic> validate_text(const std::string& text,
                                      ValidateOptions options = {}) {
  return validate(build_graph(parse_node(text)), options);
}

std::set<std::string> codes_of(const std::vector<Diagnostic>& diags) {
  std::set<std::string> out;
  for (const auto& d : diags) out.insert(rule_code_name(d.code));
  return out;
}

}  // namespace

TEST_CASE("WH-movement tree validates with zero errors and zero warnings") {
  ConstituentGraph g = build_graph(testutil::fixture_tree("wh-movement.cgel"));
  auto diags = validate(g);
  CHECK(testutil::count_severity(diags, Severity::error) == 0);
  CHECK(testutil::count_severity(diags, Severity::warning) == 0);
  CHECK(diags.empty());
}

TEST_CASE("every corpus fixture validates without errors") {
  for (const std::string& name : testutil::corpus_fixture_names()) {
    ConstituentGraph g = build_graph(testutil::fixture_tree(name));
    auto diags = validate(g);
    std::ostringstream all;
    for (const auto& d : diags) all << format_diagnostic(name, d) << "\n";
    INFO(all.str());
    CHECK(testutil::count_severity(diags, Severity::error) == 0);
  }
}

TEST_CASE("double gap tree warns R12 once per gap and nothing else") {
  ConstituentGraph g = build_graph(testutil::fixture_tree("doublegap.cgel"));
  auto diags = validate(g);
  REQUIRE(diags.size() == 2);
  for (const auto& d : diags) {
    CHECK(d.code == RuleCode::R12);
    CHECK(d.severity == Severity::warning);
  }
}

TEST_CASE("NP headed by a bare noun violates both the head and projection rules") {
  auto diags = validate_text(R"((NP :Head (N :t "dogs")))");
  CHECK(codes_of(diags) == std::set<std::string>{"R1", "R4"});
}

TEST_CASE("uncoindexed gap is an R8 error") {
  auto diags = validate_text(R"((Clause :Head (VP :Head (GAP))))");
  CHECK(testutil::has_code(diags, RuleCode::R8));
}

TEST_CASE("same-category unary head is vacuous") {
  auto diags = validate_text(R"((Nom :Head (Nom :Head (N :t "cat"))))");
  CHECK(testutil::has_code(diags, RuleCode::R7));
  // the inner layer is also flagged at the lexical level
  CHECK(codes_of(diags) == std::set<std::string>{"R2", "R7"});
}

TEST_CASE("negative fixtures trigger exactly their documented codes") {
  for (const std::string& name : testutil::invalid_fixture_names()) {
    SourceTree tree = testutil::fixture_tree(name);
    auto expect = tree.header("expect");
    REQUIRE(expect.has_value());
    std::istringstream in{std::string(*expect)};
    std::vector<std::string> allowed;
    for (std::string code; in >> code;) allowed.push_back(code);
    REQUIRE_FALSE(allowed.empty());

    auto diags = validate(build_graph(tree));
    INFO(name);
    CHECK(testutil::has_code(diags, allowed.front()));
    for (const auto& d : diags) {
      std::string code = rule_code_name(d.code);
      bool ok = false;
      for (const std::string& a : allowed) ok = ok || a == code;
      INFO(format_diagnostic(name, d));
      CHECK(ok);
    }
  }
}

TEST_CASE("validation is deterministic") {
  for (const std::string& name : testutil::corpus_fixture_names()) {
    ConstituentGraph g = build_graph(testutil::fixture_tree(name));
    auto first = validate(g);
    auto second = validate(g);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].code == second[i].code);
      CHECK(first[i].message == second[i].message);
      CHECK(path_string(first[i].node_path) ==
            path_string(second[i].node_path));
    }
  }
}

TEST_CASE("diagnostics come out ordered by path then code") {
  for (const std::string& name : testutil::invalid_fixture_names()) {
    auto diags = validate(build_graph(testutil::fixture_tree(name)));
    for (size_t i = 1; i < diags.size(); ++i) {
      CHECK_FALSE(diagnostic_before(diags[i], diags[i - 1]));
    }
  }
}

TEST_CASE("aux prenucleus is exempt from projection") {
  auto diags = validate_text(
      R"((Clause
            :Prenucleus (x / V_aux :t "were" :l "be")
            :Head (Clause
                :Subj (NP :Head (Nom :Head (N_pro :t "you")))
                :Head (VP :Head (x / GAP) :PredComp (AdjP :Head (Adj :t "okay"))))))");
  CHECK(diags.empty());
}

TEST_CASE("non-aux lexical prenucleus still violates projection") {
  auto diags = validate_text(
      R"((Clause
            :Prenucleus (x / V :t "ran")
            :Head (Clause
                :Subj (NP :Head (Nom :Head (N_pro :t "you")))
                :Head (VP :Head (x / GAP) :PredComp (AdjP :Head (Adj :t "okay"))))))");
  CHECK(testutil::has_code(diags, RuleCode::R1));
}

TEST_CASE("consecutive internal-complement VP levels are flagged") {
  auto diags = validate_text(
      R"((Clause
            :Subj (NP :Head (Nom :Head (N_pro :t "she")))
            :Head (VP
                :Head (VP
                    :Head (V :t "gave")
                    :Obj (NP :Head (Nom :Head (N :t "money"))))
                :Comp (Clause :Head (VP :Head (V :t "smiling"))))))");
  CHECK(testutil::has_code(diags, RuleCode::R3));
}

TEST_CASE("mod level over complement level is fine") {
  auto diags = validate_text(
      R"((Clause
            :Subj (NP :Head (Nom :Head (N_pro :t "she")))
            :Head (VP
                :Head (VP
                    :Head (V :t "ate")
                    :Obj (NP :Head (Nom :Head (N :t "apples"))))
                :Mod (AdvP :Head (Adv :t "quickly")))))");
  CHECK(diags.empty());
}

TEST_CASE("supplements do not count toward binarity or VP levels") {
  auto diags = validate_text(
      R"((Clause
            :Subj (NP :Head (Nom :Head (N :t "Jill")))
            :Head (VP :Head (V :t "left"))
            :Supplement (AdvP :Head (Adv :t "frankly"))
            :Vocative (NP :Head (Nom :Head (N :t "Kate")))))");
  CHECK(diags.empty());
}

TEST_CASE("the intermediate node of a fused structure is exempt from R7") {
  // the outer Nom is unary and headed by another Nom, but that Nom hosts the
  // fused constituent, so the layer is required
  auto diags = validate_text(
      R"((Clause
            :Subj (NP
                :Det (DP :Head (D :t "the"))
                :Head (Nom
                    :Head (Nom
                        :Mod-Head (AdjP :Head (Adj :t "rich")))))
            :Head (VP
                :Head (V :t "get")
                :PredComp (AdjP :Head (Adj :t "richer")))))");
  CHECK_FALSE(testutil::has_code(diags, RuleCode::R7));
  CHECK(diags.empty());
}

TEST_CASE("markers force a projection layer that is not vacuous") {
  auto diags = validate_text(
      R"((Coordination
            :Coordinate (VP :Head (V_aux :t "can"))
            :Coordinate (VP
                :Marker (Coordinator :t "and")
                :Head (VP :Head (V_aux :t "will")))))");
  CHECK(diags.empty());
}

TEST_CASE("gap with a token is malformed") {
  auto diags = validate_text(
      R"((Clause :Head (VP :Head (x / GAP :t "--") :Mod (x / AdvP :Head (Adv :t "so")))))");
  CHECK(testutil::has_code(diags, RuleCode::R14));
}

TEST_CASE("gap with children is malformed") {
  auto diags = validate_text(
      R"((Clause :Head (VP :Head (x / GAP :Head (V :t "go")) :Mod (x / AdvP :Head (Adv :t "so")))))");
  CHECK(testutil::has_code(diags, RuleCode::R14));
}

TEST_CASE("listed complex lexemes pass the strict lexicon") {
  for (const char* lexeme : {"a few", "as soon as", "no matter", "on top",
                             "whether or not", "rather than"}) {
    std::string text =
        "(Clause :Head (VP :Head (V :t \"went\") :Comp (PP :Head (P :t \"" +
        std::string(lexeme) +
        "\") :Obj (NP :Head (Nom :Head (N :t \"there\"))))))";
    auto diags = validate_text(text, {.strict_lexicon = true});
    INFO(lexeme);
    CHECK_FALSE(testutil::has_code(diags, RuleCode::R15));
  }
}

TEST_CASE("unknown category and function tokens are surfaced") {
  auto diags =
      validate_text(R"((XYZ :Haed (VP :Head (V :t "go"))))");
  CHECK(testutil::has_code(diags, RuleCode::C1));
  CHECK(testutil::has_code(diags, RuleCode::C2));
}

TEST_CASE("empty values warn except on :correct") {
  auto diags = validate_text(R"((Clause :Head (VP :Head (V :t "go" :l ""))))");
  CHECK(testutil::has_code(diags, RuleCode::F1));

  auto ok = validate_text(R"((Clause :Head (VP :Head (V :t "go" :correct ""))))");
  CHECK_FALSE(testutil::has_code(ok, RuleCode::F1));
}

TEST_CASE("strict lexicon flags unlisted multiword tokens") {
  std::string text =
      R"((Clause
            :Head (VP
                :Head (V :t "waited")
                :Comp (PP
                    :Head (P :t "in front")
                    :Obj (NP :Head (Nom :Head (N :t "houses")))))))";
  auto relaxed = validate_text(text);
  CHECK_FALSE(testutil::has_code(relaxed, RuleCode::R15));
  auto strict = validate_text(text, {.strict_lexicon = true});
  CHECK_FALSE(testutil::has_code(strict, RuleCode::R15));

  std::string bad =
      R"((Clause
            :Head (VP
                :Head (V :t "waited")
                :Comp (PP
                    :Head (P :t "in back")
                    :Obj (NP :Head (Nom :Head (N :t "houses")))))))";
  auto flagged = validate_text(bad, {.strict_lexicon = true});
  CHECK(testutil::has_code(flagged, RuleCode::R15));
}

TEST_CASE("nonce regions emit an info marker and skip branching checks") {
  auto diags = validate_text(
      R"((Clause
            :Subj (NP+PP
                :Head (N :t "odd"))
            :Head (VP :Head (V :t "works"))))");
  CHECK(testutil::has_code(diags, RuleCode::N1));
  CHECK_FALSE(testutil::has_code(diags, RuleCode::R1));
  CHECK(testutil::count_severity(diags, Severity::error) == 0);
}

TEST_CASE("bare relative exception keeps R11 quiet") {
  ConstituentGraph g = build_graph(testutil::fixture_tree("barerelative.cgel"));
  CHECK_FALSE(testutil::has_code(validate(g), RuleCode::R11));
}

TEST_CASE("hollow clause exception keeps R11 quiet") {
  ConstituentGraph g =
      build_graph(testutil::fixture_tree("hollow-for-purpose.cgel"));
  CHECK_FALSE(testutil::has_code(validate(g), RuleCode::R11));
}

TEST_CASE("every diagnostic code is documented in the rule catalog") {
  std::string catalog = testutil::read_file(
      std::filesystem::path(CGEL_DOCS_DIR) / "rules.md");
  for (int c = 0; c <= static_cast<int>(RuleCode::H2); ++c) {
    std::string heading =
        std::string("## ") + rule_code_name(static_cast<RuleCode>(c)) + " ";
    INFO(heading);
    CHECK(catalog.find(heading) != std::string::npos);
  }
}

TEST_CASE("fmt then validate matches validate on the original") {
  for (const std::string& name : testutil::corpus_fixture_names()) {
    SourceTree tree = testutil::fixture_tree(name);
    auto before = validate(build_graph(tree));
    auto reparsed = parse_corpus(serialize(tree, SerializeStyle::canonical));
    REQUIRE(reparsed.size() == 1);
    auto after = validate(build_graph(reparsed[0]));
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i) {
      CHECK(before[i].code == after[i].code);
      CHECK(before[i].message == after[i].message);
      CHECK(path_string(before[i].node_path) ==
            path_string(after[i].node_path));
    }
  }
}
