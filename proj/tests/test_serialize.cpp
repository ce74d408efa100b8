#include <catch2/catch_amalgamated.hpp>

#include "cgel/parse.hpp"
#include "cgel/serialize.hpp"
#include "util.hpp"

using namespace cgel;

TEST_CASE("canonical serialization of the WH-movement tree reparses identically") {
  SourceTree tree = testutil::fixture_tree("wh-movement.cgel");
  std::string canonical = serialize(tree, SerializeStyle::canonical);
  auto reparsed = parse_corpus(canonical);
  REQUIRE(reparsed.size() == 1);
  CHECK(testutil::same_structure(tree, reparsed[0]));
}

TEST_CASE("canonical serialization is a fixed point") {
  for (const std::string& name : testutil::corpus_fixture_names()) {
    SourceTree tree = testutil::fixture_tree(name);
    std::string once = serialize(tree, SerializeStyle::canonical);
    auto reparsed = parse_corpus(once);
    REQUIRE(reparsed.size() == 1);
    std::string twice = serialize(reparsed[0], SerializeStyle::canonical);
    CHECK(once == twice);
  }
}

TEST_CASE("canonical fixtures round-trip byte for byte") {
  for (const std::string& name : testutil::corpus_fixture_names()) {
    std::string text = testutil::fixture_text(name);
    auto trees = parse_corpus(text);
    CHECK(serialize_corpus(trees, SerializeStyle::canonical) == text);
  }
}

TEST_CASE("preserved style replays the original bytes") {
  std::string text = "# sent_id = odd\n(NP\n  :Head    (Nom :Head (N :t \"x\")))";
  auto trees = parse_corpus(text);
  REQUIRE(trees.size() == 1);
  std::string preserved = serialize(trees[0], SerializeStyle::preserved);
  CHECK(preserved == text + "\n");
}

TEST_CASE("backslashes and quotes are re-escaped") {
  RawNode node = parse_node("(V :t \"a\\\\b\\\"c\")");
  std::string out = serialize_node(node);
  CHECK(out == "(V :t \"a\\\\b\\\"c\")");
}

TEST_CASE("variable prefix and features serialize on the category line") {
  SourceTree tree;
  tree.root = parse_node("(Clause :Head (VP :Head (x / GAP)))");
  std::string out = serialize(tree, SerializeStyle::canonical);
  CHECK(out ==
        "(Clause\n"
        "    :Head (VP\n"
        "        :Head (x / GAP)))\n");
}

TEST_CASE("interleaved features normalize onto the category line") {
  RawNode node = parse_node("(N :t \"room\" :Flat (N :t \"401\") :note \"enumerated\")");
  CHECK(serialize_node(node) ==
        "(N :t \"room\" :note \"enumerated\"\n    :Flat (N :t \"401\"))");
}

TEST_CASE("empty header values serialize without trailing space") {
  auto trees = parse_corpus("# note =\n(N :t \"a\")");
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].headers[0].value.empty());
  std::string out = serialize(trees[0], SerializeStyle::canonical);
  CHECK(out.rfind("# note =\n", 0) == 0);
}
