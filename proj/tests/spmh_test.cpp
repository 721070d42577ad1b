#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "prosody/annotate.hpp"
#include "prosody/error.hpp"
#include "prosody/fixtures.hpp"
#include "prosody/spmh.hpp"

namespace prosody::spmh {
namespace {

std::vector<int> edges(const ProsodicTree& t) {
  std::vector<int> out;
  for (const auto& j : left_edge_counts(t)) out.push_back(j.left_edge_count);
  return out;
}

ProsodicTree project_fixture(fixtures::FixtureId id) { return project(fixtures::load_fixture(id).tree); }

TEST(Project, FixtureBracketings) {
  EXPECT_EQ(annotate::emit_proposed(project_fixture(fixtures::FixtureId::tree1)).text,
            "{[[wa ga shi ya sa N no][ma me u ri ya ku ga]][[me mo ga ki o][mo ra i ma \\shi ta]].}");
  EXPECT_EQ(annotate::emit_proposed(project_fixture(fixtures::FixtureId::tree2)).text,
            "{[[wa ga shi ya sa N ga]][[ma me u ri ya ku no][me mo ga ki o][mo ra i ma \\shi ta]].}");
  EXPECT_EQ(annotate::emit_proposed(project_fixture(fixtures::FixtureId::boost4N)).text,
            "{[ki no o][[ya \\ma na shi no][mo \\ri gu chi no][a \\ni yo me no][wa \\ru gu chi o][ko o e N de]"
            "[tsu ta e ta]].}");
}

TEST(Project, EdgesMatchSpanOracle) {
  for (auto id : fixtures::all_fixtures()) {
    auto t = project_fixture(id);
    EXPECT_EQ(edges(t), testing::oracle_gap_edges(t)) << fixtures::to_string(id);
  }
  EXPECT_EQ(edges(project_fixture(fixtures::FixtureId::tree1)), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(edges(project_fixture(fixtures::FixtureId::tree2)), (std::vector<int>{2, 1, 1}));
}

TEST(Project, CarriesDependencies) {
  auto leaves = yield(project_fixture(fixtures::FixtureId::tree2));
  ASSERT_EQ(leaves.size(), 4u);
  EXPECT_TRUE(leaves[0].has_syntax);
  EXPECT_EQ(leaves[0].dependency, 3);
  EXPECT_EQ(leaves[3].dependency, std::nullopt);
}

TEST(Project, NonClauseRootFails) {
  try {
    project(tree::parse_tree("(NP (N neko|ne.ko|1))"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoClause);
  }
}

TEST(Project, SingleWord) {
  auto t = project(tree::parse_tree("(IP (V i|i|0))"));
  EXPECT_EQ(annotate::emit_proposed(t).text, "{[i].}");
  EXPECT_TRUE(left_edge_counts(t).empty());
  EXPECT_TRUE(is_well_formed(t));
}

TEST(Project, EmbeddedClauseOpensPhrase) {
  auto t = project(tree::parse_tree(
      "(IP (CP (IP (PP (NP (N a|a|0)) (P ga|ga|0)) (V i|i|0))) (VP (PP (NP (N ka|ka|0))) (V su|su|0)))"));
  EXPECT_TRUE(is_well_formed(t));
  EXPECT_EQ(edges(t), testing::oracle_gap_edges(t));
  EXPECT_GE(phrase_openings(t)[0], 2);  // clause phrase plus its inner phrase
}

TEST(WellFormed, RejectsBadShapes) {
  auto w = PNode::leaf(PWordLeaf{lexicon::make_word("a", lexicon::parse_moras("a"), 0), std::nullopt, false});
  EXPECT_FALSE(is_well_formed(ProsodicTree{PNode::clause({})}));
  EXPECT_FALSE(is_well_formed(ProsodicTree{PNode::clause({w})}));
  EXPECT_FALSE(is_well_formed(ProsodicTree{PNode::clause({PNode::phrase({})})}));
  EXPECT_FALSE(is_well_formed(ProsodicTree{PNode::clause({PNode::phrase({w, PNode::phrase({w})})})}));
  EXPECT_FALSE(is_well_formed(ProsodicTree{PNode::phrase({PNode::phrase({w})})}));
  EXPECT_TRUE(is_well_formed(ProsodicTree{PNode::clause({PNode::phrase({w, w})})}));
}

TEST(ProjectionProperties, RandomTrees) {
  std::mt19937 rng(21);
  for (int i = 0; i < 500; ++i) {
    auto st = testing::random_syntactic_tree(rng);
    auto pt = project(st);
    ASSERT_TRUE(is_well_formed(pt)) << tree::serialize(st);
    EXPECT_EQ(yield_words(pt), tree::yield_pwords(st));
    EXPECT_EQ(edges(pt), testing::oracle_gap_edges(pt));
    // Every word sits in its own minimal phrase right after projection.
    for (const auto& o : phrase_openings(pt)) EXPECT_GE(o, 1);
    // Only a one-word constituent may repeat a span (its word's own minimal phrase).
    auto spans = testing::phrase_spans(pt);
    std::sort(spans.begin(), spans.end());
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (spans[k] == spans[k - 1]) EXPECT_EQ(spans[k].second - spans[k].first, 1u) << tree::serialize(st);
    }
  }
}

TEST(ProjectionProperties, AddingAClauseLevelWordKeepsOtherEdges) {
  // Appending a bare word to the clause only adds one gap; existing gaps keep their edges.
  std::mt19937 rng(22);
  for (int i = 0; i < 300; ++i) {
    auto st = testing::random_syntactic_tree(rng, 8);
    auto before = edges(project(st));
    auto extended = st;
    extended.root.children.push_back(
        tree::Node::internal(tree::Category::V, {tree::Node::leaf(testing::random_word(rng))}));
    auto after = edges(project(extended));
    ASSERT_EQ(after.size(), before.size() + 1);
    EXPECT_TRUE(std::equal(before.begin(), before.end(), after.begin())) << tree::serialize(extended);
  }
}

TEST(SameStructure, IgnoresSurfaceAndSyntax) {
  auto a = project_fixture(fixtures::FixtureId::tree1);
  auto b = annotate::parse_proposed(annotate::emit_proposed(a).text);
  EXPECT_TRUE(same_structure(a, b));
  EXPECT_NE(a, b);
  EXPECT_FALSE(same_structure(a, project_fixture(fixtures::FixtureId::tree2)));
}

}  // namespace
}  // namespace prosody::spmh
