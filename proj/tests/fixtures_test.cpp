#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "prosody/error.hpp"
#include "prosody/fixtures.hpp"

namespace prosody::fixtures {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Fixtures, EmbeddedTextMatchesFilesOnDisk) {
  for (auto id : all_fixtures()) {
    auto f = load_fixture(id);
    EXPECT_EQ(f.source, slurp(std::string(PROSODY_FIXTURE_DIR) + "/" + f.file_name)) << f.file_name;
    EXPECT_EQ(f.tree, tree::parse_tree(f.source));
  }
}

TEST(Fixtures, LookupByName) {
  EXPECT_EQ(load_fixture("tree2").id, FixtureId::tree2);
  EXPECT_EQ(load_fixture("boost4N").expect.experiment, Experiment::rhythmic_boost);
  try {
    load_fixture("tree3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFixture);
  }
  EXPECT_EQ(fixture_from_string("tree1"), FixtureId::tree1);
  EXPECT_EQ(fixture_from_string(""), std::nullopt);
}

TEST(Fixtures, ExpectationsAreConsistent) {
  for (auto id : all_fixtures()) {
    auto f = load_fixture(id);
    auto words = tree::yield_pwords(f.tree).size();
    EXPECT_EQ(f.expect.distances.size(), words);
    EXPECT_EQ(f.expect.gap_edges.size(), words - 1);
    EXPECT_TRUE(f.expect.expected_verdict);
  }
  EXPECT_EQ(load_fixture(FixtureId::tree1).expect.gap_edges, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(load_fixture(FixtureId::tree2).expect.gap_edges, (std::vector<int>{2, 1, 1}));
}

}  // namespace
}  // namespace prosody::fixtures
