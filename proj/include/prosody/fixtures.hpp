#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/tree.hpp"

namespace prosody::fixtures {

enum class FixtureId { tree1, tree2, boost4N };

std::string_view to_string(FixtureId id);
std::optional<FixtureId> fixture_from_string(std::string_view name);
const std::vector<FixtureId>& all_fixtures();

enum class Experiment { initial_lowering, rhythmic_boost };

// Canonical (normalized) annotations the pipeline must regenerate.
struct Expectations {
  std::string baseline1;
  std::string baseline2;
  std::string proposed;
  std::vector<int> gap_edges;                       // left-edge count per gap after apply_all
  std::vector<tree::DependencyDistance> distances;  // one per word
  Experiment experiment = Experiment::initial_lowering;
  bool expected_verdict = true;
};

struct Fixture {
  FixtureId id;
  std::string file_name;  // under fixtures/
  std::string source;     // tree-file text
  tree::SyntacticTree tree;
  Expectations expect;
};

/// Parses the embedded fixture text. Throws Error(UnknownFixture) for unknown names.
Fixture load_fixture(FixtureId id);
Fixture load_fixture(std::string_view name);

}  // namespace prosody::fixtures
