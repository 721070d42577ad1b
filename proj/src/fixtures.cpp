#include "prosody/fixtures.hpp"

#include "fixture_data.hpp"
#include "prosody/error.hpp"

namespace prosody::fixtures {

namespace {

Expectations expectations_for(FixtureId id) {
  using std::nullopt;
  switch (id) {
    case FixtureId::tree1:
      return Expectations{
          "wa ga shi ya sa N no ma me u ri ya ku ga me mo ga ki o mo ra i ma \\shi ta .",
          "wa ^ ga shi ya sa N no #1 ma ^ me u ri ya ku ga #2 me ^ mo ga ki o #1 mo ^ ra i ma \\shi ta .",
          "{[[wa ga shi ya sa N no][ma me u ri ya ku ga]][[me mo ga ki o][mo ra i ma \\shi ta]].}",
          {1, 2, 1},
          {1, 2, 1, nullopt},
          Experiment::initial_lowering,
          true};
    case FixtureId::tree2:
      return Expectations{
          "wa ga shi ya sa N ga ma me u ri ya ku no me mo ga ki o mo ra i ma \\shi ta .",
          "wa ^ ga shi ya sa N ga #3 ma ^ me u ri ya ku no #1 me ^ mo ga ki o #1 mo ^ ra i ma \\shi ta .",
          "{[[wa ga shi ya sa N ga]][[ma me u ri ya ku no][me mo ga ki o][mo ra i ma \\shi ta]].}",
          {2, 1, 1},
          {3, 1, 1, nullopt},
          Experiment::initial_lowering,
          true};
    case FixtureId::boost4N:
      return Expectations{
          "ki no o ya \\ma na shi no mo \\ri gu chi no a \\ni yo me no wa \\ru gu chi o ko o e N de tsu ta e ta .",
          "ki ^ no o #6 ya ^ \\ma na shi no #1 mo ^ \\ri gu chi no #1 a ^ \\ni yo me no #1 wa ^ \\ru gu chi o #2 "
          "ko o e N de #1 tsu ^ ta e ta .",
          "{[ki no o][[[ya \\ma na shi no][mo \\ri gu chi no]][[a \\ni yo me no][wa \\ru gu chi o]]"
          "[ko o e N de][tsu ta e ta]].}",
          {3, 1, 2, 1, 1, 1},
          {6, 1, 1, 1, 2, 1, nullopt},
          Experiment::rhythmic_boost,
          true};
  }
  throw Error(ErrorKind::UnknownFixture, "unknown fixture id");
}

const char* source_for(FixtureId id) {
  switch (id) {
    case FixtureId::tree1: return data::kTree1;
    case FixtureId::tree2: return data::kTree2;
    case FixtureId::boost4N: return data::kBoost4N;
  }
  throw Error(ErrorKind::UnknownFixture, "unknown fixture id");
}

}  // namespace

std::string_view to_string(FixtureId id) {
  switch (id) {
    case FixtureId::tree1: return "tree1";
    case FixtureId::tree2: return "tree2";
    case FixtureId::boost4N: return "boost4N";
  }
  return "?";
}

std::optional<FixtureId> fixture_from_string(std::string_view name) {
  for (FixtureId id : all_fixtures()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

const std::vector<FixtureId>& all_fixtures() {
  static const std::vector<FixtureId> ids = {FixtureId::tree1, FixtureId::tree2, FixtureId::boost4N};
  return ids;
}

Fixture load_fixture(FixtureId id) {
  std::string source = source_for(id);
  auto tree = tree::parse_tree(source);
  return Fixture{id, std::string(to_string(id)) + ".tree", std::move(source), std::move(tree), expectations_for(id)};
}

Fixture load_fixture(std::string_view name) {
  auto id = fixture_from_string(name);
  if (!id) throw Error(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'");
  return load_fixture(*id);
}

}  // namespace prosody::fixtures
