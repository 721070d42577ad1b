#include "prosody/experiment.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "prosody/fixtures.hpp"
#include "prosody/spmh.hpp"
#include "prosody/wellformedness.hpp"

namespace prosody::experiment {

namespace {

f0::Contour render_fixture(fixtures::FixtureId id, const config::RunConfig& cfg) {
  auto fixture = fixtures::load_fixture(id);
  auto ptree = wellformedness::apply_all(spmh::project(fixture.tree), cfg.constraints);
  return f0::synthesize(ptree, cfg.f0);
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right = false) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

const char* yes_no(bool v) { return v ? "Yes" : "No"; }

}  // namespace

bool Report::all_yes() const {
  for (const auto& r : lowering) {
    if (!r.verdict) return false;
  }
  for (const auto& r : boost) {
    if (!r.verdict) return false;
  }
  return true;
}

Report run(const config::RunConfig& cfg) {
  Report report;
  report.model = cfg.constraints.enable_boost_rephrasing ? "proposed" : "proposed (no boost)";

  // Gap A = N1|N2 (gap 0), gap B = N2|N3 (gap 1).
  for (auto [id, kind] : {std::pair{fixtures::FixtureId::tree1, measure::TreeKind::tree1},
                          std::pair{fixtures::FixtureId::tree2, measure::TreeKind::tree2}}) {
    auto contour = render_fixture(id, cfg);
    LoweringRow row;
    row.sentence = "1";
    row.condition = kind;
    row.rise_a = measure::rise_size(contour, 0);
    row.rise_b = measure::rise_size(contour, 1);
    row.verdict = measure::classify_initial_lowering(row.rise_a, row.rise_b, kind);
    report.lowering.push_back(row);
  }

  // N1..N4 are words 1..4 (word 0 is the sentence adverb).
  auto contour = render_fixture(fixtures::FixtureId::boost4N, cfg);
  BoostRow row;
  row.sentence = "1";
  row.d12 = measure::peak_descent(contour, 1, 2);
  row.d23 = measure::peak_descent(contour, 2, 3);
  row.d34 = measure::peak_descent(contour, 3, 4);
  row.verdict = measure::classify_boost(row.d12, row.d23, row.d34);
  report.boost.push_back(row);
  return report;
}

std::string format_table(const Report& report) {
  const std::size_t model_w = std::max<std::size_t>(report.model.size(), 5) + 2;
  std::string out = "F0 range of initial lowering at A and B (semitones)\n";
  out += pad("model", model_w) + pad("sentence", 10) + pad("cond", 8) + pad("RiseSizeA", 11, true) +
         pad("RiseSizeB", 11, true) + "  Same pattern as natural prosody?\n";
  for (const auto& r : report.lowering) {
    out += pad(report.model, model_w) + pad(r.sentence, 10) +
           pad(r.condition == measure::TreeKind::tree1 ? "tree 1" : "tree 2", 8) + pad(fmt2(r.rise_a), 11, true) +
           pad(fmt2(r.rise_b), 11, true) + "  " + yes_no(r.verdict) + "\n";
  }
  out += "\nF0 descent between each noun (semitones)\n";
  out += pad("model", model_w) + pad("sentence", 10) + pad("N1-N2", 9, true) + pad("N2-N3", 9, true) +
         pad("N3-N4", 9, true) + "  Same pattern as natural prosody?\n";
  for (const auto& r : report.boost) {
    out += pad(report.model, model_w) + pad(r.sentence, 10) + pad(fmt2(r.d12), 9, true) +
           pad(fmt2(r.d23), 9, true) + pad(fmt2(r.d34), 9, true) + "  " + yes_no(r.verdict) + "\n";
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::json lowering = nlohmann::json::array();
  for (const auto& r : report.lowering) {
    lowering.push_back({{"model", report.model},
                        {"sentence", r.sentence},
                        {"cond", r.condition == measure::TreeKind::tree1 ? "tree1" : "tree2"},
                        {"rise_size_a_st", r.rise_a},
                        {"rise_size_b_st", r.rise_b},
                        {"same_pattern", r.verdict}});
  }
  nlohmann::json boost = nlohmann::json::array();
  for (const auto& r : report.boost) {
    boost.push_back({{"model", report.model},
                     {"sentence", r.sentence},
                     {"n1_n2_st", r.d12},
                     {"n2_n3_st", r.d23},
                     {"n3_n4_st", r.d34},
                     {"same_pattern", r.verdict}});
  }
  nlohmann::json doc = {{"initial_lowering", lowering}, {"rhythmic_boost", boost}, {"all_yes", report.all_yes()}};
  return doc.dump(2) + "\n";
}

}  // namespace prosody::experiment
