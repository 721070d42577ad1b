#pragma once

#include <string>
#include <vector>

#include "prosody/config.hpp"
#include "prosody/measure.hpp"

namespace prosody::experiment {

struct LoweringRow {
  std::string sentence;
  measure::TreeKind condition = measure::TreeKind::tree1;
  double rise_a = 0.0;
  double rise_b = 0.0;
  bool verdict = false;
};

struct BoostRow {
  std::string sentence;
  double d12 = 0.0;
  double d23 = 0.0;
  double d34 = 0.0;
  bool verdict = false;
};

struct Report {
  std::string model;
  std::vector<LoweringRow> lowering;
  std::vector<BoostRow> boost;

  bool all_yes() const;
};

/// Runs tree1, tree2 and boost4N through project -> apply_all -> synthesize ->
/// measure and classifies each against the natural-prosody pattern.
Report run(const config::RunConfig& cfg);

/// Whitespace-aligned tables shaped like the published result tables.
std::string format_table(const Report& report);
std::string to_json(const Report& report);

}  // namespace prosody::experiment
