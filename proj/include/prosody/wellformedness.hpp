#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prosody/spmh.hpp"

namespace prosody::wellformedness {

struct ConstraintConfig {
  bool enable_boost_rephrasing = true;
  int boost_min_run = 4;
};

/// Throws Error(InvalidParams) when boost_min_run < 2.
void validate(const ConstraintConfig& cfg);

/// Splits minimal PPhrases after every non-final accented word ([A A] -> [A][A],
/// [A U] -> [A][U]); [U A] and [U U] stay whole. Never removes an edge.
spmh::ProsodicTree enforce_culminativity_and_antilapse(const spmh::ProsodicTree& ptree);

/// Regroups runs of >= boost_min_run accented minimal sibling PPhrases forming
/// a left-branching chain (every word but the last has dependency distance 1)
/// pairwise into intermediate PPhrases: [1][2][3][4] -> [[1][2]][[3][4]].
spmh::ProsodicTree rephrase_boost(const spmh::ProsodicTree& ptree, const ConstraintConfig& cfg);

/// Culminativity/anti-lapse splitting followed by boost re-phrasing (when enabled).
spmh::ProsodicTree apply_all(const spmh::ProsodicTree& ptree, const ConstraintConfig& cfg = {});

enum class Constraint { culminativity, right_edge };

struct Violation {
  std::size_t phrase_index = 0;  // minimal phrases in left-to-right order
  std::size_t first_word = 0;
  Constraint constraint = Constraint::culminativity;
};

std::string_view to_string(Constraint c);

/// Culminativity (<= 1 accented word per minimal PPhrase) and right-edge
/// (accented words are phrase-final) violations.
std::vector<Violation> find_violations(const spmh::ProsodicTree& ptree);

}  // namespace prosody::wellformedness
