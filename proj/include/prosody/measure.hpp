#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prosody/f0.hpp"

namespace prosody::measure {

// Tolerance for strict comparisons between semitone values.
inline constexpr double kCompareEpsilon = 1e-9;

/// 12 * log2(f1 / f0). Throws Error(NonPositiveFrequency).
double semitones(double f1_hz, double f0_hz);

/// Max F0 over the second mora after the gap minus min F0 over the first mora
/// after it, in semitones. Gap g lies between word g and word g + 1.
/// Throws Error(InsufficientMoras) when fewer than two moras follow.
double rise_size(const f0::Contour& contour, std::size_t gap_index);

/// Peak of word_j relative to the peak of word_i (later minus earlier), so
/// downstep gives negative values. Throws Error(MissingWord).
double peak_descent(const f0::Contour& contour, std::size_t word_i, std::size_t word_j);

enum class TreeKind { tree1, tree2 };

/// Yes-pattern of the initial-lowering experiment: the deeper boundary has the
/// larger rise (tree1: B > A, tree2: A > B).
bool classify_initial_lowering(double rise_a, double rise_b, TreeKind kind);

/// Downstep between N1-N2 and N3-N4 with a weaker fall (or a rise) at N2-N3.
bool classify_boost(double d12, double d23, double d34, double margin = 0.0);

struct JunctureMetrics {
  std::vector<double> rise_size_st;       // per gap; NaN where undefined
  std::vector<double> peak_descent_st;    // per consecutive word pair
};

JunctureMetrics juncture_metrics(const f0::Contour& contour);

}  // namespace prosody::measure
