#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prosody/spmh.hpp"

namespace prosody::f0 {

// Engineering defaults; none of these values is a measured quantity.
struct F0Params {
  double base_hz = 120.0;
  double h_level_st = 10.0;
  double l_level_st = 0.0;
  double dip_per_edge_st = 2.0;   // extra %L lowering per left edge beyond the first
  double downstep_factor = 0.7;   // register multiplier after each accent
  double edge_recovery = 0.4;     // share of lost register regained per extra edge
  double mora_duration_s = 0.12;
  double frame_rate_hz = 100.0;
  double final_l_st = -4.0;
};

/// Throws Error(InvalidParams): needs 0 < downstep_factor < 1,
/// 0 <= edge_recovery <= 1, positive rates/durations/base, and at least one
/// frame per mora.
void validate(const F0Params& params);

enum class Tone { boundary_L, phrasal_H, accent_H_star, accent_fall_L, final_L };

std::string_view to_string(Tone t);

struct ToneTarget {
  std::size_t mora_index = 0;  // global mora position
  Tone tone = Tone::boundary_L;
  double level = 0.0;          // semitones above base_hz, register included

  friend bool operator==(const ToneTarget&, const ToneTarget&) = default;
};

struct Frame {
  double time_s = 0.0;
  double f0_hz = 0.0;
  std::size_t mora_index = 0;
  std::size_t pword_index = 0;

  friend bool operator==(const Frame&, const Frame&) = default;
};

struct Contour {
  double frame_rate_hz = 0.0;
  std::vector<Frame> frames;

  friend bool operator==(const Contour&, const Contour&) = default;
};

/// Owning word of every global mora.
std::vector<std::size_t> mora_layout(const spmh::ProsodicTree& ptree);

/// Register in force at each word's peak. Starts at 1; each accented word
/// multiplies it by downstep_factor afterwards; a gap opening n >= 2 PPhrases
/// restores 1 - (1 - edge_recovery)^(n-1) of the register lost so far.
std::vector<double> compute_registers(const spmh::ProsodicTree& ptree, const F0Params& params);

/// %L on the first mora of each minimal PPhrase (lowered by dip_per_edge_st per
/// extra left edge), phrasal H on its second mora unless the first word is
/// nucleus-initial or heavy-initial, H*+L at every accent, L% at the end.
/// Sorted by mora, then by tone order within a mora.
std::vector<ToneTarget> assign_tones(const spmh::ProsodicTree& ptree, const F0Params& params);

/// Log-linear interpolation between targets placed inside their moras
/// (centre for a lone target, evenly spread when several share one mora);
/// a phrasal H holds its level until the mora of the next target.
/// Throws Error(EmptyTargets) when `targets` is empty.
Contour render_contour(std::span<const ToneTarget> targets, std::span<const std::size_t> layout,
                       const F0Params& params);

Contour synthesize(const spmh::ProsodicTree& ptree, const F0Params& params);

std::string to_json(const Contour& contour);
std::string to_csv(const Contour& contour);

}  // namespace prosody::f0
