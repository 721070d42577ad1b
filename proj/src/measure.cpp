#include "prosody/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "prosody/error.hpp"

namespace prosody::measure {

namespace {

struct Extremes {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  bool any = false;
};

template <class Pred>
Extremes extremes(const f0::Contour& contour, Pred pred) {
  Extremes e;
  for (const auto& f : contour.frames) {
    if (!pred(f)) continue;
    e.min = std::min(e.min, f.f0_hz);
    e.max = std::max(e.max, f.f0_hz);
    e.any = true;
  }
  return e;
}

// First mora index of word `w`, if any frame carries it.
std::optional<std::size_t> first_mora_of_word(const f0::Contour& contour, std::size_t w) {
  for (const auto& f : contour.frames) {
    if (f.pword_index == w) return f.mora_index;
  }
  return std::nullopt;
}

}  // namespace

double semitones(double f1_hz, double f0_hz) {
  if (!(f1_hz > 0) || !(f0_hz > 0)) {
    throw Error(ErrorKind::NonPositiveFrequency, "semitones needs positive frequencies");
  }
  return 12.0 * std::log2(f1_hz / f0_hz);
}

double rise_size(const f0::Contour& contour, std::size_t gap_index) {
  auto first = first_mora_of_word(contour, gap_index + 1);
  if (!first) throw Error(ErrorKind::InsufficientMoras, "no word after gap " + std::to_string(gap_index));
  auto low = extremes(contour, [&](const f0::Frame& f) { return f.mora_index == *first; });
  auto high = extremes(contour, [&](const f0::Frame& f) { return f.mora_index == *first + 1; });
  if (!low.any || !high.any) {
    throw Error(ErrorKind::InsufficientMoras, "fewer than two moras after gap " + std::to_string(gap_index));
  }
  return semitones(high.max, low.min);
}

double peak_descent(const f0::Contour& contour, std::size_t word_i, std::size_t word_j) {
  auto a = extremes(contour, [&](const f0::Frame& f) { return f.pword_index == word_i; });
  auto b = extremes(contour, [&](const f0::Frame& f) { return f.pword_index == word_j; });
  if (!a.any) throw Error(ErrorKind::MissingWord, "no frames for word " + std::to_string(word_i));
  if (!b.any) throw Error(ErrorKind::MissingWord, "no frames for word " + std::to_string(word_j));
  return semitones(b.max, a.max);
}

bool classify_initial_lowering(double rise_a, double rise_b, TreeKind kind) {
  if (kind == TreeKind::tree1) return rise_b > rise_a + kCompareEpsilon;
  return rise_a > rise_b + kCompareEpsilon;
}

bool classify_boost(double d12, double d23, double d34, double margin) {
  return d12 < -kCompareEpsilon && d34 < -kCompareEpsilon && d23 > d12 + margin + kCompareEpsilon &&
         d23 > d34 + margin + kCompareEpsilon;
}

JunctureMetrics juncture_metrics(const f0::Contour& contour) {
  JunctureMetrics m;
  std::size_t words = 0;
  for (const auto& f : contour.frames) words = std::max(words, f.pword_index + 1);
  for (std::size_t g = 0; g + 1 < words; ++g) {
    try {
      m.rise_size_st.push_back(rise_size(contour, g));
    } catch (const Error&) {
      m.rise_size_st.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    m.peak_descent_st.push_back(peak_descent(contour, g, g + 1));
  }
  return m;
}

}  // namespace prosody::measure
