#include "prosody/f0.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "prosody/error.hpp"
#include "prosody/lexicon.hpp"

namespace prosody::f0 {

using spmh::PNode;

namespace {

int tone_rank(Tone t) { return static_cast<int>(t); }

double register_offset_st(double reg) { return 12.0 * std::log2(reg); }

struct PhraseStart {
  std::size_t word = 0;
  std::size_t word_count = 0;
};

void minimal_phrases(const PNode& n, std::size_t& next_word, std::vector<PhraseStart>& out) {
  if (n.is_word()) {
    ++next_word;
    return;
  }
  if (n.is_minimal_phrase()) {
    out.push_back(PhraseStart{next_word, n.children.size()});
    next_word += n.children.size();
    return;
  }
  for (const auto& child : n.children) minimal_phrases(child, next_word, out);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

}  // namespace

void validate(const F0Params& p) {
  for (double v : {p.base_hz, p.h_level_st, p.l_level_st, p.dip_per_edge_st, p.downstep_factor, p.edge_recovery,
                   p.mora_duration_s, p.frame_rate_hz, p.final_l_st}) {
    require(std::isfinite(v), "parameters must be finite");
  }
  require(p.base_hz > 0, "base_hz must be positive");
  require(p.downstep_factor > 0 && p.downstep_factor < 1, "downstep_factor must lie in (0, 1)");
  require(p.edge_recovery >= 0 && p.edge_recovery <= 1, "edge_recovery must lie in [0, 1]");
  require(p.mora_duration_s > 0, "mora_duration_s must be positive");
  require(p.frame_rate_hz > 0, "frame_rate_hz must be positive");
  require(p.mora_duration_s * p.frame_rate_hz >= 1.0, "mora_duration_s * frame_rate_hz must be >= 1");
}

std::string_view to_string(Tone t) {
  switch (t) {
    case Tone::boundary_L: return "%L";
    case Tone::phrasal_H: return "H";
    case Tone::accent_H_star: return "H*";
    case Tone::accent_fall_L: return "+L";
    case Tone::final_L: return "L%";
  }
  return "?";
}

std::vector<std::size_t> mora_layout(const spmh::ProsodicTree& ptree) {
  std::vector<std::size_t> layout;
  auto words = spmh::yield_words(ptree);
  for (std::size_t w = 0; w < words.size(); ++w) layout.insert(layout.end(), words[w].moras.size(), w);
  return layout;
}

std::vector<double> compute_registers(const spmh::ProsodicTree& ptree, const F0Params& params) {
  validate(params);
  auto words = spmh::yield_words(ptree);
  auto openings = spmh::phrase_openings(ptree);
  std::vector<double> registers;
  registers.reserve(words.size());
  double reg = 1.0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0 && openings[i] >= 2) {
      reg += (1.0 - reg) * (1.0 - std::pow(1.0 - params.edge_recovery, openings[i] - 1));
    }
    registers.push_back(reg);
    if (lexicon::is_accented(words[i])) reg *= params.downstep_factor;
  }
  return registers;
}

std::vector<ToneTarget> assign_tones(const spmh::ProsodicTree& ptree, const F0Params& params) {
  auto words = spmh::yield_words(ptree);
  auto registers = compute_registers(ptree, params);
  auto openings = spmh::phrase_openings(ptree);
  auto layout = mora_layout(ptree);

  std::vector<std::size_t> first_mora(words.size(), 0);
  for (std::size_t w = 1; w < words.size(); ++w) first_mora[w] = first_mora[w - 1] + words[w - 1].moras.size();
  auto offset_at = [&](std::size_t mora) { return register_offset_st(registers[layout[mora]]); };

  std::vector<ToneTarget> targets;
  std::vector<PhraseStart> phrases;
  std::size_t next_word = 0;
  minimal_phrases(ptree.root, next_word, phrases);

  for (const auto& phrase : phrases) {
    const auto& head = words[phrase.word];
    std::size_t g = first_mora[phrase.word];
    int edges = std::max(openings[phrase.word], 1);
    targets.push_back({g, Tone::boundary_L, params.l_level_st - params.dip_per_edge_st * (edges - 1) + offset_at(g)});

    std::size_t phrase_moras = 0;
    for (std::size_t k = 0; k < phrase.word_count; ++k) phrase_moras += words[phrase.word + k].moras.size();
    if (phrase_moras >= 2 && head.accent_nucleus != 1 && !lexicon::first_syllable_heavy(head)) {
      targets.push_back({g + 1, Tone::phrasal_H, params.h_level_st + offset_at(g + 1)});
    }
  }
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto& word = words[w];
    if (word.accent_nucleus == 0) continue;
    std::size_t nucleus = first_mora[w] + static_cast<std::size_t>(word.accent_nucleus) - 1;
    std::size_t fall = word.accent_nucleus < static_cast<int>(word.moras.size()) ? nucleus + 1 : nucleus;
    double off = register_offset_st(registers[w]);
    targets.push_back({nucleus, Tone::accent_H_star, params.h_level_st + off});
    targets.push_back({fall, Tone::accent_fall_L, params.l_level_st + off});
  }
  if (!layout.empty()) {
    std::size_t last = layout.size() - 1;
    targets.push_back({last, Tone::final_L, params.final_l_st + offset_at(last)});
  }
  std::stable_sort(targets.begin(), targets.end(), [](const ToneTarget& a, const ToneTarget& b) {
    if (a.mora_index != b.mora_index) return a.mora_index < b.mora_index;
    return tone_rank(a.tone) < tone_rank(b.tone);
  });
  return targets;
}

Contour render_contour(std::span<const ToneTarget> targets, std::span<const std::size_t> layout,
                       const F0Params& params) {
  validate(params);
  if (targets.empty()) throw Error(ErrorKind::EmptyTargets, "no tone targets to render");
  const double dur = params.mora_duration_s;
  std::size_t mora_count = layout.size();
  for (const auto& t : targets) mora_count = std::max(mora_count, t.mora_index + 1);

  struct Knot {
    double time;
    double level;
  };
  std::vector<Knot> knots;
  for (std::size_t i = 0; i < targets.size();) {
    std::size_t j = i;
    while (j < targets.size() && targets[j].mora_index == targets[i].mora_index) ++j;
    const double shared = static_cast<double>(j - i);
    for (std::size_t k = i; k < j; ++k) {
      double frac = static_cast<double>(k - i + 1) / (shared + 1.0);
      knots.push_back({(static_cast<double>(targets[k].mora_index) + frac) * dur, targets[k].level});
      bool last_in_mora = k + 1 == j;
      if (targets[k].tone == Tone::phrasal_H && last_in_mora && j < targets.size()) {
        double hold_until = static_cast<double>(targets[j].mora_index) * dur;
        if (hold_until > knots.back().time) knots.push_back({hold_until, targets[k].level});
      }
    }
    i = j;
  }

  const double total = static_cast<double>(mora_count) * dur;
  const auto frame_count = static_cast<std::size_t>(std::ceil(total * params.frame_rate_hz - 1e-9));
  Contour contour;
  contour.frame_rate_hz = params.frame_rate_hz;
  contour.frames.reserve(frame_count);
  std::size_t seg = 0;
  for (std::size_t f = 0; f < frame_count; ++f) {
    double t = static_cast<double>(f) / params.frame_rate_hz;
    while (seg + 1 < knots.size() && knots[seg + 1].time <= t) ++seg;
    double level;
    if (t <= knots.front().time) {
      level = knots.front().level;
    } else if (seg + 1 >= knots.size()) {
      level = knots.back().level;
    } else {
      const auto& a = knots[seg];
      const auto& b = knots[seg + 1];
      level = a.level + (b.level - a.level) * (t - a.time) / (b.time - a.time);
    }
    auto mora = std::min(mora_count - 1, static_cast<std::size_t>(std::floor(t / dur + 1e-9)));
    std::size_t word = mora < layout.size() ? layout[mora] : (layout.empty() ? 0 : layout.back());
    contour.frames.push_back(Frame{t, params.base_hz * std::exp2(level / 12.0), mora, word});
  }
  return contour;
}

Contour synthesize(const spmh::ProsodicTree& ptree, const F0Params& params) {
  auto targets = assign_tones(ptree, params);
  auto layout = mora_layout(ptree);
  return render_contour(targets, layout, params);
}

std::string to_json(const Contour& contour) {
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& f : contour.frames) {
    frames.push_back({{"t", f.time_s}, {"f0", f.f0_hz}, {"mora", f.mora_index}, {"pword", f.pword_index}});
  }
  nlohmann::json doc = {{"frame_rate_hz", contour.frame_rate_hz}, {"frames", std::move(frames)}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const Contour& contour) {
  std::string out = "t,f0,mora,pword\n";
  char line[96];
  for (const auto& f : contour.frames) {
    std::snprintf(line, sizeof line, "%.6f,%.6f,%zu,%zu\n", f.time_s, f.f0_hz, f.mora_index, f.pword_index);
    out += line;
  }
  return out;
}

}  // namespace prosody::f0
