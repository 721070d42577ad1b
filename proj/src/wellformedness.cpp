#include "prosody/wellformedness.hpp"

#include "prosody/error.hpp"

namespace prosody::wellformedness {

using spmh::PNode;
using spmh::ProsodicTree;

namespace {

bool word_accented(const PNode& w) { return lexicon::is_accented(w.word->lex); }

std::vector<PNode> split_minimal(const PNode& phrase) {
  std::vector<PNode> out;
  std::vector<PNode> current;
  for (const auto& w : phrase.children) {
    current.push_back(w);
    if (word_accented(w)) {
      out.push_back(PNode::phrase(std::move(current)));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(PNode::phrase(std::move(current)));
  return out;
}

void split_children(PNode& node) {
  std::vector<PNode> kids;
  kids.reserve(node.children.size());
  for (auto& child : node.children) {
    if (child.is_minimal_phrase() && child.children.size() >= 2) {
      for (auto& piece : split_minimal(child)) kids.push_back(std::move(piece));
    } else {
      if (!child.is_word()) split_children(child);
      kids.push_back(std::move(child));
    }
  }
  node.children = std::move(kids);
}

bool phrase_accented(const PNode& p) {
  for (const auto& w : p.children) {
    if (word_accented(w)) return true;
  }
  return false;
}

// Every word of `p` links leftward-branching into the following word.
bool chains_forward(const PNode& p) {
  for (const auto& w : p.children) {
    if (!w.word->has_syntax || w.word->dependency != 1) return false;
  }
  return true;
}

// All words except the final one chain; the final word's link is irrelevant.
bool chains_internally(const PNode& p) {
  for (std::size_t i = 0; i + 1 < p.children.size(); ++i) {
    const auto& w = *p.children[i].word;
    if (!w.has_syntax || w.dependency != 1) return false;
  }
  return true;
}

bool boost_candidate(const PNode& p) { return p.is_minimal_phrase() && phrase_accented(p) && chains_internally(p); }

void regroup(PNode& node, const ConstraintConfig& cfg) {
  for (auto& child : node.children) {
    if (!child.is_word() && !child.is_minimal_phrase()) regroup(child, cfg);
  }
  auto& kids = node.children;
  const std::size_t min_run = static_cast<std::size_t>(cfg.boost_min_run);
  std::vector<PNode> out;
  std::size_t i = 0;
  while (i < kids.size()) {
    if (!boost_candidate(kids[i])) {
      out.push_back(std::move(kids[i++]));
      continue;
    }
    std::size_t end = i + 1;
    while (end < kids.size() && boost_candidate(kids[end]) && chains_forward(kids[end - 1])) ++end;
    std::size_t run = end - i;
    // A single group covering every child would duplicate the parent's own bracket.
    bool whole_parent = node.is_phrase() && run == 2 && kids.size() == 2;
    if (run < min_run || whole_parent) {
      for (; i < end; ++i) out.push_back(std::move(kids[i]));
      continue;
    }
    for (; i + 1 < end; i += 2) out.push_back(PNode::phrase({std::move(kids[i]), std::move(kids[i + 1])}));
    if (i < end) out.push_back(std::move(kids[i++]));
  }
  kids = std::move(out);
}

void collect_minimal(const PNode& n, std::size_t& next_word, std::vector<Violation>& out, std::size_t& phrase_index) {
  if (n.is_word()) {
    ++next_word;
    return;
  }
  if (n.is_minimal_phrase()) {
    std::size_t first = next_word;
    std::size_t accented = 0;
    bool right_edge_ok = true;
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      if (word_accented(n.children[k])) {
        ++accented;
        if (k + 1 != n.children.size()) right_edge_ok = false;
      }
    }
    next_word += n.children.size();
    if (accented > 1) out.push_back(Violation{phrase_index, first, Constraint::culminativity});
    if (!right_edge_ok) out.push_back(Violation{phrase_index, first, Constraint::right_edge});
    ++phrase_index;
    return;
  }
  for (const auto& child : n.children) collect_minimal(child, next_word, out, phrase_index);
}

}  // namespace

void validate(const ConstraintConfig& cfg) {
  if (cfg.boost_min_run < 2) {
    throw Error(ErrorKind::InvalidParams, "boost_min_run must be >= 2, got " + std::to_string(cfg.boost_min_run));
  }
}

ProsodicTree enforce_culminativity_and_antilapse(const ProsodicTree& ptree) {
  ProsodicTree out = ptree;
  split_children(out.root);
  return out;
}

ProsodicTree rephrase_boost(const ProsodicTree& ptree, const ConstraintConfig& cfg) {
  validate(cfg);
  ProsodicTree out = ptree;
  regroup(out.root, cfg);
  return out;
}

ProsodicTree apply_all(const ProsodicTree& ptree, const ConstraintConfig& cfg) {
  validate(cfg);
  ProsodicTree out = enforce_culminativity_and_antilapse(ptree);
  if (cfg.enable_boost_rephrasing) out = rephrase_boost(out, cfg);
  return out;
}

std::string_view to_string(Constraint c) {
  return c == Constraint::culminativity ? "culminativity" : "right-edge";
}

std::vector<Violation> find_violations(const ProsodicTree& ptree) {
  std::vector<Violation> out;
  std::size_t next_word = 0;
  std::size_t phrase_index = 0;
  collect_minimal(ptree.root, next_word, out, phrase_index);
  return out;
}

}  // namespace prosody::wellformedness
