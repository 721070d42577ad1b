#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prosody/lexicon.hpp"
#include "prosody/tree.hpp"

namespace prosody::spmh {

struct PWordLeaf {
  lexicon::PWordLex lex;
  // Syntactic dependency distance when the tree was projected from syntax;
  // nullopt for the sentence head or when unknown.
  std::optional<int> dependency;
  bool has_syntax = false;

  friend bool operator==(const PWordLeaf&, const PWordLeaf&) = default;
};

enum class NodeKind { clause, phrase, word };

struct PNode {
  NodeKind kind = NodeKind::phrase;
  std::vector<PNode> children;
  std::optional<PWordLeaf> word;  // set iff kind == word

  static PNode clause(std::vector<PNode> kids) { return PNode{NodeKind::clause, std::move(kids), std::nullopt}; }
  static PNode phrase(std::vector<PNode> kids) { return PNode{NodeKind::phrase, std::move(kids), std::nullopt}; }
  static PNode leaf(PWordLeaf w) { return PNode{NodeKind::word, {}, std::move(w)}; }

  bool is_phrase() const { return kind == NodeKind::phrase; }
  bool is_word() const { return kind == NodeKind::word; }
  // A PPhrase with no PPhrase children.
  bool is_minimal_phrase() const;

  friend bool operator==(const PNode&, const PNode&) = default;
};

// Root is always a single PClause.
struct ProsodicTree {
  PNode root;

  friend bool operator==(const ProsodicTree&, const ProsodicTree&) = default;
};

struct JuncturePosition {
  std::size_t index = 0;  // gap between word index and index + 1
  int left_edge_count = 0;

  friend bool operator==(const JuncturePosition&, const JuncturePosition&) = default;
};

/// Maps IP (or the CP governing it) to the PClause, the maximal PP/VP nodes
/// dominating an NP to PPhrases, and wraps every word in a minimal PPhrase.
/// Throws Error(NoClause) when the root is not IP/CP.
ProsodicTree project(const tree::SyntacticTree& tree);

std::vector<PWordLeaf> yield(const ProsodicTree& ptree);
std::vector<lexicon::PWordLex> yield_words(const ProsodicTree& ptree);

/// Number of PPhrase left brackets opening at each word (PClause excluded).
std::vector<int> phrase_openings(const ProsodicTree& ptree);

/// One entry per gap between consecutive words.
std::vector<JuncturePosition> left_edge_counts(const ProsodicTree& ptree);

/// Structural invariants: single root PClause, phrases hold either only
/// phrases or only words, no empty phrase, every word under a PPhrase.
bool is_well_formed(const ProsodicTree& ptree);

/// Shape plus word moras and accents; ignores surface spellings and syntax.
bool same_structure(const ProsodicTree& a, const ProsodicTree& b);

}  // namespace prosody::spmh
