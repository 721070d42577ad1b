#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/lexicon.hpp"

namespace prosody::tree {

enum class Category { IP, CP, NP, PP, VP, ADVP, N, P, V, ADV, PU };

std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view tag);

inline bool is_clause(Category c) { return c == Category::IP || c == Category::CP; }

// Either an internal node (category + children) or a leaf carrying a word.
struct Node {
  Category category = Category::IP;
  std::vector<Node> children;
  std::optional<lexicon::PWordLex> word;

  bool is_leaf() const { return word.has_value(); }

  static Node leaf(lexicon::PWordLex w) {
    Node n;
    n.word = std::move(w);
    return n;
  }
  static Node internal(Category c, std::vector<Node> kids) {
    Node n;
    n.category = c;
    n.children = std::move(kids);
    return n;
  }

  friend bool operator==(const Node&, const Node&) = default;
};

struct SyntacticTree {
  Node root;

  friend bool operator==(const SyntacticTree&, const SyntacticTree&) = default;
};

// Distance to the syntactic head in word units, clamped to [1, 6]; nullopt for
// the sentence head.
using DependencyDistance = std::optional<int>;

inline constexpr int kMaxDependencyDistance = 6;

/// Parses exactly one tree. Errors: UnbalancedBrackets, UnknownCategory,
/// MalformedLeaf, EmptyTree, with line/column of the offending token.
SyntacticTree parse_tree(std::string_view text);

/// Parses every tree in a file (one or more S-expressions, `;` comments).
std::vector<SyntacticTree> parse_trees(std::string_view text);

/// Canonical single-line form; parse_tree(serialize(t)) == t.
std::string serialize(const SyntacticTree& tree);

std::vector<lexicon::PWordLex> yield_pwords(const SyntacticTree& tree);

/// Head-final dependency distances, one per leaf. The head of a leaf is the
/// lexical head of the lowest constituent it does not head; the lexical head
/// of a constituent is reached through rightmost non-PU children.
std::vector<DependencyDistance> dependency_distances(const SyntacticTree& tree);

}  // namespace prosody::tree
