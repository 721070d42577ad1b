#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed per test.

#include <random>
#include <string>
#include <vector>

#include "prosody/lexicon.hpp"
#include "prosody/spmh.hpp"
#include "prosody/tree.hpp"

namespace prosody::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(std::mt19937& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline lexicon::PWordLex random_word(std::mt19937& rng, std::optional<bool> accented = std::nullopt) {
  static const std::vector<std::string> moras = {"ka", "ki", "no", "o", "ma", "shi", "tsu", "N", "Q", "a", "ya", "ri", "de"};
  std::vector<std::string> tokens;
  int len = uniform(rng, 1, 5);
  for (int i = 0; i < len; ++i) {
    std::string m = moras[uniform(rng, 0, static_cast<int>(moras.size()) - 1)];
    if (i == 0 && (m == "N" || m == "Q")) m = "ka";
    tokens.push_back(m);
  }
  auto parsed = lexicon::classify_moras(tokens);
  bool acc = accented ? *accented : coin(rng);
  int nucleus = acc ? uniform(rng, 1, len) : 0;
  std::string surface;
  for (const auto& t : tokens) surface += t;
  return lexicon::make_word(surface, std::move(parsed), nucleus);
}

namespace detail {

inline tree::Node random_syntax(std::mt19937& rng, int depth, int& budget) {
  using tree::Category;
  if (depth >= 4 || budget <= 1 || coin(rng, 0.35)) {
    static const Category pre[] = {Category::N, Category::V, Category::ADV, Category::P};
    --budget;
    return tree::Node::internal(pre[uniform(rng, 0, 3)], {tree::Node::leaf(random_word(rng))});
  }
  static const Category phrasal[] = {Category::NP, Category::PP, Category::VP, Category::ADVP, Category::IP, Category::CP};
  Category cat = phrasal[uniform(rng, 0, 5)];
  int kids = uniform(rng, 1, 3);
  std::vector<tree::Node> children;
  for (int i = 0; i < kids && budget > 0; ++i) children.push_back(random_syntax(rng, depth + 1, budget));
  if (children.empty()) {
    --budget;
    children.push_back(tree::Node::internal(Category::N, {tree::Node::leaf(random_word(rng))}));
  }
  return tree::Node::internal(cat, std::move(children));
}

inline spmh::PNode random_phrase(std::mt19937& rng, int depth, int& budget) {
  if (depth >= 3 || budget <= 1 || coin(rng, 0.5)) {
    int words = std::min(budget, uniform(rng, 1, 3));
    std::vector<spmh::PNode> leaves;
    for (int i = 0; i < words; ++i) {
      spmh::PWordLeaf leaf{random_word(rng), std::nullopt, coin(rng, 0.7)};
      if (leaf.has_syntax) leaf.dependency = coin(rng, 0.75) ? 1 : uniform(rng, 2, 6);
      leaves.push_back(spmh::PNode::leaf(std::move(leaf)));
    }
    budget -= words;
    return spmh::PNode::phrase(std::move(leaves));
  }
  int kids = uniform(rng, 1, 4);
  std::vector<spmh::PNode> children;
  for (int i = 0; i < kids && budget > 0; ++i) children.push_back(random_phrase(rng, depth + 1, budget));
  return spmh::PNode::phrase(std::move(children));
}

}  // namespace detail

/// Random head-final tree with an IP/CP root and at most `max_words` leaves.
inline tree::SyntacticTree random_syntactic_tree(std::mt19937& rng, int max_words = 10) {
  int budget = uniform(rng, 1, max_words);
  std::vector<tree::Node> children;
  while (budget > 0 && (children.empty() || coin(rng, 0.6))) {
    children.push_back(detail::random_syntax(rng, 1, budget));
  }
  return tree::SyntacticTree{tree::Node::internal(coin(rng, 0.8) ? tree::Category::IP : tree::Category::CP,
                                                  std::move(children))};
}

/// Random well-formed prosodic tree with at most `max_words` words.
inline spmh::ProsodicTree random_prosodic_tree(std::mt19937& rng, int max_words = 10) {
  int budget = uniform(rng, 1, max_words);
  std::vector<spmh::PNode> children;
  while (budget > 0) children.push_back(detail::random_phrase(rng, 1, budget));
  return spmh::ProsodicTree{spmh::PNode::clause(std::move(children))};
}

}  // namespace prosody::testing
