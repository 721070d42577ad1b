#include "prosody/spmh.hpp"

#include <algorithm>

#include "prosody/error.hpp"

namespace prosody::spmh {

using tree::Category;

bool PNode::is_minimal_phrase() const {
  return kind == NodeKind::phrase &&
         std::none_of(children.begin(), children.end(), [](const PNode& c) { return c.is_phrase(); });
}

namespace {

bool dominates_np(const tree::Node& n) {
  if (n.is_leaf()) return false;
  for (const auto& child : n.children) {
    if (!child.is_leaf() && (child.category == Category::NP || dominates_np(child))) return true;
  }
  return false;
}

std::size_t leaf_count(const tree::Node& n) {
  if (n.is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& child : n.children) total += leaf_count(child);
  return total;
}

class Projector {
public:
  explicit Projector(std::vector<tree::DependencyDistance> deps, std::vector<lexicon::PWordLex> words)
      : deps_(std::move(deps)), words_(std::move(words)) {}

  // Children of the node map into `out`; `inside_phrase` is true once a
  // maximal PP/VP of the current clause has been opened above.
  void project_children(const tree::Node& n, bool inside_phrase, std::size_t enclosing_span,
                        std::vector<PNode>& out) {
    for (const auto& child : n.children) project_node(child, inside_phrase, enclosing_span, out);
  }

  void project_node(const tree::Node& n, bool inside_phrase, std::size_t enclosing_span, std::vector<PNode>& out) {
    if (n.is_leaf()) {
      std::size_t i = next_word_++;
      PWordLeaf leaf{words_[i], deps_.empty() ? std::nullopt : deps_[i], !deps_.empty()};
      out.push_back(PNode::phrase({PNode::leaf(std::move(leaf))}));
      return;
    }
    std::size_t span = leaf_count(n);
    bool maps = false;
    bool restart = false;
    if (tree::is_clause(n.category)) {
      // Embedded clause: its own PPhrase, and a fresh scope for maximal phrases.
      maps = true;
      restart = true;
    } else if (!inside_phrase && (n.category == Category::PP || n.category == Category::VP) && dominates_np(n)) {
      maps = true;
    }
    if (maps && span == enclosing_span) maps = false;  // no duplicate bracket over the same words

    if (!maps) {
      project_children(n, inside_phrase && !restart, enclosing_span, out);
      return;
    }
    std::vector<PNode> kids;
    project_children(n, !restart, span, kids);
    out.push_back(PNode::phrase(std::move(kids)));
  }

private:
  std::vector<tree::DependencyDistance> deps_;
  std::vector<lexicon::PWordLex> words_;
  std::size_t next_word_ = 0;
};

void collect(const PNode& n, std::vector<PWordLeaf>& out) {
  if (n.is_word()) {
    out.push_back(*n.word);
    return;
  }
  for (const auto& child : n.children) collect(child, out);
}

// Returns the index of the first word under n and bumps the opening counter for phrases.
void count_openings(const PNode& n, std::size_t& next_word, std::vector<int>& openings) {
  if (n.is_word()) {
    ++next_word;
    return;
  }
  if (n.is_phrase() && next_word < openings.size()) ++openings[next_word];
  for (const auto& child : n.children) count_openings(child, next_word, openings);
}

bool node_well_formed(const PNode& n, bool under_phrase) {
  switch (n.kind) {
    case NodeKind::word:
      return n.word.has_value() && n.children.empty() && under_phrase && !n.word->lex.moras.empty();
    case NodeKind::clause:
      return false;  // only valid at the root
    case NodeKind::phrase: {
      if (n.children.empty() || n.word) return false;
      bool words = n.children.front().is_word();
      for (const auto& child : n.children) {
        if (child.is_word() != words) return false;
        if (!node_well_formed(child, true)) return false;
      }
      return true;
    }
  }
  return false;
}

bool same_node(const PNode& a, const PNode& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  if (a.is_word()) {
    return a.word->lex.moras == b.word->lex.moras && a.word->lex.accent_nucleus == b.word->lex.accent_nucleus;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_node(a.children[i], b.children[i])) return false;
  }
  return true;
}

}  // namespace

ProsodicTree project(const tree::SyntacticTree& tree) {
  const auto& root = tree.root;
  if (root.is_leaf() || !tree::is_clause(root.category)) {
    throw Error(ErrorKind::NoClause, "root category '" + std::string(tree::to_string(root.category)) +
                                         "' is neither IP nor CP");
  }
  auto words = tree::yield_pwords(tree);
  std::vector<tree::DependencyDistance> deps;
  try {
    deps = tree::dependency_distances(tree);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HeadResolutionFailure) throw;
    // Phrasing does not need heads; the boost pass then sees no syntax.
  }
  Projector projector(std::move(deps), std::move(words));
  std::vector<PNode> kids;
  for (const auto& child : root.children) {
    // A CP governing an IP is the PClause itself; the IP is not a second clause.
    if (root.category == Category::CP && !child.is_leaf() && child.category == Category::IP) {
      projector.project_children(child, false, 0, kids);
    } else {
      projector.project_node(child, false, 0, kids);
    }
  }
  return ProsodicTree{PNode::clause(std::move(kids))};
}

std::vector<PWordLeaf> yield(const ProsodicTree& ptree) {
  std::vector<PWordLeaf> out;
  collect(ptree.root, out);
  return out;
}

std::vector<lexicon::PWordLex> yield_words(const ProsodicTree& ptree) {
  std::vector<lexicon::PWordLex> out;
  for (auto& leaf : yield(ptree)) out.push_back(std::move(leaf.lex));
  return out;
}

std::vector<int> phrase_openings(const ProsodicTree& ptree) {
  std::vector<int> openings(yield(ptree).size(), 0);
  std::size_t next_word = 0;
  count_openings(ptree.root, next_word, openings);
  return openings;
}

std::vector<JuncturePosition> left_edge_counts(const ProsodicTree& ptree) {
  auto openings = phrase_openings(ptree);
  std::vector<JuncturePosition> out;
  for (std::size_t i = 0; i + 1 < openings.size(); ++i) out.push_back(JuncturePosition{i, openings[i + 1]});
  return out;
}

bool is_well_formed(const ProsodicTree& ptree) {
  const auto& root = ptree.root;
  if (root.kind != NodeKind::clause || root.children.empty() || root.word) return false;
  return std::all_of(root.children.begin(), root.children.end(),
                     [](const PNode& c) { return c.is_phrase() && node_well_formed(c, false); });
}

bool same_structure(const ProsodicTree& a, const ProsodicTree& b) { return same_node(a.root, b.root); }

}  // namespace prosody::spmh
